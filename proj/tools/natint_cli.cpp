#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "natint/natint.hpp"

using namespace natint;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitVerification = 4;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return kExitParse;
    case ErrorKind::TooLarge: return kExitTooLarge;
    case ErrorKind::DomainMismatch: return 5;
    case ErrorKind::FlavorMismatch: return 6;
    case ErrorKind::ShapeMismatch: return 7;
    case ErrorKind::ModulusMismatch: return 8;
    case ErrorKind::FuzzyRangeOverflow: return 9;
    case ErrorKind::NotARing: return 10;
    case ErrorKind::NotAField: return 11;
    case ErrorKind::DivisorComponentZero: return 12;
    case ErrorKind::UnorderedDomain: return 13;
    case ErrorKind::InvalidArgument: return 14;
    case ErrorKind::InfiniteDomain: return 15;
    case ErrorKind::MissingTable: return 16;
    case ErrorKind::NotIntervalCarrier: return 17;
    case ErrorKind::NotAnIdeal: return 18;
  }
  return 1;
}

// Leaves of a report as (path, value) pairs, in document order.
void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else {
    out.emplace_back(path, j.dump());
  }
}

std::string render(const Json& j, OutputFormat f) {
  if (f == OutputFormat::Json) return j.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::string out = f == OutputFormat::Csv ? "key,value\n" : "";
  for (const auto& [k, v] : rows)
    out += f == OutputFormat::Csv ? detail::csv_cell(k) + "," + detail::csv_cell(v) + "\n" : k + ": " + v + "\n";
  return out;
}

struct Globals {
  RunConfig cfg;
  std::string config_path;
  std::string format;
  std::string out;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

FiniteStructure carrier(const std::string& spec, const RunConfig& cfg) {
  auto s = build_carrier(spec, cfg.size_bound);
  s.set_workers(cfg.workers);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"natint: natural interval arithmetic and finite structure analysis"};
  app.require_subcommand(1);
  Globals g;
  auto* o_format = app.add_option("--format", g.format, "json, csv or text");
  auto* o_seed = app.add_option("--seed", g.cfg.seed, "seed for randomized suites");
  auto* o_bound = app.add_option("--size-bound", g.cfg.size_bound, "largest carrier to enumerate");
  auto* o_workers = app.add_option("--workers", g.cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "write output to this path");
  app.add_option("--config", g.config_path, "key=value config file")->check(CLI::ExistingFile);

  std::string spec, op_name, ideal_spec, kind = "rees", field, domain = "Z", expr;
  bool no_orders = false, no_smarandache = false;
  std::size_t samples = 100'000, mod_samples = 10'000;

  auto* table = app.add_subcommand("table", "print a Cayley table");
  table->add_option("spec", spec)->required();
  table->add_option("op", op_name, "add or mul")->required()->check(CLI::IsMember({"add", "mul"}));

  auto* analyze = app.add_subcommand("analyze", "axioms, special elements, substructures, witnesses");
  analyze->add_option("spec", spec)->required();
  analyze->add_flag("--no-orders", no_orders, "omit per-element orders");
  analyze->add_flag("--no-smarandache", no_smarandache, "skip the Smarandache searches");

  auto* quotient = app.add_subcommand("quotient", "quotient by an ideal");
  quotient->add_option("spec", spec)->required();
  quotient->add_option("ideal", ideal_spec, "gen{...}, col-zero, row-zero or diag-multiples:k")->required();
  quotient->add_option("--kind", kind)->check(CLI::IsMember({"standard", "rees"}));

  auto* ideal = app.add_subcommand("ideal", "check an ideal, or list maximal and minimal ideals");
  ideal->add_option("spec", spec)->required();
  ideal->add_option("ideal", ideal_spec);

  auto* span = app.add_subcommand("span", "dimension of the span of interval vectors");
  span->add_option("field", field, "Q or Zn:p")->required();
  span->allow_extras();
  span->footer("Remaining arguments are row vectors in matrix syntax, e.g. \"[1,0],[2,3]\".");
  span->add_option("--domain", domain, "entry domain (defaults to the field)");

  auto* book = app.add_subcommand("verify-book", "replay the stated examples and acceptance claims");
  book->add_option("--samples", samples, "random cases per property check");
  book->add_option("--mod-map-samples", mod_samples, "random pairs per mod-map check");

  auto* eval = app.add_subcommand("eval", "evaluate an interval expression");
  eval->add_option("expr", expr)->required();
  eval->add_option("--domain", domain);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (!g.config_path.empty()) {
      RunConfig from_file = load_config(g.config_path);
      if (o_seed->count() == 0) g.cfg.seed = from_file.seed;
      if (o_bound->count() == 0) g.cfg.size_bound = from_file.size_bound;
      if (o_workers->count() == 0) g.cfg.workers = from_file.workers;
      if (o_format->count() == 0) g.cfg.format = from_file.format;
    }
    if (o_format->count() != 0) g.cfg.format = parse_output_format(g.format);
    const RunConfig& cfg = g.cfg;
    Output out(g.out);
    std::ostream& os = out.stream();

    if (*table) {
      auto s = carrier(spec, cfg);
      const Op op = op_name == "add" ? Op::Add : Op::Mul;
      if (cfg.format == OutputFormat::Csv) {
        os << table_csv(s, op);
      } else if (cfg.format == OutputFormat::Text) {
        os << table_text(s, op);
      } else {
        os << table_json(s, op).dump(2) << "\n";
      }
    } else if (*analyze) {
      auto s = carrier(spec, cfg);
      os << render(analysis_report(s, {!no_orders, !no_smarandache}), cfg.format);
    } else if (*quotient) {
      auto s = carrier(spec, cfg);
      auto q = make_quotient(parse_quotient_kind(kind), s, resolve_ideal_spec(s, ideal_spec));
      q.classes.set_workers(cfg.workers);
      os << render(quotient_report(q, quotient_analysis(q)), cfg.format);
    } else if (*ideal) {
      auto s = carrier(spec, cfg);
      if (ideal_spec.empty()) {
        os << render(ideal_lattice_report(s, maximal_minimal_ideals(s)), cfg.format);
      } else {
        auto i = resolve_ideal_spec(s, ideal_spec);
        Json j{{"schema", kSchema}, {"spec", s.description()}, {"ideal", ideal_json(i)}};
        j["is_ideal"] = is_ideal(s, i.elements).holds;
        os << render(j, cfg.format);
      }
    } else if (*span) {
      const Domain f = parse_domain(field);
      const Domain d = span->count("--domain") ? parse_domain(domain) : f;
      std::vector<IntervalMatrix> vs;
      for (const auto& v : span->remaining()) vs.push_back(parse_matrix(d, v));
      if (vs.empty()) throw Error(ErrorKind::InvalidArgument, "span needs at least one vector");
      os << render(span_json(span_dimension(vs, f), f), cfg.format);
    } else if (*book) {
      BookOptions opt;
      opt.seed = cfg.seed;
      opt.workers = cfg.workers;
      opt.property_samples = samples;
      opt.mod_map_samples = mod_samples;
      auto results = verify_book(opt);
      if (cfg.format == OutputFormat::Json) {
        os << book_json(results).dump(2) << "\n";
      } else if (cfg.format == OutputFormat::Csv) {
        os << "claim_id,status,expected,computed,citation\n";
        for (const auto& r : results)
          os << detail::csv_cell(r.claim_id) << ',' << to_string(r.status) << ',' << detail::csv_cell(r.expected) << ','
             << detail::csv_cell(r.computed) << ',' << detail::csv_cell(r.citation) << "\n";
      } else {
        for (const auto& r : results) {
          os << to_string(r.status) << ' ' << r.claim_id << " [" << r.citation << "]";
          if (r.status != Status::Pass) os << ": expected " << r.expected << ", computed " << r.computed;
          os << "\n";
        }
      }
      if (!book_passed(results)) return kExitVerification;
    } else if (*eval) {
      const Domain d = parse_domain(domain);
      auto v = eval_expression(d, expr);
      Json j{{"schema", kSchema},
             {"domain", d.name()},
             {"expression", expr},
             {"value", to_string(v)},
             {"flavor", to_string(v.flavor())},
             {"trend", to_string(classify(v))}};
      if (cfg.format == OutputFormat::Text) {
        os << to_string(v) << "\n";
      } else {
        os << render(j, cfg.format);
      }
    }
  } catch (const Error& e) {
    std::cerr << "natint: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "natint: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
