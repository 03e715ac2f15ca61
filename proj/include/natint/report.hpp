#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "natint/analyzer.hpp"
#include "natint/book.hpp"
#include "natint/ideals.hpp"
#include "natint/matrix.hpp"

namespace natint {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "natint/1";

namespace detail {

inline Json label_or_null(const FiniteStructure& s, const std::optional<Index>& i) {
  return i ? Json(s.label(*i)) : Json(nullptr);
}

inline Json labels_json(const FiniteStructure& s, const std::vector<Index>& idx) {
  Json a = Json::array();
  for (Index i : idx) a.push_back(s.label(i));
  return a;
}

inline Json pair_json(const FiniteStructure& s, const std::optional<IndexPair>& p) {
  if (!p) return nullptr;
  return Json::array({s.label(p->first), s.label(p->second)});
}

inline Json triple_json(const FiniteStructure& s, const std::optional<IndexTriple>& t) {
  if (!t) return nullptr;
  return Json::array({s.label((*t)[0]), s.label((*t)[1]), s.label((*t)[2])});
}

inline Json count_or_null(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace detail

inline Json to_json(const FiniteStructure& s, const OpReport& r) {
  Json j;
  j["closed"] = r.closed;
  j["closure_counterexample"] = detail::pair_json(s, r.closure_counterexample);
  j["associative"] = r.associative;
  j["associativity_counterexample"] = detail::triple_json(s, r.associativity_counterexample);
  j["commutative"] = r.commutative;
  j["commutativity_counterexample"] = detail::pair_json(s, r.commutativity_counterexample);
  j["identity"] = detail::label_or_null(s, r.identity);
  j["inverses_all"] = r.inverses_all;
  j["missing_inverse"] = detail::label_or_null(s, r.missing_inverse);
  j["absorbing"] = detail::label_or_null(s, r.absorbing);
  j["semigroup"] = r.is_semigroup();
  j["monoid"] = r.is_monoid();
  j["group"] = r.is_group();
  return j;
}

inline Json to_json(const FiniteStructure& s, const AxiomReport& r) {
  Json j;
  j["add"] = r.add ? to_json(s, *r.add) : Json(nullptr);
  j["mul"] = r.mul ? to_json(s, *r.mul) : Json(nullptr);
  j["distributive"] = r.distributive ? Json(*r.distributive) : Json(nullptr);
  j["distributivity_counterexample"] = detail::triple_json(s, r.distributivity_counterexample);
  j["ring"] = r.is_ring();
  return j;
}

/// An idempotent whose endpoints are all 0 or 1.
inline Json to_json(const FiniteStructure& s, const ElementReport& r, bool with_orders = true) {
  Json j;
  j["zero"] = detail::label_or_null(s, r.zero);
  j["one"] = detail::label_or_null(s, r.one);
  Json zd = Json::array();
  for (const auto& z : r.zero_divisors) zd.push_back({{"element", s.label(z.element)}, {"partner", s.label(z.partner)}});
  j["zero_divisors"] = zd;
  Json szd = Json::array();
  for (const auto& z : r.s_zero_divisors)
    szd.push_back(Json::array({s.label(z.x), s.label(z.y), s.label(z.a), s.label(z.b)}));
  j["s_zero_divisors"] = szd;
  j["s_zero_divisor_search_complete"] = r.s_zero_divisor_search_complete;
  j["idempotents"] = detail::labels_json(s, r.idempotents);
  std::vector<Index> nontrivial;
  for (Index i : r.idempotents)
    if (s.interval_at(i) != nullptr && !is_trivial_idempotent(s, i)) nontrivial.push_back(i);
  j["nontrivial_idempotents"] = s.interval_at(0) != nullptr ? detail::labels_json(s, nontrivial) : Json(nullptr);
  Json nil = Json::array();
  for (const auto& x : r.nilpotents) nil.push_back({{"element", s.label(x.element)}, {"index", x.index}});
  j["nilpotents"] = nil;
  Json units = Json::array();
  for (const auto& u : r.units) units.push_back({{"element", s.label(u.element)}, {"inverse", s.label(u.inverse)}});
  j["units"] = units;
  j["characteristic"] = r.characteristic;
  if (with_orders) {
    Json ord = Json::array();
    for (const auto& o : r.orders)
      ord.push_back({{"element", s.label(o.element)},
                     {"additive", detail::count_or_null(o.additive)},
                     {"multiplicative", detail::count_or_null(o.multiplicative)},
                     {"return_exponent", detail::count_or_null(o.return_exponent)}});
    j["orders"] = ord;
  }
  return j;
}

struct AnalyzeOptions {
  bool orders = true;
  bool smarandache = true;
};

/// The full report: axioms, special elements, substructures and Smarandache witnesses.
inline Json analysis_report(const FiniteStructure& s, const AnalyzeOptions& opt = {}) {
  Json j;
  j["schema"] = kSchema;
  j["spec"] = s.description();
  j["order"] = s.order();
  const bool has_add = s.has_op(Op::Add), has_mul = s.has_op(Op::Mul);
  AxiomScope scope = has_add && has_mul ? AxiomScope::Ring : (has_add ? AxiomScope::Add : AxiomScope::Mul);
  j["axioms"] = to_json(s, check_axioms(s, scope));

  Json subs;
  Json wit;
  if (has_mul) {
    j["elements"] = to_json(s, find_special_elements(s), opt.orders);
    Json groups = Json::array();
    for (const auto& g : maximal_subgroups(s))
      groups.push_back({{"idempotent", s.label(g.idempotent)}, {"order", g.members.size()}});
    subs["maximal_subgroups"] = groups;
  } else {
    j["elements"] = nullptr;
  }
  if (s.interval_at(0) != nullptr) {
    auto inh = inherited_substructure(s);
    const auto& members = static_cast<const SubsetSource&>(inh.source()).members();
    Json ij{{"order", inh.order()}};
    if (has_add && has_mul) ij["is_ideal"] = is_ideal(s, members).holds;
    subs["inherited"] = ij;
  }
  j["substructures"] = subs.is_null() ? Json::object() : subs;

  if (opt.smarandache && has_mul) {
    auto sg = is_s_semigroup(s);
    wit["s_semigroup"] = {{"holds", sg.holds}, {"witness", detail::labels_json(s, sg.witness)}};
    if (has_add) {
      auto sr = is_s_ring(s);
      wit["s_ring"] = {{"holds", sr.holds},
                       {"witness", detail::labels_json(s, sr.witness)},
                       {"identity", detail::label_or_null(s, sr.identity)},
                       {"strategy", sr.strategy}};
    }
  }
  if (has_add) {
    auto st = is_strict_semiring(s);
    wit["strict_semiring"] = {{"strict", st.strict}, {"witness", detail::pair_json(s, st.witness)}, {"reason", st.reason}};
  }
  j["witnesses"] = wit.is_null() ? Json::object() : wit;
  return j;
}

inline Json ideal_json(const Ideal& i) {
  const FiniteStructure& s = i.ambient;
  return {{"order", i.size()},
          {"generators", detail::labels_json(s, i.generators)},
          {"elements", detail::labels_json(s, i.elements)}};
}

inline Json quotient_report(const QuotientStructure& q, const QuotientAnalysis& a) {
  const FiniteStructure& c = q.classes;
  Json j;
  j["schema"] = kSchema;
  j["spec"] = q.ambient.description();
  j["kind"] = to_string(q.kind);
  j["ambient_order"] = q.ambient.order();
  j["ideal"] = ideal_json(q.ideal);
  j["order"] = q.order();
  j["characteristic"] = a.characteristic;
  j["diagnostics"] = {{"well_defined_add", q.well_defined_add},
                      {"well_defined_mul", q.well_defined_mul},
                      {"add_representative_counterexample", detail::pair_json(q.ambient, q.add_representative_counterexample)},
                      {"associative_add", q.associative_add},
                      {"associativity_counterexample", detail::triple_json(c, q.associativity_counterexample)}};
  j["classes"] = detail::labels_json(c, [&] {
    std::vector<Index> all(c.order());
    std::iota(all.begin(), all.end(), Index{0});
    return all;
  }());
  j["elements"] = to_json(c, a.elements);
  const auto& v = a.semifield;
  j["semifield"] = {{"commutative", v.commutative},
                    {"identity", v.has_identity},
                    {"no_zero_divisors", v.no_zero_divisors},
                    {"zero_divisor_witness", detail::pair_json(c, v.zero_divisor_witness)},
                    {"strict", v.strict},
                    {"strictness_witness", detail::pair_json(c, v.strictness_witness)},
                    {"semifield", v.is_semifield()}};
  return j;
}

inline Json ideal_lattice_report(const FiniteStructure& s, const IdealLattice& lat) {
  Json j;
  j["schema"] = kSchema;
  j["spec"] = s.description();
  j["order"] = s.order();
  auto list = [](const std::vector<Ideal>& v) {
    Json a = Json::array();
    for (const auto& i : v) a.push_back(ideal_json(i));
    return a;
  };
  j["ideals"] = list(lat.ideals);
  j["maximal"] = list(lat.maximal);
  j["minimal"] = list(lat.minimal);
  return j;
}

inline Json span_json(const SpanReport& r, const Domain& field) {
  return {{"schema", kSchema},
          {"field", field.name()},
          {"vectors", r.vector_count},
          {"ambient_dimension", r.ambient_dimension},
          {"dimension", r.dimension},
          {"independent", r.independent},
          {"spans", r.spans}};
}

// ---------------------------------------------------------------------------
// Cayley tables
// ---------------------------------------------------------------------------

/// CSV with element labels heading the rows and columns; "-" marks products outside the carrier.
inline std::string table_csv(const FiniteStructure& s, Op op) {
  const CayleyTable& t = s.table(op);
  std::string out = detail::csv_cell(std::string(to_string(op)));
  for (Index b = 0; b < s.order(); ++b) out += "," + detail::csv_cell(s.label(b));
  out += '\n';
  for (Index a = 0; a < s.order(); ++a) {
    out += detail::csv_cell(s.label(a));
    for (Index b = 0; b < s.order(); ++b) {
      Index v = t(a, b);
      out += "," + detail::csv_cell(v == kOutside ? "-" : s.label(v));
    }
    out += '\n';
  }
  return out;
}

/// Aligned text grid.
inline std::string table_text(const FiniteStructure& s, Op op) {
  const CayleyTable& t = s.table(op);
  std::size_t w = to_string(op).size();
  for (Index i = 0; i < s.order(); ++i) w = std::max(w, s.label(i).size());
  std::ostringstream out;
  auto cell = [&](const std::string& v) { out << std::setw(static_cast<int>(w)) << v; };
  cell(std::string(to_string(op)));
  out << " |";
  for (Index b = 0; b < s.order(); ++b) {
    out << ' ';
    cell(s.label(b));
  }
  out << '\n' << std::string(w + 2 + (w + 1) * s.order(), '-') << '\n';
  for (Index a = 0; a < s.order(); ++a) {
    cell(s.label(a));
    out << " |";
    for (Index b = 0; b < s.order(); ++b) {
      out << ' ';
      Index v = t(a, b);
      cell(v == kOutside ? "-" : s.label(v));
    }
    out << '\n';
  }
  return out.str();
}

inline Json table_json(const FiniteStructure& s, Op op) {
  const CayleyTable& t = s.table(op);
  Json rows = Json::array();
  for (Index a = 0; a < s.order(); ++a) {
    Json r = Json::array();
    for (Index b = 0; b < s.order(); ++b) r.push_back(t(a, b) == kOutside ? Json(nullptr) : Json(s.label(t(a, b))));
    rows.push_back(r);
  }
  Json all = Json::array();
  for (Index i = 0; i < s.order(); ++i) all.push_back(s.label(i));
  return {{"schema", kSchema}, {"spec", s.description()}, {"op", to_string(op)}, {"elements", all}, {"table", rows}};
}

inline Json book_json(const std::vector<VerificationResult>& results) {
  Json list = Json::array();
  std::map<std::string, std::size_t> tally;
  for (const auto& r : results) {
    ++tally[std::string(to_string(r.status))];
    list.push_back({{"claim_id", r.claim_id},
                    {"status", to_string(r.status)},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"citation", r.citation}});
  }
  Json counts;
  for (Status st : {Status::Pass, Status::Fail, Status::Erratum, Status::Skipped})
    counts[std::string(to_string(st))] = tally[std::string(to_string(st))];
  return {{"schema", kSchema}, {"passed", book_passed(results)}, {"counts", counts}, {"results", list}};
}

}  // namespace natint
