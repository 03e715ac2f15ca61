#include "catch_amalgamated.hpp"
#include "natint/natint.hpp"

using namespace natint;

TEST_CASE("config files", "[config]") {
  auto cfg = parse_config("# defaults\nsize_bound = 5000\nworkers=3  # two would do\n\nseed = 42\nformat = csv\n");
  CHECK(cfg.size_bound == 5000);
  CHECK(cfg.workers == 3);
  CHECK(cfg.seed == 42);
  CHECK(cfg.format == OutputFormat::Csv);

  auto alt = parse_config("worker_count = 0\noutput_format = text\n");
  CHECK(alt.workers == 1);
  CHECK(alt.format == OutputFormat::Text);

  RunConfig base;
  base.seed = 9;
  CHECK(parse_config("workers = 2", base).seed == 9);
  CHECK(parse_config("").size_bound == kDefaultSizeBound);
}

TEST_CASE("config errors carry offsets", "[config]") {
  auto pos = [](std::string_view text) -> std::size_t {
    try {
      parse_config(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  CHECK(pos("seed = 1\nworkers = many\n") == 19);
  CHECK(pos("seed = 1\nbogus = 2\n") == 9);
  CHECK(pos("just words") == 0);
  CHECK(pos("format = xml") == 9);
  CHECK_THROWS_AS(load_config("/nonexistent/natint.cfg"), Error);
}

TEST_CASE("output formats", "[config]") {
  for (auto f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Text}) CHECK(parse_output_format(to_string(f)) == f);
  CHECK_THROWS_AS(parse_output_format("yaml"), ParseError);
}

TEST_CASE("structure spec text round trips", "[spec][parse]") {
  for (auto t : {"N(Zn:4)", "N(Zn:3\\0)", "N(Zn+I:3,open)", "Mat(2,2,N(Zn:2))", "Poly(N(Zn:2),cyc=3)",
                 "Prod(N(Zn:2),N(Zn:3))", "Sub{[0,1],[1,0]} of N(Zn:2)"}) {
    auto spec = parse_structure_spec(t);
    CHECK(parse_structure_spec(spec.text()).text() == spec.text());
  }
  CHECK(parse_structure_spec("N(Zn:3)\\0").exclude_zero);
  CHECK(parse_structure_spec("Poly(N(Zn:2),cyc=3)").cyclic == 3);
  CHECK_THROWS_AS(parse_structure_spec("N(Zn:4"), ParseError);
  CHECK_THROWS_AS(parse_structure_spec("Foo(Zn:4)"), ParseError);
}

TEST_CASE("analysis report shape", "[report]") {
  auto s = build_carrier("N(Zn:3)");
  auto j = analysis_report(s, AnalyzeOptions{false, false});
  CHECK(j["schema"] == "natint/1");
  CHECK(j["order"] == 9);
  CHECK(j["spec"] == s.description());
  CHECK(j.contains("axioms"));
}

TEST_CASE("book replay with few samples", "[book]") {
  BookOptions opt;
  opt.property_samples = 200;
  opt.mod_map_samples = 200;
  opt.workers = 1;
  auto results = verify_book(opt);
  REQUIRE_FALSE(results.empty());
  for (const auto& r : results) {
    INFO(r.claim_id << ": expected " << r.expected << ", computed " << r.computed);
    CHECK(r.status != Status::Fail);
    CHECK_FALSE(r.citation.empty());
  }
  CHECK(book_passed(results));

  auto j = book_json(results);
  CHECK(j["passed"] == true);
  std::size_t total = 0;
  for (auto& [k, v] : j["counts"].items()) total += v.get<std::size_t>();
  CHECK(total == results.size());
  CHECK(j["counts"]["fail"] == 0);

  std::set<std::string> ids;
  for (const auto& r : results) CHECK(ids.insert(r.claim_id).second);
}

TEST_CASE("decomposition checks are seeded", "[book]") {
  const Domain d = Domain::modular(7);
  auto a = check_decomposition(d, 500, 3), b = check_decomposition(d, 500, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].cases == b[i].cases);
    CHECK(a[i].failures == 0);
  }
  std::vector<VerificationResult> failed{{"x", Status::Fail, "1", "2", "t"}};
  CHECK_FALSE(book_passed(failed));
  failed[0].status = Status::Erratum;
  CHECK(book_passed(failed));
}
