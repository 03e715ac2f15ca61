#include "catch_amalgamated.hpp"
#include "natint/analyzer.hpp"
#include "natint/report.hpp"
#include "natint/spec.hpp"

using namespace natint;

namespace {

std::vector<Index> all_indices(const FiniteStructure& s) {
  std::vector<Index> v(s.order());
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Index> pick(const FiniteStructure& s, std::initializer_list<std::string_view> labels) {
  std::vector<Index> v;
  for (auto l : labels) v.push_back(s.find_or_throw(l));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("carrier sizes", "[structure]") {
  for (std::uint64_t n = 2; n <= 12; ++n)
    for (const char* f : {"c", "o", "oc", "co"})
      CHECK(build_carrier("N(Zn:" + std::to_string(n) + "," + f + ")").order() == n * n);
  CHECK(build_carrier("N(Zn:5)").order() == 25);
  CHECK(sorted(labels_of(build_carrier("N(Zn:2)"), all_indices(build_carrier("N(Zn:2)")))) ==
        std::vector<std::string>{"0", "1", "[0,1]", "[1,0]"});
  CHECK(build_carrier("N(Zn:7\\0,o)").order() == 36);
  CHECK(build_carrier("Mat(2,2,N(Zn:2))").order() == 256);
  CHECK(build_carrier("Prod(N(Zn:2),N(Zn:2))").order() == 16);
  CHECK(build_carrier("N(Zn+I:2)").order() == 16);
  CHECK(build_carrier("N(ZnI:3)").order() == 9);
}

TEST_CASE("carrier errors", "[structure]") {
  auto kind = [](std::string_view spec, std::size_t bound = kDefaultSizeBound) {
    try {
      build_carrier(spec, bound);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind("N(Z)") == ErrorKind::InfiniteDomain);
  CHECK(kind("N(Zn:5)", 10) == ErrorKind::TooLarge);
  CHECK(kind("Mat(3,3,N(Zn:2))") == ErrorKind::TooLarge);
  CHECK(kind("N(Zn:5") == ErrorKind::ParseError);
  CHECK(kind("N(Zn:5,x)") == ErrorKind::ParseError);
  CHECK(kind("Sub{(1,1)} of Sub{(1,1)} of N(Z)") == ErrorKind::ParseError);
  try {
    parse_structure_spec("Mat(2,,N(Zn:2))");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("axiom checks", "[structure]") {
  auto z5 = build_carrier("N(Zn:5)");
  auto add = check_op(z5, Op::Add);
  CHECK(add.is_group());
  CHECK(add.commutative);
  CHECK(z5.label(*add.identity) == "0");

  auto z12 = build_carrier("N(Zn:12)");
  auto mul = check_op(z12, Op::Mul);
  CHECK(mul.is_monoid());
  CHECK(mul.commutative);
  CHECK(z12.label(*mul.identity) == "1");
  CHECK_FALSE(mul.is_group());
  REQUIRE(mul.missing_inverse.has_value());

  auto ring = check_axioms(build_carrier("N(Zn:6)"), AxiomScope::Ring);
  CHECK(ring.distributive.value_or(false));
  CHECK(ring.is_ring());

  auto m = build_carrier("Mat(2,2,N(Zn:2))");
  auto mr = check_axioms(m, AxiomScope::Ring);
  CHECK(mr.is_ring());
  CHECK_FALSE(mr.mul->commutative);
  REQUIRE(mr.mul->commutativity_counterexample.has_value());
  auto [a, b] = *mr.mul->commutativity_counterexample;
  CHECK(m.mul(a, b) != m.mul(b, a));

  auto no_add = build_carrier("N(Zn:3)\\0");
  CHECK_FALSE(no_add.has_op(Op::Add));
  try {
    (void)no_add.table(Op::Add);
    FAIL("table built");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingTable);
  }
}

TEST_CASE("counterexamples are genuine", "[structure]") {
  auto s = build_carrier("Sub{0,[1,0],[0,1]} of N(Zn:2)");
  auto r = check_op(s, Op::Add);
  CHECK_FALSE(r.closed);
  REQUIRE(r.closure_counterexample.has_value());
  CHECK(s.add(r.closure_counterexample->first, r.closure_counterexample->second) == kOutside);
}

TEST_CASE("unit groups of prime moduli", "[structure]") {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    auto s = build_carrier("N(Zn:" + std::to_string(p) + "\\0)");
    CHECK(s.order() == (p - 1) * (p - 1));
    CHECK(check_op(s, Op::Mul).is_group());
  }
  for (std::uint64_t n : {4, 6, 12}) {
    auto s = build_carrier("N(Zn:" + std::to_string(n) + ")");
    CHECK_FALSE(check_op(s, Op::Mul).is_group());
    CHECK(is_s_semigroup(s).holds);
  }
}

TEST_CASE("special elements in N(Zn:12)", "[structure]") {
  auto s = build_carrier("N(Zn:12)");
  auto r = find_special_elements(s);
  CHECK(r.is_idempotent(s.find_or_throw("[0,4]")));
  auto nil = r.nilpotent(s.find_or_throw("[0,6]"));
  REQUIRE(nil.has_value());
  CHECK(nil->index == 2);
  CHECK(s.label(*r.inverse_of(s.find_or_throw("[1,11]"))) == "[1,11]");
  CHECK(s.mul(s.find_or_throw("[3,4]"), s.find_or_throw("[4,3]")) == *s.zero());
  CHECK(r.idempotents.size() == 16);
  CHECK(r.characteristic == 12);

  // every reported witness re-verifies
  const Index zero = *r.zero, one = *r.one;
  for (Index e : r.idempotents) CHECK(s.mul(e, e) == e);
  for (const auto& u : r.units) CHECK(s.mul(u.element, u.inverse) == one);
  for (const auto& z : r.zero_divisors) CHECK(s.mul(z.element, z.partner) == zero);
  for (const auto& n : r.nilpotents) {
    Index p = n.element;
    for (std::uint64_t k = 1; k < n.index; ++k) p = s.mul(p, n.element);
    CHECK(p == zero);
  }
  for (const auto& w : r.s_zero_divisors) {
    CHECK(s.mul(w.x, w.y) == zero);
    CHECK(s.mul(w.x, w.a) == zero);
    CHECK(s.mul(w.y, w.b) == zero);
    CHECK(s.mul(w.a, w.b) != zero);
  }
}

TEST_CASE("idempotent and zero-divisor counts match brute force", "[structure][oracle]") {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    auto s = build_carrier("N(Zn:" + std::to_string(n) + ")");
    auto r = find_special_elements(s);
    std::size_t idem = 0, zd = 0;
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) {
        if ((a * a) % n == a && (b * b) % n == b) ++idem;
        if (a == 0 && b == 0) continue;
        bool divisor = false;
        for (std::uint64_t c = 0; c < n && !divisor; ++c)
          for (std::uint64_t d = 0; d < n && !divisor; ++d)
            divisor = (c != 0 || d != 0) && (a * c) % n == 0 && (b * d) % n == 0;
        if (divisor) ++zd;
      }
    INFO("n=" << n);
    CHECK(r.idempotents.size() == idem);
    CHECK(r.zero_divisors.size() == zd);
    CHECK(r.characteristic == n);
  }
  CHECK(find_special_elements(build_carrier("N(Zn:5)")).zero_divisors.size() == 8);
}

TEST_CASE("element orders", "[structure]") {
  auto s = build_carrier("N(Zn:5)");
  auto r = find_special_elements(s);
  REQUIRE(r.orders.size() == s.order());
  const auto& o = r.orders[s.find_or_throw("[2,3]")];
  CHECK(o.additive == 5u);
  CHECK(o.multiplicative == 4u);
  CHECK(o.return_exponent == 5u);
  CHECK_FALSE(r.orders[s.find_or_throw("[0,2]")].multiplicative.has_value());
}

TEST_CASE("inherited substructure", "[structure]") {
  auto s = build_carrier("N(Zn:15)");
  auto inh = inherited_substructure(s);
  CHECK(inh.order() == 15);
  auto ax = check_axioms(inh, AxiomScope::Ring);
  CHECK(ax.is_ring());
  auto z2 = inherited_substructure(build_carrier("N(Zn:2)"));
  CHECK(sorted(labels_of(z2, all_indices(z2))) == std::vector<std::string>{"0", "1"});
  CHECK(inherited_substructure(inh).order() == 15);
  CHECK_THROWS_AS(inherited_substructure(build_carrier("Mat(1,2,N(Zn:2))")), Error);
}

TEST_CASE("maximal subgroups", "[structure]") {
  auto s = build_carrier("N(Zn:12)");
  auto groups = maximal_subgroups(s);
  auto at_one = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return s.label(g.idempotent) == "1"; });
  REQUIRE(at_one != groups.end());
  CHECK(at_one->members.size() == 16);
  auto h = pick(s, {"[1,11]", "[11,1]", "1", "11"});
  CHECK(std::includes(at_one->members.begin(), at_one->members.end(), h.begin(), h.end()));
  CHECK(is_group_subset(s, h));
  for (const auto& g : groups) CHECK(is_group_subset(s, g.members));
}

TEST_CASE("Klein four table", "[structure]") {
  auto s = build_carrier("Sub{(1,1),(1,-1),(-1,1),(-1,-1)} of N(Z)");
  REQUIRE(s.order() == 4);
  const std::vector<std::vector<std::string>> expected{{"1", "(1,-1)", "(-1,1)", "-1"},
                                                       {"(1,-1)", "1", "-1", "(-1,1)"},
                                                       {"(-1,1)", "-1", "1", "(1,-1)"},
                                                       {"-1", "(-1,1)", "(1,-1)", "1"}};
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) CHECK(s.label(s.mul(a, b)) == expected[a][b]);
  CHECK(check_op(s, Op::Mul).is_group());
}

TEST_CASE("Smarandache semigroups", "[structure]") {
  auto z12 = build_carrier("N(Zn:12)");
  auto h = pick(z12, {"[1,11]", "[11,1]", "1", "11"});
  auto w = is_s_semigroup(z12, h);
  CHECK(w.holds);
  CHECK(w.witness == h);

  auto z3 = build_carrier("N(Zn:3)");
  auto t = pick(z3, {"1", "[1,2]", "[2,1]", "2"});
  CHECK(is_s_semigroup(z3, t).holds);

  auto nil = build_carrier("Sub{0,2,[0,2],[2,0]} of N(Zn:4)");
  CHECK_FALSE(is_s_semigroup(nil).holds);

  auto poly = build_carrier("Poly(N(Zn:2),cyc=3)");
  CHECK(poly.order() == 64);
  CHECK(is_s_semigroup(poly, pick(poly, {"1", "x", "x^2"})).holds);
}

TEST_CASE("Smarandache rings", "[structure]") {
  auto z12 = build_carrier("N(Zn:12)");
  auto w = is_s_ring(z12);
  REQUIRE(w.holds);
  CHECK(sorted(labels_of(z12, w.witness)) == std::vector<std::string>{"0", "4", "8"});
  CHECK(z12.label(*w.identity) == "4");
  CHECK(is_field_subset(z12, w.witness));

  auto z6 = build_carrier("N(Zn:6)");
  auto w6 = is_s_ring(z6);
  REQUIRE(w6.holds);
  CHECK(sorted(labels_of(z6, w6.witness)) == std::vector<std::string>{"0", "3"});

  // fields have no proper subfield inside N(Zn:2)'s inherited copy
  CHECK_FALSE(is_field_subset(z12, pick(z12, {"0", "[0,1]"})));
}

TEST_CASE("strict semirings", "[structure]") {
  auto v = strict_semiring_by_sign(Domain::integers());
  CHECK(v.strict);
  CHECK(v.analytic);
  CHECK(strict_semiring_by_sign(Domain::fuzzy_unit()).strict);
  CHECK_FALSE(strict_semiring_by_sign(Domain::modular(5)).strict);
  auto s = build_carrier("N(Zn:5)");
  auto z5 = is_strict_semiring(s);
  CHECK_FALSE(z5.strict);
  REQUIRE(z5.witness.has_value());
  CHECK(s.add(z5.witness->first, z5.witness->second) == *s.zero());
}

TEST_CASE("fuzzy grid semigroups", "[structure][fuzzy]") {
  const Domain f = Domain::fuzzy_unit();
  auto mn = fuzzy_semigroup_report(FuzzyOp::Min);
  CHECK(mn.grid_points == 121);
  CHECK(mn.associative);
  CHECK(mn.commutative);
  CHECK(*mn.identity == parse_interval(f, "[1,1]"));
  CHECK(*mn.absorbing == parse_interval(f, "[0,0]"));
  auto mx = fuzzy_semigroup_report(FuzzyOp::Max);
  CHECK(*mx.identity == parse_interval(f, "[0,0]"));
  CHECK(*mx.absorbing == parse_interval(f, "[1,1]"));
  auto pr = fuzzy_semigroup_report(FuzzyOp::Prod);
  CHECK(pr.associative);
  CHECK(*pr.identity == parse_interval(f, "[1,1]"));
  CHECK(*pr.absorbing == parse_interval(f, "[0,0]"));
  CHECK(fuzzy_semigroup_report(FuzzyOp::Min, 4).grid_points == 25);
}

TEST_CASE("results do not depend on worker count", "[structure]") {
  auto a = build_carrier("N(Zn:12)");
  auto b = build_carrier("N(Zn:12)");
  a.set_workers(1);
  b.set_workers(4);
  CHECK(analysis_report(a).dump() == analysis_report(b).dump());
}

TEST_CASE("analysis report shape", "[structure][report]") {
  auto j = analysis_report(build_carrier("N(Zn:11,oc)"));
  for (auto key : {"schema", "spec", "order", "axioms", "elements", "substructures", "witnesses"}) CHECK(j.contains(key));
  CHECK(j["schema"] == "natint/1");
  CHECK(j["order"] == 121);
  CHECK_FALSE(j["elements"]["zero_divisors"].empty());
  CHECK_FALSE(j["elements"]["units"].empty());
  CHECK(j["elements"]["nontrivial_idempotents"].empty());
  CHECK(j["substructures"]["inherited"]["is_ideal"] == false);
  auto z12 = analysis_report(build_carrier("N(Zn:12)"));
  CHECK(z12["witnesses"]["s_ring"]["holds"] == true);
}

TEST_CASE("table rendering", "[structure][report]") {
  auto s = build_carrier("N(Zn:2)");
  auto csv = table_csv(s, Op::Add);
  CHECK(csv.substr(0, csv.find('\n')) == "add,0,\"[0,1]\",\"[1,0]\",1");
  CHECK(table_json(s, Op::Mul)["table"].size() == 4);
  CHECK(table_text(s, Op::Mul).find("[0,1]") != std::string::npos);
  auto partial = build_carrier("Sub{0,[1,0],[0,1]} of N(Zn:2)");
  CHECK(table_csv(partial, Op::Add).find("-") != std::string::npos);
}
