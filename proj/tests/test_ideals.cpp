#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "natint/ideals.hpp"
#include "natint/report.hpp"
#include "natint/spec.hpp"

using namespace natint;

namespace {

std::vector<std::string> sorted_labels(const FiniteStructure& s, const std::vector<Index>& v) {
  auto l = labels_of(s, v);
  std::sort(l.begin(), l.end());
  return l;
}

// Direct closure and absorption check, independent of is_ideal.
bool brute_ideal(const FiniteStructure& s, const std::vector<Index>& t) {
  std::set<Index> in(t.begin(), t.end());
  for (Index a : t) {
    for (Index b : t)
      if (!in.count(s.add(a, b))) return false;
    for (Index x = 0; x < s.order(); ++x)
      if (!in.count(s.mul(x, a)) || !in.count(s.mul(a, x))) return false;
  }
  return !t.empty();
}

// Number of additive cosets x + I, by partitioning the carrier.
std::size_t coset_count(const FiniteStructure& s, const Ideal& i) {
  std::set<std::set<Index>> cosets;
  for (Index x = 0; x < s.order(); ++x) {
    std::set<Index> c;
    for (Index y : i.elements) c.insert(s.add(x, y));
    cosets.insert(c);
  }
  return cosets.size();
}

Index power(const FiniteStructure& s, Index x, int k) {
  Index r = x;
  for (int i = 1; i < k; ++i) r = s.mul(r, x);
  return r;
}

}  // namespace

TEST_CASE("generated ideals", "[ideals]") {
  auto z5 = build_carrier("N(Zn:5)");
  auto col = generate_ideal(z5, {z5.find_or_throw("[0,1]")});
  CHECK(col.size() == 5);
  for (Index x : col.elements) CHECK(z5.interval_at(x)->lo().is_zero());

  auto z6 = build_carrier("N(Zn:6)");
  CHECK(sorted_labels(z6, generate_ideal(z6, {z6.find_or_throw("0")}).elements) == std::vector<std::string>{"0"});

  auto z15 = build_carrier("N(Zn:15)");
  auto i = generate_ideal(z15, {z15.find_or_throw("5"), z15.find_or_throw("10")});
  CHECK(i.size() == 9);
  for (Index x : i.elements) {
    CHECK(z15.interval_at(x)->lo().residue() % 5 == 0);
    CHECK(z15.interval_at(x)->hi().residue() % 5 == 0);
  }
}

TEST_CASE("ideal checks", "[ideals]") {
  auto s = build_carrier("N(Zn:12)");
  std::vector<Index> threes, all(s.order());
  std::iota(all.begin(), all.end(), Index{0});
  for (Index x = 0; x < s.order(); ++x)
    if (s.interval_at(x)->lo().residue() % 3 == 0 && s.interval_at(x)->hi().residue() % 3 == 0) threes.push_back(x);
  CHECK(is_ideal(s, threes).holds);
  CHECK(is_ideal(s, all).holds);
  auto inh = inherited_substructure(s);
  const auto& diag = static_cast<const SubsetSource&>(inh.source()).members();
  auto r = is_ideal(s, diag);
  CHECK_FALSE(r.holds);
  CHECK_FALSE(brute_ideal(s, diag));
}

TEST_CASE("generated ideals pass the ideal test", "[ideals][oracle]") {
  std::mt19937_64 rng(41);
  for (std::uint64_t n : {4, 6, 8, 9, 10, 12}) {
    auto s = build_carrier("N(Zn:" + std::to_string(n) + ")");
    for (int k = 0; k < 6; ++k) {
      std::vector<Index> gens{static_cast<Index>(rng() % s.order()), static_cast<Index>(rng() % s.order())};
      auto i = generate_ideal(s, gens);
      INFO("n=" << n);
      CHECK(is_ideal(s, i.elements).holds);
      CHECK(brute_ideal(s, i.elements));
      for (Index g : gens) CHECK(i.contains(g));
    }
  }
}

TEST_CASE("subsemigroups need not be ideals", "[ideals]") {
  for (std::uint64_t n = 2; n <= 12; ++n) {
    auto s = build_carrier("N(Zn:" + std::to_string(n) + ")");
    auto inh = inherited_substructure(s);
    const auto& diag = static_cast<const SubsetSource&>(inh.source()).members();
    CHECK(check_op(inh, Op::Mul).is_semigroup());
    CHECK_FALSE(brute_ideal(s, diag));
  }
}

TEST_CASE("ideal lattice for prime moduli", "[ideals]") {
  for (std::uint64_t p : {3, 5, 7}) {
    auto s = build_carrier("N(Zn:" + std::to_string(p) + ")");
    auto lat = maximal_minimal_ideals(s);
    REQUIRE(lat.ideals.size() == 2);
    CHECK(lat.maximal.size() == 2);
    CHECK(lat.minimal.size() == 2);
    for (const auto& i : lat.ideals) {
      CHECK(i.size() == p);
      CHECK(brute_ideal(s, i.elements));
    }
  }
}

TEST_CASE("ideal lattice of N(Zn:30)", "[ideals]") {
  auto s = build_carrier("N(Zn:30)");
  auto lat = maximal_minimal_ideals(s);
  for (const auto& i : lat.ideals) CHECK(brute_ideal(s, i.elements));
  auto square = [&](std::string_view g) { return generate_ideal(s, {s.find_or_throw(g)}); };
  auto in = [](const std::vector<Ideal>& v, const Ideal& i) {
    return std::any_of(v.begin(), v.end(), [&](const Ideal& j) { return j.elements == i.elements; });
  };
  CHECK(square("10").size() == 9);
  CHECK(square("15").size() == 4);
  CHECK(square("2").size() == 225);
  // in the full lattice each of these has a smaller or larger ideal next to it
  CHECK_FALSE(in(lat.minimal, square("10")));
  CHECK_FALSE(in(lat.minimal, square("15")));
  CHECK_FALSE(in(lat.maximal, square("2")));
  CHECK(in(lat.ideals, square("10")));
  CHECK(in(lat.ideals, square("2")));
}

TEST_CASE("ideal enumeration cap", "[ideals]") {
  try {
    maximal_minimal_ideals(build_carrier("N(Zn:65)"));
    FAIL("enumerated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("ideal spec grammar", "[ideals][parse]") {
  auto s = build_carrier("N(Zn:4)");
  CHECK(resolve_ideal_spec(s, "col-zero").size() == 4);
  CHECK(resolve_ideal_spec(s, "row-zero").size() == 4);
  CHECK(resolve_ideal_spec(s, "diag-multiples:2").size() == 4);
  CHECK(resolve_ideal_spec(s, "gen{[0,2],[2,0]}").size() == 4);
  CHECK_THROWS_AS(resolve_ideal_spec(s, "cols"), ParseError);
  CHECK_THROWS_AS(resolve_ideal_spec(s, "gen{[0,9]"), ParseError);
}

TEST_CASE("standard quotients", "[ideals][quotient]") {
  auto s = build_carrier("N(Zn:3,o)");
  auto i = resolve_ideal_spec(s, "col-zero");
  auto q = standard_quotient(s, i);
  CHECK(q.order() == 3);
  CHECK(q.order() == coset_count(s, i));
  CHECK(q.well_defined_add);
  CHECK(q.well_defined_mul);
  CHECK(q.class_of[s.find_or_throw("(1,1)")] == q.class_of[s.find_or_throw("(1,0)")]);

  auto z4 = build_carrier("N(Zn:4)");
  std::vector<Index> all(z4.order());
  std::iota(all.begin(), all.end(), Index{0});
  CHECK(standard_quotient(z4, generate_ideal(z4, all)).order() == 1);

  for (std::uint64_t n = 2; n <= 8; ++n) {
    auto c = build_carrier("N(Zn:" + std::to_string(n) + ")");
    for (auto spec : {"col-zero", "row-zero", "diag-multiples:2"}) {
      auto id = resolve_ideal_spec(c, spec);
      auto sq = standard_quotient(c, id);
      CHECK(sq.order() * id.size() == c.order());
      CHECK(sq.order() == coset_count(c, id));
    }
  }
}

TEST_CASE("not an ideal", "[ideals][quotient]") {
  auto s = build_carrier("N(Zn:4)");
  Ideal fake{s, {s.find_or_throw("0"), s.find_or_throw("1"), s.find_or_throw("2"), s.find_or_throw("3")}, {}};
  try {
    rees_quotient(s, fake);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnIdeal);
  }
}

TEST_CASE("Rees quotient orders", "[ideals][quotient]") {
  auto order = [](std::uint64_t n) {
    auto s = build_carrier("N(Zn:" + std::to_string(n) + ")");
    return rees_quotient(s, resolve_ideal_spec(s, "col-zero")).order();
  };
  CHECK(order(3) == 7);
  CHECK(order(5) == 21);
  CHECK(order(10) == 91);
  for (std::uint64_t n = 2; n <= 12; ++n) CHECK(order(n) == n * n - n + 1);
}

TEST_CASE("Rees quotient multiplication", "[ideals][quotient]") {
  for (std::uint64_t n : {3, 4, 6}) {
    auto s = build_carrier("N(Zn:" + std::to_string(n) + ")");
    auto q = rees_quotient(s, resolve_ideal_spec(s, "col-zero"));
    auto ax = check_op(q.classes, Op::Mul);
    CHECK(ax.is_monoid());
    CHECK(ax.commutative);
    CHECK(ax.absorbing == Index{0});
    CHECK(q.well_defined_mul);
  }
}

TEST_CASE("Rees quotient characteristics and powers", "[ideals][quotient]") {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    auto s = build_carrier("N(Zn:" + std::to_string(p) + ")");
    auto q = rees_quotient(s, resolve_ideal_spec(s, "col-zero"));
    auto a = quotient_analysis(q);
    CHECK(a.characteristic == p);
    for (const auto& o : a.elements.orders) CHECK(o.return_exponent.has_value());
  }
  auto z6 = build_carrier("N(Zn:6)");
  auto q6 = rees_quotient(z6, resolve_ideal_spec(z6, "col-zero"));
  CHECK(q6.order() == 31);
  CHECK(quotient_analysis(q6).characteristic == 6);

  auto z5 = build_carrier("N(Zn:5)");
  auto q5 = rees_quotient(z5, resolve_ideal_spec(z5, "col-zero"));
  const Index c2 = q5.class_of[z5.find_or_throw("[2,0]")], c4 = q5.class_of[z5.find_or_throw("[4,0]")];
  CHECK(power(q5.classes, c2, 5) == c2);
  CHECK(power(q5.classes, c4, 3) == c4);

  auto z12 = build_carrier("N(Zn:12)");
  auto q12 = rees_quotient(z12, resolve_ideal_spec(z12, "col-zero"));
  const Index c6 = q12.class_of[z12.find_or_throw("[6,0]")], c4b = q12.class_of[z12.find_or_throw("[4,0]")];
  CHECK(q12.classes.mul(c6, c6) == 0);
  CHECK(q12.classes.mul(c4b, c4b) == c4b);
}

TEST_CASE("pair quotient", "[ideals][quotient]") {
  auto m = build_carrier("Prod(N(Zn:2),N(Zn:2))");
  auto v = generate_ideal(m, {m.find_or_throw("(0, 1)")});
  CHECK(v.size() == 4);
  auto q = rees_quotient(m, v);
  CHECK(q.order() == 13);
  auto a = quotient_analysis(q);
  CHECK(a.characteristic == 2);
  CHECK_FALSE(a.semifield.no_zero_divisors);
  REQUIRE(a.semifield.zero_divisor_witness.has_value());
  auto [x, y] = *a.semifield.zero_divisor_witness;
  CHECK(x != 0);
  CHECK(y != 0);
  CHECK(q.classes.mul(x, y) == 0);
  CHECK_FALSE(a.semifield.is_semifield());
}

TEST_CASE("mod-n map is a homomorphism", "[ideals][oracle]") {
  for (std::uint64_t n : {3, 4, 11}) {
    auto r = verify_mod_map(n, 10'000, 99);
    CHECK(r.samples == 10'000);
    CHECK(r.failures == 0);
  }
  const Domain z = Domain::integers(), z7 = Domain::modular(7);
  auto x = parse_interval(z, "[-15,22]");
  CHECK(to_string(reduce_mod(x, z7)) == "[6,1]");
  CHECK(reduce_mod(parse_interval(z, "[14,-21]"), z7).is_zero());
}

TEST_CASE("quotient report", "[ideals][report]") {
  auto s = build_carrier("N(Zn:5,o)");
  auto q = rees_quotient(s, resolve_ideal_spec(s, "col-zero"));
  auto j = quotient_report(q, quotient_analysis(q));
  CHECK(j["order"] == 21);
  CHECK(j["kind"] == "rees");
  CHECK(j["characteristic"] == 5);
  CHECK(j["classes"].size() == 21);
  CHECK(j["ideal"]["order"] == 5);
}
