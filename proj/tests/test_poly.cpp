#include <random>

#include "catch_amalgamated.hpp"
#include "natint/analyzer.hpp"
#include "natint/poly.hpp"

using namespace natint;

namespace {

const Domain Z = Domain::integers();

IntervalPoly pp(const Domain& d, std::string_view t, std::optional<std::size_t> cyc = std::nullopt) {
  return parse_poly(d, t, Flavor::Closed, cyc);
}

ScalarPoly trimmed(ScalarPoly v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

ScalarPoly naive_mul(const ScalarPoly& a, const ScalarPoly& b, const Domain& d) {
  if (a.empty() || b.empty()) return {};
  ScalarPoly out(a.size() + b.size() - 1, Scalar::zero(d));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return trimmed(out);
}

IntervalPoly rand_poly(const Domain& d, std::mt19937_64& rng) {
  auto pick = [&] {
    if (d.kind() == DomainKind::Mod) return Scalar::of(d, static_cast<long long>(rng() % d.modulus()));
    return Scalar::of(d, BigRat(static_cast<long long>(rng() % 31) - 15, 1 + static_cast<long long>(rng() % 6)));
  };
  std::vector<NaturalInterval> c;
  const std::size_t n = rng() % 6;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = pick();
    c.emplace_back(a, pick());
  }
  return IntervalPoly(d, Flavor::Closed, c);
}

}  // namespace

TEST_CASE("polynomial sum", "[poly]") {
  auto p = parse_poly(Z, "(0,5)x^8 + (-7,-9)x^5 + (8,0)x^3 + (-3,2)x^2 + (2,-4)x + (8,3)");
  auto q = parse_poly(Z, "(6,3)x^4 + (-3,2)x^3 + (7,1)x^2 + (-3,2)");
  auto s = poly_add(p, q);
  CHECK(s.degree() == 8);
  CHECK(to_string(s.coeff(4)) == "(6,3)");
  CHECK(to_string(s.coeff(3)) == "(5,2)");
  CHECK(to_string(s.coeff(0)) == "5");
  CHECK(to_string(s) == "(0,5)x^8 + (-7,-9)x^5 + (6,3)x^4 + (5,2)x^3 + (4,3)x^2 + (2,-4)x + 5");
  CHECK(poly_sub(s, q) == p);
}

TEST_CASE("square over Zn:3 collapses to degenerate coefficients", "[poly]") {
  const Domain z3 = Domain::modular(3);
  auto p = pp(z3, "[1,2]x + [2,1]");
  auto sq = poly_mul(p, p);
  CHECK(sq.degree() == 2);
  for (std::size_t k = 0; k < 3; ++k) CHECK(sq.coeff(k) == parse_interval(z3, "[1,1]"));
  CHECK(to_string(sq) == "x^2 + x + 1");
}

TEST_CASE("zero divisors among polynomials", "[poly]") {
  auto p = parse_poly(Z, "[0,3)x^3 + [0,-2)x + [0,7)");
  auto q = parse_poly(Z, "[5,0)x^2 + [-1,0)x + [4,0)");
  CHECK_FALSE(p.is_zero());
  CHECK_FALSE(q.is_zero());
  CHECK(poly_mul(p, q).is_zero());
  CHECK(poly_mul(p, q).degree() == -1);
  CHECK(to_string(poly_mul(p, q)) == "0");
}

TEST_CASE("products agree with scalar polynomial oracle", "[poly][oracle]") {
  std::mt19937_64 rng(5);
  for (const Domain& d : {Domain::rationals(), Domain::modular(6), Domain::modular(7)}) {
    for (int k = 0; k < 10'000 / 3; ++k) {
      auto p = rand_poly(d, rng), q = rand_poly(d, rng);
      auto hp = poly_decompose(p), hq = poly_decompose(q);
      auto want = poly_recompose(d, naive_mul(hp.lo, hq.lo, d), naive_mul(hp.hi, hq.hi, d), Flavor::Closed);
      REQUIRE(poly_mul(p, q) == want);
      REQUIRE(poly_recompose(d, hp.lo, hp.hi, Flavor::Closed) == p);
      REQUIRE(poly_add(p, q) == poly_add(q, p));
    }
  }
}

TEST_CASE("cyclic folding", "[poly]") {
  const Domain z5 = Domain::modular(5);
  auto x2 = pp(z5, "x^2", 3), x3 = pp(z5, "x^3", 3);
  CHECK(to_string(x3) == "1");
  CHECK(to_string(poly_mul(x2, x2)) == "x");
  CHECK(to_string(pp(z5, "x^4 + [2,3]x", 3)) == "[3,4]x");
  try {
    poly_add(pp(z5, "x", 3), pp(z5, "x", 4));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModulusMismatch);
  }
  CHECK_THROWS_AS(pp(z5, "x", 0), Error);
  CHECK_THROWS_AS(poly_mul(pp(z5, "x"), pp(Domain::modular(7), "x")), Error);
}

TEST_CASE("finite polynomial carriers", "[poly][structure]") {
  CHECK(poly_carrier(Domain::modular(2), Flavor::Closed, 3).order() == 64);
  CHECK(poly_carrier(Domain::modular(2), Flavor::Closed, 1).order() == 4);
  CHECK(poly_carrier(Domain::modular(3), Flavor::Closed, 2).order() == 81);
  CHECK_THROWS_AS(poly_carrier(Domain::modular(3), Flavor::Closed, 8, 1000), Error);
  CHECK_THROWS_AS(poly_carrier(Z, Flavor::Closed, 2), Error);

  auto s = poly_carrier(Domain::modular(2), Flavor::Closed, 3);
  std::vector<Index> h;
  for (auto t : {"1", "x", "x^2"}) h.push_back(s.find_or_throw(t));
  CHECK(is_group_subset(s, h));
  CHECK(check_axioms(s, AxiomScope::Ring).is_ring());
}

TEST_CASE("polynomial text", "[poly][parse]") {
  const Domain q = Domain::rationals();
  for (auto t : {"0", "1", "x", "[1/2,3]x^3 + 2", "[0,1]x^10 + x"}) CHECK(to_string(pp(q, t)) == t);
  CHECK(pp(q, "x + x") == pp(q, "2x"));
  CHECK(pp(q, "[1,-1]x + [-1,1]x").is_zero());
  CHECK(parse_poly(Z, "(1,2)x + 3").flavor() == Flavor::Open);
  CHECK_THROWS_AS(pp(q, ""), ParseError);
  CHECK_THROWS_AS(pp(q, "x + "), ParseError);
  CHECK_THROWS_AS(pp(q, "x^y"), ParseError);
  CHECK(pp(Domain::neutro_mixed(Z), "[I,2]x").degree() == 1);
}
