#include <random>

#include "catch_amalgamated.hpp"
#include "natint/scalar.hpp"

using namespace natint;

namespace {

Scalar sc(const Domain& d, std::string_view t) { return parse_scalar(d, t); }

std::vector<Scalar> all_of(const Domain& d) { return *enumerate_domain(d); }

}  // namespace

TEST_CASE("modular addition wraps", "[scalar]") {
  const Domain z12 = Domain::modular(12);
  CHECK(to_string(sc(z12, "7") + sc(z12, "5")) == "0");
  CHECK(sc(z12, "19").residue() == 7);
}

TEST_CASE("rational sums reduce", "[scalar]") {
  const Domain q = Domain::rationals();
  CHECK(to_string(sc(q, "1/3") + sc(q, "1/6")) == "1/2");
  CHECK(to_string(sc(q, "0.25")) == "1/4");
}

TEST_CASE("neutrosophic sum and product", "[scalar][neutro]") {
  const Domain d = Domain::neutro_mixed(Domain::integers());
  auto x = sc(d, "5+2I"), y = sc(d, "-3+8I");
  CHECK(to_string(x + y) == "2+10I");
  CHECK(to_string(x * y) == "-15+50I");
  CHECK(to_string(sc(d, "-7+5I") * sc(d, "-I")) == "2I");
}

TEST_CASE("pure neutrosophic product keeps I", "[scalar][neutro]") {
  const Domain d = Domain::neutro_pure(Domain::modular(12));
  CHECK(to_string(sc(d, "4I") * sc(d, "4I")) == "4I");
  CHECK(Scalar::one(d) == sc(d, "I"));
}

TEST_CASE("fuzzy product and overflow", "[scalar][fuzzy]") {
  const Domain f = Domain::fuzzy_unit();
  CHECK(to_string(sc(f, "0.1") * sc(f, "0.6")) == "3/50");
  CHECK(to_string(sc(f, "0.25") + sc(f, "0.5")) == "3/4");
  try {
    (void)(sc(f, "0.6") + sc(f, "0.7"));
    FAIL("sum above 1 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FuzzyRangeOverflow);
  }
  CHECK_THROWS_AS(parse_scalar(f, "3/2"), Error);
}

TEST_CASE("negation", "[scalar]") {
  CHECK(to_string(-sc(Domain::modular(5), "2")) == "3");
  CHECK(to_string(-sc(Domain::integers(), "0")) == "0");
  CHECK(to_string(-sc(Domain::neutro_mixed(Domain::integers()), "1-3I")) == "-1+3I");
  try {
    (void)neg(sc(Domain::fuzzy_unit(), "0.5"));
    FAIL("fuzzy negation accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotARing);
  }
}

TEST_CASE("mixing domains is rejected", "[scalar]") {
  try {
    (void)(Scalar::of(Domain::integers(), 1) + Scalar::of(Domain::rationals(), 1));
    FAIL("mixed domains accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
  CHECK_THROWS_AS(Scalar::of(Domain::modular(5), 1) * Scalar::of(Domain::modular(7), 1), Error);
}

TEST_CASE("inverses", "[scalar]") {
  CHECK(to_string(*inv(sc(Domain::modular(12), "11"))) == "11");
  CHECK(to_string(*inv(sc(Domain::rationals(), "3"))) == "1/3");
  CHECK_FALSE(inv(sc(Domain::modular(12), "4")).has_value());
  CHECK_FALSE(inv(sc(Domain::integers(), "2")).has_value());
  CHECK(to_string(*inv(sc(Domain::neutro_mixed(Domain::modular(5)), "2"))) == "3");
}

TEST_CASE("inverse agrees with brute-force search", "[scalar][oracle]") {
  std::vector<Domain> domains;
  for (std::uint64_t n = 2; n <= 12; ++n) domains.push_back(Domain::modular(n));
  for (std::uint64_t n = 2; n <= 7; ++n) {
    domains.push_back(Domain::neutro_mixed(Domain::modular(n)));
    domains.push_back(Domain::neutro_pure(Domain::modular(n)));
  }
  for (const auto& d : domains) {
    const auto all = all_of(d);
    const Scalar one = Scalar::one(d);
    for (const auto& x : all) {
      std::optional<Scalar> found;
      for (const auto& y : all)
        if (x * y == one) found = y;
      auto got = inv(x);
      INFO(d.name() << " x=" << to_string(x));
      REQUIRE(got.has_value() == found.has_value());
      if (got) CHECK(x * *got == one);
    }
  }
}

TEST_CASE("enumeration order and size", "[scalar]") {
  auto z3 = all_of(Domain::modular(3));
  REQUIRE(z3.size() == 3);
  CHECK(to_string(z3[2]) == "2");
  auto pure = all_of(Domain::neutro_pure(Domain::modular(5)));
  REQUIRE(pure.size() == 5);
  CHECK(to_string(pure[0]) == "0");
  CHECK(to_string(pure[4]) == "4I");
  auto mixed = all_of(Domain::neutro_mixed(Domain::modular(3)));
  REQUIRE(mixed.size() == 9);
  CHECK(to_string(mixed[1]) == "I");
  CHECK(to_string(mixed[3]) == "1");
  CHECK_FALSE(enumerate_domain(Domain::rationals()).has_value());
  CHECK_FALSE(enumerate_domain(Domain::integers()).has_value());
  CHECK_FALSE(enumerate_domain(Domain::fuzzy_unit()).has_value());
}

TEST_CASE("ring laws hold exhaustively on small finite domains", "[scalar][laws]") {
  std::vector<Domain> domains;
  for (std::uint64_t n = 2; n <= 12; ++n) domains.push_back(Domain::modular(n));
  for (std::uint64_t n = 2; n <= 5; ++n) domains.push_back(Domain::neutro_mixed(Domain::modular(n)));
  for (const auto& d : domains) {
    const auto all = all_of(d);
    bool ok = true;
    for (const auto& x : all)
      for (const auto& y : all) {
        ok = ok && x + y == y + x && x * y == y * x;
        for (const auto& z : all)
          ok = ok && (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z;
      }
    INFO(d.name());
    CHECK(ok);
  }
}

TEST_CASE("neutrosophic product matches two-term expansion", "[scalar][neutro][oracle]") {
  const Domain d = Domain::neutro_mixed(Domain::integers());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(-1'000'000'000LL, 1'000'000'000LL);
  for (int k = 0; k < 10'000; ++k) {
    const BigInt a = dist(rng), b = dist(rng), c = dist(rng), e = dist(rng);
    // (a + bI)(c + eI) = ac + (ae + bc + be)I since I^2 = I
    const BigInt re = a * c, im = a * e + b * c + b * e;
    auto p = Scalar::neutro(d, BigRat(a), BigRat(b)) * Scalar::neutro(d, BigRat(c), BigRat(e));
    REQUIRE(p.real() == BigRat(re));
    REQUIRE(p.indeterminate() == BigRat(im));
  }
}

TEST_CASE("rationals stay in lowest terms", "[scalar]") {
  const Domain q = Domain::rationals();
  std::mt19937_64 rng(11);
  for (int k = 0; k < 2000; ++k) {
    const long long n1 = static_cast<long long>(rng() % 2001) - 1000, d1 = 1 + static_cast<long long>(rng() % 1000);
    const long long n2 = static_cast<long long>(rng() % 2001) - 1000, d2 = 1 + static_cast<long long>(rng() % 1000);
    auto x = Scalar::of(q, BigRat(n1, d1)), y = Scalar::of(q, BigRat(n2, d2));
    for (const auto& r : {x + y, x * y, x - y}) {
      const BigInt num = boost::multiprecision::numerator(r.real()), den = boost::multiprecision::denominator(r.real());
      REQUIRE(den > 0);
      REQUIRE(boost::multiprecision::gcd(num, den) == 1);
    }
  }
}

TEST_CASE("domain grammar", "[scalar][parse]") {
  CHECK(parse_domain("Z") == Domain::integers());
  CHECK(parse_domain("Q") == Domain::rationals());
  CHECK(parse_domain("F01") == Domain::fuzzy_unit());
  CHECK(parse_domain("Zn:7") == Domain::modular(7));
  CHECK(parse_domain("ZI") == Domain::neutro_pure(Domain::integers()));
  CHECK(parse_domain("QI") == Domain::neutro_pure(Domain::rationals()));
  CHECK(parse_domain("ZnI:12") == Domain::neutro_pure(Domain::modular(12)));
  CHECK(parse_domain("Zn+I:5") == Domain::neutro_mixed(Domain::modular(5)));
  for (const auto& d : {Domain::integers(), Domain::modular(9), Domain::neutro_mixed(Domain::modular(4))})
    CHECK(parse_domain(d.name()) == d);
  CHECK_THROWS_AS(parse_domain("z"), ParseError);
  CHECK_THROWS_AS(parse_domain("Zn:"), ParseError);
  CHECK_THROWS(parse_domain("Zn:1"));
  try {
    parse_domain("Zn:x");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("invalid domains", "[scalar]") {
  CHECK_THROWS_AS(Domain::modular(1), Error);
  CHECK_THROWS_AS(Domain::neutro_pure(Domain::neutro_pure(Domain::integers())), Error);
  CHECK_THROWS_AS(Domain::neutro_mixed(Domain::fuzzy_unit()), Error);
}

TEST_CASE("scalar text round trip", "[scalar][parse]") {
  const Domain d = Domain::neutro_mixed(Domain::rationals());
  for (auto t : {"0", "I", "-I", "2/3", "1/2-3/4I", "5+I"}) CHECK(to_string(sc(d, to_string(sc(d, t)))) == to_string(sc(d, t)));
  CHECK_THROWS_AS(parse_scalar(Domain::integers(), "1/2"), Error);
  CHECK_THROWS_AS(parse_scalar(Domain::integers(), "2I"), Error);
}
