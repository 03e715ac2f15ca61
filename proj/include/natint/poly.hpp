#pragma once

#include <optional>
#include <string>
#include <vector>

#include "natint/interval.hpp"
#include "natint/structure.hpp"
#include "natint/text.hpp"

namespace natint {

/// Dense polynomial with natural-interval coefficients, optionally truncated by x^k = 1.
class IntervalPoly {
 public:
  IntervalPoly(Domain domain, Flavor flavor, std::optional<std::size_t> cyclic = std::nullopt)
      : domain_(std::move(domain)), flavor_(flavor), cyclic_(cyclic) {
    if (cyclic_ && *cyclic_ == 0) throw Error(ErrorKind::InvalidArgument, "cyclic modulus must be positive");
  }

  /// Coefficients by degree; exponents fold modulo the cyclic bound and trailing zeros are dropped.
  IntervalPoly(Domain domain, Flavor flavor, std::vector<NaturalInterval> coeffs,
               std::optional<std::size_t> cyclic = std::nullopt)
      : IntervalPoly(std::move(domain), flavor, cyclic) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) accumulate(i, coeffs[i]);
    trim();
  }

  static IntervalPoly constant(const NaturalInterval& c, std::optional<std::size_t> cyclic = std::nullopt) {
    return IntervalPoly(c.domain(), c.flavor(), {c}, cyclic);
  }

  static IntervalPoly monomial(const NaturalInterval& c, std::size_t degree,
                               std::optional<std::size_t> cyclic = std::nullopt) {
    IntervalPoly p(c.domain(), c.flavor(), cyclic);
    p.accumulate(degree, c);
    p.trim();
    return p;
  }

  const Domain& domain() const noexcept { return domain_; }
  Flavor flavor() const noexcept { return flavor_; }
  std::optional<std::size_t> cyclic() const noexcept { return cyclic_; }
  const std::vector<NaturalInterval>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  NaturalInterval coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : NaturalInterval::zero(domain_, flavor_);
  }

  friend bool operator==(const IntervalPoly&, const IntervalPoly&) = default;

  std::size_t hash() const {
    std::size_t seed = cyclic_.value_or(0);
    for (const auto& c : coeffs_) boost::hash_combine(seed, c.hash());
    return seed;
  }

 private:
  friend IntervalPoly poly_mul(const IntervalPoly&, const IntervalPoly&);

  void accumulate(std::size_t degree, const NaturalInterval& c) {
    if (!(c.domain() == domain_)) throw Error(ErrorKind::DomainMismatch, "coefficient over " + c.domain().name());
    if (c.flavor() != flavor_) throw Error(ErrorKind::FlavorMismatch, "coefficient flavor differs");
    if (cyclic_) degree %= *cyclic_;
    if (coeffs_.size() <= degree) coeffs_.resize(degree + 1, NaturalInterval::zero(domain_, flavor_));
    coeffs_[degree] = iv_add(coeffs_[degree], c);
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Domain domain_;
  Flavor flavor_;
  std::optional<std::size_t> cyclic_;
  std::vector<NaturalInterval> coeffs_;
};

}  // namespace natint

template <>
struct std::hash<natint::IntervalPoly> {
  std::size_t operator()(const natint::IntervalPoly& p) const { return p.hash(); }
};

namespace natint {

namespace detail {
inline void require_compatible(const IntervalPoly& p, const IntervalPoly& q) {
  if (!(p.domain() == q.domain()))
    throw Error(ErrorKind::DomainMismatch, p.domain().name() + " vs " + q.domain().name());
  if (p.flavor() != q.flavor()) throw Error(ErrorKind::FlavorMismatch, "polynomials of different flavors");
  if (p.cyclic() != q.cyclic()) throw Error(ErrorKind::ModulusMismatch, "polynomials with different x^k = 1 bounds");
}
}  // namespace detail

inline IntervalPoly poly_add(const IntervalPoly& p, const IntervalPoly& q) {
  detail::require_compatible(p, q);
  std::vector<NaturalInterval> c;
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
  for (std::size_t i = 0; i < n; ++i) c.push_back(iv_add(p.coeff(i), q.coeff(i)));
  return IntervalPoly(p.domain(), p.flavor(), std::move(c), p.cyclic());
}

inline IntervalPoly poly_neg(const IntervalPoly& p) {
  std::vector<NaturalInterval> c;
  for (const auto& x : p.coeffs()) c.push_back(iv_neg(x));
  return IntervalPoly(p.domain(), p.flavor(), std::move(c), p.cyclic());
}

inline IntervalPoly poly_sub(const IntervalPoly& p, const IntervalPoly& q) { return poly_add(p, poly_neg(q)); }

/// Cauchy product; under x^k = 1 the exponent i + j is taken modulo k.
inline IntervalPoly poly_mul(const IntervalPoly& p, const IntervalPoly& q) {
  detail::require_compatible(p, q);
  IntervalPoly r(p.domain(), p.flavor(), p.cyclic());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) r.accumulate(i + j, iv_mul(p.coeffs()[i], q.coeffs()[j]));
  r.trim();
  return r;
}

/// Scalar polynomial, coefficients by degree, trailing zeros dropped.
using ScalarPoly = std::vector<Scalar>;

struct PolyHalves {
  ScalarPoly lo;
  ScalarPoly hi;
};

inline PolyHalves poly_decompose(const IntervalPoly& p) {
  PolyHalves h;
  for (const auto& c : p.coeffs()) {
    h.lo.push_back(c.lo());
    h.hi.push_back(c.hi());
  }
  auto trim = [](ScalarPoly& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(h.lo);
  trim(h.hi);
  return h;
}

inline IntervalPoly poly_recompose(const Domain& d, const ScalarPoly& lo, const ScalarPoly& hi, Flavor flavor,
                                   std::optional<std::size_t> cyclic = std::nullopt) {
  std::vector<NaturalInterval> c;
  const std::size_t n = std::max(lo.size(), hi.size());
  for (std::size_t i = 0; i < n; ++i)
    c.emplace_back(i < lo.size() ? lo[i] : Scalar::zero(d), i < hi.size() ? hi[i] : Scalar::zero(d), flavor);
  return IntervalPoly(d, flavor, std::move(c), cyclic);
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

namespace detail {
inline std::string bracketed(const NaturalInterval& c) {
  const bool ol = c.flavor() == Flavor::Open || c.flavor() == Flavor::OpenClosed;
  const bool orr = c.flavor() == Flavor::Open || c.flavor() == Flavor::ClosedOpen;
  return std::string(ol ? "(" : "[") + to_string(c.lo()) + "," + to_string(c.hi()) + (orr ? ")" : "]");
}
}  // namespace detail

/// Highest degree first, e.g. "[0,5]x^8 + [8,0]x^3 + 2"; unit coefficients are omitted.
inline std::string to_string(const IntervalPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto one = NaturalInterval::one(p.domain(), p.flavor());
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const auto& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string coef;
    if (c.is_degenerate() && !p.domain().is_neutrosophic()) coef = to_string(c.lo());
    else coef = detail::bracketed(c);
    if (k == 0) {
      s += coef;
      continue;
    }
    if (!(c == one)) s += coef;
    s += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return s;
}

/// Reads `[a,b]x^k + ... + [c,d]`. Bare scalars are degenerate coefficients taking the flavor
/// of the first bracketed coefficient, or `bare` when there is none.
inline IntervalPoly parse_poly(const Domain& d, std::string_view text, Flavor bare = Flavor::Closed,
                               std::optional<std::size_t> cyclic = std::nullopt) {
  std::string_view t = text::trim(text);
  if (t.empty()) throw ParseError(0, "polynomial", text);
  struct Term {
    std::string_view coef;
    std::size_t degree;
  };
  std::vector<Term> terms;
  Flavor flavor = bare;
  bool flavor_seen = false;
  for (auto term : text::split_top_level(t, '+')) {
    if (term.empty()) throw ParseError(static_cast<std::size_t>(term.data() - text.data()), "term", text);
    Term tm{term, 0};
    auto xpos = term.rfind('x');
    if (xpos != std::string_view::npos) {
      tm.coef = text::trim(term.substr(0, xpos));
      tm.degree = 1;
      auto rest = text::trim(term.substr(xpos + 1));
      if (!rest.empty()) {
        std::uint64_t k = 0;
        if (rest.front() != '^' || !detail::parse_uint(text::trim(rest.substr(1)), k))
          throw ParseError(static_cast<std::size_t>(rest.data() - text.data()), "'^<degree>'", text);
        tm.degree = k;
      }
    }
    if (!flavor_seen && !tm.coef.empty() && (tm.coef.front() == '[' || tm.coef.front() == '(')) {
      flavor = parse_interval(d, tm.coef).flavor();
      flavor_seen = true;
    }
    terms.push_back(tm);
  }
  IntervalPoly p(d, flavor, cyclic);
  for (const auto& tm : terms) {
    if (tm.coef == "0" && tm.degree == 0 && terms.size() == 1) break;
    NaturalInterval c = tm.coef.empty() ? NaturalInterval::one(d, flavor) : parse_interval(d, tm.coef, flavor);
    p = poly_add(p, IntervalPoly::monomial(c, tm.degree, cyclic));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Finite carriers
// ---------------------------------------------------------------------------

/// Every polynomial of degree < k over N(domain) with x^k = 1, ordered with the constant
/// coefficient most significant and coefficients in interval order.
inline FiniteStructure poly_carrier(const Domain& d, Flavor flavor, std::size_t k, std::size_t size_bound = 1'000'000) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "cyclic modulus must be positive");
  auto coeffs = enumerate_intervals(d, flavor);
  if (!coeffs) throw Error(ErrorKind::InfiniteDomain, "polynomial carrier over " + d.name());
  const std::size_t m = coeffs->size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > size_bound / m) {
      throw Error(ErrorKind::TooLarge, "(" + std::to_string(m) + ")^" + std::to_string(k) +
                                           " polynomials exceed the size bound " + std::to_string(size_bound));
    }
    total *= m;
  }
  std::vector<IntervalPoly> elems;
  elems.reserve(total);
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<NaturalInterval> c;
    for (std::size_t i = 0; i < k; ++i) c.push_back((*coeffs)[digit[i]]);
    elems.emplace_back(d, flavor, std::move(c), k);
    for (std::size_t i = k; i-- > 0;) {
      if (++digit[i] < m) break;
      digit[i] = 0;
    }
  }
  auto src = std::make_shared<ElementSource<IntervalPoly>>(
      std::move(elems), [](const IntervalPoly& a, const IntervalPoly& b) { return poly_add(a, b); },
      [](const IntervalPoly& a, const IntervalPoly& b) { return poly_mul(a, b); },
      [](const IntervalPoly& p) { return to_string(p); },
      [d, flavor, k](std::string_view s) { return parse_poly(d, s, flavor, k); });
  return FiniteStructure(src, "Poly(N(" + d.name() + "," + std::string(to_string(flavor)) + "),cyc=" +
                                  std::to_string(k) + ")");
}

}  // namespace natint

