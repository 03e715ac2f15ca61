#pragma once

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "natint/error.hpp"

namespace natint {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class DomainKind { Int, Rat, Mod, NeutroPure, NeutroMixed, FuzzyUnit };

/// An exact scalar domain. Neutrosophic kinds wrap a base of kind Int, Rat or Mod.
class Domain {
 public:
  static Domain integers() { return Domain(DomainKind::Int, DomainKind::Int, 0); }
  static Domain rationals() { return Domain(DomainKind::Rat, DomainKind::Rat, 0); }
  static Domain fuzzy_unit() { return Domain(DomainKind::FuzzyUnit, DomainKind::FuzzyUnit, 0); }

  static Domain modular(std::uint64_t n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "Zn requires n >= 2, got " + std::to_string(n));
    if (n > (std::uint64_t{1} << 62)) throw Error(ErrorKind::InvalidArgument, "modulus too large");
    return Domain(DomainKind::Mod, DomainKind::Mod, n);
  }

  static Domain neutro_pure(const Domain& base) { return neutro(DomainKind::NeutroPure, base); }
  static Domain neutro_mixed(const Domain& base) { return neutro(DomainKind::NeutroMixed, base); }

  DomainKind kind() const noexcept { return kind_; }
  /// Kind of the coordinates: the wrapped base for neutrosophic domains, otherwise kind().
  DomainKind base_kind() const noexcept { return base_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  Domain base() const { return Domain(base_, base_, modulus_); }

  bool is_neutrosophic() const noexcept {
    return kind_ == DomainKind::NeutroPure || kind_ == DomainKind::NeutroMixed;
  }
  bool is_finite() const noexcept { return base_ == DomainKind::Mod; }
  bool is_ordered() const noexcept {
    return kind_ == DomainKind::Int || kind_ == DomainKind::Rat || kind_ == DomainKind::FuzzyUnit;
  }
  bool is_ring() const noexcept { return kind_ != DomainKind::FuzzyUnit; }
  bool is_field() const noexcept {
    if (kind_ == DomainKind::Rat) return true;
    return kind_ == DomainKind::Mod && is_prime(modulus_);
  }

  std::optional<std::uint64_t> cardinality() const {
    if (!is_finite()) return std::nullopt;
    if (kind_ == DomainKind::NeutroMixed) return modulus_ * modulus_;
    return modulus_;
  }

  /// Name in the domain-spec grammar.
  std::string name() const {
    switch (kind_) {
      case DomainKind::Int: return "Z";
      case DomainKind::Rat: return "Q";
      case DomainKind::Mod: return "Zn:" + std::to_string(modulus_);
      case DomainKind::FuzzyUnit: return "F01";
      case DomainKind::NeutroPure:
        if (base_ == DomainKind::Mod) return "ZnI:" + std::to_string(modulus_);
        return base_ == DomainKind::Int ? "ZI" : "QI";
      case DomainKind::NeutroMixed:
        if (base_ == DomainKind::Mod) return "Zn+I:" + std::to_string(modulus_);
        return base_ == DomainKind::Int ? "Z+I" : "Q+I";
    }
    return "?";
  }

  bool operator==(const Domain&) const = default;

  static bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  Domain(DomainKind k, DomainKind b, std::uint64_t n) : kind_(k), base_(b), modulus_(n) {}

  static Domain neutro(DomainKind k, const Domain& base) {
    if (base.kind_ != DomainKind::Int && base.kind_ != DomainKind::Rat && base.kind_ != DomainKind::Mod)
      throw Error(ErrorKind::InvalidArgument, "neutrosophic base must be Z, Q or Zn, got " + base.name());
    return Domain(k, base.kind_, base.modulus_);
  }

  DomainKind kind_;
  DomainKind base_;
  std::uint64_t modulus_;
};

namespace detail {

// Residue for Mod bases, big integer for Int, reduced fraction for Rat and F01.
using Coord = std::variant<std::uint64_t, BigInt, BigRat>;

inline Coord coord_zero(DomainKind base) {
  switch (base) {
    case DomainKind::Mod: return std::uint64_t{0};
    case DomainKind::Int: return BigInt(0);
    default: return BigRat(0);
  }
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
}

inline Coord coord_from_rat(DomainKind base, std::uint64_t n, const BigRat& v) {
  switch (base) {
    case DomainKind::Mod: {
      if (denominator(v) != 1) throw Error(ErrorKind::InvalidArgument, "Zn value must be an integer");
      BigInt r = numerator(v) % n;
      if (r < 0) r += n;
      return static_cast<std::uint64_t>(r);
    }
    case DomainKind::Int:
      if (denominator(v) != 1) throw Error(ErrorKind::InvalidArgument, "Z value must be an integer");
      return BigInt(numerator(v));
    case DomainKind::FuzzyUnit:
      if (v < 0 || v > 1) throw Error(ErrorKind::FuzzyRangeOverflow, "fuzzy value outside [0,1]");
      return v;
    default: return v;
  }
}

inline BigRat coord_to_rat(const Coord& c) {
  if (auto r = std::get_if<std::uint64_t>(&c)) return BigRat(*r);
  if (auto z = std::get_if<BigInt>(&c)) return BigRat(*z);
  return std::get<BigRat>(c);
}

inline bool coord_is_zero(const Coord& c) {
  if (auto r = std::get_if<std::uint64_t>(&c)) return *r == 0;
  if (auto z = std::get_if<BigInt>(&c)) return z->is_zero();
  return std::get<BigRat>(c).is_zero();
}

inline Coord coord_add(DomainKind base, std::uint64_t n, const Coord& a, const Coord& b) {
  switch (base) {
    case DomainKind::Mod: {
      std::uint64_t s = std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b);
      return s >= n ? s - n : s;
    }
    case DomainKind::Int: return BigInt(std::get<BigInt>(a) + std::get<BigInt>(b));
    case DomainKind::FuzzyUnit: {
      BigRat s = std::get<BigRat>(a) + std::get<BigRat>(b);
      if (s > 1) throw Error(ErrorKind::FuzzyRangeOverflow, "fuzzy sum exceeds 1");
      return s;
    }
    default: return BigRat(std::get<BigRat>(a) + std::get<BigRat>(b));
  }
}

inline Coord coord_neg(DomainKind base, std::uint64_t n, const Coord& a) {
  switch (base) {
    case DomainKind::Mod: {
      std::uint64_t r = std::get<std::uint64_t>(a);
      return r == 0 ? 0 : n - r;
    }
    case DomainKind::Int: return BigInt(-std::get<BigInt>(a));
    case DomainKind::FuzzyUnit: throw Error(ErrorKind::NotARing, "F01 has no additive inverses");
    default: return BigRat(-std::get<BigRat>(a));
  }
}

inline Coord coord_mul(DomainKind base, std::uint64_t n, const Coord& a, const Coord& b) {
  switch (base) {
    case DomainKind::Mod: return mulmod(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b), n);
    case DomainKind::Int: return BigInt(std::get<BigInt>(a) * std::get<BigInt>(b));
    default: return BigRat(std::get<BigRat>(a) * std::get<BigRat>(b));
  }
}

inline std::optional<Coord> coord_inv(DomainKind base, std::uint64_t n, const Coord& a) {
  switch (base) {
    case DomainKind::Mod: {
      // extended Euclid on (a, n)
      __int128 old_r = static_cast<__int128>(std::get<std::uint64_t>(a)), r = n;
      __int128 old_s = 1, s = 0;
      while (r != 0) {
        __int128 q = old_r / r;
        __int128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
      }
      if (old_r != 1) return std::nullopt;
      __int128 m = static_cast<__int128>(n);
      old_s %= m;
      if (old_s < 0) old_s += m;
      return static_cast<std::uint64_t>(old_s);
    }
    case DomainKind::Int: {
      const BigInt& z = std::get<BigInt>(a);
      if (z == 1 || z == -1) return Coord(z);
      return std::nullopt;
    }
    case DomainKind::FuzzyUnit: {
      const BigRat& q = std::get<BigRat>(a);
      if (q == 1) return Coord(q);
      return std::nullopt;
    }
    default: {
      const BigRat& q = std::get<BigRat>(a);
      if (q.is_zero()) return std::nullopt;
      return Coord(BigRat(1) / q);
    }
  }
}

inline std::string coord_to_string(const Coord& c) {
  if (auto r = std::get_if<std::uint64_t>(&c)) return std::to_string(*r);
  if (auto z = std::get_if<BigInt>(&c)) return z->str();
  const BigRat& q = std::get<BigRat>(c);
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::size_t coord_hash(const Coord& c) {
  std::size_t seed = c.index();
  if (auto r = std::get_if<std::uint64_t>(&c)) {
    boost::hash_combine(seed, *r);
  } else if (auto z = std::get_if<BigInt>(&c)) {
    boost::hash_combine(seed, boost::hash<BigInt>()(*z));
  } else {
    const BigRat& q = std::get<BigRat>(c);
    boost::hash_combine(seed, boost::hash<BigInt>()(numerator(q)));
    boost::hash_combine(seed, boost::hash<BigInt>()(denominator(q)));
  }
  return seed;
}

}  // namespace detail

/// A value of some Domain. Neutrosophic values are a + bI with I*I = I; pure ones keep a = 0.
class Scalar {
 public:
  Scalar() : domain_(Domain::integers()), re_(BigInt(0)), in_(BigInt(0)) {}

  static Scalar zero(const Domain& d) {
    return Scalar(d, detail::coord_zero(d.base_kind()), detail::coord_zero(d.base_kind()));
  }

  /// The multiplicative identity; in a pure neutrosophic domain that is 1I.
  static Scalar one(const Domain& d) {
    if (d.kind() == DomainKind::NeutroPure) return neutro(d, 0, 1);
    return of(d, BigRat(1));
  }

  /// Embeds a rational. Pure neutrosophic domains read the value as its I-coefficient.
  static Scalar of(const Domain& d, const BigRat& v) {
    if (d.kind() == DomainKind::NeutroPure) return neutro(d, 0, v);
    const auto z = detail::coord_zero(d.base_kind());
    return Scalar(d, detail::coord_from_rat(d.base_kind(), d.modulus(), v), z);
  }
  static Scalar of(const Domain& d, long long v) { return of(d, BigRat(v)); }

  /// a + bI; b must be zero outside neutrosophic domains, a zero in pure ones.
  static Scalar neutro(const Domain& d, const BigRat& a, const BigRat& b) {
    if (!d.is_neutrosophic()) {
      if (!b.is_zero()) throw Error(ErrorKind::DomainMismatch, "indeterminate part in " + d.name());
      return of(d, a);
    }
    Scalar s(d, detail::coord_from_rat(d.base_kind(), d.modulus(), a),
             detail::coord_from_rat(d.base_kind(), d.modulus(), b));
    if (d.kind() == DomainKind::NeutroPure && !detail::coord_is_zero(s.re_))
      throw Error(ErrorKind::DomainMismatch, "pure neutrosophic value with nonzero real part");
    return s;
  }

  const Domain& domain() const noexcept { return domain_; }

  BigRat real() const { return detail::coord_to_rat(re_); }
  BigRat indeterminate() const { return detail::coord_to_rat(in_); }
  /// Residue of the real part; requires a Mod base.
  std::uint64_t residue() const { return std::get<std::uint64_t>(re_); }
  std::uint64_t indeterminate_residue() const { return std::get<std::uint64_t>(in_); }

  bool is_zero() const { return detail::coord_is_zero(re_) && detail::coord_is_zero(in_); }

  std::size_t hash() const {
    std::size_t seed = static_cast<std::size_t>(domain_.kind());
    boost::hash_combine(seed, domain_.modulus());
    boost::hash_combine(seed, detail::coord_hash(re_));
    boost::hash_combine(seed, detail::coord_hash(in_));
    return seed;
  }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.domain_ == y.domain_ && x.re_ == y.re_ && x.in_ == y.in_;
  }

  friend Scalar add(const Scalar& x, const Scalar& y);
  friend Scalar neg(const Scalar& x);
  friend Scalar mul(const Scalar& x, const Scalar& y);
  friend std::optional<Scalar> inv(const Scalar& x);
  friend std::strong_ordering compare(const Scalar& x, const Scalar& y);
  friend std::string to_string(const Scalar& x);

 private:
  Scalar(Domain d, detail::Coord re, detail::Coord in) : domain_(d), re_(std::move(re)), in_(std::move(in)) {}

  Domain domain_;
  detail::Coord re_;
  detail::Coord in_;
};

namespace detail {
inline void require_same_domain(const Scalar& x, const Scalar& y) {
  if (!(x.domain() == y.domain()))
    throw Error(ErrorKind::DomainMismatch, x.domain().name() + " vs " + y.domain().name());
}
}  // namespace detail

inline Scalar add(const Scalar& x, const Scalar& y) {
  detail::require_same_domain(x, y);
  const Domain& d = x.domain_;
  const auto b = d.base_kind();
  const auto n = d.modulus();
  if (!d.is_neutrosophic()) return Scalar(d, detail::coord_add(b, n, x.re_, y.re_), x.in_);
  return Scalar(d, detail::coord_add(b, n, x.re_, y.re_), detail::coord_add(b, n, x.in_, y.in_));
}

inline Scalar neg(const Scalar& x) {
  const Domain& d = x.domain_;
  const auto b = d.base_kind();
  const auto n = d.modulus();
  if (!d.is_neutrosophic()) return Scalar(d, detail::coord_neg(b, n, x.re_), x.in_);
  return Scalar(d, detail::coord_neg(b, n, x.re_), detail::coord_neg(b, n, x.in_));
}

inline Scalar sub(const Scalar& x, const Scalar& y) {
  detail::require_same_domain(x, y);
  if (!x.domain().is_ring()) throw Error(ErrorKind::NotARing, "subtraction in " + x.domain().name());
  return add(x, neg(y));
}

/// (a + bI)(c + dI) = ac + (ad + bc + bd)I.
inline Scalar mul(const Scalar& x, const Scalar& y) {
  detail::require_same_domain(x, y);
  const Domain& d = x.domain_;
  const auto b = d.base_kind();
  const auto n = d.modulus();
  using detail::coord_add;
  using detail::coord_mul;
  if (!d.is_neutrosophic()) return Scalar(d, coord_mul(b, n, x.re_, y.re_), x.in_);
  auto ac = coord_mul(b, n, x.re_, y.re_);
  auto ad = coord_mul(b, n, x.re_, y.in_);
  auto bc = coord_mul(b, n, x.in_, y.re_);
  auto bd = coord_mul(b, n, x.in_, y.in_);
  return Scalar(d, std::move(ac), coord_add(b, n, coord_add(b, n, ad, bc), bd));
}

/// Multiplicative inverse, or nullopt. For a + bI it exists iff a and a + b are units;
/// the inverse is a^-1 + ((a+b)^-1 - a^-1)I. In a pure domain the identity is 1I.
inline std::optional<Scalar> inv(const Scalar& x) {
  const Domain& d = x.domain_;
  const auto b = d.base_kind();
  const auto n = d.modulus();
  if (d.kind() == DomainKind::NeutroPure) {
    auto r = detail::coord_inv(b, n, x.in_);
    if (!r) return std::nullopt;
    return Scalar(d, x.re_, *r);
  }
  if (d.kind() == DomainKind::NeutroMixed) {
    auto ia = detail::coord_inv(b, n, x.re_);
    if (!ia) return std::nullopt;
    auto iab = detail::coord_inv(b, n, detail::coord_add(b, n, x.re_, x.in_));
    if (!iab) return std::nullopt;
    auto indet = detail::coord_add(b, n, *iab, detail::coord_neg(b, n, *ia));
    return Scalar(d, *ia, indet);
  }
  auto r = detail::coord_inv(b, n, x.re_);
  if (!r) return std::nullopt;
  return Scalar(d, *r, x.in_);
}

/// Total order on Int, Rat and F01; other domains raise UnorderedDomain.
inline std::strong_ordering compare(const Scalar& x, const Scalar& y) {
  detail::require_same_domain(x, y);
  const Domain& d = x.domain();
  if (!d.is_ordered()) throw Error(ErrorKind::UnorderedDomain, d.name() + " has no order");
  if (d.kind() == DomainKind::Int) {
    const auto& a = std::get<BigInt>(x.re_);
    const auto& c = std::get<BigInt>(y.re_);
    return a < c ? std::strong_ordering::less : (c < a ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const auto& a = std::get<BigRat>(x.re_);
  const auto& c = std::get<BigRat>(y.re_);
  return a < c ? std::strong_ordering::less : (c < a ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline Scalar min(const Scalar& x, const Scalar& y) { return compare(y, x) < 0 ? y : x; }
inline Scalar max(const Scalar& x, const Scalar& y) { return compare(y, x) > 0 ? y : x; }

/// x / y, raising DivisorComponentZero when y has no inverse.
inline Scalar div(const Scalar& x, const Scalar& y) {
  detail::require_same_domain(x, y);
  auto r = inv(y);
  if (!r) throw Error(ErrorKind::DivisorComponentZero, to_string(y) + " is not invertible");
  return mul(x, *r);
}

inline Scalar pow(const Scalar& x, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "exponent must be >= 1");
  Scalar base = x;
  std::optional<Scalar> acc;
  while (k > 0) {
    if (k & 1) acc = acc ? mul(*acc, base) : base;
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return *acc;
}

inline bool is_unit(const Scalar& x) { return inv(x).has_value(); }

inline Scalar operator+(const Scalar& x, const Scalar& y) { return add(x, y); }
inline Scalar operator-(const Scalar& x, const Scalar& y) { return sub(x, y); }
inline Scalar operator-(const Scalar& x) { return neg(x); }
inline Scalar operator*(const Scalar& x, const Scalar& y) { return mul(x, y); }
inline Scalar operator/(const Scalar& x, const Scalar& y) { return div(x, y); }

inline std::string to_string(const Scalar& x) {
  if (!x.domain_.is_neutrosophic()) return detail::coord_to_string(x.re_);
  const bool re_zero = detail::coord_is_zero(x.re_);
  const bool in_zero = detail::coord_is_zero(x.in_);
  if (in_zero) return detail::coord_to_string(x.re_);
  std::string coef = detail::coord_to_string(x.in_);
  if (coef == "1") coef.clear();
  else if (coef == "-1") coef = "-";
  std::string ipart = coef + "I";
  if (re_zero) return ipart;
  if (ipart.front() == '-') return detail::coord_to_string(x.re_) + ipart;
  return detail::coord_to_string(x.re_) + "+" + ipart;
}

/// All elements of a finite domain in canonical order (residues ascending; a + bI
/// lexicographic in (a, b)). nullopt means the domain is infinite.
inline std::optional<std::vector<Scalar>> enumerate_domain(const Domain& d) {
  if (!d.is_finite()) return std::nullopt;
  const std::uint64_t n = d.modulus();
  std::vector<Scalar> out;
  switch (d.kind()) {
    case DomainKind::Mod:
      out.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) out.push_back(Scalar::of(d, BigRat(i)));
      break;
    case DomainKind::NeutroPure:
      out.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) out.push_back(Scalar::neutro(d, 0, BigRat(i)));
      break;
    case DomainKind::NeutroMixed:
      out.reserve(n * n);
      for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = 0; b < n; ++b) out.push_back(Scalar::neutro(d, BigRat(a), BigRat(b)));
      break;
    default: break;
  }
  return out;
}

namespace detail {

inline bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty() || s.size() > 19) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return true;
}

// number := digits ['.' digits] ['/' digits]
inline std::optional<BigRat> parse_number(std::string_view s, std::size_t& pos) {
  auto digits = [&](std::string& buf) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) buf += s[pos++];
    return pos > start;
  };
  std::string whole;
  if (!digits(whole)) return std::nullopt;
  BigRat v{BigInt(whole)};
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::string frac;
    if (!digits(frac)) return std::nullopt;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    v += BigRat(BigInt(frac), scale);
  } else if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::string den;
    if (!digits(den)) return std::nullopt;
    BigInt dn(den);
    if (dn.is_zero()) return std::nullopt;
    v = BigRat(BigInt(whole), dn);
  }
  return v;
}

}  // namespace detail

/// Parses the domain-spec grammar: Z, Q, Zn:<n>, ZI, QI, ZnI:<n>, Zn+I:<n>, Z+I, Q+I, F01.
inline Domain parse_domain(std::string_view text) {
  auto with_modulus = [&](std::string_view prefix) -> std::uint64_t {
    std::uint64_t n = 0;
    if (!detail::parse_uint(text.substr(prefix.size()), n))
      throw ParseError(prefix.size(), "decimal modulus", text);
    if (n < 2) throw ParseError(prefix.size(), "modulus >= 2", text);
    return n;
  };
  if (text == "Z") return Domain::integers();
  if (text == "Q") return Domain::rationals();
  if (text == "ZI") return Domain::neutro_pure(Domain::integers());
  if (text == "QI") return Domain::neutro_pure(Domain::rationals());
  if (text == "Z+I") return Domain::neutro_mixed(Domain::integers());
  if (text == "Q+I") return Domain::neutro_mixed(Domain::rationals());
  if (text == "F01") return Domain::fuzzy_unit();
  if (text.starts_with("ZnI:")) return Domain::neutro_pure(Domain::modular(with_modulus("ZnI:")));
  if (text.starts_with("Zn+I:")) return Domain::neutro_mixed(Domain::modular(with_modulus("Zn+I:")));
  if (text.starts_with("Zn:")) return Domain::modular(with_modulus("Zn:"));
  throw ParseError(0, "one of Z, Q, Zn:<n>, ZI, QI, ZnI:<n>, Zn+I:<n>, Z+I, Q+I, F01", text);
}

/// Parses a scalar of domain `d`: a signed sum of numbers and I-terms, e.g. "5+2I", "-I", "7/3", "0.06".
inline Scalar parse_scalar(const Domain& d, std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  BigRat re = 0, in = 0;
  bool any = false, saw_indeterminate = false;
  skip_ws();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (any) {
      throw ParseError(pos, "'+' or '-'", text);
    }
    std::size_t term_start = pos;
    auto num = detail::parse_number(text, pos);
    bool indeterminate = pos < text.size() && text[pos] == 'I';
    if (!num && !indeterminate) throw ParseError(term_start, "number or I", text);
    BigRat v = num ? *num : BigRat(1);
    if (indeterminate) {
      ++pos;
      in += sign * v;
      saw_indeterminate = true;
    } else {
      re += sign * v;
    }
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError(0, "scalar", text);
  if (saw_indeterminate && !d.is_neutrosophic()) throw ParseError(0, "no I term in " + d.name(), text);
  try {
    if (d.kind() == DomainKind::NeutroPure) {
      if (!re.is_zero()) throw ParseError(0, "pure I-multiple in " + d.name(), text);
      return Scalar::neutro(d, 0, in);
    }
    if (d.is_neutrosophic()) return Scalar::neutro(d, re, in);
    return Scalar::of(d, re);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::FuzzyRangeOverflow) throw;
    throw ParseError(0, std::string("value valid in ") + d.name() + " (" + e.what() + ")", text);
  }
}

}  // namespace natint

template <>
struct std::hash<natint::Scalar> {
  std::size_t operator()(const natint::Scalar& s) const { return s.hash(); }
};
