#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "natint/scalar.hpp"

namespace natint {

/// Boundary style. Arithmetic never looks at it, but binary operations refuse to mix flavors.
enum class Flavor { Closed, Open, OpenClosed, ClosedOpen };

constexpr std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::Closed: return "closed";
    case Flavor::Open: return "open";
    case Flavor::OpenClosed: return "oc";
    case Flavor::ClosedOpen: return "co";
  }
  return "?";
}

/// Accepts c/closed, o/open, oc/open-closed, co/closed-open.
inline Flavor parse_flavor(std::string_view s) {
  if (s == "c" || s == "closed") return Flavor::Closed;
  if (s == "o" || s == "open") return Flavor::Open;
  if (s == "oc" || s == "open-closed") return Flavor::OpenClosed;
  if (s == "co" || s == "closed-open") return Flavor::ClosedOpen;
  throw ParseError(0, "flavor (closed, open, oc, co)", s);
}

enum class Trend { Increasing, Decreasing, Degenerate, Unordered };

constexpr std::string_view to_string(Trend t) {
  switch (t) {
    case Trend::Increasing: return "increasing";
    case Trend::Decreasing: return "decreasing";
    case Trend::Degenerate: return "degenerate";
    case Trend::Unordered: return "unordered";
  }
  return "?";
}

/// A pair of endpoints from one domain with no ordering constraint between them.
class NaturalInterval {
 public:
  NaturalInterval(Scalar lo, Scalar hi, Flavor flavor = Flavor::Closed)
      : lo_(std::move(lo)), hi_(std::move(hi)), flavor_(flavor) {
    detail::require_same_domain(lo_, hi_);
  }

  /// The degenerate interval [a, a].
  static NaturalInterval degenerate(const Scalar& a, Flavor flavor = Flavor::Closed) {
    return NaturalInterval(a, a, flavor);
  }
  static NaturalInterval zero(const Domain& d, Flavor flavor = Flavor::Closed) {
    return degenerate(Scalar::zero(d), flavor);
  }
  static NaturalInterval one(const Domain& d, Flavor flavor = Flavor::Closed) {
    return degenerate(Scalar::one(d), flavor);
  }
  static NaturalInterval of(const Domain& d, long long lo, long long hi, Flavor flavor = Flavor::Closed) {
    return NaturalInterval(Scalar::of(d, lo), Scalar::of(d, hi), flavor);
  }

  const Scalar& lo() const noexcept { return lo_; }
  const Scalar& hi() const noexcept { return hi_; }
  Flavor flavor() const noexcept { return flavor_; }
  const Domain& domain() const noexcept { return lo_.domain(); }

  bool is_degenerate() const { return lo_ == hi_; }
  bool is_zero() const { return lo_.is_zero() && hi_.is_zero(); }

  NaturalInterval with_flavor(Flavor f) const { return NaturalInterval(lo_, hi_, f); }

  friend bool operator==(const NaturalInterval&, const NaturalInterval&) = default;

  std::size_t hash() const {
    std::size_t seed = lo_.hash();
    boost::hash_combine(seed, hi_.hash());
    boost::hash_combine(seed, static_cast<int>(flavor_));
    return seed;
  }

 private:
  Scalar lo_;
  Scalar hi_;
  Flavor flavor_;
};

namespace detail {
inline void require_compatible(const NaturalInterval& x, const NaturalInterval& y) {
  if (!(x.domain() == y.domain()))
    throw Error(ErrorKind::DomainMismatch, x.domain().name() + " vs " + y.domain().name());
  if (x.flavor() != y.flavor())
    throw Error(ErrorKind::FlavorMismatch,
                std::string(to_string(x.flavor())) + " vs " + std::string(to_string(y.flavor())));
}

template <class Op>
NaturalInterval componentwise(const NaturalInterval& x, const NaturalInterval& y, Op op) {
  require_compatible(x, y);
  return NaturalInterval(op(x.lo(), y.lo()), op(x.hi(), y.hi()), x.flavor());
}
}  // namespace detail

inline NaturalInterval iv_add(const NaturalInterval& x, const NaturalInterval& y) {
  return detail::componentwise(x, y, [](const Scalar& a, const Scalar& b) { return add(a, b); });
}

inline NaturalInterval iv_sub(const NaturalInterval& x, const NaturalInterval& y) {
  return detail::componentwise(x, y, [](const Scalar& a, const Scalar& b) { return sub(a, b); });
}

inline NaturalInterval iv_neg(const NaturalInterval& x) {
  return NaturalInterval(neg(x.lo()), neg(x.hi()), x.flavor());
}

inline NaturalInterval iv_mul(const NaturalInterval& x, const NaturalInterval& y) {
  return detail::componentwise(x, y, [](const Scalar& a, const Scalar& b) { return mul(a, b); });
}

/// [a, b] / [c, d] = [a/c, b/d]; defined only when c and d are both invertible.
inline NaturalInterval iv_div(const NaturalInterval& x, const NaturalInterval& y) {
  detail::require_compatible(x, y);
  auto lo = inv(y.lo());
  auto hi = inv(y.hi());
  if (!lo || !hi)
    throw Error(ErrorKind::DivisorComponentZero, "divisor component " + to_string(lo ? y.hi() : y.lo()) +
                                                     " is zero or not invertible");
  return NaturalInterval(mul(x.lo(), *lo), mul(x.hi(), *hi), x.flavor());
}

inline NaturalInterval iv_scalar_mul(const Scalar& c, const NaturalInterval& x) {
  return NaturalInterval(mul(c, x.lo()), mul(c, x.hi()), x.flavor());
}

inline NaturalInterval iv_recip(const NaturalInterval& x) {
  auto lo = inv(x.lo());
  auto hi = inv(x.hi());
  if (!lo || !hi) throw Error(ErrorKind::DivisorComponentZero, "reciprocal of a non-invertible component");
  return NaturalInterval(*lo, *hi, x.flavor());
}

/// Componentwise k-th power, k >= 1.
inline NaturalInterval iv_pow(const NaturalInterval& x, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "interval exponent must be >= 1");
  return NaturalInterval(pow(x.lo(), k), pow(x.hi(), k), x.flavor());
}

inline NaturalInterval iv_min(const NaturalInterval& x, const NaturalInterval& y) {
  return detail::componentwise(x, y, [](const Scalar& a, const Scalar& b) { return min(a, b); });
}

inline NaturalInterval iv_max(const NaturalInterval& x, const NaturalInterval& y) {
  return detail::componentwise(x, y, [](const Scalar& a, const Scalar& b) { return max(a, b); });
}

inline Trend classify(const NaturalInterval& x) {
  if (!x.domain().is_ordered()) return Trend::Unordered;
  auto c = compare(x.lo(), x.hi());
  if (c < 0) return Trend::Increasing;
  if (c > 0) return Trend::Decreasing;
  return Trend::Degenerate;
}

inline NaturalInterval operator+(const NaturalInterval& x, const NaturalInterval& y) { return iv_add(x, y); }
inline NaturalInterval operator-(const NaturalInterval& x, const NaturalInterval& y) { return iv_sub(x, y); }
inline NaturalInterval operator-(const NaturalInterval& x) { return iv_neg(x); }
inline NaturalInterval operator*(const NaturalInterval& x, const NaturalInterval& y) { return iv_mul(x, y); }
inline NaturalInterval operator/(const NaturalInterval& x, const NaturalInterval& y) { return iv_div(x, y); }

/// Degenerate intervals print as the bare scalar.
inline std::string to_string(const NaturalInterval& x) {
  if (x.is_degenerate()) return to_string(x.lo());
  const bool open_left = x.flavor() == Flavor::Open || x.flavor() == Flavor::OpenClosed;
  const bool open_right = x.flavor() == Flavor::Open || x.flavor() == Flavor::ClosedOpen;
  std::string s;
  s += open_left ? '(' : '[';
  s += to_string(x.lo());
  s += ',';
  s += to_string(x.hi());
  s += open_right ? ')' : ']';
  return s;
}

/// Reads the interval syntax `[a,b]`, `(a,b)`, `(a,b]`, `[a,b)`, or a bare scalar meaning [a,a]
/// with flavor `bare`.
inline NaturalInterval parse_interval(const Domain& d, std::string_view text, Flavor bare = Flavor::Closed) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError(0, "interval", text);
  const char open = t.front();
  if (open != '[' && open != '(') return NaturalInterval::degenerate(parse_scalar(d, t), bare);
  const char close = t.back();
  if (close != ']' && close != ')') throw ParseError(text.size(), "']' or ')'", text);
  std::string_view body = t.substr(1, t.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) throw ParseError(1, "',' between endpoints", text);
  if (body.find(',', comma + 1) != std::string_view::npos) throw ParseError(comma + 2, "closing bracket", text);
  Flavor f = open == '[' ? (close == ']' ? Flavor::Closed : Flavor::ClosedOpen)
                         : (close == ')' ? Flavor::Open : Flavor::OpenClosed);
  return NaturalInterval(parse_scalar(d, trim(body.substr(0, comma))), parse_scalar(d, trim(body.substr(comma + 1))),
                         f);
}

/// All intervals over a finite domain, ordered lexicographically by (lo, hi) in domain order.
inline std::optional<std::vector<NaturalInterval>> enumerate_intervals(const Domain& d, Flavor flavor = Flavor::Closed) {
  auto values = enumerate_domain(d);
  if (!values) return std::nullopt;
  std::vector<NaturalInterval> out;
  out.reserve(values->size() * values->size());
  for (const auto& a : *values)
    for (const auto& b : *values) out.emplace_back(a, b, flavor);
  return out;
}

}  // namespace natint

template <>
struct std::hash<natint::NaturalInterval> {
  std::size_t operator()(const natint::NaturalInterval& x) const { return x.hash(); }
};
