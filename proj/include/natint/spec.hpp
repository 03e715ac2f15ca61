#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "natint/matrix.hpp"
#include "natint/poly.hpp"
#include "natint/structure.hpp"
#include "natint/text.hpp"

namespace natint {

inline constexpr std::size_t kDefaultSizeBound = 1'000'000;
inline constexpr std::size_t kMatrixCarrierBound = 4096;

/// Parsed structure description.
///
///   N(<domain>[,<flavor>])          all intervals over a finite domain
///   N(<domain>\0) or N(<domain>)\0  intervals with both endpoints nonzero, multiplication only
///   Mat(<r>,<c>,N(...))             matrices; square ones multiply row by column, others entrywise
///   Poly(N(...),cyc=<k>)            polynomials of degree < k with x^k = 1
///   Prod(N(...),N(...),...)         tuples with componentwise operations
///   Sub{e1,e2,...} of <spec>        an explicit subset; the ambient may be infinite
struct StructureSpec {
  enum class Kind { Intervals, Matrices, Polys, Product, Subset };

  Kind kind = Kind::Intervals;
  Domain domain = Domain::integers();
  std::optional<Flavor> flavor;
  bool exclude_zero = false;
  std::size_t rows = 0, cols = 0;
  std::size_t cyclic = 0;
  std::vector<StructureSpec> parts;
  std::vector<std::string> elements;

  Flavor flavor_or_default() const { return flavor.value_or(Flavor::Closed); }

  /// Canonical text; parses back to an equal spec.
  std::string text() const {
    switch (kind) {
      case Kind::Intervals: {
        std::string s = "N(" + domain.name() + (exclude_zero ? "\\0" : "");
        if (flavor) s += "," + std::string(to_string(*flavor));
        return s + ")";
      }
      case Kind::Matrices:
        return "Mat(" + std::to_string(rows) + "," + std::to_string(cols) + "," + parts[0].text() + ")";
      case Kind::Polys: return "Poly(" + parts[0].text() + ",cyc=" + std::to_string(cyclic) + ")";
      case Kind::Product: {
        std::string s = "Prod(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].text();
        return s + ")";
      }
      case Kind::Subset: {
        std::string s = "Sub{";
        for (std::size_t i = 0; i < elements.size(); ++i) s += (i ? "," : "") + elements[i];
        return s + "} of " + parts[0].text();
      }
    }
    return {};
  }
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view input) : input_(input) {}

  StructureSpec parse() { return parse_at(input_); }

 private:
  std::size_t offset(std::string_view part) const { return static_cast<std::size_t>(part.data() - input_.data()); }

  [[noreturn]] void fail(std::string_view at, std::string expected) const {
    throw ParseError(offset(at), std::move(expected), input_);
  }

  // Body between the bracket at `open` and its partner; `rest` receives what follows.
  std::string_view enclosed(std::string_view s, std::size_t open, std::string_view& rest) const {
    auto close = text::matching_close(s, open);
    if (close == std::string_view::npos) fail(s.substr(s.size()), "closing bracket");
    rest = text::trim(s.substr(close + 1));
    return s.substr(open + 1, close - open - 1);
  }

  std::size_t parse_count(std::string_view s, std::string what) const {
    std::uint64_t v = 0;
    if (!parse_uint(s, v) || v == 0) fail(s, what);
    return static_cast<std::size_t>(v);
  }

  static bool strip_nonzero_suffix(std::string_view& s) {
    s = text::trim(s);
    for (std::string_view suffix : {"\\{0}", "\\0"}) {
      if (s.ends_with(suffix)) {
        s = text::trim(s.substr(0, s.size() - suffix.size()));
        return true;
      }
    }
    return false;
  }

  StructureSpec parse_at(std::string_view s) {
    s = text::trim(s);
    if (s.starts_with("Sub{")) return parse_subset(s);
    if (s.starts_with("N(")) return parse_intervals(s);
    if (s.starts_with("Mat(")) return parse_matrices(s);
    if (s.starts_with("Poly(")) return parse_polys(s);
    if (s.starts_with("Prod(")) return parse_product(s);
    fail(s, "N(, Mat(, Poly(, Prod( or Sub{");
  }

  StructureSpec parse_intervals(std::string_view s) {
    std::string_view rest;
    auto body = enclosed(s, 1, rest);
    StructureSpec spec;
    spec.kind = StructureSpec::Kind::Intervals;
    if (!rest.empty()) {
      std::string_view r = rest;
      if (!strip_nonzero_suffix(r) || !r.empty()) fail(rest, "end of spec or \\0");
      spec.exclude_zero = true;
    }
    auto fields = text::split_top_level(body, ',');
    if (fields.size() > 2) fail(fields[2], "')'");
    std::string_view dom = fields[0];
    if (strip_nonzero_suffix(dom)) spec.exclude_zero = true;
    try {
      spec.domain = parse_domain(dom);
    } catch (const ParseError& e) {
      throw ParseError(offset(dom) + e.position(), e.expected(), input_);
    }
    if (fields.size() == 2) {
      try {
        spec.flavor = parse_flavor(fields[1]);
      } catch (const Error&) {
        fail(fields[1], "flavor c, o, oc or co");
      }
    }
    return spec;
  }

  StructureSpec parse_matrices(std::string_view s) {
    std::string_view rest;
    auto body = enclosed(s, 3, rest);
    if (!rest.empty()) fail(rest, "end of spec");
    auto fields = text::split_top_level(body, ',');
    if (fields.size() != 3) fail(body, "Mat(<rows>,<cols>,N(...))");
    StructureSpec spec;
    spec.kind = StructureSpec::Kind::Matrices;
    spec.rows = parse_count(fields[0], "positive row count");
    spec.cols = parse_count(fields[1], "positive column count");
    spec.parts.push_back(parse_entry_spec(fields[2]));
    return spec;
  }

  StructureSpec parse_polys(std::string_view s) {
    std::string_view rest;
    auto body = enclosed(s, 4, rest);
    if (!rest.empty()) fail(rest, "end of spec");
    auto fields = text::split_top_level(body, ',');
    if (fields.size() != 2) fail(body, "Poly(N(...),cyc=<k>)");
    StructureSpec spec;
    spec.kind = StructureSpec::Kind::Polys;
    spec.parts.push_back(parse_entry_spec(fields[0]));
    std::string_view c = fields[1];
    if (c.starts_with("cyc=")) c.remove_prefix(4);
    else if (c.starts_with("cyclic=")) c.remove_prefix(7);
    else fail(c, "cyc=<k>");
    spec.cyclic = parse_count(c, "positive cyclic bound");
    return spec;
  }

  StructureSpec parse_product(std::string_view s) {
    std::string_view rest;
    auto body = enclosed(s, 4, rest);
    if (!rest.empty()) fail(rest, "end of spec");
    StructureSpec spec;
    spec.kind = StructureSpec::Kind::Product;
    for (auto f : text::split_top_level(body, ',')) spec.parts.push_back(parse_entry_spec(f));
    if (spec.parts.size() < 2) fail(body, "at least two factors");
    return spec;
  }

  StructureSpec parse_subset(std::string_view s) {
    std::string_view rest;
    auto body = enclosed(s, 3, rest);
    if (!rest.starts_with("of")) fail(rest, "'of <spec>'");
    StructureSpec spec;
    spec.kind = StructureSpec::Kind::Subset;
    for (auto e : text::split_top_level(body, ',')) {
      if (e.empty()) fail(e, "element");
      spec.elements.emplace_back(e);
    }
    spec.parts.push_back(parse_at(rest.substr(2)));
    if (spec.parts[0].kind == StructureSpec::Kind::Subset) fail(rest.substr(2), "a spec other than Sub{...}");
    return spec;
  }

  StructureSpec parse_entry_spec(std::string_view s) {
    s = text::trim(s);
    if (!s.starts_with("N(")) fail(s, "N(...)");
    return parse_intervals(s);
  }

  std::string_view input_;
};

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t bound, const std::string& what) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && total > bound / base)
      throw Error(ErrorKind::TooLarge, what + " exceeds the size bound " + std::to_string(bound));
    total *= base;
  }
  if (total > bound) throw Error(ErrorKind::TooLarge, what + " exceeds the size bound " + std::to_string(bound));
  return total;
}

inline std::vector<Scalar> finite_values(const StructureSpec& spec) {
  auto values = enumerate_domain(spec.domain);
  if (!values) throw Error(ErrorKind::InfiniteDomain, spec.text() + " has an infinite carrier");
  if (spec.exclude_zero) std::erase_if(*values, [](const Scalar& x) { return x.is_zero(); });
  return std::move(*values);
}

/// Every interval with endpoints from `values`, lexicographic in (lo, hi).
inline std::vector<NaturalInterval> intervals_over(const std::vector<Scalar>& values, Flavor flavor) {
  std::vector<NaturalInterval> out;
  out.reserve(values.size() * values.size());
  for (const auto& a : values)
    for (const auto& b : values) out.emplace_back(a, b, flavor);
  return out;
}

inline std::string tuple_label(const IntervalMatrix& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.entries().size(); ++i) s += (i ? ", " : "") + to_string(m.entries()[i]);
  return s + ")";
}

inline IntervalMatrix parse_tuple(const Domain& d, std::string_view t, Flavor bare, std::size_t arity) {
  std::string_view s = text::trim(t);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError(0, "(x, y, ...)", t);
  auto cells = text::split_top_level(s.substr(1, s.size() - 2), ',');
  if (cells.size() != arity) throw ParseError(0, std::to_string(arity) + " components", t);
  std::vector<NaturalInterval> entries;
  for (auto c : cells) entries.push_back(parse_interval(d, c, bare));
  return IntervalMatrix(1, arity, std::move(entries));
}

template <class Elem>
FiniteStructure make_carrier(std::vector<Elem> elems, typename ElementSource<Elem>::BinOp add,
                             typename ElementSource<Elem>::BinOp mul, typename ElementSource<Elem>::Labeler label,
                             typename ElementSource<Elem>::Parser parser, std::string description) {
  auto src = std::make_shared<ElementSource<Elem>>(std::move(elems), std::move(add), std::move(mul), std::move(label),
                                                   std::move(parser));
  return FiniteStructure(src, std::move(description));
}

inline const Domain& product_domain(const StructureSpec& spec) {
  for (const auto& p : spec.parts) {
    if (!(p.domain == spec.parts[0].domain))
      throw Error(ErrorKind::DomainMismatch, "Prod factors over " + spec.parts[0].domain.name() + " and " + p.domain.name());
    if (p.flavor_or_default() != spec.parts[0].flavor_or_default())
      throw Error(ErrorKind::FlavorMismatch, "Prod factors of different flavors");
  }
  return spec.parts[0].domain;
}

// Explicit subsets: elements are parsed in the ambient syntax; the ambient need not be finite.
inline FiniteStructure build_subset(const StructureSpec& spec) {
  const StructureSpec& amb = spec.parts[0];
  const std::string desc = spec.text();
  using K = StructureSpec::Kind;
  switch (amb.kind) {
    case K::Intervals: {
      const Domain d = amb.domain;
      std::vector<NaturalInterval> elems;
      for (const auto& e : spec.elements) {
        NaturalInterval x = parse_interval(d, e, amb.flavor_or_default());
        if (amb.flavor && x.flavor() != *amb.flavor)
          throw Error(ErrorKind::FlavorMismatch, e + " is not " + std::string(to_string(*amb.flavor)));
        if (amb.exclude_zero && (x.lo().is_zero() || x.hi().is_zero()))
          throw Error(ErrorKind::InvalidArgument, e + " has a zero endpoint");
        elems.push_back(std::move(x));
      }
      // without an ambient flavor the elements set it, degenerate ones following the rest
      Flavor fl = amb.flavor_or_default();
      if (!amb.flavor) {
        for (std::size_t i = 0; i < elems.size(); ++i) {
          const std::string_view t = text::trim(spec.elements[i]);
          if (t.front() == '[' || t.front() == '(') {
            fl = elems[i].flavor();
            break;
          }
        }
        for (std::size_t i = 0; i < elems.size(); ++i) {
          const std::string_view t = text::trim(spec.elements[i]);
          if (t.front() != '[' && t.front() != '(') elems[i] = elems[i].with_flavor(fl);
        }
      }
      typename ElementSource<NaturalInterval>::BinOp add;
      if (!amb.exclude_zero) add = [](const NaturalInterval& a, const NaturalInterval& b) { return iv_add(a, b); };
      return make_carrier<NaturalInterval>(
          std::move(elems), add, [](const NaturalInterval& a, const NaturalInterval& b) { return iv_mul(a, b); },
          [](const NaturalInterval& x) { return to_string(x); },
          [d, fl](std::string_view s) { return parse_interval(d, s, fl); }, desc);
    }
    case K::Matrices: {
      const Domain d = amb.parts[0].domain;
      const Flavor fl = amb.parts[0].flavor_or_default();
      const std::size_t r = amb.rows, c = amb.cols;
      std::vector<IntervalMatrix> elems;
      for (const auto& e : spec.elements) {
        auto m = parse_matrix(d, e, fl);
        if (m.rows() != r || m.cols() != c) throw Error(ErrorKind::ShapeMismatch, e + " is not " + std::to_string(r) + "x" + std::to_string(c));
        elems.push_back(std::move(m));
      }
      typename ElementSource<IntervalMatrix>::BinOp mul;
      if (r == c) mul = [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_mul(a, b); };
      else mul = [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_hadamard(a, b); };
      return make_carrier<IntervalMatrix>(
          std::move(elems), [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_add(a, b); }, mul,
          [](const IntervalMatrix& m) { return "{" + to_string(m) + "}"; },
          [d, fl](std::string_view s) { return parse_matrix(d, s, fl); }, desc);
    }
    case K::Polys: {
      const Domain d = amb.parts[0].domain;
      const Flavor fl = amb.parts[0].flavor_or_default();
      const std::size_t k = amb.cyclic;
      std::vector<IntervalPoly> elems;
      for (const auto& e : spec.elements) elems.push_back(parse_poly(d, e, fl, k));
      return make_carrier<IntervalPoly>(
          std::move(elems), [](const IntervalPoly& a, const IntervalPoly& b) { return poly_add(a, b); },
          [](const IntervalPoly& a, const IntervalPoly& b) { return poly_mul(a, b); },
          [](const IntervalPoly& p) { return to_string(p); },
          [d, fl, k](std::string_view s) { return parse_poly(d, s, fl, k); }, desc);
    }
    case K::Product: {
      const Domain d = product_domain(amb);
      const Flavor fl = amb.parts[0].flavor_or_default();
      const std::size_t arity = amb.parts.size();
      std::vector<IntervalMatrix> elems;
      for (const auto& e : spec.elements) elems.push_back(parse_tuple(d, e, fl, arity));
      return make_carrier<IntervalMatrix>(
          std::move(elems), [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_add(a, b); },
          [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_hadamard(a, b); }, tuple_label,
          [d, fl, arity](std::string_view s) { return parse_tuple(d, s, fl, arity); }, desc);
    }
    case K::Subset: break;
  }
  throw Error(ErrorKind::InvalidArgument, "nested Sub{...}");
}

}  // namespace detail

inline StructureSpec parse_structure_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// Enumerates the carrier described by `spec` in a fixed order: intervals lexicographic in
/// (lo, hi), matrices and tuples row-major over that order, polynomials as in poly_carrier,
/// explicit subsets as listed.
inline FiniteStructure build_carrier(const StructureSpec& spec, std::size_t size_bound = kDefaultSizeBound) {
  using K = StructureSpec::Kind;
  const std::string desc = spec.text();
  switch (spec.kind) {
    case K::Intervals: {
      auto values = detail::finite_values(spec);
      detail::checked_power(values.size(), 2, size_bound, desc);
      const Domain d = spec.domain;
      const Flavor fl = spec.flavor_or_default();
      typename ElementSource<NaturalInterval>::BinOp add;
      if (!spec.exclude_zero) add = [](const NaturalInterval& a, const NaturalInterval& b) { return iv_add(a, b); };
      return detail::make_carrier<NaturalInterval>(
          detail::intervals_over(values, fl), add,
          [](const NaturalInterval& a, const NaturalInterval& b) { return iv_mul(a, b); },
          [](const NaturalInterval& x) { return to_string(x); },
          [d, fl](std::string_view s) { return parse_interval(d, s, fl); }, desc);
    }
    case K::Matrices: {
      const auto& entry = spec.parts[0];
      auto values = detail::finite_values(entry);
      const std::size_t m = values.size() * values.size();
      const std::size_t cells = spec.rows * spec.cols;
      const std::size_t total =
          detail::checked_power(m, cells, std::min(size_bound, kMatrixCarrierBound), desc);
      const auto entries = detail::intervals_over(values, entry.flavor_or_default());
      std::vector<IntervalMatrix> elems;
      elems.reserve(total);
      std::vector<std::size_t> digit(cells, 0);
      for (std::size_t n = 0; n < total; ++n) {
        std::vector<NaturalInterval> e;
        for (std::size_t i = 0; i < cells; ++i) e.push_back(entries[digit[i]]);
        elems.emplace_back(spec.rows, spec.cols, std::move(e));
        for (std::size_t i = cells; i-- > 0;) {
          if (++digit[i] < m) break;
          digit[i] = 0;
        }
      }
      const Domain d = entry.domain;
      const Flavor fl = entry.flavor_or_default();
      typename ElementSource<IntervalMatrix>::BinOp mul;
      if (spec.rows == spec.cols) mul = [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_mul(a, b); };
      else mul = [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_hadamard(a, b); };
      return detail::make_carrier<IntervalMatrix>(
          std::move(elems), [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_add(a, b); }, mul,
          [](const IntervalMatrix& x) { return "{" + to_string(x) + "}"; },
          [d, fl](std::string_view s) { return parse_matrix(d, s, fl); }, desc);
    }
    case K::Polys: {
      const auto& entry = spec.parts[0];
      if (entry.exclude_zero) throw Error(ErrorKind::InvalidArgument, "Poly over N(...\\0)");
      if (!entry.domain.is_finite()) throw Error(ErrorKind::InfiniteDomain, desc + " has an infinite carrier");
      auto s = poly_carrier(entry.domain, entry.flavor_or_default(), spec.cyclic, size_bound);
      return FiniteStructure(s.source_ptr(), desc);
    }
    case K::Product: {
      const Domain d = detail::product_domain(spec);
      const Flavor fl = spec.parts[0].flavor_or_default();
      std::vector<std::vector<NaturalInterval>> factors;
      std::size_t total = 1;
      for (const auto& p : spec.parts) {
        factors.push_back(detail::intervals_over(detail::finite_values(p), fl));
        if (total > size_bound / std::max<std::size_t>(1, factors.back().size()))
          throw Error(ErrorKind::TooLarge, desc + " exceeds the size bound " + std::to_string(size_bound));
        total *= factors.back().size();
      }
      const std::size_t arity = factors.size();
      std::vector<IntervalMatrix> elems;
      elems.reserve(total);
      std::vector<std::size_t> digit(arity, 0);
      for (std::size_t n = 0; n < total; ++n) {
        std::vector<NaturalInterval> e;
        for (std::size_t i = 0; i < arity; ++i) e.push_back(factors[i][digit[i]]);
        elems.emplace_back(1, arity, std::move(e));
        for (std::size_t i = arity; i-- > 0;) {
          if (++digit[i] < factors[i].size()) break;
          digit[i] = 0;
        }
      }
      return detail::make_carrier<IntervalMatrix>(
          std::move(elems), [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_add(a, b); },
          [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_hadamard(a, b); }, detail::tuple_label,
          [d, fl, arity](std::string_view s) { return detail::parse_tuple(d, s, fl, arity); }, desc);
    }
    case K::Subset:
      if (spec.elements.size() > size_bound)
        throw Error(ErrorKind::TooLarge, desc + " exceeds the size bound " + std::to_string(size_bound));
      return detail::build_subset(spec);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown spec kind");
}

inline FiniteStructure build_carrier(std::string_view spec, std::size_t size_bound = kDefaultSizeBound) {
  return build_carrier(parse_structure_spec(spec), size_bound);
}

}  // namespace natint
