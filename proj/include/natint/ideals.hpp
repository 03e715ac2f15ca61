#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "natint/analyzer.hpp"
#include "natint/text.hpp"

namespace natint {

struct Ideal {
  FiniteStructure ambient;
  std::vector<Index> elements;  // ascending carrier indices
  std::vector<Index> generators;

  bool contains(Index i) const { return std::binary_search(elements.begin(), elements.end(), i); }
  std::size_t size() const { return elements.size(); }
};

struct IdealCheck {
  bool holds = false;
  std::optional<IndexPair> counterexample;
  std::string failure;
};

/// Closure under +, negation and two-sided absorption, with the counterexample on failure.
inline IdealCheck is_ideal(const FiniteStructure& s, const std::vector<Index>& subset) {
  IdealCheck r;
  const std::size_t n = s.order();
  auto zero = s.zero();
  if (!zero) {
    r.failure = "structure has no additive zero";
    return r;
  }
  std::vector<char> in(n, 0);
  for (Index i : subset) in[i] = 1;
  if (subset.empty() || !in[*zero]) {
    r.failure = "does not contain zero";
    return r;
  }
  const CayleyTable& A = s.table(Op::Add);
  const CayleyTable& M = s.table(Op::Mul);
  for (Index x : subset)
    for (Index y : subset) {
      Index v = A(x, y);
      if (v == kOutside || !in[v]) {
        r.counterexample = IndexPair{x, y};
        r.failure = "not closed under addition";
        return r;
      }
    }
  for (Index x : subset) {
    bool has_neg = false;
    for (Index y : subset)
      if (A(x, y) == *zero) {
        has_neg = true;
        break;
      }
    if (!has_neg) {
      r.counterexample = IndexPair{x, x};
      r.failure = "missing additive inverse";
      return r;
    }
  }
  for (Index t = 0; t < n; ++t)
    for (Index x : subset) {
      Index a = M(t, x), b = M(x, t);
      if (a == kOutside || !in[a] || b == kOutside || !in[b]) {
        r.counterexample = IndexPair{t, x};
        r.failure = "not absorbing under multiplication";
        return r;
      }
    }
  r.holds = true;
  return r;
}

/// Least ideal containing `gens`: fixpoint of sums, negatives and products with every element.
inline Ideal generate_ideal(const FiniteStructure& s, const std::vector<Index>& gens) {
  const std::size_t n = s.order();
  auto zero = s.zero();
  if (!zero) throw Error(ErrorKind::MissingTable, "ideal generation needs an additive zero");
  const CayleyTable& A = s.table(Op::Add);
  const CayleyTable& M = s.table(Op::Mul);
  std::vector<char> in(n, 0);
  std::vector<Index> members;
  auto push = [&](Index v) {
    if (v != kOutside && !in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  };
  push(*zero);
  for (Index g : gens) push(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Index x = members[i];
    for (Index t = 0; t < n; ++t) {
      push(M(t, x));
      push(M(x, t));
      if (A(x, t) == *zero) push(t);
    }
    for (std::size_t j = 0; j <= i; ++j) {
      push(A(x, members[j]));
      push(A(members[j], x));
    }
  }
  std::sort(members.begin(), members.end());
  return Ideal{s, std::move(members), gens};
}

struct IdealLattice {
  std::vector<Ideal> ideals;   // proper nonzero ideals found
  std::vector<Ideal> maximal;
  std::vector<Ideal> minimal;
};

inline constexpr std::size_t kIdealEnumerationBound = 4096;

/// Enumerates the ideals generated by single elements and the pairwise sums of those,
/// then orders them by inclusion.
inline IdealLattice maximal_minimal_ideals(const FiniteStructure& s) {
  const std::size_t n = s.order();
  if (n > kIdealEnumerationBound)
    throw Error(ErrorKind::TooLarge, "ideal enumeration is limited to carriers of " +
                                         std::to_string(kIdealEnumerationBound) + " elements");
  auto zero = s.zero();
  if (!zero) throw Error(ErrorKind::MissingTable, "ideal enumeration needs an additive zero");
  const CayleyTable& A = s.table(Op::Add);
  const CayleyTable& M = s.table(Op::Mul);

  bool commutative = true;
  for (Index a = 0; a < n && commutative; ++a)
    for (Index b = a + 1; b < n && commutative; ++b) commutative = M(a, b) == M(b, a);
  const auto one = s.one();

  std::set<std::vector<Index>> found;
  std::vector<std::vector<Index>> principal;
  for (Index g = 0; g < n; ++g) {
    std::vector<Index> members;
    if (commutative && one) {
      // R*g already absorbs and is an additive subgroup
      std::vector<char> in(n, 0);
      for (Index t = 0; t < n; ++t) {
        Index v = M(t, g);
        if (!in[v]) {
          in[v] = 1;
          members.push_back(v);
        }
      }
      std::sort(members.begin(), members.end());
    } else {
      members = generate_ideal(s, {g}).elements;
    }
    if (found.insert(members).second) principal.push_back(std::move(members));
  }

  // I + J as the additive subgroup generated by I and J
  auto join = [&](const std::vector<Index>& I, const std::vector<Index>& J) {
    std::vector<char> in(n, 0);
    std::vector<Index> h(I.begin(), I.end());
    for (Index i : h) in[i] = 1;
    for (Index j : J) {
      if (in[j]) continue;
      const std::vector<Index> base = h;
      Index step = j;
      while (!in[step]) {
        for (Index b : base) {
          Index v = A(b, step);
          if (!in[v]) {
            in[v] = 1;
            h.push_back(v);
          }
        }
        step = A(step, j);
      }
    }
    std::sort(h.begin(), h.end());
    return h;
  };
  const std::size_t p = principal.size();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) found.insert(join(principal[i], principal[j]));

  IdealLattice lat;
  for (const auto& members : found) {
    if (members.size() <= 1 || members.size() == n) continue;
    lat.ideals.push_back(Ideal{s, members, {}});
  }
  auto strictly_inside = [](const std::vector<Index>& a, const std::vector<Index>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto& I : lat.ideals) {
    bool maximal = true, minimal = true;
    for (const auto& J : lat.ideals) {
      if (strictly_inside(I.elements, J.elements)) maximal = false;
      if (strictly_inside(J.elements, I.elements)) minimal = false;
    }
    if (maximal) lat.maximal.push_back(I);
    if (minimal) lat.minimal.push_back(I);
  }
  return lat;
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

enum class QuotientKind { Standard, Rees };

constexpr std::string_view to_string(QuotientKind k) { return k == QuotientKind::Standard ? "standard" : "rees"; }

inline QuotientKind parse_quotient_kind(std::string_view s) {
  if (s == "standard") return QuotientKind::Standard;
  if (s == "rees") return QuotientKind::Rees;
  throw ParseError(0, "standard or rees", s);
}

/// Classes of a quotient addressed by index; class 0 is always the ideal itself.
class QuotientSource : public StructureSource {
 public:
  QuotientSource(FiniteStructure ambient, std::vector<Index> reps, std::vector<Index> class_of)
      : ambient_(std::move(ambient)), reps_(std::move(reps)), class_of_(std::move(class_of)) {}

  std::size_t size() const override { return reps_.size(); }
  std::string label(Index i) const override {
    if (i == 0) return "J";
    return ambient_.label(reps_[i]) + "+J";
  }
  bool has_op(Op op) const override { return ambient_.has_op(op); }
  Index apply(Op op, Index a, Index b) const override {
    Index r = ambient_.apply(op, reps_[a], reps_[b]);
    return r == kOutside ? kOutside : class_of_[r];
  }
  std::optional<Index> find(std::string_view t) const override {
    std::string_view s = text::trim(t);
    if (s == "J") return Index{0};
    if (s.ends_with("+J")) s = text::trim(s.substr(0, s.size() - 2));
    auto i = ambient_.find(s);
    if (!i) return std::nullopt;
    return class_of_[*i];
  }

  const std::vector<Index>& representatives() const { return reps_; }
  const std::vector<Index>& class_of() const { return class_of_; }

 private:
  FiniteStructure ambient_;
  std::vector<Index> reps_;
  std::vector<Index> class_of_;
};

struct QuotientStructure {
  QuotientKind kind;
  FiniteStructure ambient;
  Ideal ideal;
  std::vector<Index> representatives;  // ambient index of each class representative
  std::vector<Index> class_of;         // ambient index -> class
  FiniteStructure classes;
  bool well_defined_add = true;
  bool well_defined_mul = true;
  std::optional<IndexPair> add_representative_counterexample;  // (ideal member, element)
  bool associative_add = true;
  std::optional<IndexTriple> associativity_counterexample;      // class indices

  std::size_t order() const { return representatives.size(); }
};

namespace detail {

inline void require_ideal(const FiniteStructure& s, const Ideal& i) {
  auto chk = is_ideal(s, i.elements);
  if (!chk.holds) throw Error(ErrorKind::NotAnIdeal, chk.failure);
}

inline QuotientStructure make_quotient(QuotientKind kind, const FiniteStructure& s, const Ideal& i,
                                       std::vector<Index> reps, std::vector<Index> class_of) {
  auto src = std::make_shared<QuotientSource>(s, reps, class_of);
  std::string desc = s.description() + (kind == QuotientKind::Rees ? " /rees " : " / ") + "ideal(" +
                     std::to_string(i.size()) + ")";
  FiniteStructure q(src, desc);
  q.set_workers(s.workers());
  return QuotientStructure{kind, s, i, std::move(reps), std::move(class_of), std::move(q)};
}

// Checks that the class of x + y does not depend on which ideal member represents the ideal class.
inline void check_representatives(QuotientStructure& q) {
  const FiniteStructure& s = q.ambient;
  const std::size_t n = s.order();
  for (Op op : {Op::Add, Op::Mul}) {
    const CayleyTable& t = s.table(op);
    bool ok = true;
    std::optional<IndexPair> cx;
    for (Index m : q.ideal.elements) {
      for (Index y = 0; y < n && ok; ++y) {
        Index base_l = t(q.representatives[0], y), alt_l = t(m, y);
        Index base_r = t(y, q.representatives[0]), alt_r = t(y, m);
        if (q.class_of[base_l] != q.class_of[alt_l] || q.class_of[base_r] != q.class_of[alt_r]) {
          ok = false;
          cx = IndexPair{m, y};
        }
      }
      if (!ok) break;
    }
    if (op == Op::Add) {
      q.well_defined_add = ok;
      q.add_representative_counterexample = cx;
    } else {
      q.well_defined_mul = ok;
    }
  }
  auto cx = first_failing_triple(q.classes.order(), q.classes.workers(), [&](Index a, Index b, Index c) {
    const CayleyTable& A = q.classes.table(Op::Add);
    return A(A(a, b), c) == A(a, A(b, c));
  });
  q.associative_add = !cx.has_value();
  q.associativity_counterexample = cx;
}

}  // namespace detail

/// Additive cosets x + I with the induced operations; the representative of each class is
/// its first member in carrier order.
inline QuotientStructure standard_quotient(const FiniteStructure& s, const Ideal& ideal) {
  detail::require_ideal(s, ideal);
  const std::size_t n = s.order();
  const CayleyTable& A = s.table(Op::Add);
  std::vector<Index> class_of(n, kOutside), reps;
  const Index zero = *s.zero();
  auto assign = [&](Index x) {
    const Index c = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index m : ideal.elements) class_of[A(x, m)] = c;
  };
  assign(zero);
  for (Index x = 0; x < n; ++x)
    if (class_of[x] == kOutside) assign(x);
  auto q = detail::make_quotient(QuotientKind::Standard, s, ideal, std::move(reps), std::move(class_of));
  detail::check_representatives(q);
  return q;
}

/// Collapses the ideal to a single zero class and keeps every other element as its own
/// class: |S| - |I| + 1 classes.
inline QuotientStructure rees_quotient(const FiniteStructure& s, const Ideal& ideal) {
  detail::require_ideal(s, ideal);
  const std::size_t n = s.order();
  std::vector<Index> class_of(n, 0), reps{*s.zero()};
  for (Index x = 0; x < n; ++x) {
    if (ideal.contains(x)) continue;
    class_of[x] = static_cast<Index>(reps.size());
    reps.push_back(x);
  }
  auto q = detail::make_quotient(QuotientKind::Rees, s, ideal, std::move(reps), std::move(class_of));
  detail::check_representatives(q);
  return q;
}

inline QuotientStructure make_quotient(QuotientKind kind, const FiniteStructure& s, const Ideal& ideal) {
  return kind == QuotientKind::Standard ? standard_quotient(s, ideal) : rees_quotient(s, ideal);
}

struct SemifieldVerdict {
  bool commutative = false;
  bool has_identity = false;
  bool no_zero_divisors = false;
  std::optional<IndexPair> zero_divisor_witness;
  bool strict = false;
  std::optional<IndexPair> strictness_witness;

  bool is_semifield() const { return commutative && has_identity && no_zero_divisors && strict; }
};

struct QuotientAnalysis {
  ElementReport elements;
  std::uint64_t characteristic = 0;
  SemifieldVerdict semifield;
};

inline QuotientAnalysis quotient_analysis(const QuotientStructure& q) {
  QuotientAnalysis a;
  const FiniteStructure& c = q.classes;
  a.elements = find_special_elements(c);
  a.characteristic = a.elements.characteristic;
  const CayleyTable& M = c.table(Op::Mul);
  const std::size_t n = c.order();
  SemifieldVerdict& v = a.semifield;
  v.commutative = true;
  for (Index x = 0; x < n && v.commutative; ++x)
    for (Index y = x + 1; y < n && v.commutative; ++y) v.commutative = M(x, y) == M(y, x);
  v.has_identity = a.elements.one.has_value();
  v.no_zero_divisors = a.elements.zero_divisors.empty();
  if (!v.no_zero_divisors) v.zero_divisor_witness = IndexPair{a.elements.zero_divisors[0].element, a.elements.zero_divisors[0].partner};
  auto strict = is_strict_semiring(c);
  v.strict = strict.strict;
  v.strictness_witness = strict.witness;
  return a;
}

// ---------------------------------------------------------------------------
// The componentwise reduction N(Z) -> N(Z_n)
// ---------------------------------------------------------------------------

struct ModMapReport {
  std::uint64_t modulus = 0;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_notes;  // first few failures
};

inline NaturalInterval reduce_mod(const NaturalInterval& x, const Domain& target) {
  return NaturalInterval(Scalar::of(target, x.lo().real()), Scalar::of(target, x.hi().real()), x.flavor());
}

/// Samples the map [a, b] -> [a mod n, b mod n] on seeded random pairs and checks that it
/// preserves + and x, that its kernel is N(nZ), and that every class has a preimage.
inline ModMapReport verify_mod_map(std::uint64_t n, std::size_t samples, std::uint64_t seed,
                                   Flavor flavor = Flavor::Closed) {
  ModMapReport r;
  r.modulus = n;
  r.samples = samples;
  const Domain z = Domain::integers();
  const Domain zn = Domain::modular(n);
  std::mt19937_64 rng(seed);
  auto draw = [&]() -> long long {
    return static_cast<long long>(rng() % 2'000'001ULL) - 1'000'000LL;
  };
  auto fail = [&](std::string note) {
    ++r.failures;
    if (r.failure_notes.size() < 5) r.failure_notes.push_back(std::move(note));
  };
  const NaturalInterval zero_n = NaturalInterval::zero(zn, flavor);
  for (std::size_t k = 0; k < samples; ++k) {
    NaturalInterval x = NaturalInterval::of(z, draw(), draw(), flavor);
    NaturalInterval y = NaturalInterval::of(z, draw(), draw(), flavor);
    if (!(reduce_mod(x + y, zn) == reduce_mod(x, zn) + reduce_mod(y, zn))) fail("sum " + to_string(x) + " " + to_string(y));
    if (!(reduce_mod(x * y, zn) == reduce_mod(x, zn) * reduce_mod(y, zn)))
      fail("product " + to_string(x) + " " + to_string(y));
    const bool in_kernel = reduce_mod(x, zn) == zero_n;
    const bool multiple = x.lo().real() == BigRat(BigInt(numerator(x.lo().real()) / n * n)) &&
                          x.hi().real() == BigRat(BigInt(numerator(x.hi().real()) / n * n));
    if (in_kernel != multiple) fail("kernel membership of " + to_string(x));
    NaturalInterval kx = iv_scalar_mul(Scalar::of(z, static_cast<long long>(n)), x);
    if (!(reduce_mod(kx, zn) == zero_n)) fail("multiple " + to_string(kx) + " not in kernel");
  }
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      NaturalInterval lift = NaturalInterval::of(z, static_cast<long long>(a), static_cast<long long>(b), flavor);
      NaturalInterval target = NaturalInterval::of(zn, static_cast<long long>(a), static_cast<long long>(b), flavor);
      if (!(reduce_mod(lift, zn) == target)) fail("no preimage for " + to_string(target));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Ideal specs: gen{e1,...}, col-zero, row-zero, diag-multiples:<k>
// ---------------------------------------------------------------------------

inline Ideal resolve_ideal_spec(const FiniteStructure& s, std::string_view spec) {
  std::string_view t = text::trim(spec);
  auto by_component = [&](bool lo_zero) {
    std::vector<Index> members;
    for (Index i = 0; i < s.order(); ++i) {
      const NaturalInterval* x = s.interval_at(i);
      if (x == nullptr) throw Error(ErrorKind::NotIntervalCarrier, "col-zero/row-zero need an interval carrier");
      if ((lo_zero ? x->lo() : x->hi()).is_zero()) members.push_back(i);
    }
    auto chk = is_ideal(s, members);
    if (!chk.holds) throw Error(ErrorKind::NotAnIdeal, std::string(t) + ": " + chk.failure);
    return Ideal{s, members, {}};
  };
  if (t == "col-zero") return by_component(true);
  if (t == "row-zero") return by_component(false);
  if (t.starts_with("diag-multiples:")) {
    std::uint64_t k = 0;
    if (!detail::parse_uint(t.substr(15), k)) throw ParseError(15, "decimal multiplier", t);
    return generate_ideal(s, {s.find_or_throw(std::to_string(k))});
  }
  if (t.starts_with("gen{") && t.ends_with("}")) {
    std::vector<Index> gens;
    for (auto part : text::split_top_level(t.substr(4, t.size() - 5), ',')) {
      if (part.empty()) continue;
      gens.push_back(s.find_or_throw(part));
    }
    return generate_ideal(s, gens);
  }
  throw ParseError(0, "gen{...}, col-zero, row-zero or diag-multiples:<k>", t);
}

}  // namespace natint
