#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "natint/structure.hpp"

namespace natint {

// ---------------------------------------------------------------------------
// Axioms
// ---------------------------------------------------------------------------

using IndexPair = std::pair<Index, Index>;
using IndexTriple = std::array<Index, 3>;

/// Findings for one operation. Where a product leaves the carrier, an identity such as
/// (xy)z = x(yz) counts as holding only if both sides are undefined or both agree.
struct OpReport {
  Op op = Op::Mul;
  bool closed = true;
  std::optional<IndexPair> closure_counterexample;
  bool associative = true;
  std::optional<IndexTriple> associativity_counterexample;
  bool commutative = true;
  std::optional<IndexPair> commutativity_counterexample;
  std::optional<Index> identity;
  bool inverses_all = false;
  std::optional<Index> missing_inverse;
  std::optional<Index> absorbing;

  bool is_semigroup() const { return closed && associative; }
  bool is_monoid() const { return is_semigroup() && identity.has_value(); }
  bool is_group() const { return is_monoid() && inverses_all; }
};

struct AxiomReport {
  std::optional<OpReport> add;
  std::optional<OpReport> mul;
  std::optional<bool> distributive;
  std::optional<IndexTriple> distributivity_counterexample;

  bool is_ring() const {
    return add && mul && add->is_group() && add->commutative && mul->is_semigroup() && distributive.value_or(false);
  }
};

enum class AxiomScope { Add, Mul, Ring };

namespace detail {

// First triple (a, b, c) in lexicographic order for which pred fails.
template <class Pred>
std::optional<IndexTriple> first_failing_triple(std::size_t n, std::size_t workers, Pred pred) {
  std::vector<std::optional<IndexTriple>> found(std::max<std::size_t>(1, workers));
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  const std::size_t w = std::max<std::size_t>(1, std::min(workers, n));
  const std::size_t chunk = n == 0 ? 0 : (n + w - 1) / w;
  for (std::size_t i = 0; i < w; ++i) ranges.emplace_back(i * chunk, std::min(n, (i + 1) * chunk));
  found.assign(ranges.size(), std::nullopt);
  parallel_for(ranges.size(), ranges.size(), [&](std::size_t rb, std::size_t re) {
    for (std::size_t r = rb; r < re; ++r) {
      for (std::size_t a = ranges[r].first; a < ranges[r].second && !found[r]; ++a)
        for (Index b = 0; b < n && !found[r]; ++b)
          for (Index c = 0; c < n; ++c)
            if (!pred(static_cast<Index>(a), b, c)) {
              found[r] = IndexTriple{static_cast<Index>(a), b, c};
              break;
            }
    }
  });
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace detail

inline OpReport check_op(const FiniteStructure& s, Op op) {
  const CayleyTable& t = s.table(op);
  const std::size_t n = s.order();
  OpReport r;
  r.op = op;

  for (Index a = 0; a < n && r.closed; ++a)
    for (Index b = 0; b < n; ++b)
      if (t(a, b) == kOutside) {
        r.closed = false;
        r.closure_counterexample = IndexPair{a, b};
        break;
      }

  auto cx = detail::first_failing_triple(n, s.workers(), [&](Index a, Index b, Index c) {
    Index ab = t(a, b), bc = t(b, c);
    Index left = ab == kOutside ? kOutside : t(ab, c);
    Index right = bc == kOutside ? kOutside : t(a, bc);
    return left == right;
  });
  if (cx) {
    r.associative = false;
    r.associativity_counterexample = cx;
  }

  for (Index a = 0; a < n && r.commutative; ++a)
    for (Index b = a + 1; b < n; ++b)
      if (t(a, b) != t(b, a)) {
        r.commutative = false;
        r.commutativity_counterexample = IndexPair{a, b};
        break;
      }

  r.identity = s.identity(op);

  for (Index z = 0; z < n; ++z) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = t(z, x) == z && t(x, z) == z;
    if (ok) {
      r.absorbing = z;
      break;
    }
  }

  if (r.identity) {
    const Index e = *r.identity;
    r.inverses_all = true;
    for (Index x = 0; x < n; ++x) {
      bool has = false;
      for (Index y = 0; y < n && !has; ++y) has = t(x, y) == e && t(y, x) == e;
      if (!has) {
        r.inverses_all = false;
        r.missing_inverse = x;
        break;
      }
    }
  }
  return r;
}

/// Exhaustive axiom verification; every failed property carries the first counterexample
/// in carrier order.
inline AxiomReport check_axioms(const FiniteStructure& s, AxiomScope which) {
  AxiomReport rep;
  if (which == AxiomScope::Add || which == AxiomScope::Ring) rep.add = check_op(s, Op::Add);
  if (which == AxiomScope::Mul || which == AxiomScope::Ring) rep.mul = check_op(s, Op::Mul);
  if (which == AxiomScope::Ring) {
    const CayleyTable& A = s.table(Op::Add);
    const CayleyTable& M = s.table(Op::Mul);
    auto both = [](const CayleyTable& t, Index a, Index b) {
      return (a == kOutside || b == kOutside) ? kOutside : t(a, b);
    };
    auto cx = detail::first_failing_triple(s.order(), s.workers(), [&](Index x, Index y, Index z) {
      Index left = both(M, x, A(y, z));
      Index right = both(A, M(x, y), M(x, z));
      if (left != right) return false;
      return both(M, A(y, z), x) == both(A, M(y, x), M(z, x));
    });
    rep.distributive = !cx.has_value();
    rep.distributivity_counterexample = cx;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Special elements
// ---------------------------------------------------------------------------

struct ZeroDivisor {
  Index element;
  Index partner;  // nonzero w with element*w = 0 or w*element = 0
};

/// x*y = 0 together with a, b outside {0, x, y} such that x*a = 0, y*b = 0 and a*b != 0.
struct SZeroDivisor {
  Index x, y, a, b;
};

struct Nilpotent {
  Index element;
  std::uint64_t index;  // least k with x^k = 0
};

struct Unit {
  Index element;
  Index inverse;
};

/// Orders of one element. `multiplicative` is relative to the identity (x^k = 1);
/// `return_exponent` is the least m > 1 with x^m = x.
struct ElementOrders {
  Index element;
  std::optional<std::uint64_t> additive;
  std::optional<std::uint64_t> multiplicative;
  std::optional<std::uint64_t> return_exponent;
};

struct ElementReport {
  std::optional<Index> zero;
  std::optional<Index> one;
  std::vector<ZeroDivisor> zero_divisors;
  std::vector<SZeroDivisor> s_zero_divisors;
  bool s_zero_divisor_search_complete = true;
  std::vector<Index> idempotents;
  std::vector<Nilpotent> nilpotents;
  std::vector<Unit> units;
  std::vector<ElementOrders> orders;
  std::uint64_t characteristic = 0;

  bool is_idempotent(Index i) const { return std::find(idempotents.begin(), idempotents.end(), i) != idempotents.end(); }
  bool is_zero_divisor(Index i) const {
    return std::any_of(zero_divisors.begin(), zero_divisors.end(), [&](const ZeroDivisor& z) { return z.element == i; });
  }
  std::optional<Nilpotent> nilpotent(Index i) const {
    for (const auto& x : nilpotents)
      if (x.element == i) return x;
    return std::nullopt;
  }
  std::optional<Index> inverse_of(Index i) const {
    for (const auto& u : units)
      if (u.element == i) return u.inverse;
    return std::nullopt;
  }
};

namespace detail {

// Walks x, x*x, (x*x)*x, ... until the sequence repeats or leaves the carrier.
inline std::vector<Index> power_walk(const CayleyTable& t, Index x, std::vector<char>& seen) {
  std::vector<Index> seq;
  Index p = x;
  while (p != kOutside && !seen[p]) {
    seen[p] = 1;
    seq.push_back(p);
    p = t(p, x);
  }
  for (Index v : seq) seen[v] = 0;
  if (p != kOutside) seq.push_back(p);  // the repeated element closes the cycle
  return seq;
}

}  // namespace detail

/// k-fold sum of x (left fold); nullopt when it never reaches zero.
inline std::optional<std::uint64_t> additive_order(const FiniteStructure& s, Index x, Index zero) {
  const CayleyTable& A = s.table(Op::Add);
  std::vector<char> seen(s.order(), 0);
  return [&]() -> std::optional<std::uint64_t> {
    auto seq = detail::power_walk(A, x, seen);
    for (std::size_t k = 0; k < seq.size(); ++k)
      if (seq[k] == zero) return k + 1;
    return std::nullopt;
  }();
}

/// Least k >= 1 with the k-fold sum of the multiplicative identity equal to zero; 0 if none.
inline std::uint64_t characteristic(const FiniteStructure& s) {
  if (!s.has_op(Op::Add) || !s.has_op(Op::Mul)) return 0;
  auto one = s.one();
  auto zero = s.zero();
  if (!one || !zero) return 0;
  return additive_order(s, *one, *zero).value_or(0);
}

struct SpecialElementOptions {
  /// Upper bound on candidate (a, b) checks in the S-zero-divisor search.
  std::uint64_t s_zero_divisor_budget = 50'000'000;
};

inline ElementReport find_special_elements(const FiniteStructure& s, SpecialElementOptions opts = {}) {
  const CayleyTable& M = s.table(Op::Mul);
  const std::size_t n = s.order();
  ElementReport rep;
  rep.zero = s.zero();
  rep.one = s.one();
  const bool has_add = s.has_op(Op::Add);

  for (Index x = 0; x < n; ++x)
    if (M(x, x) == x) rep.idempotents.push_back(x);

  if (rep.zero) {
    const Index z = *rep.zero;
    std::vector<std::vector<Index>> right_ann(n);
    for (Index x = 0; x < n; ++x) {
      if (x == z) continue;
      std::optional<Index> partner;
      for (Index y = 0; y < n; ++y) {
        if (y == z) continue;
        if (M(x, y) == z) {
          right_ann[x].push_back(y);
          if (!partner) partner = y;
        } else if (!partner && M(y, x) == z) {
          partner = y;
        }
      }
      if (partner) rep.zero_divisors.push_back({x, *partner});
    }

    std::uint64_t budget = opts.s_zero_divisor_budget;
    for (Index x = 0; x < n && rep.s_zero_divisor_search_complete; ++x) {
      for (Index y : right_ann[x]) {
        if (y < x) continue;
        bool found = false;
        for (Index a : right_ann[x]) {
          if (a == x || a == y) continue;
          for (Index b : right_ann[y]) {
            if (b == x || b == y) continue;
            if (budget-- == 0) {
              rep.s_zero_divisor_search_complete = false;
              break;
            }
            if (M(a, b) != z) {
              rep.s_zero_divisors.push_back({x, y, a, b});
              found = true;
              break;
            }
          }
          if (found || !rep.s_zero_divisor_search_complete) break;
        }
        if (!rep.s_zero_divisor_search_complete) break;
      }
    }
  }

  if (rep.one) {
    const Index e = *rep.one;
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (M(x, y) == e && M(y, x) == e) {
          rep.units.push_back({x, y});
          break;
        }
  }

  std::vector<char> seen(n, 0);
  rep.orders.reserve(n);
  for (Index x = 0; x < n; ++x) {
    ElementOrders o{x, std::nullopt, std::nullopt, std::nullopt};
    auto seq = detail::power_walk(M, x, seen);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (rep.one && seq[k] == *rep.one && !o.multiplicative) o.multiplicative = k + 1;
      if (k >= 1 && seq[k] == x && !o.return_exponent) o.return_exponent = k + 1;
      if (rep.zero && x != *rep.zero && seq[k] == *rep.zero &&
          std::none_of(rep.nilpotents.begin(), rep.nilpotents.end(), [&](const Nilpotent& p) { return p.element == x; }))
        rep.nilpotents.push_back({x, k + 1});
    }
    if (has_add && rep.zero) o.additive = additive_order(s, x, *rep.zero);
    rep.orders.push_back(o);
  }
  rep.characteristic = characteristic(s);
  return rep;
}

// ---------------------------------------------------------------------------
// Substructures
// ---------------------------------------------------------------------------

/// The degenerate diagonal {[a, a]} of an interval carrier.
/// Idempotent whose endpoints are each 0 or 1.
inline bool is_trivial_idempotent(const FiniteStructure& s, Index i) {
  const NaturalInterval* x = s.interval_at(i);
  if (x == nullptr) return false;
  auto trivial = [](const Scalar& v) { return v.is_zero() || v == Scalar::one(v.domain()); };
  return trivial(x->lo()) && trivial(x->hi());
}

inline FiniteStructure inherited_substructure(const FiniteStructure& s) {
  if (s.order() == 0 || s.interval_at(0) == nullptr)
    throw Error(ErrorKind::NotIntervalCarrier, s.description() + " is not a carrier of natural intervals");
  std::vector<Index> members;
  for (Index i = 0; i < s.order(); ++i)
    if (s.source().is_degenerate(i)) members.push_back(i);
  return restrict_to(s, std::move(members), "inherited(" + s.description() + ")");
}

/// True when `members` is a group under the operation induced from `op`.
inline bool is_group_subset(const FiniteStructure& s, const std::vector<Index>& members, Op op = Op::Mul) {
  if (members.empty()) return false;
  auto sub = restrict_to(s, members, "subset");
  sub.set_workers(1);
  return check_op(sub, op).is_group();
}

struct MaximalSubgroup {
  Index idempotent;
  std::vector<Index> members;  // ascending carrier indices
};

/// For every multiplicative idempotent e: the group of units of the monoid eSe.
inline std::vector<MaximalSubgroup> maximal_subgroups(const FiniteStructure& s) {
  const CayleyTable& M = s.table(Op::Mul);
  const std::size_t n = s.order();
  std::vector<MaximalSubgroup> out;
  for (Index e = 0; e < n; ++e) {
    if (M(e, e) != e) continue;
    std::vector<Index> local;
    for (Index x = 0; x < n; ++x)
      if (M(e, x) == x && M(x, e) == x) local.push_back(x);
    MaximalSubgroup g{e, {}};
    for (Index x : local) {
      for (Index y : local)
        if (M(x, y) == e && M(y, x) == e) {
          g.members.push_back(x);
          break;
        }
    }
    out.push_back(std::move(g));
  }
  return out;
}

struct SemigroupWitness {
  bool holds = false;
  std::vector<Index> witness;
};

namespace detail {
inline bool is_proper_nontrivial(const FiniteStructure& s, const std::vector<Index>& members) {
  return members.size() >= 2 && members.size() < s.order();
}
}  // namespace detail

/// Smarandache semigroup test: some proper subset with at least two elements is a group
/// under multiplication. A caller-supplied candidate is verified first; otherwise the
/// search runs over maximal subgroups and, when the whole carrier is a group, over
/// cyclic subgroups.
inline SemigroupWitness is_s_semigroup(const FiniteStructure& s, const std::vector<Index>& candidate = {}) {
  if (!candidate.empty() && detail::is_proper_nontrivial(s, candidate) && is_group_subset(s, candidate))
    return {true, candidate};
  auto groups = maximal_subgroups(s);
  for (const auto& g : groups)
    if (detail::is_proper_nontrivial(s, g.members)) return {true, g.members};
  for (const auto& g : groups) {
    if (g.members.size() != s.order()) continue;
    const CayleyTable& M = s.table(Op::Mul);
    std::vector<char> seen(s.order(), 0);
    for (Index x : g.members) {
      auto seq = detail::power_walk(M, x, seen);
      std::vector<Index> cyc(seq.begin(), seq.end() - (seq.empty() ? 0 : 1));
      std::sort(cyc.begin(), cyc.end());
      if (detail::is_proper_nontrivial(s, cyc) && is_group_subset(s, cyc)) return {true, cyc};
    }
  }
  return {};
}

/// Field test on a subset under the induced addition and multiplication.
inline bool is_field_subset(const FiniteStructure& s, const std::vector<Index>& members) {
  if (members.size() < 2) return false;
  auto sub = restrict_to(s, members, "subset");
  sub.set_workers(1);
  auto ax = check_axioms(sub, AxiomScope::Ring);
  if (!ax.add->is_group() || !ax.add->commutative) return false;
  if (!ax.mul->is_monoid() || !ax.mul->commutative || !ax.distributive.value_or(false)) return false;
  const Index zero = *ax.add->identity;
  const Index one = *ax.mul->identity;
  if (zero == one) return false;
  const CayleyTable& M = sub.table(Op::Mul);
  for (Index x = 0; x < sub.order(); ++x) {
    if (x == zero) continue;
    bool ok = false;
    for (Index y = 0; y < sub.order() && !ok; ++y) ok = M(x, y) == one;
    if (!ok) return false;
  }
  return true;
}

/// Closure of `gens` under the listed operations. nullopt when it grows past `limit` elements.
inline std::optional<std::vector<Index>> closure(const FiniteStructure& s, const std::vector<Index>& gens,
                                                 std::initializer_list<Op> ops, std::size_t limit) {
  std::vector<char> in(s.order(), 0);
  std::vector<Index> members;
  auto push = [&](Index v) {
    if (v == kOutside || in[v]) return true;
    in[v] = 1;
    members.push_back(v);
    return members.size() <= limit;
  };
  for (Index g : gens)
    if (!push(g)) return std::nullopt;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Index x = members[i], y = members[j];
      for (Op op : ops) {
        const CayleyTable& t = s.table(op);
        if (!push(t(x, y)) || !push(t(y, x))) return std::nullopt;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

struct RingWitness {
  bool holds = false;
  std::vector<Index> witness;
  std::optional<Index> identity;
  std::string strategy;
};

/// Smarandache ring test: a proper subset that is a field. Candidates are tried in this order:
/// the additive cycle of each nonzero idempotent (degenerate idempotents first), the subring
/// generated by an idempotent e and e*g for each g, and for carriers of at most 256 elements the
/// additive subgroups generated by one or two elements.
inline RingWitness is_s_ring(const FiniteStructure& s, const std::vector<Index>& candidate = {}) {
  const std::size_t n = s.order();
  auto finish = [&](std::vector<Index> w, std::string strategy) {
    RingWitness r{true, std::move(w), std::nullopt, std::move(strategy)};
    auto sub = restrict_to(s, r.witness, "witness");
    if (auto e = sub.identity(Op::Mul)) r.identity = r.witness[*e];
    return r;
  };
  if (!candidate.empty() && candidate.size() < n && is_field_subset(s, candidate)) {
    auto sorted = candidate;
    std::sort(sorted.begin(), sorted.end());
    return finish(sorted, "candidate");
  }
  auto zero = s.zero();
  if (!zero) return {};
  const CayleyTable& M = s.table(Op::Mul);
  std::vector<Index> idem;
  for (Index x = 0; x < n; ++x)
    if (x != *zero && M(x, x) == x && s.source().is_degenerate(x)) idem.push_back(x);
  for (Index x = 0; x < n; ++x)
    if (x != *zero && M(x, x) == x && !s.source().is_degenerate(x)) idem.push_back(x);

  std::set<std::vector<Index>> tried;
  auto test = [&](const std::optional<std::vector<Index>>& c) {
    if (!c || c->size() >= n || !tried.insert(*c).second) return false;
    return is_field_subset(s, *c);
  };
  for (Index e : idem) {
    auto c = closure(s, {e}, {Op::Add}, n - 1);
    if (test(c)) return finish(*c, "idempotent-cycle");
  }
  for (Index e : idem) {
    for (Index g = 0; g < n; ++g) {
      Index h = M(e, g);
      if (h == kOutside || h == *zero || h == e) continue;
      auto c = closure(s, {e, h}, {Op::Add, Op::Mul}, n - 1);
      if (test(c)) return finish(*c, "idempotent-subring");
    }
  }
  if (n <= 256) {
    for (Index g1 = 0; g1 < n; ++g1)
      for (Index g2 = g1; g2 < n; ++g2) {
        auto c = closure(s, {g1, g2}, {Op::Add}, n - 1);
        if (test(c)) return finish(*c, "additive-subgroup");
      }
  }
  return {};
}

struct StrictnessVerdict {
  bool strict = false;
  bool analytic = false;  // decided by the sign argument rather than enumeration
  std::optional<IndexPair> witness;
  std::string reason;
};

/// a + b = 0 forces a = b = 0, where 0 is the identity of the addition.
inline StrictnessVerdict is_strict_semiring(const FiniteStructure& s) {
  StrictnessVerdict v;
  auto z = s.identity(Op::Add);
  if (!z) {
    v.reason = "addition has no identity";
    return v;
  }
  const CayleyTable& A = s.table(Op::Add);
  for (Index a = 0; a < s.order(); ++a) {
    if (a == *z) continue;
    for (Index b = 0; b < s.order(); ++b) {
      if (b == *z) continue;
      if (A(a, b) == *z) {
        v.witness = IndexPair{a, b};
        v.reason = "nonzero summands with zero sum";
        return v;
      }
    }
  }
  v.strict = true;
  v.reason = "exhaustive";
  return v;
}

/// Strictness of the intervals over the nonnegative part of an ordered domain
/// (Z+ u {0}, Q+ u {0}, [0,1]): a sum of nonnegative endpoints is zero only when both are.
inline StrictnessVerdict strict_semiring_by_sign(const Domain& d) {
  StrictnessVerdict v;
  v.analytic = true;
  if (!d.is_ordered()) {
    v.reason = d.name() + " has no order, so no nonnegative part";
    return v;
  }
  v.strict = true;
  v.reason = "endpoints are nonnegative: a + b = 0 forces a = b = 0 componentwise";
  return v;
}

// ---------------------------------------------------------------------------
// Fuzzy semigroups on a rational grid
// ---------------------------------------------------------------------------

enum class FuzzyOp { Min, Max, Prod };

constexpr std::string_view to_string(FuzzyOp op) {
  switch (op) {
    case FuzzyOp::Min: return "min";
    case FuzzyOp::Max: return "max";
    case FuzzyOp::Prod: return "prod";
  }
  return "?";
}

struct FuzzyReport {
  FuzzyOp op = FuzzyOp::Min;
  std::size_t grid_points = 0;  // number of intervals on the grid
  bool closed_on_grid = true;
  bool associative = true;
  std::optional<std::array<NaturalInterval, 3>> associativity_counterexample;
  bool commutative = true;
  std::optional<std::pair<NaturalInterval, NaturalInterval>> commutativity_counterexample;
  std::optional<NaturalInterval> identity;
  std::optional<NaturalInterval> absorbing;
};

inline NaturalInterval apply_fuzzy(FuzzyOp op, const NaturalInterval& x, const NaturalInterval& y) {
  switch (op) {
    case FuzzyOp::Min: return iv_min(x, y);
    case FuzzyOp::Max: return iv_max(x, y);
    case FuzzyOp::Prod: return iv_mul(x, y);
  }
  return x;
}

/// All intervals [i/d, j/d], 0 <= i, j <= d, over F01.
inline std::vector<NaturalInterval> fuzzy_grid(unsigned denominator, Flavor flavor = Flavor::Closed) {
  const Domain f = Domain::fuzzy_unit();
  std::vector<NaturalInterval> out;
  for (unsigned i = 0; i <= denominator; ++i)
    for (unsigned j = 0; j <= denominator; ++j)
      out.emplace_back(Scalar::of(f, BigRat(i, denominator)), Scalar::of(f, BigRat(j, denominator)), flavor);
  return out;
}

/// Checks associativity and commutativity exhaustively on the grid with step 1/denominator and
/// locates identity and absorbing elements. Products that leave the grid are evaluated exactly.
inline FuzzyReport fuzzy_semigroup_report(FuzzyOp op, unsigned denominator = 10, Flavor flavor = Flavor::Closed) {
  FuzzyReport rep;
  rep.op = op;
  std::vector<NaturalInterval> pool = fuzzy_grid(denominator, flavor);
  const std::size_t g = pool.size();
  rep.grid_points = g;
  std::unordered_map<NaturalInterval, Index> ids;
  for (Index i = 0; i < g; ++i) ids.emplace(pool[i], i);
  auto intern = [&](NaturalInterval v) {
    auto [it, inserted] = ids.emplace(v, static_cast<Index>(pool.size()));
    if (inserted) pool.push_back(std::move(v));
    return it->second;
  };
  std::unordered_map<std::uint64_t, Index> memo;
  auto apply = [&](Index a, Index b) {
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Index r = intern(apply_fuzzy(op, pool[a], pool[b]));
    memo.emplace(key, r);
    return r;
  };

  for (Index a = 0; a < g; ++a)
    for (Index b = 0; b < g; ++b) {
      Index ab = apply(a, b);
      if (ab >= g) rep.closed_on_grid = false;
      if (rep.commutative && ab != apply(b, a)) {
        rep.commutative = false;
        rep.commutativity_counterexample.emplace(pool[a], pool[b]);
      }
    }
  for (Index a = 0; a < g && rep.associative; ++a)
    for (Index b = 0; b < g && rep.associative; ++b) {
      const Index ab = apply(a, b);
      for (Index c = 0; c < g; ++c)
        if (apply(ab, c) != apply(a, apply(b, c))) {
          rep.associative = false;
          rep.associativity_counterexample = std::array<NaturalInterval, 3>{pool[a], pool[b], pool[c]};
          break;
        }
    }
  for (Index e = 0; e < g && !rep.identity; ++e) {
    bool ok = true;
    for (Index x = 0; x < g && ok; ++x) ok = apply(e, x) == x && apply(x, e) == x;
    if (ok) rep.identity = pool[e];
  }
  for (Index z = 0; z < g && !rep.absorbing; ++z) {
    bool ok = true;
    for (Index x = 0; x < g && ok; ++x) ok = apply(z, x) == z && apply(x, z) == z;
    if (ok) rep.absorbing = pool[z];
  }
  return rep;
}

}  // namespace natint
