#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "natint/analyzer.hpp"
#include "natint/ideals.hpp"
#include "natint/matrix.hpp"
#include "natint/poly.hpp"
#include "natint/spec.hpp"

namespace natint {

/// Erratum: the stated value disagrees with the computed one and the computed one is kept.
enum class Status { Pass, Fail, Erratum, Skipped };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Erratum: return "erratum";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

struct VerificationResult {
  std::string claim_id;
  Status status = Status::Pass;
  std::string expected;
  std::string computed;
  std::string citation;  // topic tag
};

struct BookOptions {
  std::uint64_t seed = 0;
  std::size_t workers = detail::default_workers();
  std::size_t property_samples = 100'000;
  std::size_t mod_map_samples = 10'000;
};

// ---------------------------------------------------------------------------
// Random values and the decomposition law
// ---------------------------------------------------------------------------

namespace detail {

inline Scalar random_scalar(const Domain& d, std::mt19937_64& rng) {
  auto small = [&](std::uint64_t span) { return static_cast<long long>(rng() % (2 * span + 1)) - static_cast<long long>(span); };
  switch (d.kind()) {
    case DomainKind::Int: return Scalar::of(d, BigRat(small(1'000'000)));
    case DomainKind::Rat: return Scalar::of(d, BigRat(small(1000), static_cast<long long>(1 + rng() % 1000)));
    case DomainKind::Mod: return Scalar::of(d, BigRat(rng() % d.modulus()));
    case DomainKind::FuzzyUnit: {
      const long long den = 1 + static_cast<long long>(rng() % 100);
      return Scalar::of(d, BigRat(static_cast<long long>(rng() % (den + 1)), den));
    }
    case DomainKind::NeutroPure:
    case DomainKind::NeutroMixed: {
      const Domain base = d.base();
      BigRat a = d.kind() == DomainKind::NeutroPure ? BigRat(0) : random_scalar(base, rng).real();
      BigRat b = random_scalar(base, rng).real();
      return Scalar::neutro(d, a, b);
    }
  }
  return Scalar::zero(d);
}

inline NaturalInterval random_interval(const Domain& d, std::mt19937_64& rng, Flavor f = Flavor::Closed) {
  Scalar a = random_scalar(d, rng);
  Scalar b = random_scalar(d, rng);
  return NaturalInterval(std::move(a), std::move(b), f);
}

}  // namespace detail

struct DecompositionReport {
  std::string op;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

/// f([a,b],[c,d]) = [f(a,c), f(b,d)] on seeded random pairs, for add, sub, mul, div, min and
/// max wherever the domain supports the operation. Division skips divisors with a
/// non-invertible component.
inline std::vector<DecompositionReport> check_decomposition(const Domain& d, std::size_t samples, std::uint64_t seed) {
  using IvOp = NaturalInterval (*)(const NaturalInterval&, const NaturalInterval&);
  using ScOp = Scalar (*)(const Scalar&, const Scalar&);
  struct Case {
    const char* name;
    IvOp iv;
    ScOp sc;
  };
  std::vector<Case> cases;
  if (d.is_ring()) {
    cases.push_back({"add", iv_add, add});
    cases.push_back({"sub", iv_sub, sub});
  }
  cases.push_back({"mul", iv_mul, mul});
  cases.push_back({"div", iv_div, div});
  if (d.is_ordered()) {
    cases.push_back({"min", iv_min, natint::min});
    cases.push_back({"max", iv_max, natint::max});
  }
  std::vector<DecompositionReport> out;
  std::mt19937_64 rng(seed);
  for (const auto& c : cases) {
    DecompositionReport r{c.name, 0, 0};
    for (std::size_t k = 0; k < samples; ++k) {
      auto x = detail::random_interval(d, rng);
      auto y = detail::random_interval(d, rng);
      if (c.iv == static_cast<IvOp>(iv_div)) {
        if (!is_unit(y.lo()) || !is_unit(y.hi())) continue;
      }
      ++r.cases;
      try {
        auto z = c.iv(x, y);
        if (!(z.lo() == c.sc(x.lo(), y.lo()) && z.hi() == c.sc(x.hi(), y.hi()))) ++r.failures;
      } catch (const Error&) {
        ++r.failures;
      }
    }
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The claim book
// ---------------------------------------------------------------------------

namespace detail {

class Book {
 public:
  explicit Book(const BookOptions& opt) : opt_(opt) {}

  std::vector<VerificationResult> take() { return std::move(results_); }
  const BookOptions& options() const { return opt_; }

  /// Runs a claim body; an escaping exception records a failure.
  void run(const std::string& id, const std::string& topic, const std::function<void(VerificationResult&)>& body) {
    VerificationResult r{id, Status::Pass, "", "", topic};
    try {
      body(r);
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.computed = std::string("error: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  /// Exact comparison of rendered values.
  void expect(const std::string& id, const std::string& topic, const std::string& expected,
              const std::function<std::string()>& compute) {
    run(id, topic, [&](VerificationResult& r) {
      r.expected = expected;
      r.computed = compute();
      r.status = r.computed == r.expected ? Status::Pass : Status::Fail;
    });
  }

  /// A stated value that computation may refute: disagreement is an erratum, not a failure.
  void stated(const std::string& id, const std::string& topic, const std::string& claim,
              const std::function<std::string()>& compute) {
    run(id, topic, [&](VerificationResult& r) {
      r.expected = claim;
      r.computed = compute();
      r.status = r.computed == r.expected ? Status::Pass : Status::Erratum;
    });
  }

  void skip(const std::string& id, const std::string& topic, const std::string& expected, const std::string& why) {
    results_.push_back({id, Status::Skipped, expected, why, topic});
  }

  const FiniteStructure& carrier(const std::string& spec) {
    auto it = cache_.find(spec);
    if (it == cache_.end()) {
      auto s = build_carrier(spec);
      s.set_workers(opt_.workers);
      it = cache_.emplace(spec, std::move(s)).first;
    }
    return it->second;
  }

 private:
  BookOptions opt_;
  std::vector<VerificationResult> results_;
  std::map<std::string, FiniteStructure> cache_;
};

inline std::string join_labels(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "}";
}

inline std::string sorted_labels(const FiniteStructure& s, const std::vector<Index>& idx) {
  auto l = labels_of(s, idx);
  std::sort(l.begin(), l.end());
  return join_labels(l);
}

inline std::string yes(bool b) { return b ? "true" : "false"; }

inline std::vector<Index> indices(const FiniteStructure& s, std::initializer_list<std::string_view> labels) {
  std::vector<Index> out;
  for (auto l : labels) out.push_back(s.find_or_throw(l));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string iv(const Domain& d, std::string_view a, std::string_view b, char op) {
  auto x = parse_interval(d, a), y = parse_interval(d, b);
  switch (op) {
    case '+': return to_string(iv_add(x, y));
    case '-': return to_string(iv_sub(x, y));
    case '*': return to_string(iv_mul(x, y));
    case '/': return to_string(iv_div(x, y));
    case 'm': return to_string(iv_min(x, y));
    case 'M': return to_string(iv_max(x, y));
  }
  return "?";
}

// Canonical rendering of an interval written in the domain syntax.
inline std::string canon(const Domain& d, std::string_view t) { return to_string(parse_interval(d, t)); }

inline std::string trend_of(const NaturalInterval& x) { return std::string(to_string(classify(x))); }

inline QuotientStructure col_zero_rees(const FiniteStructure& s) { return rees_quotient(s, resolve_ideal_spec(s, "col-zero")); }

// Ideals of the form N(I) = {[a,b] : a, b in I}.
inline bool is_square_ideal(const FiniteStructure& s, const Ideal& i) {
  std::set<Scalar, bool (*)(const Scalar&, const Scalar&)> comps(
      [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
  for (Index x : i.elements) {
    comps.insert(s.interval_at(x)->lo());
    comps.insert(s.interval_at(x)->hi());
  }
  return i.size() == comps.size() * comps.size();
}

inline void scalar_and_interval_claims(Book& b) {
  const Domain z = Domain::integers(), q = Domain::rationals(), f = Domain::fuzzy_unit();
  const Domain z12 = Domain::modular(12), z11 = Domain::modular(11);
  const Domain zi = Domain::neutro_mixed(Domain::integers());

  b.expect("neutro-scalar-sum", "neutrosophic", "2+10I", [&] {
    return to_string(add(parse_scalar(zi, "5+2I"), parse_scalar(zi, "-3+8I")));
  });
  b.expect("neutro-scalar-product", "neutrosophic", "-15+50I", [&] {
    return to_string(mul(parse_scalar(zi, "5+2I"), parse_scalar(zi, "-3+8I")));
  });
  b.expect("neutro-interval-product", "neutrosophic", "[-15+50I,2I]",
           [&] { return iv(zi, "[5+2I,-7+5I]", "[-3+8I,-I]", '*'); });
  b.expect("neutro-interval-sum", "neutrosophic", "[2+10I,-7+4I]",
           [&] { return iv(zi, "[5+2I,-7+5I]", "[-3+8I,-I]", '+'); });
  b.expect("pure-neutro-idempotent", "neutrosophic", "[0,4I]", [&] {
    const Domain d = Domain::neutro_pure(Domain::modular(12));
    return to_string(iv_pow(parse_interval(d, "[0,4I]"), 2));
  });
  b.expect("mod-inverse-11", "scalars", "11", [&] { return to_string(*inv(Scalar::of(z12, 11))); });

  b.expect("neutro-inverse-z5", "neutrosophic", "3", [&] {
    const Domain d = Domain::neutro_mixed(Domain::modular(5));
    return to_string(*inv(parse_scalar(d, "2")));
  });

  b.expect("sum-to-zero", "interval-arithmetic", "0", [&] { return iv(z, "[-3,7]", "[3,-7]", '+'); });
  b.expect("sum-degenerate", "interval-arithmetic", "4", [&] { return iv(z, "[1,3]", "[3,1]", '+'); });
  b.expect("sum-mod-12", "interval-arithmetic", "[9,7]", [&] { return iv(z12, "[3,4]", "[6,3]", '+'); });
  b.expect("difference-increasing", "interval-arithmetic", "[-11,-3]", [&] { return iv(z, "[-3,7]", "[8,10]", '-'); });
  b.expect("difference-decreasing", "interval-arithmetic", "[11,3]", [&] { return iv(z, "[8,10]", "[-3,7]", '-'); });
  b.expect("difference-unit", "interval-arithmetic", "1", [&] { return iv(z, "[3,4]", "[2,3]", '-'); });
  b.expect("product-signs", "interval-arithmetic", "[30,-16]", [&] { return iv(z, "[-3,8]", "[-10,-2]", '*'); });
  b.expect("product-mod-12-zero", "interval-arithmetic", "0", [&] { return iv(z12, "[3,4]", "[4,3]", '*'); });
  b.expect("fuzzy-product", "fuzzy", canon(f, "[0.06,0.18]"), [&] { return iv(f, "[0.1,0.9]", "[0.6,0.2]", '*'); });
  b.expect("quotient-rational", "interval-arithmetic", "[-7/3,13/2]", [&] { return iv(q, "[7,13]", "[-3,2]", '/'); });
  b.expect("quotient-self", "interval-arithmetic", "1", [&] { return iv(q, "[3,5]", "[3,5]", '/'); });
  b.expect("quotient-zero-component", "interval-arithmetic", "DivisorComponentZero", [&] {
    try {
      iv(q, "[2,4]", "[0,5]", '/');
      return std::string("defined");
    } catch (const Error& e) {
      return std::string(to_string(e.kind()));
    }
  });
  b.expect("scalar-multiple-negative", "interval-arithmetic", "[15,10]",
           [&] { return to_string(iv_scalar_mul(Scalar::of(z, -5), parse_interval(z, "[-3,-2]"))); });
  b.expect("scalar-multiple-mod-12", "interval-arithmetic", "[9,3]",
           [&] { return to_string(iv_scalar_mul(Scalar::of(z12, 3), parse_interval(z12, "[7,5]"))); });
  b.expect("reciprocal-positive", "reciprocal", "[1/2,1/4] decreasing", [&] {
    auto r = iv_recip(parse_interval(q, "[2,4]"));
    return to_string(r) + " " + trend_of(r);
  });
  b.stated("reciprocal-always-decreasing", "reciprocal", "decreasing",
           [&] { return trend_of(iv_recip(parse_interval(q, "[-1,2]"))); });
  b.expect("power-return-0-5", "powers", "[0,5]", [&] { return to_string(iv_pow(parse_interval(z11, "[0,5]"), 6)); });
  b.expect("power-return-0-3", "powers", "[0,3]", [&] { return to_string(iv_pow(parse_interval(z11, "[0,3]"), 6)); });
  b.expect("nilpotent-0-6", "powers", "0", [&] { return to_string(iv_pow(parse_interval(z12, "[0,6]"), 2)); });
  b.expect("classify-increasing", "classification", "increasing", [&] { return trend_of(parse_interval(z, "[3,8]")); });
  b.expect("classify-modular", "classification", "unordered", [&] { return trend_of(parse_interval(z12, "[3,4]")); });
  b.expect("fuzzy-min", "fuzzy", canon(f, "(0.3,0.4)"), [&] { return iv(f, "(0.3,0.7)", "(1,0.4)", 'm'); });
  b.expect("fuzzy-max", "fuzzy", canon(f, "(0.7,0.8)"), [&] { return iv(f, "(0.7,0.3)", "(0.5,0.8)", 'M'); });
}

inline void analyzer_claims(Book& b) {
  b.expect("cardinality-n-squared", "cardinality", "all n^2", [&] {
    std::string bad;
    for (std::uint64_t n = 2; n <= 12; ++n)
      for (const char* fl : {"c", "o", "oc", "co"}) {
        auto s = build_carrier("N(Zn:" + std::to_string(n) + "," + fl + ")");
        if (s.order() != n * n) bad += " n=" + std::to_string(n) + "/" + fl;
      }
    return bad.empty() ? std::string("all n^2") : "mismatch:" + bad;
  });
  b.expect("cardinality-z5", "cardinality", "25", [&] { return std::to_string(b.carrier("N(Zn:5)").order()); });
  b.expect("elements-z2", "cardinality", "{0,1,[0,1],[1,0]}", [&] {
    const auto& s = b.carrier("N(Zn:2)");
    std::vector<Index> all(s.order());
    std::iota(all.begin(), all.end(), Index{0});
    return sorted_labels(s, all);
  });
  for (std::uint64_t p : {3, 5, 7, 11}) {
    const std::string spec = "N(Zn:" + std::to_string(p) + "\\0,o)";
    b.expect("nonzero-group-p" + std::to_string(p), "unit-groups", "group of order " + std::to_string((p - 1) * (p - 1)),
             [&] {
               const auto& s = b.carrier(spec);
               auto r = check_op(s, Op::Mul);
               return std::string(r.is_group() ? "group" : "not a group") + " of order " + std::to_string(s.order());
             });
  }
  b.expect("nonzero-z3-table", "unit-groups", "group {1,2,[1,2],[2,1]}", [&] {
    const auto& s = b.carrier("N(Zn:3)\\0");
    std::vector<Index> all(s.order());
    std::iota(all.begin(), all.end(), Index{0});
    return std::string(check_op(s, Op::Mul).is_group() ? "group " : "not a group ") + sorted_labels(s, all);
  });
  b.expect("additive-group-z5", "additive-groups", "abelian group with identity 0", [&] {
    const auto& s = b.carrier("N(Zn:5)");
    auto r = check_op(s, Op::Add);
    return std::string(r.is_group() && r.commutative ? "abelian group" : "not an abelian group") +
           " with identity " + (r.identity ? s.label(*r.identity) : "none");
  });
  b.expect("mul-monoid-z12", "semigroups", "commutative monoid, identity 1, not a group", [&] {
    const auto& s = b.carrier("N(Zn:12)");
    auto r = check_op(s, Op::Mul);
    return std::string(r.commutative && r.is_monoid() ? "commutative monoid" : "not a commutative monoid") +
           ", identity " + (r.identity ? s.label(*r.identity) : "none") + (r.is_group() ? ", group" : ", not a group");
  });
  b.expect("special-elements-z12", "special-elements",
           "[0,4] idempotent; [0,6] nilpotent index 2; [3,4][4,3]=0; [1,11] inverse [1,11]", [&] {
             const auto& s = b.carrier("N(Zn:12)");
             auto rep = find_special_elements(s);
             const Index e = s.find_or_throw("[0,4]"), nz = s.find_or_throw("[0,6]"), u = s.find_or_throw("[1,11]");
             auto nil = rep.nilpotent(nz);
             auto invu = rep.inverse_of(u);
             return std::string(rep.is_idempotent(e) ? "[0,4] idempotent" : "[0,4] not idempotent") + "; [0,6] " +
                    (nil ? "nilpotent index " + std::to_string(nil->index) : "not nilpotent") + "; [3,4][4,3]=" +
                    s.label(s.mul(s.find_or_throw("[3,4]"), s.find_or_throw("[4,3]"))) + "; [1,11] inverse " +
                    (invu ? s.label(*invu) : "none");
           });
  b.expect("inherited-z15", "substructures", "15 elements, closed under + and x", [&] {
    auto inh = inherited_substructure(b.carrier("N(Zn:15)"));
    auto ax = check_axioms(inh, AxiomScope::Ring);
    return std::to_string(inh.order()) + " elements, " +
           (ax.add->closed && ax.mul->closed ? "closed under + and x" : "not closed");
  });
  b.expect("unit-subgroup-z12", "substructures", "group, inside the order-16 subgroup at 1", [&] {
    const auto& s = b.carrier("N(Zn:12)");
    auto h = indices(s, {"[1,11]", "[11,1]", "1", "11"});
    std::string r = is_group_subset(s, h) ? "group" : "not a group";
    for (const auto& g : maximal_subgroups(s)) {
      if (s.label(g.idempotent) != "1") continue;
      const bool inside = std::includes(g.members.begin(), g.members.end(), h.begin(), h.end());
      r += std::string(inside ? ", inside" : ", outside") + " the order-" + std::to_string(g.members.size()) +
           " subgroup at 1";
    }
    return r;
  });
  b.expect("klein-table", "tables",
           "(1,1)|(1,-1)|(-1,1)|(-1,-1);(1,-1)|(1,1)|(-1,-1)|(-1,1);(-1,1)|(-1,-1)|(1,1)|(1,-1);(-1,-1)|(-1,1)|(1,-1)|(1,1)",
           [&] {
             const auto& s = b.carrier("Sub{(1,1),(1,-1),(-1,1),(-1,-1)} of N(Z)");
             auto pair = [&](Index i) {
               const auto* x = s.interval_at(i);
               return "(" + to_string(x->lo()) + "," + to_string(x->hi()) + ")";
             };
             std::string out;
             for (Index a = 0; a < 4; ++a) {
               if (a) out += ';';
               for (Index c = 0; c < 4; ++c) out += (c ? "|" : "") + pair(s.mul(a, c));
             }
             return out;
           });
  for (std::uint64_t n : {4, 6, 12, 40}) {
    const std::string m = std::to_string(n - 1);
    b.expect("s-semigroup-n" + std::to_string(n), "smarandache", "true {1," + m + ",[1," + m + "],[" + m + ",1]}",
             [&, n] {
               const auto& s = b.carrier("N(Zn:" + std::to_string(n) + ")");
               const std::string k = std::to_string(n - 1);
               auto h = indices(s, {"[1," + k + "]", "[" + k + ",1]", "1", k});
               auto w = is_s_semigroup(s, h);
               return yes(w.holds) + " " + sorted_labels(s, w.witness);
             });
  }
  b.expect("units-z3-group", "smarandache", "group", [&] {
    const auto& s = b.carrier("N(Zn:3)");
    return std::string(is_group_subset(s, indices(s, {"1", "[1,2]", "[2,1]", "2"})) ? "group" : "not a group");
  });
  b.expect("s-ring-z12", "smarandache", "true {0,4,8} identity 4", [&] {
    const auto& s = b.carrier("N(Zn:12)");
    auto w = is_s_ring(s);
    return yes(w.holds) + " " + sorted_labels(s, w.witness) + " identity " + (w.identity ? s.label(*w.identity) : "none");
  });
  b.expect("s-ring-z6", "smarandache", "true {0,3}", [&] {
    const auto& s = b.carrier("N(Zn:6)");
    auto w = is_s_ring(s);
    return yes(w.holds) + " " + sorted_labels(s, w.witness);
  });
  b.expect("s-ring-corner-2x2-z6", "smarandache", "true corner scalar 3", [&] {
    auto w = corner_field_witness(2, Domain::modular(6));
    return yes(w.holds) + " corner scalar " + to_string(w.idempotent);
  });
  b.expect("strict-nonnegative", "semirings", "strict (analytic)", [&] {
    auto v = strict_semiring_by_sign(Domain::integers());
    return std::string(v.strict ? "strict" : "not strict") + (v.analytic ? " (analytic)" : "");
  });
  b.stated("fuzzy-min-identity", "fuzzy", "identity 0", [&] {
    auto r = fuzzy_semigroup_report(FuzzyOp::Min);
    return "identity " + (r.identity ? to_string(*r.identity) : "none") + ", absorbing " +
           (r.absorbing ? to_string(*r.absorbing) : "none");
  });
  for (FuzzyOp op : {FuzzyOp::Min, FuzzyOp::Max, FuzzyOp::Prod}) {
    b.expect("fuzzy-grid-" + std::string(to_string(op)), "fuzzy", "associative, commutative on 121 grid intervals", [op] {
      auto r = fuzzy_semigroup_report(op);
      return std::string(r.associative ? "associative" : "not associative") +
             (r.commutative ? ", commutative" : ", not commutative") + " on " + std::to_string(r.grid_points) +
             " grid intervals";
    });
  }
  b.expect("z11-oc-elements", "special-elements", "zero divisors, units, only trivial idempotents", [&] {
    const auto& s = b.carrier("N(Zn:11,oc)");
    auto rep = find_special_elements(s);
    bool trivial = true;
    for (Index i : rep.idempotents) trivial = trivial && is_trivial_idempotent(s, i);
    return std::string(rep.zero_divisors.empty() ? "no zero divisors" : "zero divisors") +
           (rep.units.empty() ? ", no units" : ", units") + (trivial ? ", only trivial idempotents" : ", nontrivial idempotents");
  });
  b.stated("z11-oc-no-idempotents", "special-elements", "no idempotents", [&] {
    const auto& s = b.carrier("N(Zn:11,oc)");
    auto rep = find_special_elements(s);
    std::vector<Index> proper;
    for (Index i : rep.idempotents)
      if (i != rep.zero && i != rep.one) proper.push_back(i);
    return proper.empty() ? std::string("no idempotents") : "idempotents " + sorted_labels(s, rep.idempotents);
  });
}

template <class T>
void append_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

inline void ideal_claims(Book& b) {
  b.expect("principal-ideal-z5", "ideals", "5 elements, all [0,a]", [&] {
    const auto& s = b.carrier("N(Zn:5)");
    auto i = generate_ideal(s, {s.find_or_throw("[0,1]")});
    bool col = true;
    for (Index x : i.elements) col = col && s.interval_at(x)->lo().is_zero();
    return std::to_string(i.size()) + " elements, " + (col ? "all [0,a]" : "not all [0,a]");
  });
  b.expect("ideal-multiples-of-3-z12", "ideals", "true", [&] {
    const auto& s = b.carrier("N(Zn:12)");
    std::vector<Index> t;
    for (Index x = 0; x < s.order(); ++x)
      if (s.interval_at(x)->lo().residue() % 3 == 0 && s.interval_at(x)->hi().residue() % 3 == 0) t.push_back(x);
    return yes(is_ideal(s, t).holds);
  });
  b.expect("inherited-not-ideal-z12", "ideals", "false", [&] {
    const auto& s = b.carrier("N(Zn:12)");
    auto inh = inherited_substructure(s);
    return yes(is_ideal(s, static_cast<const SubsetSource&>(inh.source()).members()).holds);
  });
  for (std::uint64_t p : {3, 5, 7}) {
    b.expect("two-ideals-p" + std::to_string(p), "ideals", "2 ideals, both maximal and minimal", [&, p] {
      const auto& s = b.carrier("N(Zn:" + std::to_string(p) + ")");
      auto lat = maximal_minimal_ideals(s);
      bool all_ideal = true;
      for (const auto& i : lat.ideals) all_ideal = all_ideal && is_ideal(s, i.elements).holds;
      return std::to_string(lat.ideals.size()) + " ideals, " +
             (lat.maximal.size() == lat.ideals.size() && lat.minimal.size() == lat.ideals.size() && all_ideal
                  ? "both maximal and minimal"
                  : "not all maximal and minimal");
    });
  }
  {
    auto square = [&](const std::string& gen) {
      const auto& s = b.carrier("N(Zn:30)");
      return generate_ideal(s, {s.find_or_throw(gen)});
    };
    auto lattice = [&]() -> const IdealLattice& {
      static thread_local std::optional<IdealLattice> lat;
      lat = maximal_minimal_ideals(b.carrier("N(Zn:30)"));
      return *lat;
    };
    auto among = [](const std::vector<Ideal>& v, const Ideal& i) {
      return std::any_of(v.begin(), v.end(), [&](const Ideal& j) { return j.elements == i.elements; });
    };
    b.run("z30-square-ideals", "ideals", [&](VerificationResult& r) {
      r.expected = "N({0,10,20}) and N({0,15}) minimal, N(evens) maximal among ideals N(I)";
      const auto& s = b.carrier("N(Zn:30)");
      const auto& lat = lattice();
      std::vector<Ideal> sq;
      for (const auto& i : lat.ideals)
        if (is_square_ideal(s, i)) sq.push_back(i);
      auto min_among = [&](const Ideal& i) {
        return std::none_of(sq.begin(), sq.end(), [&](const Ideal& j) {
          return j.size() < i.size() && std::includes(i.elements.begin(), i.elements.end(), j.elements.begin(), j.elements.end());
        });
      };
      auto max_among = [&](const Ideal& i) {
        return std::none_of(sq.begin(), sq.end(), [&](const Ideal& j) {
          return j.size() > i.size() && std::includes(j.elements.begin(), j.elements.end(), i.elements.begin(), i.elements.end());
        });
      };
      const bool ok = min_among(square("10")) && min_among(square("15")) && max_among(square("2"));
      r.computed = ok ? r.expected : "not reproduced among ideals N(I)";
      r.status = ok ? Status::Pass : Status::Fail;
    });
    b.stated("z30-minimal-ideals", "ideals", "N({0,10,20}) and N({0,15}) minimal", [&] {
      const auto& lat = lattice();
      const bool a = among(lat.minimal, square("10")), c = among(lat.minimal, square("15"));
      if (a && c) return std::string("N({0,10,20}) and N({0,15}) minimal");
      return std::string("not minimal: each contains a nonzero ideal such as {[0,a]} inside it");
    });
    b.stated("z30-maximal-ideal", "ideals", "N(evens) maximal", [&] {
      const auto& lat = lattice();
      if (among(lat.maximal, square("2"))) return std::string("N(evens) maximal");
      return std::string("not maximal: N(evens) lies inside {[a,b] : a even}");
    });
  }
  b.expect("ideal-lattice-sound-z6", "ideals", "every ideal passes the ideal test", [&] {
    const auto& s = b.carrier("N(Zn:6)");
    auto lat = maximal_minimal_ideals(s);
    for (const auto& i : lat.ideals)
      if (!is_ideal(s, i.elements).holds) return "not an ideal: " + sorted_labels(s, i.elements);
    return std::string("every ideal passes the ideal test");
  });
  b.expect("standard-quotient-z3", "quotients", "3", [&] {
    const auto& s = b.carrier("N(Zn:3,o)");
    return std::to_string(standard_quotient(s, resolve_ideal_spec(s, "col-zero")).order());
  });
  for (std::uint64_t n : {3, 4, 11}) {
    b.expect("mod-map-n" + std::to_string(n), "quotient-isomorphism", "0 failures", [&, n] {
      auto r = verify_mod_map(n, b.options().mod_map_samples, b.options().seed + n);
      return std::to_string(r.failures) + " failures";
    });
  }
  b.expect("rees-order-z3", "rees-quotients", "7 classes, characteristic 3", [&] {
    auto q = col_zero_rees(b.carrier("N(Zn:3)"));
    return std::to_string(q.order()) + " classes, characteristic " + std::to_string(characteristic(q.classes));
  });
  b.expect("rees-order-z5", "rees-quotients", "21", [&] { return std::to_string(col_zero_rees(b.carrier("N(Zn:5)")).order()); });
  b.expect("rees-order-z10", "rees-quotients", "91", [&] { return std::to_string(col_zero_rees(b.carrier("N(Zn:10)")).order()); });
  b.expect("rees-order-n2-n12", "rees-quotients", "n^2-n+1 for n=2..12", [&] {
    std::string bad;
    for (std::uint64_t n = 2; n <= 12; ++n) {
      auto q = col_zero_rees(build_carrier("N(Zn:" + std::to_string(n) + ")"));
      if (q.order() != n * n - n + 1) bad += " n=" + std::to_string(n);
    }
    return bad.empty() ? std::string("n^2-n+1 for n=2..12") : "mismatch:" + bad;
  });
  b.expect("rees-order-z53", "rees-quotients", "2757", [&] {
    return std::to_string(col_zero_rees(b.carrier("N(Zn:53)")).order());
  });
  for (std::uint64_t p : {3, 5, 7, 11}) {
    b.expect("rees-characteristic-p" + std::to_string(p), "rees-quotients", std::to_string(p), [&, p] {
      return std::to_string(characteristic(col_zero_rees(b.carrier("N(Zn:" + std::to_string(p) + ")")).classes));
    });
  }
  b.expect("rees-z6", "rees-quotients", "31 classes, characteristic 6", [&] {
    auto q = col_zero_rees(b.carrier("N(Zn:6)"));
    return std::to_string(q.order()) + " classes, characteristic " + std::to_string(characteristic(q.classes));
  });
  b.expect("rees-power-return-z5", "rees-quotients", "(2,0)^5 = (2,0); (4,0)^3 = (4,0); every class returns", [&] {
    const auto& s = b.carrier("N(Zn:5)");
    auto q = col_zero_rees(s);
    auto a = quotient_analysis(q);
    auto cls = [&](std::string_view e) { return q.class_of[s.find_or_throw(e)]; };
    auto pw = [&](Index x, int k) {
      Index r = x;
      for (int i = 1; i < k; ++i) r = q.classes.mul(r, x);
      return r;
    };
    const Index c2 = cls("[2,0]"), c4 = cls("[4,0]");
    bool all = std::all_of(a.elements.orders.begin(), a.elements.orders.end(),
                           [](const ElementOrders& o) { return o.return_exponent.has_value(); });
    return std::string(pw(c2, 5) == c2 ? "(2,0)^5 = (2,0)" : "(2,0)^5 differs") +
           (pw(c4, 3) == c4 ? "; (4,0)^3 = (4,0)" : "; (4,0)^3 differs") +
           (all ? "; every class returns" : "; some class never returns");
  });
  b.expect("rees-z12-nilpotent-idempotent", "rees-quotients", "(6,0) nilpotent, (4,0) idempotent", [&] {
    const auto& s = b.carrier("N(Zn:12)");
    auto q = col_zero_rees(s);
    const Index c6 = q.class_of[s.find_or_throw("[6,0]")], c4 = q.class_of[s.find_or_throw("[4,0]")];
    return std::string(q.classes.mul(c6, c6) == 0 ? "(6,0) nilpotent" : "(6,0) not nilpotent") +
           (q.classes.mul(c4, c4) == c4 ? ", (4,0) idempotent" : ", (4,0) not idempotent");
  });
  {
    auto pair_quotient = [&] {
      const auto& m = b.carrier("Prod(N(Zn:2),N(Zn:2))");
      auto v = generate_ideal(m, {m.find_or_throw("(0, 1)")});
      return rees_quotient(m, v);
    };
    b.expect("pair-quotient-order", "rees-quotients", "ideal of order 4; 13 classes, characteristic 2", [&] {
      auto q = pair_quotient();
      return "ideal of order " + std::to_string(q.ideal.size()) + "; " + std::to_string(q.order()) +
             " classes, characteristic " + std::to_string(characteristic(q.classes));
    });
    b.stated("pair-quotient-semifield", "rees-quotients", "no zero divisors", [&] {
      auto q = pair_quotient();
      auto a = quotient_analysis(q);
      if (a.semifield.no_zero_divisors) return std::string("no zero divisors");
      const auto& w = *a.semifield.zero_divisor_witness;
      return "zero divisors, e.g. (" + q.classes.label(w.first) + ")(" + q.classes.label(w.second) + ") = J";
    });
  }
}

inline void linalg_claims(Book& b) {
  const Domain z = Domain::integers();
  b.expect("row-matrix-sum", "matrices", "[5,3],[3,-3],[5,8],[-2,6]", [&] {
    return to_string(mat_add(parse_matrix(z, "[3,1],[0,-2],[7,3],5"), parse_matrix(z, "[2,2],[3,-1],[-2,5],[-7,1]")));
  });
  b.expect("row-matrix-hadamard", "matrices", "[0,21),[-14,2),[0,-7),[-16,8)", [&] {
    return to_string(mat_hadamard(parse_matrix(z, "[0,3),[7,2),[5,1),4", Flavor::ClosedOpen),
                                  parse_matrix(z, "7,[-2,1),[0,-7),[-4,2)", Flavor::ClosedOpen)));
  });
  b.expect("row-matrix-zero-product", "matrices", "0,0,0", [&] {
    return to_string(mat_hadamard(parse_matrix(z, "[0,3],[0,-1],[0,8]"), parse_matrix(z, "[4,0],[-6,0],[2,0]")));
  });
  const std::string a = "[9,10],[0,3],[-2,1];[1,2],0,[2,-1];1,[3,1],[-1,-4]";
  const std::string bm = "[0,3],0,[-2,-1];[1,-1],[3,1],[-3,-9];[8,0],[5,7],[1,-5]";
  b.expect("matrix-product-3x3", "matrices", "[-16,27],[-10,10],[-20,-42];[16,6],[10,-7],[0,3];[-5,2],[4,-27],[-12,10]",
           [&] { return to_string(mat_mul(parse_matrix(z, a), parse_matrix(z, bm))); });
  b.expect("matrix-identity", "matrices", "true", [&] {
    auto m = parse_matrix(z, a);
    return yes(mat_mul(m, IntervalMatrix::identity(3, z)) == m && mat_mul(IntervalMatrix::identity(3, z), m) == m);
  });
  for (const Domain& d : {Domain::modular(7), Domain::rationals()}) {
    b.expect("matrix-decomposition-" + d.name(), "matrices", "0 failures", [&, d] {
      std::mt19937_64 rng(b.options().seed + 101);
      auto scalar_product = [](const ScalarMatrix& x, const ScalarMatrix& y) {
        ScalarMatrix out{x.rows, y.cols, {}};
        for (std::size_t r = 0; r < x.rows; ++r)
          for (std::size_t c = 0; c < y.cols; ++c) {
            Scalar acc = Scalar::zero(x(0, 0).domain());
            for (std::size_t k = 0; k < x.cols; ++k) acc = acc + x(r, k) * y(k, c);
            out.entries.push_back(acc);
          }
        return out;
      };
      std::size_t fails = 0;
      for (int t = 0; t < 1000; ++t) {
        std::vector<NaturalInterval> ea, eb;
        for (int i = 0; i < 9; ++i) {
          ea.push_back(random_interval(d, rng));
          eb.push_back(random_interval(d, rng));
        }
        IntervalMatrix x(3, 3, ea), y(3, 3, eb);
        auto hx = mat_decompose(x), hy = mat_decompose(y), hp = mat_decompose(mat_mul(x, y));
        if (!(hp.lo == scalar_product(hx.lo, hy.lo) && hp.hi == scalar_product(hx.hi, hy.hi))) ++fails;
      }
      return std::to_string(fails) + " failures";
    });
  }
  auto unit_vectors = [](const Domain& d, std::size_t k, Flavor f = Flavor::Closed) {
    std::vector<IntervalMatrix> vs;
    for (std::size_t i = 0; i < k; ++i)
      for (int side = 0; side < 2; ++side) {
        auto m = IntervalMatrix::zero(1, k, d, f);
        auto one = Scalar::one(d), zero = Scalar::zero(d);
        vs.push_back(m.with_entry(0, i, side == 0 ? NaturalInterval(one, zero, f) : NaturalInterval(zero, one, f)));
      }
    return vs;
  };
  auto span_text = [](const SpanReport& r) {
    return "dimension " + std::to_string(r.dimension) + (r.spans ? ", spans" : ", does not span") +
           (r.independent ? ", independent" : ", dependent");
  };
  for (std::uint64_t p : {7, 11}) {
    b.expect("span-n-zp-p" + std::to_string(p), "vector-spaces", "dimension 2, spans, independent", [&, p] {
      const Domain d = Domain::modular(p);
      return span_text(span_dimension(unit_vectors(d, 1), d));
    });
  }
  b.expect("span-rows-z11-n3", "vector-spaces", "dimension 6, spans, independent", [&] {
    const Domain d = Domain::modular(11);
    return span_text(span_dimension(unit_vectors(d, 3), d));
  });
  b.expect("span-q-basis", "vector-spaces", "dimension 2, spans, independent", [&] {
    const Domain q = Domain::rationals();
    return span_text(span_dimension({parse_matrix(q, "[0,1]"), parse_matrix(q, "[1,0]")}, q));
  });
  b.expect("span-q-triples", "vector-spaces", "dimension 6, spans, independent", [&] {
    const Domain q = Domain::rationals();
    return span_text(span_dimension(unit_vectors(q, 3), q));
  });
  b.expect("span-3x3-z5", "vector-spaces", "dimension 18, spans, independent", [&] {
    const Domain d = Domain::modular(5);
    std::vector<IntervalMatrix> vs;
    for (const auto& v : unit_vectors(d, 9, Flavor::OpenClosed)) vs.emplace_back(3, 3, v.entries());
    return span_text(span_dimension(vs, d));
  });
}

inline void poly_claims(Book& b) {
  const Domain z = Domain::integers();
  b.expect("poly-sum", "polynomials",
           to_string(parse_poly(z, "(0,5)x^8 + (-7,-9)x^5 + (6,3)x^4 + (5,2)x^3 + (4,3)x^2 + (2,-4)x + (5,5)")), [&] {
    auto p = parse_poly(z, "(0,5)x^8 + (-7,-9)x^5 + (8,0)x^3 + (-3,2)x^2 + (2,-4)x + (8,3)");
    auto q = parse_poly(z, "(6,3)x^4 + (-3,2)x^3 + (7,1)x^2 + (-3,2)");
    return to_string(poly_add(p, q));
  });
  b.expect("poly-zero-product", "polynomials", "0", [&] {
    auto p = parse_poly(z, "[0,3)x^3 + [0,-2)x + [0,7)");
    auto q = parse_poly(z, "[5,0)x^2 + [-1,0)x + [4,0)");
    return to_string(poly_mul(p, q));
  });
  b.expect("poly-carrier-64", "polynomials", "64 elements, {1,x,x^2} a group, s-semigroup true", [&] {
    const auto& s = b.carrier("Poly(N(Zn:2),cyc=3)");
    auto h = indices(s, {"1", "x", "x^2"});
    auto w = is_s_semigroup(s, h);
    return std::to_string(s.order()) + " elements, {1,x,x^2} " + (is_group_subset(s, h) ? "a group" : "not a group") +
           ", s-semigroup " + yes(w.holds);
  });
  b.skip("poly-cyclic-subsemigroup", "polynomials", "subsemigroup under x^5 = 1 inside x^6 = 1",
         "not checkable: the subsemigroup is stated under a different x^k = 1 than its ambient");
}

inline void property_claims(Book& b) {
  const std::vector<Domain> domains{Domain::integers(), Domain::rationals(), Domain::modular(7), Domain::fuzzy_unit(),
                                    Domain::neutro_mixed(Domain::modular(5))};
  for (std::size_t k = 0; k < domains.size(); ++k) {
    const Domain d = domains[k];
    b.expect("decomposition-" + d.name(), "properties", "0 failures", [&, d, k] {
      std::size_t fails = 0, cases = 0;
      for (const auto& r : check_decomposition(d, b.options().property_samples, b.options().seed + 17 * (k + 1))) {
        fails += r.failures;
        cases += r.cases;
      }
      return std::to_string(fails) + " failures";
    });
  }
}

}  // namespace detail

/// Replays the stated examples and the acceptance claims.
inline std::vector<VerificationResult> verify_book(const BookOptions& opt = {}) {
  detail::Book b(opt);
  detail::scalar_and_interval_claims(b);
  detail::analyzer_claims(b);
  detail::ideal_claims(b);
  detail::linalg_claims(b);
  detail::poly_claims(b);
  detail::property_claims(b);
  return b.take();
}

inline bool book_passed(const std::vector<VerificationResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const VerificationResult& r) { return r.status == Status::Fail; });
}

}  // namespace natint
