#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "natint/interval.hpp"

namespace natint {

using Index = std::uint32_t;

/// Table entry for a product that leaves the carrier.
inline constexpr Index kOutside = std::numeric_limits<Index>::max();

enum class Op { Add, Mul };

constexpr std::string_view to_string(Op op) { return op == Op::Add ? "add" : "mul"; }

namespace detail {

inline std::size_t default_workers() {
  auto n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs body(begin, end) over [0, count) split into contiguous chunks.
template <class Body>
void parallel_for(std::size_t count, std::size_t workers, Body&& body) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers <= 1 || count < 64) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t b = w * chunk, e = std::min(count, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&body, b, e] { body(b, e); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace detail

/// What a FiniteStructure enumerates: elements addressed by index plus up to two operations.
class StructureSource {
 public:
  virtual ~StructureSource() = default;

  virtual std::size_t size() const = 0;
  virtual std::string label(Index i) const = 0;
  virtual bool has_op(Op op) const = 0;
  /// Index of the result, or kOutside when it is not in the carrier.
  virtual Index apply(Op op, Index a, Index b) const = 0;
  /// Carrier index of an element written in this carrier's element syntax.
  virtual std::optional<Index> find(std::string_view text) const = 0;
  /// The interval at i when the carrier consists of natural intervals.
  virtual const NaturalInterval* interval_at(Index) const { return nullptr; }
  /// True when the element lies on the degenerate diagonal (only meaningful for interval carriers).
  virtual bool is_degenerate(Index i) const {
    const NaturalInterval* x = interval_at(i);
    return x != nullptr && x->is_degenerate();
  }
};

class CayleyTable {
 public:
  CayleyTable() = default;
  CayleyTable(std::size_t n, std::vector<Index> cells) : n_(n), cells_(std::move(cells)) {
    closed_ = std::none_of(cells_.begin(), cells_.end(), [](Index v) { return v == kOutside; });
  }

  std::size_t size() const noexcept { return n_; }
  Index operator()(Index a, Index b) const noexcept { return cells_[static_cast<std::size_t>(a) * n_ + b]; }
  bool closed() const noexcept { return closed_; }

 private:
  std::size_t n_ = 0;
  std::vector<Index> cells_;
  bool closed_ = true;
};

/// An explicitly enumerated carrier with Cayley tables built on first use and cached.
class FiniteStructure {
 public:
  FiniteStructure(std::shared_ptr<const StructureSource> source, std::string description)
      : source_(std::move(source)), cache_(std::make_shared<Cache>()), description_(std::move(description)) {}

  const std::string& description() const noexcept { return description_; }
  std::size_t order() const { return source_->size(); }
  std::string label(Index i) const { return source_->label(i); }
  bool has_op(Op op) const { return source_->has_op(op); }
  const StructureSource& source() const noexcept { return *source_; }
  std::shared_ptr<const StructureSource> source_ptr() const noexcept { return source_; }
  const NaturalInterval* interval_at(Index i) const { return source_->interval_at(i); }

  std::size_t workers() const noexcept { return workers_; }
  void set_workers(std::size_t w) { workers_ = std::max<std::size_t>(1, w); }

  std::optional<Index> find(std::string_view text) const { return source_->find(text); }

  Index find_or_throw(std::string_view text) const {
    auto i = source_->find(text);
    if (!i) throw Error(ErrorKind::InvalidArgument, "'" + std::string(text) + "' is not in " + description_);
    return *i;
  }

  const CayleyTable& table(Op op) const {
    if (!has_op(op))
      throw Error(ErrorKind::MissingTable, std::string(to_string(op)) + " table for " + description_);
    Slot& slot = op == Op::Add ? cache_->add : cache_->mul;
    std::call_once(slot.once, [&] { slot.table = build(op); });
    return slot.table;
  }

  Index add(Index a, Index b) const { return table(Op::Add)(a, b); }
  Index mul(Index a, Index b) const { return table(Op::Mul)(a, b); }
  Index apply(Op op, Index a, Index b) const { return table(op)(a, b); }

  /// Two-sided identity of `op`, if any.
  std::optional<Index> identity(Op op) const {
    const auto& t = table(op);
    const std::size_t n = order();
    for (Index e = 0; e < n; ++e) {
      bool ok = true;
      for (Index x = 0; x < n && ok; ++x) ok = t(e, x) == x && t(x, e) == x;
      if (ok) return e;
    }
    return std::nullopt;
  }

  /// Additive identity when there is an addition, otherwise the multiplicative absorbing element.
  std::optional<Index> zero() const {
    std::call_once(cache_->zero_once, [&] {
      if (has_op(Op::Add)) {
        cache_->zero = identity(Op::Add);
        return;
      }
      if (!has_op(Op::Mul)) return;
      const auto& t = table(Op::Mul);
      for (Index z = 0; z < order(); ++z) {
        bool ok = true;
        for (Index x = 0; x < order() && ok; ++x) ok = t(z, x) == z && t(x, z) == z;
        if (ok) {
          cache_->zero = z;
          return;
        }
      }
    });
    return cache_->zero;
  }

  std::optional<Index> one() const {
    if (!has_op(Op::Mul)) return std::nullopt;
    std::call_once(cache_->one_once, [&] { cache_->one = identity(Op::Mul); });
    return cache_->one;
  }

 private:
  struct Slot {
    std::once_flag once;
    CayleyTable table;
  };
  struct Cache {
    Slot add, mul;
    std::once_flag zero_once, one_once;
    std::optional<Index> zero, one;
  };

  CayleyTable build(Op op) const {
    const std::size_t n = order();
    std::vector<Index> cells(n * n);
    detail::parallel_for(n, workers_, [&](std::size_t b, std::size_t e) {
      for (std::size_t a = b; a < e; ++a)
        for (std::size_t c = 0; c < n; ++c)
          cells[a * n + c] = source_->apply(op, static_cast<Index>(a), static_cast<Index>(c));
    });
    return CayleyTable(n, std::move(cells));
  }

  std::shared_ptr<const StructureSource> source_;
  std::shared_ptr<Cache> cache_;
  std::string description_;
  std::size_t workers_ = detail::default_workers();
};

/// A carrier of concrete elements; operations are evaluated on elements and looked up again.
template <class Elem>
class ElementSource : public StructureSource {
 public:
  using BinOp = std::function<Elem(const Elem&, const Elem&)>;
  using Labeler = std::function<std::string(const Elem&)>;
  using Parser = std::function<Elem(std::string_view)>;

  ElementSource(std::vector<Elem> elements, BinOp add, BinOp mul, Labeler labeler, Parser parser)
      : elements_(std::move(elements)),
        add_(std::move(add)),
        mul_(std::move(mul)),
        labeler_(std::move(labeler)),
        parser_(std::move(parser)) {
    index_.reserve(elements_.size());
    for (Index i = 0; i < elements_.size(); ++i) {
      if (!index_.emplace(elements_[i], i).second)
        throw Error(ErrorKind::InvalidArgument, "duplicate carrier element " + labeler_(elements_[i]));
    }
  }

  std::size_t size() const override { return elements_.size(); }
  std::string label(Index i) const override { return labeler_(elements_[i]); }
  bool has_op(Op op) const override { return static_cast<bool>(op == Op::Add ? add_ : mul_); }

  Index apply(Op op, Index a, Index b) const override {
    const BinOp& f = op == Op::Add ? add_ : mul_;
    try {
      return lookup(f(elements_[a], elements_[b]));
    } catch (const Error&) {
      // e.g. a fuzzy sum above 1: the result is not an element of the carrier
      return kOutside;
    }
  }

  std::optional<Index> find(std::string_view text) const override {
    if (!parser_) return std::nullopt;
    try {
      auto it = index_.find(parser_(text));
      if (it == index_.end()) return std::nullopt;
      return it->second;
    } catch (const ParseError&) {
      throw;
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  const NaturalInterval* interval_at(Index i) const override {
    if constexpr (std::is_same_v<Elem, NaturalInterval>) {
      return &elements_[i];
    } else {
      return nullptr;
    }
  }

  const Elem& element(Index i) const { return elements_[i]; }
  const std::vector<Elem>& elements() const { return elements_; }

  std::optional<Index> index_of(const Elem& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  Index lookup(const Elem& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? kOutside : it->second;
  }

  std::vector<Elem> elements_;
  std::unordered_map<Elem, Index> index_;
  BinOp add_, mul_;
  Labeler labeler_;
  Parser parser_;
};

/// The induced structure on a subset of another structure's carrier.
class SubsetSource : public StructureSource {
 public:
  SubsetSource(FiniteStructure parent, std::vector<Index> members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    for (Index i = 0; i < members_.size(); ++i) {
      if (!position_.emplace(members_[i], i).second)
        throw Error(ErrorKind::InvalidArgument, "duplicate subset member " + parent_.label(members_[i]));
    }
  }

  std::size_t size() const override { return members_.size(); }
  std::string label(Index i) const override { return parent_.label(members_[i]); }
  bool has_op(Op op) const override { return parent_.has_op(op); }

  Index apply(Op op, Index a, Index b) const override {
    Index r = parent_.apply(op, members_[a], members_[b]);
    if (r == kOutside) return kOutside;
    auto it = position_.find(r);
    return it == position_.end() ? kOutside : it->second;
  }

  std::optional<Index> find(std::string_view text) const override {
    auto p = parent_.find(text);
    if (!p) return std::nullopt;
    auto it = position_.find(*p);
    if (it == position_.end()) return std::nullopt;
    return it->second;
  }

  const NaturalInterval* interval_at(Index i) const override { return parent_.interval_at(members_[i]); }
  bool is_degenerate(Index i) const override { return parent_.source().is_degenerate(members_[i]); }

  const FiniteStructure& parent() const noexcept { return parent_; }
  const std::vector<Index>& members() const noexcept { return members_; }

 private:
  FiniteStructure parent_;
  std::vector<Index> members_;
  std::unordered_map<Index, Index> position_;
};

/// Restricts `s` to `members` (parent indices, kept in the given order).
inline FiniteStructure restrict_to(const FiniteStructure& s, std::vector<Index> members, std::string description) {
  FiniteStructure sub(std::make_shared<SubsetSource>(s, std::move(members)), std::move(description));
  sub.set_workers(s.workers());
  return sub;
}

/// Labels of the listed indices, for reports.
inline std::vector<std::string> labels_of(const FiniteStructure& s, const std::vector<Index>& idx) {
  std::vector<std::string> out;
  out.reserve(idx.size());
  for (Index i : idx) out.push_back(s.label(i));
  return out;
}

}  // namespace natint
