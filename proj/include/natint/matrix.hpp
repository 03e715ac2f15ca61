#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "natint/analyzer.hpp"
#include "natint/interval.hpp"
#include "natint/text.hpp"

namespace natint {

/// Row-major matrix of natural intervals sharing one domain and flavor.
class IntervalMatrix {
 public:
  IntervalMatrix(std::size_t rows, std::size_t cols, std::vector<NaturalInterval> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorKind::ShapeMismatch, "matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_)
      throw Error(ErrorKind::ShapeMismatch, "expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                                std::to_string(entries_.size()));
    for (const auto& e : entries_) detail::require_compatible(entries_.front(), e);
  }

  static IntervalMatrix filled(std::size_t rows, std::size_t cols, const NaturalInterval& v) {
    return IntervalMatrix(rows, cols, std::vector<NaturalInterval>(rows * cols, v));
  }
  static IntervalMatrix zero(std::size_t rows, std::size_t cols, const Domain& d, Flavor f = Flavor::Closed) {
    return filled(rows, cols, NaturalInterval::zero(d, f));
  }
  /// [1,1] on the diagonal.
  static IntervalMatrix identity(std::size_t n, const Domain& d, Flavor f = Flavor::Closed) {
    auto m = zero(n, n, d, f);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = NaturalInterval::one(d, f);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const Domain& domain() const { return entries_.front().domain(); }
  Flavor flavor() const { return entries_.front().flavor(); }

  const NaturalInterval& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<NaturalInterval>& entries() const noexcept { return entries_; }

  IntervalMatrix with_entry(std::size_t r, std::size_t c, NaturalInterval v) const {
    auto e = entries_;
    e[r * cols_ + c] = std::move(v);
    return IntervalMatrix(rows_, cols_, std::move(e));
  }

  friend bool operator==(const IntervalMatrix&, const IntervalMatrix&) = default;

  std::size_t hash() const {
    std::size_t seed = rows_;
    boost::hash_combine(seed, cols_);
    for (const auto& e : entries_) boost::hash_combine(seed, e.hash());
    return seed;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<NaturalInterval> entries_;
};

}  // namespace natint

template <>
struct std::hash<natint::IntervalMatrix> {
  std::size_t operator()(const natint::IntervalMatrix& m) const { return m.hash(); }
};

namespace natint {

/// Plain matrix of scalars: one endpoint-half of an IntervalMatrix.
struct ScalarMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Scalar> entries;

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;
};

namespace detail {
inline void require_same_shape(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::ShapeMismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                                              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

template <class F>
IntervalMatrix entrywise(const IntervalMatrix& a, const IntervalMatrix& b, F f) {
  require_same_shape(a, b);
  std::vector<NaturalInterval> out;
  out.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) out.push_back(f(a.entries()[i], b.entries()[i]));
  return IntervalMatrix(a.rows(), a.cols(), std::move(out));
}
}  // namespace detail

inline IntervalMatrix mat_add(const IntervalMatrix& a, const IntervalMatrix& b) {
  return detail::entrywise(a, b, [](const NaturalInterval& x, const NaturalInterval& y) { return iv_add(x, y); });
}

inline IntervalMatrix mat_sub(const IntervalMatrix& a, const IntervalMatrix& b) {
  return detail::entrywise(a, b, [](const NaturalInterval& x, const NaturalInterval& y) { return iv_sub(x, y); });
}

inline IntervalMatrix mat_neg(const IntervalMatrix& a) {
  std::vector<NaturalInterval> out;
  for (const auto& e : a.entries()) out.push_back(iv_neg(e));
  return IntervalMatrix(a.rows(), a.cols(), std::move(out));
}

/// Entrywise product, the multiplication of row and column interval matrices.
inline IntervalMatrix mat_hadamard(const IntervalMatrix& a, const IntervalMatrix& b) {
  return detail::entrywise(a, b, [](const NaturalInterval& x, const NaturalInterval& y) { return iv_mul(x, y); });
}

inline IntervalMatrix mat_scale(const Scalar& c, const IntervalMatrix& a) {
  std::vector<NaturalInterval> out;
  for (const auto& e : a.entries()) out.push_back(iv_scalar_mul(c, e));
  return IntervalMatrix(a.rows(), a.cols(), std::move(out));
}

/// Row-by-column product built from iv_mul and iv_add.
inline IntervalMatrix mat_mul(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::ShapeMismatch, "inner dimensions " + std::to_string(a.cols()) + " and " +
                                              std::to_string(b.rows()) + " differ");
  detail::require_compatible(a(0, 0), b(0, 0));
  std::vector<NaturalInterval> out;
  out.reserve(a.rows() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      NaturalInterval acc = iv_mul(a(r, 0), b(0, c));
      for (std::size_t k = 1; k < a.cols(); ++k) acc = iv_add(acc, iv_mul(a(r, k), b(k, c)));
      out.push_back(std::move(acc));
    }
  return IntervalMatrix(a.rows(), b.cols(), std::move(out));
}

struct MatrixHalves {
  ScalarMatrix lo;
  ScalarMatrix hi;
};

inline MatrixHalves mat_decompose(const IntervalMatrix& a) {
  MatrixHalves h{{a.rows(), a.cols(), {}}, {a.rows(), a.cols(), {}}};
  for (const auto& e : a.entries()) {
    h.lo.entries.push_back(e.lo());
    h.hi.entries.push_back(e.hi());
  }
  return h;
}

inline IntervalMatrix mat_recompose(const ScalarMatrix& lo, const ScalarMatrix& hi, Flavor flavor) {
  if (lo.rows != hi.rows || lo.cols != hi.cols || lo.entries.size() != hi.entries.size())
    throw Error(ErrorKind::ShapeMismatch, "lo and hi halves differ in shape");
  std::vector<NaturalInterval> out;
  for (std::size_t i = 0; i < lo.entries.size(); ++i) out.emplace_back(lo.entries[i], hi.entries[i], flavor);
  return IntervalMatrix(lo.rows, lo.cols, std::move(out));
}

// ---------------------------------------------------------------------------
// Text and CSV
// ---------------------------------------------------------------------------

/// Rows separated by ';', entries by ','.
inline std::string to_string(const IntervalMatrix& a) {
  std::string s;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r) s += ';';
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) s += ',';
      s += to_string(a(r, c));
    }
  }
  return s;
}

inline IntervalMatrix parse_matrix(const Domain& d, std::string_view t, Flavor bare = Flavor::Closed) {
  std::string_view s = text::trim(t);
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  std::vector<NaturalInterval> entries;
  std::size_t cols = 0, rows = 0;
  for (auto row : text::split_top_level(s, ';')) {
    auto cells = text::split_top_level(row, ',');
    if (rows == 0) cols = cells.size();
    else if (cells.size() != cols) throw ParseError(0, "rows of equal length", t);
    for (auto c : cells) entries.push_back(parse_interval(d, c, bare));
    ++rows;
  }
  return IntervalMatrix(rows, cols, std::move(entries));
}

namespace detail {
inline std::string csv_cell(const std::string& v) {
  if (v.find_first_of(",\"") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::vector<std::string> csv_split(std::string_view line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}
}  // namespace detail

/// CSV with the header `natint-matrix v1, domain=<spec>, flavor=<f>`; cells are quoted intervals.
inline std::string write_matrix_csv(const IntervalMatrix& a) {
  std::string out = "natint-matrix v1, domain=" + a.domain().name() + ", flavor=" +
                    std::string(to_string(a.flavor())) + "\n";
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out += ',';
      const auto& e = a(r, c);
      std::string cell = to_string(e);
      if (e.is_degenerate()) {
        // bare scalars would lose the flavor
        const bool ol = e.flavor() == Flavor::Open || e.flavor() == Flavor::OpenClosed;
        const bool orr = e.flavor() == Flavor::Open || e.flavor() == Flavor::ClosedOpen;
        cell = std::string(ol ? "(" : "[") + cell + "," + cell + (orr ? ")" : "]");
      }
      out += detail::csv_cell(cell);
    }
    out += '\n';
  }
  return out;
}

inline IntervalMatrix read_matrix_csv(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string header;
  if (!std::getline(in, header)) throw ParseError(0, "header line", csv);
  auto fields = detail::csv_split(header);
  if (fields.size() != 3 || text::trim(fields[0]) != "natint-matrix v1")
    throw ParseError(0, "natint-matrix v1, domain=<spec>, flavor=<f>", header);
  auto value = [&](std::string_view f, std::string_view key) {
    f = text::trim(f);
    if (!f.starts_with(key)) throw ParseError(0, std::string(key), header);
    return f.substr(key.size());
  };
  Domain d = parse_domain(value(fields[1], "domain="));
  Flavor fl = parse_flavor(value(fields[2], "flavor="));
  std::vector<NaturalInterval> entries;
  std::size_t rows = 0, cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (text::trim(line).empty()) continue;
    auto cells = detail::csv_split(line);
    if (rows == 0) cols = cells.size();
    else if (cells.size() != cols) throw ParseError(0, "rows of equal length", line);
    for (const auto& c : cells) {
      auto e = parse_interval(d, c, fl);
      if (e.flavor() != fl) throw Error(ErrorKind::FlavorMismatch, "cell " + c + " in a " + std::string(to_string(fl)) + " matrix");
      entries.push_back(std::move(e));
    }
    ++rows;
  }
  return IntervalMatrix(rows, cols, std::move(entries));
}

// ---------------------------------------------------------------------------
// Span and dimension over a field
// ---------------------------------------------------------------------------

struct SpanReport {
  std::size_t vector_count = 0;
  std::size_t ambient_dimension = 0;  // 2 x interval coordinates x (coordinates per scalar)
  std::size_t dimension = 0;          // rank of the decomposed coordinate matrix
  bool independent = false;
  bool spans = false;
};

namespace detail {

// Coordinates of a scalar over the field: a, or the I-coefficient in ZnI, or (a, b) in Zn+I.
inline std::vector<Scalar> field_coordinates(const Scalar& x, const Domain& field) {
  const Domain& d = x.domain();
  auto embed = [&](const BigRat& v) { return Scalar::of(field, v); };
  switch (d.kind()) {
    case DomainKind::NeutroPure: return {embed(x.indeterminate())};
    case DomainKind::NeutroMixed: return {embed(x.real()), embed(x.indeterminate())};
    default: return {embed(x.real())};
  }
}

inline bool field_accepts(const Domain& entries, const Domain& field) {
  if (field.kind() == DomainKind::Rat)
    return entries.base_kind() == DomainKind::Int || entries.base_kind() == DomainKind::Rat;
  return entries.base_kind() == DomainKind::Mod && entries.modulus() == field.modulus();
}

inline std::size_t rank(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Scalar inv_p = *inv(rows[r][c]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Scalar f = mul(rows[i][c], inv_p);
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = sub(rows[i][k], mul(f, rows[r][k]));
    }
    ++r;
  }
  return r;
}

}  // namespace detail

/// Rank of the vectors' decomposed coordinates (every interval entry contributes its lo and
/// hi endpoint) over `field`, which must be Q or Z_p.
inline SpanReport span_dimension(const std::vector<IntervalMatrix>& vectors, const Domain& field) {
  if (!field.is_field()) throw Error(ErrorKind::NotAField, field.name() + " is not a field");
  if (vectors.empty()) throw Error(ErrorKind::InvalidArgument, "span of an empty family");
  const std::size_t entries = vectors.front().entries().size();
  const Domain& d = vectors.front().domain();
  if (!detail::field_accepts(d, field))
    throw Error(ErrorKind::DomainMismatch, d.name() + " is not a vector space over " + field.name());
  std::vector<std::vector<Scalar>> rows;
  for (const auto& v : vectors) {
    if (v.entries().size() != entries) throw Error(ErrorKind::ShapeMismatch, "vectors of different length");
    if (!(v.domain() == d)) throw Error(ErrorKind::DomainMismatch, "vectors over different domains");
    std::vector<Scalar> row;
    for (const auto& e : v.entries()) {
      for (auto& c : detail::field_coordinates(e.lo(), field)) row.push_back(std::move(c));
      for (auto& c : detail::field_coordinates(e.hi(), field)) row.push_back(std::move(c));
    }
    rows.push_back(std::move(row));
  }
  SpanReport rep;
  rep.vector_count = vectors.size();
  rep.ambient_dimension = rows.front().size();
  rep.dimension = detail::rank(rows);
  rep.independent = rep.dimension == vectors.size();
  rep.spans = rep.dimension == rep.ambient_dimension;
  return rep;
}

// ---------------------------------------------------------------------------
// Corner-matrix subfields
// ---------------------------------------------------------------------------

struct CornerWitness {
  bool holds = false;
  std::vector<IntervalMatrix> elements;  // zero first
  std::optional<IntervalMatrix> identity;
  Scalar idempotent;                     // e with the witness {[k e, k e] in the corner}
};

/// Looks for a subfield of n x n matrices over N(domain) among the matrices whose only
/// nonzero entry is a degenerate [k e, k e] in the top-left corner, for each nonzero
/// idempotent e of the domain. The candidate set is checked as a field with matrix
/// addition and multiplication.
inline CornerWitness corner_field_witness(std::size_t n, const Domain& d, Flavor flavor = Flavor::Closed) {
  auto values = enumerate_domain(d);
  if (!values) throw Error(ErrorKind::InfiniteDomain, "corner witness search needs a finite domain");
  const IntervalMatrix zero = IntervalMatrix::zero(n, n, d, flavor);
  for (const Scalar& e : *values) {
    if (e.is_zero() || !(mul(e, e) == e)) continue;
    std::vector<IntervalMatrix> cands{zero};
    Scalar k = e;
    while (!k.is_zero()) {
      cands.push_back(zero.with_entry(0, 0, NaturalInterval::degenerate(k, flavor)));
      k = add(k, e);
      if (k == e) break;
    }
    auto label = [](const IntervalMatrix& m) { return to_string(m); };
    auto src = std::make_shared<ElementSource<IntervalMatrix>>(
        cands, [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_add(a, b); },
        [](const IntervalMatrix& a, const IntervalMatrix& b) { return mat_mul(a, b); }, label,
        ElementSource<IntervalMatrix>::Parser{});
    FiniteStructure s(src, "corner");
    s.set_workers(1);
    std::vector<Index> all(cands.size());
    std::iota(all.begin(), all.end(), Index{0});
    if (is_field_subset(s, all)) {
      CornerWitness w;
      w.holds = true;
      w.elements = cands;
      w.idempotent = e;
      w.identity = cands[*s.identity(Op::Mul)];
      return w;
    }
  }
  return {};
}

}  // namespace natint

