#pragma once

// Exact linear algebra over Q: a small sparse matrix type, incremental sparse
// row reduction with nullspace extraction, and fraction-free (Bareiss) rank.

#include "liebranch/core.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace liebranch {

/// Row-major sparse matrix with exact rational entries.
class SparseMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return rows_.at(r); }

  Rational get(std::size_t r, std::size_t c) const {
    const Row& row = rows_.at(r);
    auto it = row.find(c);
    return it == row.end() ? Rational(0) : it->second;
  }

  void set(std::size_t r, std::size_t c, const Rational& v) {
    if (c >= cols_) throw InputError("sparse matrix column out of range");
    Row& row = rows_.at(r);
    if (v == 0)
      row.erase(c);
    else
      row[c] = v;
  }

  void add_to(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    Row& row = rows_.at(r);
    auto [it, inserted] = row.try_emplace(c, 0);
    it->second += v;
    if (it->second == 0) row.erase(it);
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const Row& r : rows_) n += r.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
    return t;
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows(), cols_); ++i) t += get(i, i);
    return t;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw InputError("sparse matrix shape mismatch in product");
    SparseMatrix out(a.rows(), b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (const auto& [k, av] : a.rows_[r])
        for (const auto& [c, bv] : b.rows_[k]) out.add_to(r, c, av * bv);
    return out;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) {
    a.check_same_shape(b);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, v] : b.rows_[r]) a.add_to(r, c, v);
    return a;
  }

  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) {
    a.check_same_shape(b);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, v] : b.rows_[r]) a.add_to(r, c, -v);
    return a;
  }

  friend SparseMatrix operator*(const Rational& k, SparseMatrix a) {
    if (k == 0) return SparseMatrix(a.rows(), a.cols_);
    for (Row& row : a.rows_)
      for (auto& [c, v] : row) v *= k;
    return a;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  void check_same_shape(const SparseMatrix& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) throw InputError("sparse matrix shape mismatch");
  }

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

inline SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
  return a * b - b * a;
}

/// Plain-text dump: a header line "matrix <name> <rows> <cols> <nnz>" then
/// one "row col num/den" line per nonzero, 0-based, row-major order.
inline void write_sparse(std::ostream& os, const std::string& name, const SparseMatrix& m) {
  os << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      os << r << ' ' << c << ' ' << numerator(v) << '/' << denominator(v) << '\n';
}

/// Reads one block written by write_sparse; returns false at end of input.
inline bool read_sparse(std::istream& is, std::string& name, SparseMatrix& m) {
  std::string tag;
  if (!(is >> tag)) return false;
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (tag != "matrix" || !(is >> name >> rows >> cols >> nnz))
    throw InputError("malformed sparse matrix header");
  m = SparseMatrix(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string frac;
    if (!(is >> r >> c >> frac)) throw InputError("truncated sparse matrix '" + name + "'");
    const auto slash = frac.find('/');
    if (slash == std::string::npos || r >= rows || c >= cols)
      throw InputError("malformed sparse entry in '" + name + "'");
    m.set(r, c, Rational(BigInt(frac.substr(0, slash)), BigInt(frac.substr(slash + 1))));
  }
  return true;
}

/// Sparse row vector: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Incremental row echelon form over Q. Each stored row is scaled so its
/// leading entry is 1 and every other entry lies in a larger column.
class SparseRowEchelon {
 public:
  explicit SparseRowEchelon(std::size_t columns) : columns_(columns) {}

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size(); }
  std::size_t nullity() const { return columns_ - rank(); }

  /// Reduces row against the stored pivots; keeps it if a nonzero remainder
  /// survives. Returns true when the rank grew.
  bool add_row(SparseRow row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    row = compact(std::move(row));
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      if (lead >= columns_) throw InputError("row entry beyond declared column count");
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rational inv = 1 / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      row = axpy(row, -row.front().second, it->second);
    }
    return false;
  }

  /// Basis of {x : A x = 0}, one vector per free column (free column set to 1).
  std::vector<std::vector<Rational>> nullspace() const {
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < columns_; ++f) {
      if (pivots_.count(f)) continue;
      std::vector<Rational> x(columns_, 0);
      x[f] = 1;
      for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Rational s = 0;
        for (auto e = std::next(it->second.begin()); e != it->second.end(); ++e)
          if (x[e->first] != 0) s += e->second * x[e->first];
        x[it->first] = -s;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  static SparseRow compact(SparseRow row) {
    SparseRow out;
    for (auto& [c, v] : row) {
      if (!out.empty() && out.back().first == c)
        out.back().second += v;
      else
        out.emplace_back(c, std::move(v));
      if (out.back().second == 0) out.pop_back();
    }
    return out;
  }

  // a + k*b, both sorted.
  static SparseRow axpy(const SparseRow& a, const Rational& k, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, k * b[j].second);
        ++j;
      } else {
        Rational v = a[i].second + k * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::size_t columns_;
  std::map<std::size_t, SparseRow> pivots_;
};

/// Rank of an integer matrix by fraction-free Gaussian elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

/// Determinant of a square integer matrix (Bareiss).
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c)
        a[r][c] = (a[k][k] * a[r][c] - a[r][k] * a[k][c]) / prev;
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  return n == 0 ? BigInt(1) : sign * a[n - 1][n - 1];
}

}  // namespace liebranch
