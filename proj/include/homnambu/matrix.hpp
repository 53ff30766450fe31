#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "homnambu/scalar.hpp"

namespace homnambu {

// ---- small Vec helpers ------------------------------------------------

inline Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Scalar(0));
  v.at(i) = 1;
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline void add_scaled(Vec& dst, const Scalar& c, const Vec& src) {
  if (dst.size() != src.size()) throw DimensionError("vector length mismatch");
  if (c == 0) return;
  if (c == 1) {
    for (std::size_t i = 0; i < dst.size(); ++i)
      if (src[i] != 0) dst[i] += src[i];
    return;
  }
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (src[i] != 0) dst[i] += c * src[i];
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  add_scaled(r, Scalar(1), b);
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  add_scaled(r, Scalar(-1), b);
  return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

/// Dense exact-rational matrix with immutable dimensions.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return data_[i * cols_ + j];
  }
  Scalar& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  Vec col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  Vec apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    Vec r(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product size mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (o.at(k, j) != 0) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  Matrix scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Matrix& o) const = default;

private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of bounds");
  }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form. Pivot selection is the first nonzero entry
/// scanning columns left-to-right, rows top-to-bottom, so the output is the
/// unique RREF and the procedure is deterministic.
inline RrefResult rref_with_pivots(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Scalar pivot = m.at(r, c);
    if (pivot != 1)
      for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) /= pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Scalar f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline Matrix rref(const Matrix& m) { return rref_with_pivots(m).reduced; }

inline std::size_t rank(const Matrix& m) { return rref_with_pivots(m).pivot_cols.size(); }

/// Determinant by exact elimination (square input).
inline Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a.at(p, c) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      a.swap_rows(c, p);
      d = -d;
    }
    d *= a.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      const Scalar f = a.at(i, c) / a.at(c, c);
      for (std::size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return d;
}

/// A linear subspace held by its unique reduced-echelon basis: every basis
/// vector has a leading 1, pivots strictly increase, and two equal subspaces
/// always produce identical bases.
class Subspace {
public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace from_spanning(std::size_t ambient, const std::vector<Vec>& spanning) {
    Subspace s(ambient);
    if (spanning.empty()) return s;
    for (const auto& v : spanning)
      if (v.size() != ambient) throw DimensionError("spanning vector of wrong length");
    RrefResult rr = rref_with_pivots(Matrix::from_rows(spanning));
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
      s.basis_.push_back(rr.reduced.row(i));
      s.pivots_.push_back(rr.pivot_cols[i]);
    }
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionError("vector/ambient dimension mismatch");
    Vec w = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Scalar f = w[pivots_[k]];
      if (f != 0) add_scaled(w, -f, basis_[k]);
    }
    return is_zero_vec(w);
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical kernel basis of {v : Mv = 0}. Free variables are set to 1 in
/// increasing column order, then the result is normalized to pivot form.
inline Subspace kernel_basis(const Matrix& m) {
  RrefResult rr = rref_with_pivots(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
      v[rr.pivot_cols[r]] = -rr.reduced.at(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::from_spanning(n, gens);
}

/// One stacked constraint block acting on unknowns [var_offset, var_offset + mat.cols).
struct ConstraintBlock {
  Matrix mat;
  std::size_t var_offset = 0;
};

/// Kernel of the vertically stacked system over `total_unknowns` variables.
/// No blocks means no constraints, i.e. the full space.
inline Subspace solve_block_system(std::size_t total_unknowns,
                                   const std::vector<ConstraintBlock>& blocks) {
  std::size_t total_rows = 0;
  for (const auto& b : blocks) {
    if (b.var_offset + b.mat.cols() > total_unknowns)
      throw DimensionError("constraint block exceeds unknown range");
    total_rows += b.mat.rows();
  }
  Matrix big(total_rows, total_unknowns);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.mat.rows(); ++i)
      for (std::size_t j = 0; j < b.mat.cols(); ++j)
        big.at(r0 + i, b.var_offset + j) = b.mat.at(i, j);
    r0 += b.mat.rows();
  }
  return kernel_basis(big);
}

}  // namespace homnambu
