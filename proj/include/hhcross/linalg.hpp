#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over F_p.
 *
 * Vectors of V are columns. Subspaces are stored by their reduced row-echelon
 * basis (one basis vector per row), which is the canonical representative:
 * two subspaces are equal iff their bases are equal matrices.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hhcross/error.hpp"
#include "hhcross/scalars.hpp"

namespace hhcross {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, Fp::zero(p)) {}

  static Matrix identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp::one(p);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint32_t p) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Fp(p, rows[i][j]);
    }
    return m;
  }

  static Matrix diagonal(const std::vector<Fp>& d, std::uint32_t p) {
    Matrix m(d.size(), d.size(), p);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Fp& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Fp operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Fp> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<Fp> column(std::size_t j) const {
    std::vector<Fp> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Fp x) { return x.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [first, first+count).
  Matrix column_block(std::size_t first, std::size_t count) const {
    Matrix m(rows_, count, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
  }

  /// Rows [first, first+count).
  Matrix row_block(std::size_t first, std::size_t count) const {
    Matrix m(count, cols_, p_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    Matrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Fp a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<Fp> operator*(const std::vector<Fp>& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
    std::vector<Fp> r(rows_, Fp::zero(p_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
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

  Matrix operator*(Fp s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  Matrix pow(std::uint64_t e) const {
    Matrix acc = identity(rows_, p_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1U) acc = acc * base;
      base = base * base;
      e >>= 1U;
    }
    return acc;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.p_ == b.p_ && a.data_ == b.data_;
  }

  /// Lexicographic order on entries; used for deterministic element ordering.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                        b.data_.end());
  }

  std::vector<std::vector<std::int64_t>> to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).value();
    return out;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<Fp> data_;
};

struct EchelonForm {
  Matrix reduced;                    // full reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row-echelon form.
inline EchelonForm row_reduce(Matrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    const Fp inv = m(lead_row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || m(i, col).is_zero()) continue;
      const Fp f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(lead_row, j);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(n, 2 * n, m.modulus());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Fp::one(m.modulus());
  }
  auto ef = row_reduce(aug);
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::NotInvertible, "singular matrix");
  Matrix inv(n, n, m.modulus());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ef.reduced(i, n + j);
  return inv;
}

inline Fp determinant(Matrix m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Fp det = Fp::one(m.modulus());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Fp::zero(m.modulus());
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Fp inv = m(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      const Fp f = m(i, col) * inv;
      if (f.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

/// A linear subspace of F_p^n in canonical reduced row-echelon form.
class Subspace {
 public:
  Subspace() = default;

  /// Span of the given rows.
  static Subspace span_of_rows(const Matrix& rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    s.p_ = rows.modulus();
    auto ef = row_reduce(rows);
    s.basis_ = ef.reduced.row_block(0, ef.pivots.size());
    return s;
  }

  /// Span of the given columns.
  static Subspace span_of_columns(const Matrix& cols) { return span_of_rows(cols.transpose()); }

  static Subspace zero(std::size_t n, std::uint32_t p) { return span_of_rows(Matrix(0, n, p)); }
  static Subspace full(std::size_t n, std::uint32_t p) {
    return span_of_rows(Matrix::identity(n, p));
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  /// Rows are the canonical basis vectors.
  const Matrix& basis() const noexcept { return basis_; }
  /// Columns are the canonical basis vectors.
  Matrix basis_columns() const { return basis_.transpose(); }

  bool contains(const std::vector<Fp>& v) const {
    Matrix m(dim() + 1, ambient_, p_);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_(i, j);
    for (std::size_t j = 0; j < ambient_; ++j) m(dim(), j) = v[j];
    return rank(m) == dim();
  }

  Subspace sum(const Subspace& o) const {
    check_compatible(o);
    Matrix m(dim() + o.dim(), ambient_, p_);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_(i, j);
    for (std::size_t i = 0; i < o.dim(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) m(dim() + i, j) = o.basis_(i, j);
    return span_of_rows(m);
  }

  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  void check_compatible(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw Error(ErrorKind::DimensionMismatch, "subspace ambients differ");
  }

  std::size_t ambient_ = 0;
  std::uint32_t p_ = 2;
  Matrix basis_;
};

/// Null space {v : m v = 0} as a canonical subspace.
inline Subspace kernel(const Matrix& m) {
  auto ef = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : ef.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(free_cols.size(), n, m.modulus());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(k, f) = Fp::one(m.modulus());
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) basis(k, ef.pivots[r]) = -ef.reduced(r, f);
  }
  return Subspace::span_of_rows(basis);
}

inline Subspace Subspace::intersect(const Subspace& o) const {
  check_compatible(o);
  // Solve a^T B1 = b^T B2, i.e. the kernel of [B1^T | -B2^T].
  const std::size_t r1 = dim(), r2 = o.dim();
  Matrix m(ambient_, r1 + r2, p_);
  for (std::size_t j = 0; j < ambient_; ++j) {
    for (std::size_t i = 0; i < r1; ++i) m(j, i) = basis_(i, j);
    for (std::size_t i = 0; i < r2; ++i) m(j, r1 + i) = -o.basis_(i, j);
  }
  const Subspace coeffs = kernel(m);
  Matrix vecs(coeffs.dim(), ambient_, p_);
  for (std::size_t k = 0; k < coeffs.dim(); ++k)
    for (std::size_t i = 0; i < r1; ++i) {
      const Fp c = coeffs.basis()(k, i);
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) vecs(k, j) += c * basis_(i, j);
    }
  return span_of_rows(vecs);
}

/// Multiplicative order of an invertible square matrix, or nullopt past `bound`.
inline std::optional<std::uint64_t> multiplicative_order(const Matrix& g, std::uint64_t bound) {
  const Matrix id = Matrix::identity(g.rows(), g.modulus());
  Matrix acc = g;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (acc == id) return k;
    acc = acc * g;
  }
  return std::nullopt;
}

/// pi^g = (1/k) sum_{i=1}^{k} g^i, the projector onto the fixed space of g.
inline Matrix symmetrizer(const Matrix& g, std::uint64_t k) {
  const std::uint32_t p = g.modulus();
  if (!g.is_square()) throw Error(ErrorKind::DimensionMismatch, "symmetrizer of non-square matrix");
  if (k == 0 || k % p == 0)
    throw Error(ErrorKind::CharacteristicTooSmall, "order divisible by the characteristic");
  Matrix sum(g.rows(), g.cols(), p);
  Matrix power = g;
  for (std::uint64_t i = 1; i <= k; ++i) {
    sum = sum + power;
    if (i < k) power = power * g;
  }
  if (!(power == Matrix::identity(g.rows(), p)))
    throw Error(ErrorKind::OrderMismatch, "g^k != Id for k = " + std::to_string(k));
  return sum * Fp(p, static_cast<std::int64_t>(k % p)).inverse();
}

/// V^g = ker(g - Id).
inline Subspace fixed_space(const Matrix& g) {
  return kernel(g - Matrix::identity(g.rows(), g.modulus()));
}

/// (V^g)^vee = ker(pi^g), the span of eigenvectors with eigenvalue != 1.
inline Subspace semiinvariant_space(const Matrix& g, std::uint64_t k) {
  return kernel(symmetrizer(g, k));
}

/// Eigenvector columns (fixed vectors first) with parallel eigenvalues.
struct Eigenframe {
  Matrix basis;              // n x n, column i is the i-th frame vector
  std::vector<Fp> eigenvalues;
  std::size_t fixed_dim = 0;  // number of leading columns spanning V^g
};

/**
 * Deterministic eigenbasis of a finite-order g whose order k divides N.
 *
 * Eigenspaces are images of P_lambda = (1/k) sum_i lambda^{-i} g^i, taken in
 * the order lambda = zeta^0, zeta^1, ..., zeta^{N-1}; each contributes its
 * canonical echelon basis.
 */
inline Eigenframe eigenframe(const Matrix& g, const FieldCtx& ctx) {
  const std::size_t n = g.rows();
  const std::uint32_t p = ctx.p();
  const auto order = multiplicative_order(g, ctx.exponent());
  if (!order || ctx.exponent() % *order != 0)
    throw Error(ErrorKind::OrderMismatch, "element order does not divide the field exponent");
  const std::uint64_t k = *order;

  std::vector<Matrix> powers;  // g^1 .. g^k
  powers.reserve(k);
  Matrix acc = g;
  for (std::uint64_t i = 1; i <= k; ++i) {
    powers.push_back(acc);
    acc = acc * g;
  }
  const Fp inv_k = Fp(p, static_cast<std::int64_t>(k)).inverse();

  Eigenframe out;
  out.basis = Matrix(n, n, p);
  std::size_t filled = 0;
  for (std::uint32_t j = 0; j < ctx.exponent(); ++j) {
    const Fp lambda = ctx.root(j);
    if (lambda.pow(k) != ctx.one()) continue;
    Subspace eigenspace;
    if (j == 0) {
      eigenspace = fixed_space(g);
    } else {
      Matrix proj(n, n, p);
      const Fp lambda_inv = lambda.inverse();
      for (std::uint64_t i = 1; i <= k; ++i) proj = proj + powers[i - 1] * lambda_inv.pow(i);
      eigenspace = Subspace::span_of_columns(proj * inv_k);
    }
    for (std::size_t r = 0; r < eigenspace.dim(); ++r, ++filled) {
      if (filled >= n) throw Error(ErrorKind::NonDiagonalizable, "eigenspaces overlap");
      for (std::size_t c = 0; c < n; ++c) out.basis(c, filled) = eigenspace.basis()(r, c);
      out.eigenvalues.push_back(lambda);
    }
    if (j == 0) out.fixed_dim = eigenspace.dim();
  }
  if (filled != n) throw Error(ErrorKind::NonDiagonalizable, "eigenspaces do not span V");
  return out;
}

/// True iff (V^g)^vee and (V^h)^vee intersect trivially.
inline bool complements_intersect_trivially(const Subspace& semi_g, const Subspace& semi_h) {
  return semi_g.sum(semi_h).dim() == semi_g.dim() + semi_h.dim();
}

inline bool intersection_condition(const Matrix& g, const Matrix& h) {
  const std::uint64_t bound = std::uint64_t{g.modulus()} * g.modulus();
  const auto kg = multiplicative_order(g, bound);
  const auto kh = multiplicative_order(h, bound);
  if (!kg || !kh) throw Error(ErrorKind::OrderMismatch, "element of infinite or excessive order");
  return complements_intersect_trivially(semiinvariant_space(g, *kg), semiinvariant_space(h, *kh));
}

/**
 * A left inverse L of a full-column-rank matrix F (L F = Id), built from the
 * pivot rows of F. Used to read coordinates against a frame.
 */
inline Matrix left_inverse(const Matrix& frame) {
  const std::size_t n = frame.rows(), r = frame.cols();
  // Pivot columns of rref(F^T) select r rows of F forming an invertible minor.
  auto ef = row_reduce(frame.transpose());
  if (ef.pivots.size() != r) throw Error(ErrorKind::NotInvertible, "frame is not linearly independent");
  Matrix minor(r, r, frame.modulus());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) minor(i, j) = frame(ef.pivots[i], j);
  const Matrix minv = inverse(minor);
  Matrix l(r, n, frame.modulus());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) l(i, ef.pivots[k]) = minv(i, k);
  return l;
}

}  // namespace hhcross
