#pragma once

#include <optional>
#include <vector>

#include "sg/quat.hpp"

namespace sg {

template <class S>
struct scalar_traits {
  static constexpr bool commutative = true;
};
template <>
struct scalar_traits<Quat> {
  static constexpr bool commutative = false;
};

template <class S>
using Vec = std::vector<S>;

// Dense matrix over one exact scalar domain.  Entries multiply vectors from
// the left; columns form a right vector space (scalars act on coordinates
// from the right), rows a left one.
template <class S>
class Matrix {
 public:
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<S>>& cols) {
    int n = int(cols.empty() ? 0 : cols[0].size());
    Matrix m(n, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
      if (int(cols[j].size()) != n)
        throw error(errc::input, "columns of unequal length");
      for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const S& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw error(errc::input, "matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  int rows_, cols_;
  std::vector<S> e_;
};

// Pairing row . column, entries of the row acting from the left.
template <class S>
S pair_dot(const Vec<S>& row, const Vec<S>& col) {
  if (row.size() != col.size()) throw error(errc::input, "dimension mismatch");
  S acc(0);
  for (size_t i = 0; i < row.size(); ++i) acc += row[i] * col[i];
  return acc;
}

template <class S>
bool vec_is_zero(const Vec<S>& v) {
  for (const S& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class S>
Vec<S> scale_right(Vec<S> v, const S& c) {
  for (S& x : v) x = x * c;
  return v;
}

template <class S>
Vec<S> scale_left(const S& c, Vec<S> v) {
  for (S& x : v) x = c * x;
  return v;
}

// Exact determinant over a commutative field, by Gaussian elimination with
// exact division.
template <class S>
S det(Matrix<S> m) {
  static_assert(scalar_traits<S>::commutative,
                "determinant requires commutative entries; use sdet over H");
  if (m.rows() != m.cols()) throw error(errc::input, "determinant of non-square matrix");
  int n = m.rows();
  S result(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return S(0);
    if (piv != c) {
      for (int j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
      result = -result;
    }
    result = result * m(c, c);
    S inv = m(c, c).inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      S f = m(r, c) * inv;
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return result;
}

// Study determinant: replace each quaternion entry by its 2x2 complex image
// and take the determinant of the resulting 2n x 2n matrix.  The result is
// a non-negative element of the real base field.
inline Quad sdet(const Matrix<Quat>& m) {
  if (m.rows() != m.cols()) throw error(errc::input, "sdet of non-square matrix");
  int n = m.rows();
  Matrix<CPair> c(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto blk = complexify(m(i, j));
      c(2 * i, 2 * j) = blk[0];
      c(2 * i, 2 * j + 1) = blk[1];
      c(2 * i + 1, 2 * j) = blk[2];
      c(2 * i + 1, 2 * j + 1) = blk[3];
    }
  CPair d = det(std::move(c));
  check_internal(d.im().is_zero(), "Study determinant has nonzero imaginary part");
  check_internal(d.re().is_zero() || d.re().sign() >= 0, "Study determinant negative");
  return d.re();
}

// Unified squared-scale determinant used as the simplex measure: |det|^2
// for commutative domains, sdet over the quaternions.  Only order
// comparisons matter downstream and squaring is monotone, so all domains
// share one comparable non-negative quantity.
template <class S>
Quad abs_det_sq(const Matrix<S>& m) {
  if constexpr (scalar_traits<S>::commutative) {
    return det(m).norm_sq();
  } else {
    return sdet(m);
  }
}

// Dimension of the right D-span of the given columns.  Elimination scales
// columns on the right and adds right multiples, valid over any division
// ring.
template <class S>
int right_rank(std::vector<Vec<S>> cols) {
  std::vector<Vec<S>> basis;      // reduced, pivot normalized to 1
  std::vector<size_t> pivots;
  for (Vec<S>& v : cols) {
    for (size_t b = 0; b < basis.size(); ++b) {
      const S& coeff = v[pivots[b]];
      if (coeff.is_zero()) continue;
      S c = coeff;  // v -= basis[b] * c, a right combination
      for (size_t i = 0; i < v.size(); ++i) v[i] -= basis[b][i] * c;
    }
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) continue;
    S inv = v[p].inverse();
    basis.push_back(scale_right(std::move(v), inv));
    pivots.push_back(p);
  }
  return int(basis.size());
}

// Dimension of the left D-span of the given rows.
template <class S>
int left_rank(std::vector<Vec<S>> rows) {
  std::vector<Vec<S>> basis;
  std::vector<size_t> pivots;
  for (Vec<S>& v : rows) {
    for (size_t b = 0; b < basis.size(); ++b) {
      const S& coeff = v[pivots[b]];
      if (coeff.is_zero()) continue;
      S c = coeff;  // v -= c * basis[b], a left combination
      for (size_t i = 0; i < v.size(); ++i) v[i] -= c * basis[b][i];
    }
    size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) continue;
    S inv = v[p].inverse();
    basis.push_back(scale_left(inv, std::move(v)));
    pivots.push_back(p);
  }
  return int(basis.size());
}

// Whether `row` lies in the left span of `basis_rows`.
template <class S>
bool in_left_span(std::vector<Vec<S>> basis_rows, const Vec<S>& row) {
  int r = left_rank(basis_rows);
  basis_rows.push_back(row);
  return left_rank(std::move(basis_rows)) == r;
}

// Common point of n hyperplanes in P^n, given as n covectors of length
// n+1.  Returns a nonzero column v with row . v = 0 for every row, unique
// up to a right scalar, or nullopt when the covectors are not independent
// (solution space dimension != 1).  The result is normalized so that the
// coordinate sum is 1; when the sum vanishes the first nonzero coordinate
// is set to 1 instead.
template <class S>
std::optional<Vec<S>> intersect_hyperplanes(std::vector<Vec<S>> rows) {
  if (rows.empty()) throw error(errc::input, "no hyperplanes to intersect");
  size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw error(errc::input, "dimension mismatch");
  if (rows.size() + 1 != n)
    throw error(errc::input, "need n hyperplanes in P^n");

  // Reduce to reduced row echelon form with left row operations.
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    S pivot_inv = rows[rank][c].inverse();
    rows[rank] = scale_left(pivot_inv, std::move(rows[rank]));
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      S f = rows[r][c];
      for (size_t j = 0; j < n; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  if (rank != rows.size()) return std::nullopt;

  size_t free_col = 0;
  while (free_col < n &&
         std::find(pivots.begin(), pivots.end(), free_col) != pivots.end())
    ++free_col;
  Vec<S> v(n, S(0));
  v[free_col] = S(1);
  for (size_t r = 0; r < rank; ++r) v[pivots[r]] = -rows[r][free_col];

  // Canonical scaling.
  S sum(0);
  for (const S& x : v) sum += x;
  if (!sum.is_zero()) {
    S inv = sum.inverse();
    return scale_right(std::move(v), inv);
  }
  size_t p = 0;
  while (v[p].is_zero()) ++p;
  S inv = v[p].inverse();
  return scale_right(std::move(v), inv);
}

}  // namespace sg
