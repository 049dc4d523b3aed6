#pragma once

// Exact dense linear algebra over a field scalar (Rational or CycNumber).
// Pivoting always takes the first nonzero entry in column order, so every
// result is a deterministic function of the input.

#include "pgw/cyclotomic.hpp"
#include "pgw/error.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace pgw {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const CycNumber& x) { return x.is_zero(); }
inline bool is_zero(const Integer& x) { return x == 0; }

template <class Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of row i
};

template <class Scalar>
Echelon<Scalar> rref(MatrixX<Scalar> a) {
  Echelon<Scalar> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < a.rows() && is_zero(a(piv, col))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) a.row(piv).swap(a.row(row));
    const Scalar inv = Scalar(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      const Scalar f = a(r, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) {
        if (!is_zero(a(row, j))) a(r, j) -= f * a(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = a.topRows(row);
  return out;
}

template <class Scalar>
Eigen::Index rank(const MatrixX<Scalar>& a) {
  return static_cast<Eigen::Index>(rref(a).pivots.size());
}

// Canonical basis (reduced row echelon rows) of the row space.
template <class Scalar>
MatrixX<Scalar> row_space(const MatrixX<Scalar>& rows) {
  return rref(rows).reduced;
}

// Right kernel {v : a v = 0}; basis vectors are the rows of the result, in
// reduced row echelon form. Zero rows means a trivial kernel.
template <class Scalar>
MatrixX<Scalar> kernel(const MatrixX<Scalar>& a) {
  const auto e = rref(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n - static_cast<Eigen::Index>(e.pivots.size()), n);
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(k, f) = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      if (!is_zero(e.reduced(r, f))) basis(k, e.pivots[i]) = -e.reduced(r, f);
    }
    ++k;
  }
  return row_space(basis);
}

template <class Scalar>
MatrixX<Scalar> inverse(const MatrixX<Scalar>& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::ShapeError, "inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  MatrixX<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = MatrixX<Scalar>::Identity(n, n);
  auto e = rref(std::move(aug));
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n) {
    fail(ErrorKind::NotInvertible, "singular matrix");
  }
  return e.reduced.rightCols(n);
}

template <class Scalar>
Scalar determinant(MatrixX<Scalar> a) {
  if (a.rows() != a.cols()) fail(ErrorKind::ShapeError, "determinant of a non-square matrix");
  Scalar det(1);
  const Eigen::Index n = a.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    while (piv < n && is_zero(a(piv, c))) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      det = -det;
    }
    det = det * a(c, c);
    const Scalar inv = Scalar(1) / a(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      if (is_zero(a(r, c))) continue;
      const Scalar f = a(r, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace pgw
