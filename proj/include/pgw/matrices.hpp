#pragma once

// Square matrices over Q(zeta_N) and over Z: products, inverses, orders,
// eigenspaces of finite-order elements, canonical keys and hashing.

#include "pgw/cyclotomic.hpp"
#include "pgw/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace pgw {

using CycMatrix = MatrixX<CycNumber>;
using CycVector = VectorX<CycNumber>;
using IntMatrix = MatrixX<Integer>;
using RatMatrix = MatrixX<Rational>;

inline constexpr long long kDefaultElementOrderCap = 6561;  // 3^8

template <class Scalar>
MatrixX<Scalar> multiply(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  if (a.cols() != b.rows()) fail(ErrorKind::ShapeError, "dimension mismatch in product");
  return a.lazyProduct(b);
}

template <class Scalar>
MatrixX<Scalar> identity_like(const MatrixX<Scalar>& a) {
  return MatrixX<Scalar>::Identity(a.rows(), a.cols());
}

template <class Scalar>
bool is_identity(const MatrixX<Scalar>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != Scalar(i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

template <class Scalar>
bool is_scalar_matrix(const MatrixX<Scalar>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i == j ? a(i, j) != a(0, 0) : !is_zero(a(i, j))) return false;
    }
  }
  return true;
}

template <class Scalar>
bool is_diagonal(const MatrixX<Scalar>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j && !is_zero(a(i, j))) return false;
    }
  }
  return true;
}

CycMatrix inverse_of(const CycMatrix& a);
// Inverse over Q; throws NotInvertible unless det = +-1.
IntMatrix inverse_of(const IntMatrix& a);
Integer determinant_of(const IntMatrix& a);

template <class Scalar>
MatrixX<Scalar> conjugate(const MatrixX<Scalar>& a, const MatrixX<Scalar>& by) {
  return multiply(multiply(by, a), inverse_of(by));
}

// a b a^-1 b^-1
template <class Scalar>
MatrixX<Scalar> commutator(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  return multiply(multiply(a, b), inverse_of(multiply(b, a)));
}

template <class Scalar>
MatrixX<Scalar> block_diagonal(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

template <class Scalar>
MatrixX<Scalar> matrix_power(const MatrixX<Scalar>& g, long long e) {
  MatrixX<Scalar> base = e < 0 ? inverse_of(g) : g;
  auto k = static_cast<unsigned long long>(e < 0 ? -e : e);
  MatrixX<Scalar> result = identity_like(g);
  while (k) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k) base = multiply(base, base);
  }
  return result;
}

// Minimal m <= cap with g^m = 1; throws OrderCapExceeded otherwise.
template <class Scalar>
long long element_order(const MatrixX<Scalar>& g, long long cap = kDefaultElementOrderCap) {
  if (g.rows() != g.cols()) fail(ErrorKind::ShapeError, "element order of a non-square matrix");
  MatrixX<Scalar> power = g;
  for (long long m = 1; m <= cap; ++m) {
    if (is_identity(power)) return m;
    power = multiply(power, g);
  }
  fail(ErrorKind::OrderCapExceeded, "no g^m = 1 with m <= " + std::to_string(cap));
}

CycMatrix diagonal_matrix(const std::vector<CycNumber>& entries);
CycMatrix scalar_matrix(Eigen::Index n, const CycNumber& value);

// First context found among the entries; nullptr for purely rational matrices.
const CycContext* matrix_context(const CycMatrix& m);

CycMatrix embed(const CycMatrix& m, const CycContext& target);

std::size_t hash_value(const CycMatrix& m) noexcept;
std::size_t hash_value(const IntMatrix& m) noexcept;

// Compact JSON serialization; canonical element orders sort by this string.
std::string canonical_key(const CycMatrix& m);
std::string canonical_key(const IntMatrix& m);

struct Eigenspace {
  CycNumber eigenvalue;
  CycMatrix basis;  // rows, reduced row echelon form
};

struct EigenDecomposition {
  std::vector<Eigenspace> spaces;  // by increasing exponent k of eigenvalue z_N^k

  Eigen::Index total_dimension() const;
};

// Candidate eigenvalues are the roots of unity of order dividing ord(g);
// requires ord(g) | N (OrderNotInContext otherwise).
EigenDecomposition eigen_decompose(const CycMatrix& g, const CycContext& ctx,
                                   long long order_cap = kDefaultElementOrderCap);
EigenDecomposition eigen_decompose(const CycMatrix& g, long long order_cap = kDefaultElementOrderCap);

std::string to_string(const CycMatrix& m);

}  // namespace pgw
