#include "helpers.hpp"

#include <gtest/gtest.h>

namespace pgw {
namespace {

using test::diag_z;
using test::random_cyc;
using test::zeta;

CycMatrix random_matrix(std::mt19937& rng, Eigen::Index n, const CycContext& ctx) {
  CycMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = random_cyc(rng, ctx, 3);
  }
  return m;
}

// Leibniz expansion over all permutations.
CycNumber leibniz_determinant(const CycMatrix& a) {
  std::vector<int> perm(static_cast<std::size_t>(a.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  CycNumber det(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    CycNumber term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) term = term * a(static_cast<Eigen::Index>(i), perm[i]);
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

TEST(CycMatrixOps, InverseIsTwoSided) {
  std::mt19937 rng(1);
  for (int n : {3, 9}) {
    const CycContext& ctx = CycContext::get(n);
    for (int trial = 0; trial < 10; ++trial) {
      const CycMatrix a = random_matrix(rng, 3, ctx);
      if (rank(a) < 3) continue;
      const CycMatrix inv = inverse_of(a);
      EXPECT_TRUE(is_identity(multiply(a, inv)));
      EXPECT_TRUE(is_identity(multiply(inv, a)));
    }
  }
}

TEST(CycMatrixOps, DeterminantMatchesLeibniz) {
  std::mt19937 rng(2);
  const CycContext& ctx = CycContext::get(3);
  for (Eigen::Index n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const CycMatrix a = random_matrix(rng, n, ctx);
      EXPECT_EQ(determinant(a), leibniz_determinant(a));
    }
  }
}

TEST(CycMatrixOps, DeterminantIsMultiplicative) {
  std::mt19937 rng(3);
  const CycContext& ctx = CycContext::get(9);
  for (int trial = 0; trial < 5; ++trial) {
    const CycMatrix a = random_matrix(rng, 3, ctx), b = random_matrix(rng, 3, ctx);
    EXPECT_EQ(determinant(multiply(a, b)), determinant(a) * determinant(b));
  }
}

TEST(CycMatrixOps, SingularInverseThrows) {
  CycMatrix a = CycMatrix::Zero(2, 2);
  a(0, 0) = zeta(1, 3);
  try {
    (void)inverse_of(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
}

TEST(CycMatrixOps, ShapeErrors) {
  const CycMatrix a = CycMatrix::Zero(2, 3);
  for (auto op : std::vector<std::function<void()>>{
           [&] { (void)multiply(a, a); }, [&] { (void)inverse_of(a); }, [&] { (void)element_order(a); }}) {
    try {
      op();
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ShapeError);
    }
  }
}

TEST(CycMatrixOps, ElementOrders) {
  EXPECT_EQ(element_order(heisenberg_x()), 3);
  EXPECT_EQ(element_order(heisenberg_y()), 3);
  EXPECT_EQ(element_order(diag_z({1, 0, 0}, 9)), 9);
  EXPECT_EQ(element_order(multiply(heisenberg_x(), heisenberg_y())), 3);
  EXPECT_EQ(element_order(sigma_matrix(1, 1, 1)), 9);
  EXPECT_EQ(element_order(CycMatrix(CycMatrix::Identity(4, 4))), 1);
}

TEST(CycMatrixOps, InfiniteOrderHitsCap) {
  CycMatrix u = CycMatrix::Identity(2, 2);
  u(0, 1) = CycNumber(1);
  try {
    (void)element_order(u, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
}

TEST(CycMatrixOps, CommutatorOfHeisenbergGeneratorsIsScalar) {
  const CycMatrix c = commutator(heisenberg_x(), heisenberg_y());
  EXPECT_TRUE(is_scalar_matrix(c));
  EXPECT_FALSE(is_identity(c));
  EXPECT_EQ(multiplicative_order(c(0, 0)), 3);
}

TEST(CycMatrixOps, KeysAndHashesFollowEquality) {
  const CycMatrix a = multiply(heisenberg_x(), heisenberg_y());
  const CycMatrix b = multiply(heisenberg_x(), heisenberg_y());
  EXPECT_EQ(canonical_key(a), canonical_key(b));
  EXPECT_EQ(hash_value(a), hash_value(b));
  EXPECT_NE(canonical_key(a), canonical_key(multiply(heisenberg_y(), heisenberg_x())));
}

TEST(CycMatrixOps, EmbedPreservesProducts) {
  const CycContext& q9 = CycContext::get(9);
  const CycMatrix x = heisenberg_x(), y = heisenberg_y();
  EXPECT_EQ(embed(multiply(x, y), q9), multiply(embed(x, q9), embed(y, q9)));
}

void expect_valid_decomposition(const CycMatrix& g, const EigenDecomposition& d) {
  EXPECT_EQ(d.total_dimension(), g.rows());
  for (const auto& s : d.spaces) {
    for (Eigen::Index r = 0; r < s.basis.rows(); ++r) {
      const CycVector v = s.basis.row(r).transpose();
      const CycVector gv = g * v;
      for (Eigen::Index i = 0; i < v.size(); ++i) EXPECT_EQ(gv(i), s.eigenvalue * v(i));
    }
  }
}

TEST(EigenDecompose, HeisenbergX) {
  const EigenDecomposition d = eigen_decompose(heisenberg_x());
  ASSERT_EQ(d.spaces.size(), 3U);
  EXPECT_EQ(d.spaces[0].eigenvalue, zeta(0, 3));
  EXPECT_EQ(d.spaces[1].eigenvalue, zeta(1, 3));
  EXPECT_EQ(d.spaces[2].eigenvalue, zeta(2, 3));
  expect_valid_decomposition(heisenberg_x(), d);
}

TEST(EigenDecompose, RandomConjugatedDiagonal) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    for (const auto& g : test::random_conjugated_diagonal_3group(rng, 3, 2)) {
      expect_valid_decomposition(g, eigen_decompose(g));
    }
  }
}

TEST(EigenDecompose, OrderOutsideContext) {
  try {
    (void)eigen_decompose(diag_z({1, 0}, 9), CycContext::get(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderNotInContext);
  }
}

TEST(IntMatrixOps, InverseRequiresUnitDeterminant) {
  const IntMatrix a = test::int_matrix({{2, 1}, {1, 1}});
  EXPECT_TRUE(is_identity(multiply(a, inverse_of(a))));
  EXPECT_EQ(determinant_of(a), 1);
  try {
    (void)inverse_of(test::int_matrix({{2, 0}, {0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
}

}  // namespace
}  // namespace pgw
