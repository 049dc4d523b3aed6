#include "helpers.hpp"
#include "pgw/verify.hpp"

#include <gtest/gtest.h>

namespace pgw {
namespace {

using test::int_matrix;

IntMatrix random_int_matrix(std::mt19937& rng, Eigen::Index r, Eigen::Index c, int range = 6) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = d(rng);
  }
  return m;
}

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant_of(m);
  return d == 1 || d == -1;
}

RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

TEST(Smith, Properties) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const IntMatrix a = random_int_matrix(rng, r, c);
    const SmithForm s = smith_normal_form(a);
    EXPECT_TRUE(is_unimodular(s.left));
    EXPECT_TRUE(is_unimodular(s.right));
    EXPECT_EQ(multiply(multiply(s.left, a), s.right), s.diagonal);
    EXPECT_EQ(s.rank, rank(to_rational(a)));
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = 0; j < c; ++j) {
        if (i != j) EXPECT_EQ(s.diagonal(i, j), 0);
      }
    }
    const Eigen::Index k = std::min(r, c);
    for (Eigen::Index i = 0; i < k; ++i) {
      EXPECT_GE(s.diagonal(i, i), 0);
      if (i + 1 < k && s.diagonal(i, i) != 0) EXPECT_EQ(s.diagonal(i + 1, i + 1) % s.diagonal(i, i), 0);
    }
  }
}

TEST(Smith, KnownExample) {
  const SmithForm s = smith_normal_form(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  EXPECT_EQ(s.diagonal(0, 0), 2);
  EXPECT_EQ(s.diagonal(1, 1), 6);
  EXPECT_EQ(s.diagonal(2, 2), 12);
}

TEST(Hermite, PropertiesAndIdempotence) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix a = random_int_matrix(rng, 1 + trial % 4, 3);
    const IntMatrix h = hermite_normal_form(a);
    EXPECT_EQ(hermite_normal_form(h), h);
    EXPECT_EQ(h.rows(), rank(to_rational(a)));
    Eigen::Index last_pivot = -1;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
      Eigen::Index p = 0;
      while (h(i, p) == 0) ++p;
      EXPECT_GT(p, last_pivot);
      EXPECT_GT(h(i, p), 0);
      for (Eigen::Index above = 0; above < i; ++above) {
        EXPECT_GE(h(above, p), 0);
        EXPECT_LT(h(above, p), h(i, p));
      }
      last_pivot = p;
    }
    // Same lattice: each spans the other, checked through the HNF of the union.
    IntMatrix both(a.rows() + h.rows(), a.cols());
    both << a, h;
    EXPECT_EQ(hermite_normal_form(both), h);
  }
}

TEST(IntegerKernel, MatchesBoxSearch) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 15; ++trial) {
    const IntMatrix a = random_int_matrix(rng, 1 + trial % 2, 3, 3);
    const IntMatrix k = integer_kernel(a);
    for (Eigen::Index i = 0; i < k.rows(); ++i) EXPECT_TRUE((a * k.row(i).transpose()).isZero());
    // Every small kernel vector is an integer combination of the basis.
    for (int x = -4; x <= 4; ++x) {
      for (int y = -4; y <= 4; ++y) {
        for (int z = -4; z <= 4; ++z) {
          IntMatrix v(1, 3);
          v << x, y, z;
          if (!(a * v.transpose()).isZero()) continue;
          IntMatrix both(k.rows() + 1, 3);
          both << k, v;
          EXPECT_EQ(hermite_normal_form(both), k) << x << " " << y << " " << z;
        }
      }
    }
  }
}

TEST(InvariantLattice, PermutationGroup) {
  const IntGroupSpec spec = builtin_int_group("perm3_gl3z");
  const Sublattice s = invariant_sublattice(spec.generators, spec.dimension);
  EXPECT_EQ(s.rank, 1);
  EXPECT_EQ(s.basis, int_matrix({{1, 1, 1}}));
}

TEST(InvariantLattice, Order3InGL2ZHasNone) {
  const IntGroupSpec spec = builtin_int_group("order3_gl2z");
  const auto g = spec.closure();
  EXPECT_EQ(g.order(), 3U);
  EXPECT_TRUE(is_cyclic(g));
  EXPECT_EQ(invariant_sublattice(spec.generators, spec.dimension).rank, 0);
}

TEST(InvariantLattice, ConjugatesHaveNoneEither) {
  const IntGroupSpec spec = builtin_int_group("order3_gl2z");
  for (unsigned seed = 0; seed < 30; ++seed) {
    const IntMatrix p = random_unimodular(seed);
    ASSERT_TRUE(is_unimodular(p));
    const IntMatrix g = multiply(multiply(p, spec.generators[0]), inverse_of(p));
    EXPECT_EQ(element_order(g), 3);
    EXPECT_EQ(invariant_sublattice({g}, 2).rank, 0);
  }
}

TEST(InvariantLattice, TrivialGroupKeepsEverything) {
  const Sublattice s = invariant_sublattice({IntMatrix(IntMatrix::Identity(3, 3))}, 3);
  EXPECT_EQ(s.rank, 3);
  EXPECT_TRUE(is_identity(s.basis));
}

TEST(IntClosure, NotUnimodular) {
  try {
    (void)int_closure({int_matrix({{2, 0}, {0, 1}})}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnimodular);
  }
}

TEST(IntClosure, InfiniteOrderIsCapped) {
  try {
    (void)invariant_sublattice({int_matrix({{1, 1}, {0, 1}})}, 2, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderCapExceeded);
  }
}

}  // namespace
}  // namespace pgw
