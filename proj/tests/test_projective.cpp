#include "helpers.hpp"

#include <gtest/gtest.h>

namespace pgw {
namespace {

using test::zeta;

// A projective subspace is fixed pointwise iff every element acts on W as a scalar.
bool fixed_pointwise_by_all(const ProjSubspace& s, const FiniteGroup<CycMatrix>& g) {
  for (const auto& x : g.elements()) {
    std::optional<CycNumber> lambda;
    for (Eigen::Index r = 0; r < s.basis.rows(); ++r) {
      const CycVector v = s.basis.row(r).transpose();
      const CycVector xv = x * v;
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i).is_zero()) {
          if (!xv(i).is_zero()) return false;
          continue;
        }
        const CycNumber ratio = xv(i) / v(i);
        if (lambda && *lambda != ratio) return false;
        lambda = ratio;
      }
    }
  }
  return true;
}

// Oracle: enumerate simultaneous eigenspaces by intersecting kernels of
// (g - lambda) over every element and every root of unity.
std::size_t count_by_enumeration(const FiniteGroup<CycMatrix>& g, const CycContext& ctx) {
  const Eigen::Index n = g.element(0).rows();
  std::set<std::string> found;
  std::vector<std::vector<CycNumber>> tuples{{}};
  for (const auto& x : g.generators()) {
    std::vector<std::vector<CycNumber>> next;
    for (const auto& t : tuples) {
      for (int k = 0; k < ctx.root_order(); ++k) {
        auto u = t;
        u.push_back(root_of_unity(k, ctx));
        next.push_back(u);
      }
    }
    tuples = next;
    (void)x;
  }
  for (const auto& t : tuples) {
    CycMatrix stacked(0, n);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const CycMatrix m = embed(g.generators()[i], ctx) - scalar_matrix(n, t[i]);
      CycMatrix next(stacked.rows() + n, n);
      next << stacked, m;
      stacked = next;
    }
    const CycMatrix k = kernel(stacked);
    if (k.rows() > 0) found.insert(canonical_key(k));
  }
  return found.size();
}

TEST(FixedSubspaces, HeisenbergHasNone) {
  EXPECT_TRUE(fixed_subspaces(builtin_cyc_group("heisenberg").closure()).empty());
  EXPECT_TRUE(fixed_subspaces(builtin_cyc_group("c3c3_pgl2").closure()).empty());
}

TEST(FixedSubspaces, DiagonalYHasThreePoints) {
  const auto g = matrix_closure<CycNumber>({heisenberg_y()}, 3);
  const auto s = fixed_subspaces(g);
  ASSERT_EQ(s.size(), 3U);
  for (const auto& p : s) {
    EXPECT_EQ(p.dimension(), 0);
    EXPECT_TRUE(fixed_pointwise_by_all(p, g));
  }
}

TEST(FixedSubspaces, AgreeWithEnumerationOracle) {
  for (const char* id : {"fermat_group", "cA1_group", "heisenberg_lift_D", "product_c3_4"}) {
    const CycGroupSpec spec = builtin_cyc_group(id);
    const auto g = spec.closure();
    const auto s = fixed_subspaces(g);
    EXPECT_EQ(s.size(), count_by_enumeration(g, spec.context())) << id;
    for (const auto& p : s) EXPECT_TRUE(fixed_pointwise_by_all(p, g)) << id;
  }
}

TEST(FixedSubspaces, TupleCap) {
  const CycGroupSpec spec = builtin_cyc_group("fermat_group");
  try {
    (void)fixed_subspaces(spec.generators, spec.dimension, spec.context(), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BruteForceCapExceeded);
  }
}

TEST(Orbit, FermatAllOnes) {
  const CycGroupSpec spec = builtin_cyc_group("fermat_group");
  const auto g = spec.closure();
  CycVector v(4);
  for (Eigen::Index i = 0; i < 4; ++i) v(i) = CycNumber(Rational(1), spec.context());
  const auto o = orbit(v, g);
  EXPECT_EQ(o.size(), 27U);
  EXPECT_EQ(g.order() % o.size(), 0U);
}

TEST(Orbit, SizeDividesGroupOrder) {
  std::mt19937 rng(4);
  for (const char* id : {"heisenberg", "heisenberg_extended", "c3c3_pgl2"}) {
    const CycGroupSpec spec = builtin_cyc_group(id);
    const auto g = spec.closure();
    for (int trial = 0; trial < 5; ++trial) {
      CycVector v(spec.dimension);
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = test::random_cyc(rng, spec.context(), 2);
      if (std::all_of(v.begin(), v.end(), [](const CycNumber& x) { return x.is_zero(); })) continue;
      const auto o = orbit(v, g);
      EXPECT_EQ(g.order() % o.size(), 0U) << id;
      // Orbits are closed: the orbit of any member is the same set.
      const auto o2 = orbit(o.back(), g);
      ASSERT_EQ(o.size(), o2.size());
      for (std::size_t i = 0; i < o.size(); ++i) EXPECT_EQ(o[i], o2[i]);
    }
  }
}

TEST(Orbit, ZeroVectorRejected) {
  try {
    (void)normalize_point(CycVector(CycVector::Zero(3)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeError);
  }
}

TEST(Pgl, HeisenbergImage) {
  const auto g = builtin_cyc_group("heisenberg").closure();
  const auto p = pgl_image(g);
  EXPECT_EQ(p.order(), 9U);
  EXPECT_TRUE(is_abelian(p));
  EXPECT_EQ(min_generators(p, 3), 2);
  EXPECT_EQ(p.order() * scalar_subgroup(g).order(), g.order());
}

TEST(Pgl, ProjectivizeIsScaleInvariant) {
  const CycMatrix x = heisenberg_x();
  EXPECT_EQ(projectivize(x), projectivize(multiply(scalar_matrix(3, zeta(1, 3)), x)));
  EXPECT_EQ(projectivize(x), projectivize(multiply(scalar_matrix(3, test::rat(5, 2)), x)));
  EXPECT_FALSE(projectivize(x) == projectivize(heisenberg_y()));
}

}  // namespace
}  // namespace pgw
