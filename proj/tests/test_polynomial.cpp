#include "helpers.hpp"

#include <gtest/gtest.h>

namespace pgw {
namespace {

using test::zeta;

Polynomial random_polynomial(std::mt19937& rng, int vars, int degree, const CycContext& ctx) {
  Polynomial f(vars);
  std::uniform_int_distribution<int> e(0, degree);
  for (int t = 0; t < 4; ++t) {
    Monomial m(static_cast<std::size_t>(vars), 0);
    int left = degree;
    for (int i = 0; i < vars - 1; ++i) {
      const int k = std::min(left, e(rng));
      m[static_cast<std::size_t>(i)] = k;
      left -= k;
    }
    m.back() = left;
    f.add_term(m, test::random_cyc(rng, ctx, 3));
  }
  return f;
}

TEST(PolynomialBasics, ArithmeticAndDegree) {
  const Polynomial z1 = Polynomial::variable(2, 0), z2 = Polynomial::variable(2, 1);
  const Polynomial f = z1 * z1 + z2;
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f.coefficient({2, 0}), CycNumber(1));
  EXPECT_EQ(f.coefficient({1, 1}), CycNumber(0));
  EXPECT_EQ(homogeneous_part(f, 1), z2);
  EXPECT_EQ(Polynomial(2).degree(), -1);
  EXPECT_EQ(to_string(z1 * z2), "z1*z2");
  Polynomial g = f;
  g.add_term({0, 1}, CycNumber(-1));
  EXPECT_EQ(g, z1 * z1);
}

TEST(PolynomialBasics, MonomialOrderIsLexDescending) {
  const MonomialOrder less;
  EXPECT_TRUE(less({2, 0, 0, 0}, {0, 1, 1, 0}));
  EXPECT_TRUE(less({0, 1, 1, 0}, {0, 0, 0, 3}));
}

TEST(Action, DiagonalShortcutMatchesSubstitution) {
  std::mt19937 rng(8);
  const CycContext& ctx = CycContext::get(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial f = random_polynomial(rng, 3, 3, ctx);
    std::uniform_int_distribution<int> e(0, 8);
    const CycMatrix g = diagonal_matrix({zeta(e(rng), 9), zeta(e(rng), 9), zeta(e(rng), 9)});
    EXPECT_EQ(act_diagonal(f, g), act(f, g));
  }
  try {
    (void)act_diagonal(Polynomial::variable(3, 0), heisenberg_x());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeError);
  }
}

TEST(Action, IsARightAction) {
  std::mt19937 rng(9);
  const CycContext& ctx = CycContext::get(3);
  const std::vector<CycMatrix> mats{heisenberg_x(), heisenberg_y(), heisenberg_lift_d()};
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial f = random_polynomial(rng, 3, 3, ctx);
    for (const auto& g : mats) {
      for (const auto& h : mats) EXPECT_EQ(act(act(f, g), h), act(f, multiply(g, h)));
    }
  }
}

TEST(Action, PermutationSubstitution) {
  // f(X z) with X z = (z3, z1, z2).
  const Polynomial z1 = Polynomial::variable(3, 0);
  EXPECT_EQ(act(z1, heisenberg_x()), Polynomial::variable(3, 2));
}

TEST(SemiInvariance, FermatCubicIsInvariant) {
  const PolynomialSpec f = builtin_polynomial("fermat_cubic_poly");
  const CycGroupSpec g = builtin_cyc_group("fermat_group");
  const SemiInvariance r = semi_invariant(f.polynomial, g.generators);
  ASSERT_TRUE(std::holds_alternative<Character>(r));
  EXPECT_TRUE(is_trivial(std::get<Character>(r)));
}

TEST(SemiInvariance, CharacterIsMultiplicative) {
  // z1 z2 z3 is semi-invariant for every diagonal group.
  Polynomial f = Polynomial::variable(3, 0) * Polynomial::variable(3, 1) * Polynomial::variable(3, 2);
  const CycMatrix a = test::diag_z({1, 0, 0}), b = test::diag_z({1, 2, 2});
  const auto chi = std::get<Character>(semi_invariant(f, std::vector<CycMatrix>{a, b}));
  const auto chi_ab = std::get<Character>(semi_invariant(f, std::vector<CycMatrix>{multiply(a, b)}));
  EXPECT_EQ(chi_ab[0], chi[0] * chi[1]);
  EXPECT_EQ(chi[0], zeta(1, 3));
  EXPECT_FALSE(is_trivial(chi));
}

TEST(SemiInvariance, CharacterOverWholeGroup) {
  const auto g = builtin_cyc_group("heisenberg").closure();
  Polynomial f(3);
  for (int i = 0; i < 3; ++i) {
    Monomial m(3, 0);
    m[static_cast<std::size_t>(i)] = 3;
    f.add_term(m, CycNumber(1));
  }
  // Every element multiplies f by its character value.
  const auto r = semi_invariant(f, g);
  ASSERT_TRUE(std::holds_alternative<Character>(r));
  for (const auto& x : g.elements()) {
    const auto m = generator_multiplier(f, x, 0);
    ASSERT_TRUE(std::holds_alternative<CycNumber>(m));
    EXPECT_EQ(act(f, x), std::get<CycNumber>(m) * f);
  }
}

TEST(SemiInvariance, CA1Witness) {
  const PolynomialSpec f = builtin_polynomial("cA1_poly");
  const CycGroupSpec g = builtin_cyc_group("cA1_group");
  const SemiInvariance r = semi_invariant(f.polynomial, g.generators);
  ASSERT_TRUE(std::holds_alternative<FailureWitness>(r));
  const auto& w = std::get<FailureWitness>(r);
  EXPECT_EQ(w.generator, 0U);
  EXPECT_EQ(w.first, (Monomial{2, 0, 0, 0}));
  EXPECT_EQ(w.first_multiplier, zeta(2, 3));
  EXPECT_EQ(w.second, (Monomial{0, 0, 0, 3}));
  ASSERT_TRUE(w.second_multiplier);
  EXPECT_TRUE(w.second_multiplier->is_one());

  const auto all = generator_multipliers(f.polynomial, g.generators);
  ASSERT_EQ(all.size(), 3U);
  EXPECT_TRUE(std::holds_alternative<FailureWitness>(all[0]));
  EXPECT_TRUE(std::holds_alternative<FailureWitness>(all[1]));
  ASSERT_TRUE(std::holds_alternative<CycNumber>(all[2]));
  EXPECT_TRUE(std::get<CycNumber>(all[2]).is_one());
}

TEST(SemiInvariance, ZeroPolynomial) {
  try {
    (void)semi_invariant(Polynomial(3), std::vector<CycMatrix>{heisenberg_x()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroPolynomial);
  }
}

}  // namespace
}  // namespace pgw
