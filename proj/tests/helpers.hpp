#pragma once

#include "pgw/catalog.hpp"
#include "pgw/group_structure.hpp"

#include <complex>
#include <numbers>
#include <random>

namespace pgw::test {

using Complex = std::complex<double>;

// Numeric image of a under z -> exp(2 pi i / N).
inline Complex evaluate(const CycNumber& a) {
  const int n = a.root_order();
  Complex sum = 0;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
    sum += a.coeffs()[k].convert_to<double>() * Complex(std::cos(angle), std::sin(angle));
  }
  return sum;
}

inline CycNumber random_cyc(std::mt19937& rng, const CycContext& ctx, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(ctx.phi()));
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return CycNumber(std::move(c), ctx);
}

inline CycNumber zeta(int k, int n) { return root_of_unity(k, CycContext::get(n)); }

inline CycNumber rat(long long p, long long q, int n = 3) { return CycNumber(Rational(p, q), CycContext::get(n)); }

inline CycMatrix diag_z(const std::vector<int>& exponents, int n = 3) {
  std::vector<CycNumber> d;
  for (int e : exponents) d.push_back(zeta(e, n));
  return diagonal_matrix(d);
}

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (long long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Naive closure: keep multiplying every known element by every known element
// until nothing new appears. Independent of the BFS in closure().
template <class E>
std::vector<std::string> naive_closure_keys(const std::vector<E>& generators, const E& identity) {
  using T = GroupTraits<E>;
  std::vector<E> elems{identity};
  std::set<std::string> keys{T::key(identity)};
  for (const auto& g : generators) {
    if (keys.insert(T::key(g)).second) elems.push_back(g);
  }
  for (bool grown = true; grown;) {
    grown = false;
    const auto snapshot = elems;
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        E c = T::multiply(a, b);
        if (keys.insert(T::key(c)).second) {
          elems.push_back(std::move(c));
          grown = true;
        }
      }
    }
  }
  return {keys.begin(), keys.end()};
}

template <class E>
std::vector<std::string> element_keys(const FiniteGroup<E>& g) {
  std::vector<std::string> out;
  for (const auto& x : g.elements()) out.push_back(GroupTraits<E>::key(x));
  return out;
}

// A random finite diagonal 3-group in dimension n, conjugated by a random
// invertible rational matrix.
inline std::vector<CycMatrix> random_conjugated_diagonal_3group(std::mt19937& rng, Eigen::Index n, int gens) {
  const CycContext& q9 = CycContext::get(9);
  std::uniform_int_distribution<int> e(0, 8), small(-2, 2);
  CycMatrix p;
  do {
    p = CycMatrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) p(i, j) = CycNumber(Rational(small(rng)), q9);
    }
  } while (rank(p) < n);
  const CycMatrix pinv = inverse_of(p);
  std::vector<CycMatrix> out;
  for (int k = 0; k < gens; ++k) {
    std::vector<CycNumber> d;
    for (Eigen::Index i = 0; i < n; ++i) d.push_back(root_of_unity(e(rng), q9));
    out.push_back(multiply(multiply(p, diagonal_matrix(d)), pinv));
  }
  return out;
}

}  // namespace pgw::test
