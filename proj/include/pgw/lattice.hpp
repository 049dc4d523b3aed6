#pragma once

// Integer matrix groups acting on Z^n: Hermite and Smith normal forms,
// saturated integer kernels, invariant sublattices and cyclicity.

#include "pgw/group_structure.hpp"

namespace pgw {

// left * a * right = diagonal, with left and right unimodular and the
// diagonal entries d_1 | d_2 | ... non-negative.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  Eigen::Index rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form of the lattice spanned by the rows of `rows`:
// positive pivots, entries above a pivot reduced into [0, pivot), zero rows
// dropped.
IntMatrix hermite_normal_form(const IntMatrix& rows);

// Basis (HNF rows) of {v in Z^n : a v = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

struct Sublattice {
  Eigen::Index rank = 0;
  IntMatrix basis;  // rank x n, Hermite normal form

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.rank == b.rank && a.basis.rows() == b.basis.rows() && a.basis == b.basis;
  }
};

using IntGroup = FiniteGroup<IntMatrix>;

// Throws NotUnimodular unless every generator has determinant +-1.
IntGroup int_closure(const std::vector<IntMatrix>& generators, Eigen::Index dimension,
                     std::size_t cap = kDefaultClosureCap);

// Vectors fixed by every generator. Generators must have finite order
// (OrderCapExceeded otherwise).
Sublattice invariant_sublattice(const std::vector<IntMatrix>& generators, Eigen::Index dimension,
                                long long order_cap = kDefaultElementOrderCap);

// True iff some element has order |G|.
template <class E>
bool is_cyclic(const FiniteGroup<E>& g) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (static_cast<std::size_t>(element_order(g, i)) == g.order()) return true;
  }
  return false;
}

}  // namespace pgw
