#pragma once

// Projective actions of matrix groups over Q(zeta_N): PGL images, pointwise
// fixed projective subspaces and orbits of points.

#include "pgw/group.hpp"

#include <vector>

namespace pgw {

// A PGL class, represented by the matrix scaled so that its first nonzero
// entry (row-major) is 1. Equal classes have equal representatives.
struct ProjElement {
  CycMatrix representative;

  friend bool operator==(const ProjElement& a, const ProjElement& b) {
    return a.representative == b.representative;
  }
};

ProjElement projectivize(const CycMatrix& m);

template <>
struct GroupTraits<ProjElement> {
  using Element = ProjElement;
  static Element multiply(const Element& a, const Element& b) {
    return projectivize(pgw::multiply(a.representative, b.representative));
  }
  static Element inverse(const Element& a) { return projectivize(inverse_of(a.representative)); }
  static Element identity_like(const Element& a) { return projectivize(pgw::identity_like(a.representative)); }
  static std::size_t hash(const Element& a) { return hash_value(a.representative); }
  static bool equal(const Element& a, const Element& b) { return a == b; }
  static std::string key(const Element& a) { return canonical_key(a.representative); }
};

using ProjGroup = FiniteGroup<ProjElement>;

ProjGroup pgl_image(const FiniteGroup<CycMatrix>& g, std::size_t cap = kDefaultClosureCap);

// Scale so the first nonzero coordinate is 1; ShapeError for the zero vector.
CycVector normalize_point(const CycVector& v);

// Projective subspace P(W) given by a basis of W in reduced row echelon form.
struct ProjSubspace {
  CycMatrix basis;  // rows

  Eigen::Index dimension() const { return basis.rows() - 1; }
  friend bool operator==(const ProjSubspace& a, const ProjSubspace& b) {
    return a.basis.rows() == b.basis.rows() && a.basis == b.basis;
  }
};

inline constexpr std::size_t kDefaultCharacterTupleCap = 6561;

// Maximal pointwise-fixed projective subspaces of the group generated by
// `generators`: one per character tuple (lambda_i) with nonzero common
// eigenspace of all generators. Sorted by canonical key of the basis. An
// empty result means the action has no fixed point.
std::vector<ProjSubspace> fixed_subspaces(const std::vector<CycMatrix>& generators, Eigen::Index dimension,
                                          const CycContext& ctx,
                                          std::size_t tuple_cap = kDefaultCharacterTupleCap,
                                          long long order_cap = kDefaultElementOrderCap);
std::vector<ProjSubspace> fixed_subspaces(const FiniteGroup<CycMatrix>& g,
                                          std::size_t tuple_cap = kDefaultCharacterTupleCap,
                                          long long order_cap = kDefaultElementOrderCap);

// G-orbit of a projective point, normalized points in canonical order.
std::vector<CycVector> orbit(const CycVector& point, const FiniteGroup<CycMatrix>& g);
std::vector<CycVector> orbit(const ProjSubspace& point, const FiniteGroup<CycMatrix>& g);

std::string canonical_key(const CycVector& v);

}  // namespace pgw
