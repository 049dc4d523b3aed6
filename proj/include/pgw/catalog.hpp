#pragma once

// Built-in constructions: every explicit matrix group and polynomial the
// workbench knows by name, each with the facts expected of it.

#include "pgw/lattice.hpp"
#include "pgw/polynomial.hpp"
#include "pgw/projective.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace pgw {

struct CycGroupSpec {
  std::string name;
  int root_order = 3;
  Eigen::Index dimension = 0;
  std::vector<CycMatrix> generators;

  const CycContext& context() const { return CycContext::get(root_order); }
  FiniteGroup<CycMatrix> closure(std::size_t cap = kDefaultClosureCap) const {
    return matrix_closure(generators, dimension, cap);
  }
};

struct IntGroupSpec {
  std::string name;
  Eigen::Index dimension = 0;
  std::vector<IntMatrix> generators;

  IntGroup closure(std::size_t cap = kDefaultClosureCap) const { return int_closure(generators, dimension, cap); }
};

struct PolynomialSpec {
  std::string name;
  int root_order = 3;
  Polynomial polynomial{0};
};

using Construction = std::variant<CycGroupSpec, IntGroupSpec, PolynomialSpec>;

enum class Provenance { Paper, Trivial, Derived };
std::string_view to_string(Provenance p);

// One property of a construction together with its expected value, as text
// (see evaluate_property for the property names).
struct ExpectedFact {
  std::string property;
  std::string expected;
  Provenance provenance;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::vector<ExpectedFact> facts;
};

// Registry in id order. Parameterized ids ("sigma_t") are listed once with
// their default arguments.
const std::vector<CatalogEntry>& catalog();

// Builds "heisenberg", "sigma_t", "sigma_t(1,0,2)" etc.; UnknownId otherwise.
Construction builtin(const std::string& id);

CycGroupSpec builtin_cyc_group(const std::string& id);
IntGroupSpec builtin_int_group(const std::string& id);
PolynomialSpec builtin_polynomial(const std::string& id);

// Property names: order, exponent, abelian, rank, center-order,
// frattini-order, pgl-order, pgl-exponent, pgl-abelian, pgl-rank,
// fixed-points, lattice-rank, cyclic, degree.
std::string evaluate_property(const Construction& c, const std::string& property);

// Named matrices, all over Q(z_3) unless stated.
CycMatrix heisenberg_x();
CycMatrix heisenberg_y();
CycMatrix heisenberg_lift_d();
// sigma with lambda_i = z_9^k_i, and t = diag(1, z_3, z_3^2), over Q(z_9).
CycMatrix sigma_matrix(int k1, int k2, int k3);
CycMatrix t_matrix_9();

}  // namespace pgw
