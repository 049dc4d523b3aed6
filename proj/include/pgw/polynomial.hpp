#pragma once

// Polynomials over Q(zeta_N) and their semi-invariance under linear
// substitutions. Convention: g acts by f^g(z) = f(g z).

#include "pgw/group.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pgw {

using Monomial = std::vector<int>;

// Lexicographically descending: z1^2 comes before z2 z3, which comes before z4^3.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, CycNumber, MonomialOrder>;

  explicit Polynomial(int variables) : variables_(variables) {}

  static Polynomial variable(int variables, int i);
  static Polynomial constant(int variables, const CycNumber& c);

  int variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Maximal total degree; -1 for the zero polynomial.
  int degree() const;

  // Adds c * z^m to the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const CycNumber& c);
  CycNumber coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const CycNumber& c, const Polynomial& f);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  int variables_;
  Terms terms_;
};

int total_degree(const Monomial& m);
std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& f);

Polynomial homogeneous_part(const Polynomial& f, int degree);

// f(g z) by full substitution z_i -> sum_j g_ij z_j.
Polynomial act(const Polynomial& f, const CycMatrix& g);
// Same result for diagonal g, by scaling each monomial; ShapeError otherwise.
Polynomial act_diagonal(const Polynomial& f, const CycMatrix& g);

// Why f is not semi-invariant under one generator: f^g / f has the value
// `first_multiplier` on the leading monomial of f but a different value on
// `second` (nullopt when `second` does not occur in f at all).
struct FailureWitness {
  std::size_t generator = 0;  // zero-based position in the generator list
  Monomial first;
  CycNumber first_multiplier;
  Monomial second;
  std::optional<CycNumber> second_multiplier;
};

// chi(g_i) for each generator.
using Character = std::vector<CycNumber>;
using GeneratorMultiplier = std::variant<CycNumber, FailureWitness>;
using SemiInvariance = std::variant<Character, FailureWitness>;

// f^g = c f for the returned c, or the witness of non-proportionality.
GeneratorMultiplier generator_multiplier(const Polynomial& f, const CycMatrix& g, std::size_t generator_index);
std::vector<GeneratorMultiplier> generator_multipliers(const Polynomial& f, const std::vector<CycMatrix>& generators);

// The character of f when every generator multiplies f by a scalar, else the
// first (in generator order) failure. ZeroPolynomial for f = 0.
SemiInvariance semi_invariant(const Polynomial& f, const std::vector<CycMatrix>& generators);
SemiInvariance semi_invariant(const Polynomial& f, const FiniteGroup<CycMatrix>& g);

bool is_trivial(const Character& chi);

}  // namespace pgw
