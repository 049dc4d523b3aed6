#include "pgw/catalog.hpp"

#include "pgw/group_structure.hpp"

#include <regex>

namespace pgw {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper: return "PAPER";
    case Provenance::Trivial: return "TRIVIAL";
    case Provenance::Derived: return "DERIVED";
  }
  return "?";
}

namespace {

const CycContext& q3() { return CycContext::get(3); }
const CycContext& q9() { return CycContext::get(9); }

CycNumber z3(int k) { return root_of_unity(k, q3()); }
CycNumber one3() { return z3(0); }
CycNumber zero3() { return CycNumber(Rational(0), q3()); }

CycMatrix from_rows(const std::vector<std::vector<CycNumber>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  CycMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntMatrix int_rows(const std::vector<std::vector<long long>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

// diag with z^e_i on the diagonal, over Q(z_3).
CycMatrix diag3(const std::vector<int>& exponents) {
  std::vector<CycNumber> d;
  for (int e : exponents) d.push_back(z3(e));
  return diagonal_matrix(d);
}

std::vector<CycMatrix> fermat_generators() {
  // gamma_i multiplies x_i by z, i = 1..3, on four coordinates
  return {diag3({1, 0, 0, 0}), diag3({0, 1, 0, 0}), diag3({0, 0, 1, 0})};
}

Polynomial polynomial_from(int variables, const std::vector<std::pair<Monomial, CycNumber>>& terms) {
  Polynomial f(variables);
  for (const auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

struct SigmaArgs {
  int k1 = 0, k2 = 0, k3 = 0;
};

std::optional<SigmaArgs> parse_sigma_id(const std::string& id) {
  if (id == "sigma_t") return SigmaArgs{};
  static const std::regex pattern(R"(sigma_t\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  std::smatch m;
  if (!std::regex_match(id, m, pattern)) return std::nullopt;
  return SigmaArgs{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
}

}  // namespace

CycMatrix heisenberg_x() {
  const CycNumber o = one3(), z = zero3();
  return from_rows({{z, z, o}, {o, z, z}, {z, o, z}});
}

CycMatrix heisenberg_y() { return diag3({0, 1, 2}); }

CycMatrix heisenberg_lift_d() { return diag3({0, 0, 1}); }

CycMatrix sigma_matrix(int k1, int k2, int k3) {
  const CycNumber z(Rational(0), q9());
  return from_rows({{z, root_of_unity(k2, q9()), z}, {z, z, root_of_unity(k3, q9())}, {root_of_unity(k1, q9()), z, z}});
}

CycMatrix t_matrix_9() {
  return diagonal_matrix({root_of_unity(0, q9()), root_of_unity(3, q9()), root_of_unity(6, q9())});
}

const std::vector<CatalogEntry>& catalog() {
  using P = Provenance;
  static const std::vector<CatalogEntry> entries = {
      {"c3c3_pgl2",
       "lifts X, Y of the C3 x C3 action on P^2 (projective image of the Heisenberg group)",
       {{"pgl-order", "9", P::Paper}, {"pgl-abelian", "true", P::Paper}, {"fixed-points", "0", P::Paper}}},
      {"cA1_group",
       "<diag(z, z^-1, 1, 1), diag(z, 1, z^-1, 1), diag(1, 1, 1, z)> in GL_4",
       {{"order", "27", P::Paper}, {"abelian", "true", P::Trivial}, {"rank", "3", P::Paper}}},
      {"cA1_poly", "z1^2 + z2*z3 + z4^3", {{"degree", "3", P::Trivial}}},
      {"fermat_cubic_poly", "x1^3 + x2^3 + x3^3 + x4^3", {{"degree", "3", P::Trivial}}},
      {"fermat_group",
       "C3^3 acting on P^3, gamma_i scaling x_i by z (i = 1, 2, 3)",
       {{"order", "27", P::Paper},
        {"abelian", "true", P::Paper},
        {"rank", "3", P::Paper},
        {"fixed-points", "4", P::Derived}}},
      {"heisenberg",
       "Heisenberg group H3 = <X, Y> in SL_3 over Q(z_3)",
       {{"order", "27", P::Paper},
        {"rank", "2", P::Paper},
        {"center-order", "3", P::Paper},
        {"exponent", "3", P::Derived},
        {"frattini-order", "3", P::Derived},
        {"abelian", "false", P::Paper},
        {"pgl-order", "9", P::Paper},
        {"pgl-abelian", "true", P::Paper}}},
      {"heisenberg_extended",
       "<X, Y, D>, the extension of H3 by C3",
       {{"order", "81", P::Derived},
        {"pgl-order", "27", P::Paper},
        {"pgl-exponent", "3", P::Paper},
        {"pgl-abelian", "false", P::Paper},
        {"pgl-rank", "2", P::Paper}}},
      {"heisenberg_lift_D", "D = diag(1, 1, z), normalizing H3", {{"order", "3", P::Derived}}},
      {"order3_gl2z",
       "[[0, -1], [1, -1]] in GL_2(Z)",
       {{"order", "3", P::Derived}, {"lattice-rank", "0", P::Derived}, {"cyclic", "true", P::Trivial}}},
      {"perm3_gl3z",
       "3-cycle permutation matrix in GL_3(Z)",
       {{"order", "3", P::Trivial}, {"lattice-rank", "1", P::Derived}, {"cyclic", "true", P::Trivial}}},
      {"product_c3_4",
       "C3^3 (Fermat, 4x4) x C3 (diag(1, z)), block diagonal in dimension 6",
       {{"order", "81", P::Paper}, {"abelian", "true", P::Paper}, {"rank", "4", P::Paper}}},
      {"sigma_t",
       "sigma (lambda_i = z_9^k_i) and t = diag(1, z_3, z_3^2) over Q(z_9); sigma_t(k1,k2,k3)",
       {{"order", "27", P::Derived}, {"rank", "2", P::Derived}}},
  };
  return entries;
}

Construction builtin(const std::string& id) {
  if (id == "heisenberg" || id == "c3c3_pgl2") {
    return CycGroupSpec{id, 3, 3, {heisenberg_x(), heisenberg_y()}};
  }
  if (id == "heisenberg_lift_D") return CycGroupSpec{id, 3, 3, {heisenberg_lift_d()}};
  if (id == "heisenberg_extended") {
    return CycGroupSpec{id, 3, 3, {heisenberg_x(), heisenberg_y(), heisenberg_lift_d()}};
  }
  if (id == "fermat_group") return CycGroupSpec{id, 3, 4, fermat_generators()};
  if (id == "product_c3_4") {
    std::vector<CycMatrix> gens;
    const CycMatrix i2 = diag3({0, 0});
    const CycMatrix i4 = diag3({0, 0, 0, 0});
    for (const auto& g : fermat_generators()) gens.push_back(block_diagonal(g, i2));
    gens.push_back(block_diagonal(i4, diag3({0, 1})));
    return CycGroupSpec{id, 3, 6, gens};
  }
  if (auto args = parse_sigma_id(id)) {
    return CycGroupSpec{id, 9, 3, {sigma_matrix(args->k1, args->k2, args->k3), t_matrix_9()}};
  }
  if (id == "cA1_group") {
    return CycGroupSpec{id, 3, 4, {diag3({1, 2, 0, 0}), diag3({1, 0, 2, 0}), diag3({0, 0, 0, 1})}};
  }
  if (id == "fermat_cubic_poly") {
    return PolynomialSpec{id, 3,
                          polynomial_from(4, {{{3, 0, 0, 0}, one3()},
                                              {{0, 3, 0, 0}, one3()},
                                              {{0, 0, 3, 0}, one3()},
                                              {{0, 0, 0, 3}, one3()}})};
  }
  if (id == "cA1_poly") {
    return PolynomialSpec{id, 3,
                          polynomial_from(4, {{{2, 0, 0, 0}, one3()}, {{0, 1, 1, 0}, one3()}, {{0, 0, 0, 3}, one3()}})};
  }
  if (id == "order3_gl2z") return IntGroupSpec{id, 2, {int_rows({{0, -1}, {1, -1}})}};
  if (id == "perm3_gl3z") return IntGroupSpec{id, 3, {int_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})}};
  fail(ErrorKind::UnknownId, "no built-in construction \"" + id + "\"");
}

CycGroupSpec builtin_cyc_group(const std::string& id) {
  auto c = builtin(id);
  if (auto* g = std::get_if<CycGroupSpec>(&c)) return *g;
  fail(ErrorKind::UnknownId, "\"" + id + "\" is not a cyclotomic matrix group");
}

IntGroupSpec builtin_int_group(const std::string& id) {
  auto c = builtin(id);
  if (auto* g = std::get_if<IntGroupSpec>(&c)) return *g;
  fail(ErrorKind::UnknownId, "\"" + id + "\" is not an integer matrix group");
}

PolynomialSpec builtin_polynomial(const std::string& id) {
  auto c = builtin(id);
  if (auto* p = std::get_if<PolynomialSpec>(&c)) return *p;
  fail(ErrorKind::UnknownId, "\"" + id + "\" is not a polynomial");
}

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

template <class E>
std::string group_property(const FiniteGroup<E>& g, const std::string& property) {
  if (property == "order") return std::to_string(g.order());
  if (property == "exponent") return std::to_string(exponent(g));
  if (property == "abelian") return bool_text(is_abelian(g));
  if (property == "center-order") return std::to_string(center(g).order());
  if (property == "cyclic") return bool_text(is_cyclic(g));
  if (property == "rank" || property == "frattini-order") {
    if (g.order() == 1) return property == "rank" ? "0" : "1";
    const auto p = group_prime(g);
    if (!p) fail(ErrorKind::NotAPGroup, "order " + std::to_string(g.order()) + " is not a prime power");
    return property == "rank" ? std::to_string(min_generators(g, *p)) : std::to_string(frattini(g, *p).order());
  }
  fail(ErrorKind::UnknownId, "unknown property \"" + property + "\"");
}

}  // namespace

std::string evaluate_property(const Construction& c, const std::string& property) {
  if (const auto* g = std::get_if<CycGroupSpec>(&c)) {
    const auto group = g->closure();
    if (property.starts_with("pgl-")) return group_property(pgl_image(group), property.substr(4));
    if (property == "fixed-points") return std::to_string(fixed_subspaces(group).size());
    return group_property(group, property);
  }
  if (const auto* g = std::get_if<IntGroupSpec>(&c)) {
    if (property == "lattice-rank") return std::to_string(invariant_sublattice(g->generators, g->dimension).rank);
    return group_property(g->closure(), property);
  }
  const auto& p = std::get<PolynomialSpec>(c);
  if (property == "degree") return std::to_string(p.polynomial.degree());
  fail(ErrorKind::UnknownId, "unknown polynomial property \"" + property + "\"");
}

}  // namespace pgw
