#include "pgw/projective.hpp"

#include "pgw/serialize.hpp"

#include <map>

namespace pgw {

ProjElement projectivize(const CycMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (is_zero(m(i, j))) continue;
      const CycNumber scale = m(i, j).inverse();
      return {m.unaryExpr([&](const CycNumber& x) { return x * scale; })};
    }
  }
  fail(ErrorKind::NotInvertible, "zero matrix has no projective class");
}

ProjGroup pgl_image(const FiniteGroup<CycMatrix>& g, std::size_t cap) {
  std::vector<ProjElement> gens;
  for (const auto& x : g.generators()) gens.push_back(projectivize(x));
  return closure(projectivize(g.element(g.identity())), gens, cap);
}

CycVector normalize_point(const CycVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    const CycNumber scale = v(i).inverse();
    return v.unaryExpr([&](const CycNumber& x) { return x * scale; });
  }
  fail(ErrorKind::ShapeError, "the zero vector is not a projective point");
}

std::string canonical_key(const CycVector& v) { return to_json(v).dump(); }

namespace {

// Rows spanning {w in span(rows of u) : g w = lambda w}.
CycMatrix restrict_to_eigenspace(const CycMatrix& u, const CycMatrix& g, const CycNumber& lambda) {
  const CycMatrix shifted = g - scalar_matrix(g.rows(), lambda);
  const CycMatrix images = multiply(shifted, CycMatrix(u.transpose()));  // n x r
  const CycMatrix coeffs = kernel(images);                                // k x r
  if (coeffs.rows() == 0) return CycMatrix(0, g.cols());
  return row_space(multiply(coeffs, u));
}

}  // namespace

std::vector<ProjSubspace> fixed_subspaces(const std::vector<CycMatrix>& generators, Eigen::Index dimension,
                                          const CycContext& ctx, std::size_t tuple_cap, long long order_cap) {
  std::vector<EigenDecomposition> spectra;
  std::size_t tuples = 1;
  for (const auto& g : generators) {
    if (g.rows() != dimension || g.cols() != dimension) fail(ErrorKind::ShapeError, "generator dimension mismatch");
    spectra.push_back(eigen_decompose(g, ctx, order_cap));
    tuples *= spectra.back().spaces.size();
    if (tuples > tuple_cap) {
      fail(ErrorKind::BruteForceCapExceeded, "more than " + std::to_string(tuple_cap) + " character tuples");
    }
  }
  // Character tuples are enumerated generator by generator, dropping a
  // partial tuple as soon as its common eigenspace is zero.
  std::vector<CycMatrix> current{CycMatrix::Identity(dimension, dimension)};
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<CycMatrix> next;
    for (const auto& u : current) {
      for (const auto& space : spectra[i].spaces) {
        CycMatrix w = restrict_to_eigenspace(u, generators[i], space.eigenvalue);
        if (w.rows() > 0) next.push_back(std::move(w));
      }
    }
    current = std::move(next);
  }
  std::map<std::string, ProjSubspace> unique;
  for (auto& basis : current) {
    std::string key = canonical_key(basis);
    unique.emplace(std::move(key), ProjSubspace{std::move(basis)});
  }
  std::vector<ProjSubspace> out;
  for (auto& [key, s] : unique) out.push_back(std::move(s));
  return out;
}

std::vector<ProjSubspace> fixed_subspaces(const FiniteGroup<CycMatrix>& g, std::size_t tuple_cap,
                                          long long order_cap) {
  const CycMatrix& id = g.element(g.identity());
  const CycContext* ctx = nullptr;
  for (const auto& x : g.generators()) {
    if ((ctx = matrix_context(x))) break;
  }
  return fixed_subspaces(g.generators(), id.rows(), ctx ? *ctx : CycContext::get(1), tuple_cap, order_cap);
}

std::vector<CycVector> orbit(const CycVector& point, const FiniteGroup<CycMatrix>& g) {
  const Eigen::Index n = g.element(g.identity()).rows();
  if (point.size() != n) fail(ErrorKind::ShapeError, "point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(n));
  const CycVector start = normalize_point(point);
  std::map<std::string, CycVector> points;
  for (const auto& x : g.elements()) {
    CycVector image = normalize_point(x.lazyProduct(start));
    std::string key = canonical_key(image);
    points.emplace(std::move(key), std::move(image));
  }
  std::vector<CycVector> out;
  for (auto& [key, v] : points) out.push_back(std::move(v));
  return out;
}

std::vector<CycVector> orbit(const ProjSubspace& point, const FiniteGroup<CycMatrix>& g) {
  if (point.basis.rows() != 1) fail(ErrorKind::ShapeError, "orbit needs a projective point (dimension 0)");
  return orbit(CycVector(point.basis.row(0).transpose()), g);
}

}  // namespace pgw
