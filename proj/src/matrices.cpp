#include "pgw/matrices.hpp"

#include "pgw/serialize.hpp"

#include <numeric>

namespace pgw {

CycMatrix inverse_of(const CycMatrix& a) { return inverse(a); }

IntMatrix inverse_of(const IntMatrix& a) {
  const RatMatrix inv = inverse(RatMatrix(a.cast<Rational>()));
  IntMatrix out(inv.rows(), inv.cols());
  for (Eigen::Index i = 0; i < inv.rows(); ++i) {
    for (Eigen::Index j = 0; j < inv.cols(); ++j) {
      if (!is_integral(inv(i, j))) fail(ErrorKind::NotInvertible, "matrix is not invertible over Z");
      out(i, j) = boost::multiprecision::numerator(inv(i, j));
    }
  }
  return out;
}

Integer determinant_of(const IntMatrix& a) {
  const Rational det = determinant(RatMatrix(a.cast<Rational>()));
  return boost::multiprecision::numerator(det);
}

CycMatrix diagonal_matrix(const std::vector<CycNumber>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  CycMatrix m = CycMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

CycMatrix scalar_matrix(Eigen::Index n, const CycNumber& value) {
  return diagonal_matrix(std::vector<CycNumber>(static_cast<std::size_t>(n), value));
}

const CycContext* matrix_context(const CycMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m(i).context()) return m(i).context();
  }
  return nullptr;
}

CycMatrix embed(const CycMatrix& m, const CycContext& target) {
  return m.unaryExpr([&](const CycNumber& a) { return embed(a, target); });
}

std::size_t hash_value(const CycMatrix& m) noexcept {
  std::size_t seed = static_cast<std::size_t>(m.rows());
  for (Eigen::Index i = 0; i < m.size(); ++i) hash_combine(seed, m(i).hash());
  return seed;
}

std::size_t hash_value(const IntMatrix& m) noexcept {
  std::size_t seed = static_cast<std::size_t>(m.rows());
  for (Eigen::Index i = 0; i < m.size(); ++i) hash_combine(seed, hash_value(m(i)));
  return seed;
}

std::string canonical_key(const CycMatrix& m) { return to_json(m).dump(); }
std::string canonical_key(const IntMatrix& m) { return to_json(m).dump(); }

Eigen::Index EigenDecomposition::total_dimension() const {
  Eigen::Index n = 0;
  for (const auto& s : spaces) n += s.basis.rows();
  return n;
}

EigenDecomposition eigen_decompose(const CycMatrix& g, const CycContext& ctx, long long order_cap) {
  const long long order = element_order(g, order_cap);
  const int n = ctx.root_order();
  if (n % order != 0) {
    fail(ErrorKind::OrderNotInContext,
         "element order " + std::to_string(order) + " does not divide N = " + std::to_string(n));
  }
  const long long step = n / order;
  EigenDecomposition out;
  for (long long k = 0; k < order; ++k) {
    const CycNumber lambda = root_of_unity(k * step, ctx);
    CycMatrix shifted = g - scalar_matrix(g.rows(), lambda);
    CycMatrix basis = kernel(shifted);
    if (basis.rows() > 0) out.spaces.push_back({lambda, std::move(basis)});
  }
  if (out.total_dimension() != g.rows()) {
    fail(ErrorKind::OrderNotInContext, "eigenspaces do not span; element is not diagonalizable over Q(z_N)");
  }
  return out;
}

EigenDecomposition eigen_decompose(const CycMatrix& g, long long order_cap) {
  const CycContext* ctx = matrix_context(g);
  return eigen_decompose(g, ctx ? *ctx : CycContext::get(1), order_cap);
}

std::string to_string(const CycMatrix& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += i ? "; " : "";
    for (Eigen::Index j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + to_string(m(i, j));
  }
  return out + "]";
}

}  // namespace pgw
