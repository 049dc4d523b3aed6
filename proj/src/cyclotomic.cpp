#include "pgw/cyclotomic.hpp"

#include "pgw/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace pgw {

namespace {

std::vector<long long> poly_divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<long long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n < 1) fail(ErrorKind::ValidationError, "cyclotomic order must be positive");
  std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p.back() = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

const CycContext& CycContext::get(int root_order) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CycContext>> registry;
  if (root_order < 1) fail(ErrorKind::ValidationError, "cyclotomic order must be positive");
  std::lock_guard lock(mutex);
  auto& slot = registry[root_order];
  if (!slot) slot.reset(new CycContext(root_order));
  return *slot;
}

CycContext::CycContext(int root_order)
    : root_order_(root_order), polynomial_(cyclotomic_polynomial(root_order)) {
  phi_ = static_cast<int>(polynomial_.size()) - 1;
  const auto phi = static_cast<std::size_t>(phi_);
  powers_.reserve(static_cast<std::size_t>(root_order));
  for (int k = 0; k < root_order; ++k) {
    std::vector<Rational> v(phi);
    if (k < phi_) {
      v[static_cast<std::size_t>(k)] = 1;
    } else {
      const auto& prev = powers_.back();
      const Rational top = prev[phi - 1];
      for (std::size_t i = phi - 1; i > 0; --i) v[i] = prev[i - 1];
      // z^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1})
      for (std::size_t i = 0; i < phi; ++i) v[i] -= top * polynomial_[i];
    }
    powers_.push_back(std::move(v));
  }
}

CycNumber::CycNumber(const Rational& value, const CycContext& ctx)
    : ctx_(&ctx), coeffs_(static_cast<std::size_t>(ctx.phi())) {
  coeffs_[0] = value;
}

CycNumber::CycNumber(std::vector<Rational> coeffs, const CycContext& ctx) : ctx_(&ctx) {
  const auto phi = static_cast<std::size_t>(ctx.phi());
  if (coeffs.size() <= phi) {
    coeffs.resize(phi);
    coeffs_ = std::move(coeffs);
    return;
  }
  // Reduce an arbitrary-length coefficient vector, using z^N = 1.
  coeffs_.assign(phi, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const auto& zk = ctx.power(static_cast<int>(k % static_cast<std::size_t>(ctx.root_order())));
    for (std::size_t i = 0; i < phi; ++i) {
      if (zk[i] != 0) coeffs_[i] += coeffs[k] * zk[i];
    }
  }
}

Rational CycNumber::coeff(int k) const {
  return k >= 0 && static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool CycNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

const CycContext* CycNumber::common_context(const CycNumber& a, const CycNumber& b) {
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) {
    fail(ErrorKind::ContextMismatch, "Q(z_" + std::to_string(a.ctx_->root_order()) + ") vs Q(z_" +
                                         std::to_string(b.ctx_->root_order()) + ")");
  }
  return a.ctx_ ? a.ctx_ : b.ctx_;
}

std::vector<Rational> CycNumber::promoted(const CycContext& ctx) const {
  if (ctx_ == &ctx) return coeffs_;
  std::vector<Rational> v(static_cast<std::size_t>(ctx.phi()));
  v[0] = coeffs_[0];
  return v;
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  const CycContext* ctx = common_context(*this, rhs);
  if (!ctx) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  if (ctx_ != ctx) {
    coeffs_ = promoted(*ctx);
    ctx_ = ctx;
  }
  if (rhs.ctx_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  } else {
    coeffs_[0] += rhs.coeffs_[0];
  }
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) { return *this += -rhs; }

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  const CycContext* ctx = CycNumber::common_context(a, b);
  if (!ctx) return CycNumber(a.coeffs_[0] * b.coeffs_[0]);
  if (!a.ctx_ || !b.ctx_) {
    const CycNumber& scalar = a.ctx_ ? b : a;
    CycNumber r = a.ctx_ ? a : b;
    for (auto& c : r.coeffs_) c *= scalar.coeffs_[0];
    return r;
  }
  const auto n = static_cast<std::size_t>(ctx->root_order());
  const auto phi = static_cast<std::size_t>(ctx->phi());
  std::vector<Rational> acc(n);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.coeffs_[j] == 0) continue;
      acc[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<Rational> out(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t k = phi; k < n; ++k) {
    if (acc[k] == 0) continue;
    const auto& zk = ctx->power(static_cast<int>(k));
    for (std::size_t i = 0; i < phi; ++i) {
      if (zk[i] != 0) out[i] += acc[k] * zk[i];
    }
  }
  CycNumber r;
  r.ctx_ = ctx;
  r.coeffs_ = std::move(out);
  return r;
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) { return *this = *this * rhs; }

CycNumber CycNumber::inverse() const {
  if (is_zero()) fail(ErrorKind::ZeroInverse, "inverse of zero");
  if (!ctx_ || is_rational()) {
    CycNumber r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t i = 1; i < r.coeffs_.size(); ++i) r.coeffs_[i] = 0;
    return r;
  }
  // Solve (multiplication-by-this) * x = e_0 over Q.
  const auto phi = static_cast<std::size_t>(ctx_->phi());
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
  for (std::size_t j = 0; j < phi; ++j) {
    const CycNumber col = *this * root_of_unity(static_cast<long long>(j), *ctx_);
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][phi] = 1;
  for (std::size_t c = 0; c < phi; ++c) {
    std::size_t piv = c;
    while (piv < phi && m[piv][c] == 0) ++piv;
    if (piv == phi) fail(ErrorKind::ZeroInverse, "singular multiplication map");
    std::swap(m[c], m[piv]);
    const Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= phi; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> x(phi);
  for (std::size_t i = 0; i < phi; ++i) x[i] = m[i][phi];
  return CycNumber(std::move(x), *ctx_);
}

CycNumber CycNumber::pow(long long e) const {
  CycNumber base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  CycNumber result = ctx_ ? CycNumber(Rational(1), *ctx_) : CycNumber(1);
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  const CycContext* ctx = CycNumber::common_context(a, b);
  if (!ctx || (a.ctx_ && b.ctx_)) return a.coeffs_ == b.coeffs_;
  return a.promoted(*ctx) == b.promoted(*ctx);
}

std::size_t CycNumber::hash() const noexcept {
  std::size_t seed = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    hash_combine(seed, k);
    hash_combine(seed, hash_value(coeffs_[k]));
  }
  return seed;
}

CycNumber root_of_unity(long long k, const CycContext& ctx) {
  const long long n = ctx.root_order();
  const long long r = ((k % n) + n) % n;
  return CycNumber(ctx.power(static_cast<int>(r)), ctx);
}

std::optional<int> multiplicative_order(const CycNumber& a) {
  if (a.is_zero()) return std::nullopt;
  const int n = a.root_order();
  for (int m = 1; m <= n; ++m) {
    if (n % m == 0 && a.pow(m).is_one()) return m;
  }
  return std::nullopt;
}

CycNumber embed(const CycNumber& a, const CycContext& target) {
  const CycContext* src = a.context();
  if (!src) return CycNumber(a.coeff(0), target);
  if (src == &target) return a;
  if (target.root_order() % src->root_order() != 0) {
    fail(ErrorKind::ContextMismatch, "cannot embed Q(z_" + std::to_string(src->root_order()) + ") into Q(z_" +
                                         std::to_string(target.root_order()) + ")");
  }
  const long long scale = target.root_order() / src->root_order();
  CycNumber out(Rational(0), target);
  for (int k = 0; k < src->phi(); ++k) {
    const Rational c = a.coeff(k);
    if (c != 0) out += CycNumber(c) * root_of_unity(k * scale, target);
  }
  return out;
}

std::string to_string(const CycNumber& a) {
  std::string out;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    Rational c = a.coeffs()[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string power = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    if (power.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += power;
    } else {
      out += to_string(c) + "*" + power;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace pgw
