#pragma once

// Exact arithmetic in Q(zeta_N).
//
// Elements are stored in the power basis {1, z, ..., z^(phi(N)-1)} and are
// always fully reduced modulo the N-th cyclotomic polynomial, so equality
// and hashing are coefficientwise.

#include "pgw/numbers.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pgw {

class CycContext {
 public:
  // Contexts are interned: one instance per N for the life of the process,
  // so contexts compare by address.
  static const CycContext& get(int root_order);

  int root_order() const noexcept { return root_order_; }
  int phi() const noexcept { return phi_; }

  // Coefficients of z^k reduced into the power basis, 0 <= k < N.
  const std::vector<Rational>& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

  // Integer coefficients of the cyclotomic polynomial, little-endian, monic.
  const std::vector<long long>& polynomial() const noexcept { return polynomial_; }

  CycContext(const CycContext&) = delete;
  CycContext& operator=(const CycContext&) = delete;

 private:
  explicit CycContext(int root_order);

  int root_order_;
  int phi_;
  std::vector<long long> polynomial_;
  std::vector<std::vector<Rational>> powers_;
};

std::vector<long long> cyclotomic_polynomial(int n);

// An element of Q(zeta_N). A number without a context is a plain rational; it
// is promoted on contact with a context number. Eigen creates such numbers
// through Scalar(0) and Scalar(1).
class CycNumber {
 public:
  CycNumber() : coeffs_(1) {}
  CycNumber(int value) : coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  CycNumber(const Rational& value) : coeffs_{value} {}  // NOLINT(google-explicit-constructor)
  CycNumber(const Rational& value, const CycContext& ctx);
  CycNumber(std::vector<Rational> coeffs, const CycContext& ctx);

  const CycContext* context() const noexcept { return ctx_; }
  int root_order() const noexcept { return ctx_ ? ctx_->root_order() : 1; }

  // Power-basis coefficients; length phi(N), or 1 for context-free numbers.
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int k) const;

  bool is_zero() const;
  bool is_one() const;
  // True when the number is rational (only the z^0 coefficient may be nonzero).
  bool is_rational() const;

  CycNumber inverse() const;
  CycNumber pow(long long e) const;

  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator/=(const CycNumber& rhs) { return *this *= rhs.inverse(); }

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  CycNumber operator-() const;

  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  std::size_t hash() const noexcept;

 private:
  const CycContext* ctx_ = nullptr;
  std::vector<Rational> coeffs_;

  static const CycContext* common_context(const CycNumber& a, const CycNumber& b);
  std::vector<Rational> promoted(const CycContext& ctx) const;
};

// z_N^k (k taken mod N).
CycNumber root_of_unity(long long k, const CycContext& ctx);

// Smallest m dividing N with a^m = 1, or nullopt when a is not such a root.
// Context-free numbers use N = 1.
std::optional<int> multiplicative_order(const CycNumber& a);

// Map a number of Q(zeta_M) into Q(zeta_N) for M | N via z_M -> z_N^(N/M).
CycNumber embed(const CycNumber& a, const CycContext& target);

// Human-readable form, e.g. "-1 - z", "1/2*z^2"; z denotes the primitive root.
std::string to_string(const CycNumber& a);

inline std::ostream& operator<<(std::ostream& os, const CycNumber& a) { return os << to_string(a); }

}  // namespace pgw

template <>
struct std::hash<pgw::CycNumber> {
  std::size_t operator()(const pgw::CycNumber& a) const noexcept { return a.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<pgw::CycNumber> : GenericNumTraits<pgw::CycNumber> {
  using Real = pgw::CycNumber;
  using NonInteger = pgw::CycNumber;
  using Nested = pgw::CycNumber;
  using Literal = pgw::CycNumber;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
