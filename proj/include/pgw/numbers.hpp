#pragma once

// Arbitrary-precision integers and rationals (GMP through boost::multiprecision)
// plus the hashing and text helpers shared by every exact type.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace pgw {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline void hash_combine(std::size_t& seed, std::size_t value) noexcept {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_value(const Integer& x) noexcept;
std::size_t hash_value(const Rational& x) noexcept;

// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Strict parse of "p", "-p", "p/q"; rejects zero denominators and junk.
std::optional<Rational> parse_rational(std::string_view text);
std::optional<Integer> parse_integer(std::string_view text);

inline bool is_integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

}  // namespace pgw
