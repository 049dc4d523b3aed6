#include "pgw/numbers.hpp"

#include "pgw/error.hpp"

#include <regex>

namespace pgw {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::OrderNotInContext: return "OrderNotInContext";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::NotAPGroup: return "NotAPGroup";
    case ErrorKind::BruteForceCapExceeded: return "BruteForceCapExceeded";
    case ErrorKind::NotASubset: return "NotASubset";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

namespace {

std::size_t hash_mpz(const __mpz_struct* z) noexcept {
  std::size_t seed = static_cast<std::size_t>(z->_mp_size);
  const auto limbs = static_cast<std::size_t>(z->_mp_size < 0 ? -z->_mp_size : z->_mp_size);
  for (std::size_t i = 0; i < limbs; ++i) hash_combine(seed, static_cast<std::size_t>(z->_mp_d[i]));
  return seed;
}

}  // namespace

std::size_t hash_value(const Integer& x) noexcept { return hash_mpz(x.backend().data()); }

std::size_t hash_value(const Rational& x) noexcept {
  const auto* q = x.backend().data();
  std::size_t seed = hash_mpz(mpq_numref(q));
  hash_combine(seed, hash_mpz(mpq_denref(q)));
  return seed;
}

std::string to_string(const Rational& x) { return x.str(); }
std::string to_string(const Integer& x) { return x.str(); }

std::optional<Rational> parse_rational(std::string_view text) {
  static const std::regex pattern(R"(([+-]?\d+)(?:/(\d+))?)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) return std::nullopt;
  Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den(1);
  if (m[2].matched) den = Integer(m[2].str());
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

std::optional<Integer> parse_integer(std::string_view text) {
  auto r = parse_rational(text);
  if (!r || !is_integral(*r)) return std::nullopt;
  return boost::multiprecision::numerator(*r);
}

}  // namespace pgw
