#include "pgw/serialize.hpp"

#include <limits>

namespace pgw {

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  fail(ErrorKind::ValidationError, (where.empty() ? std::string("value") : where) + ": " + what);
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(j.get<unsigned long long>()) : Rational(j.get<long long>());
  }
  if (j.is_string()) {
    if (auto r = parse_rational(j.get<std::string>())) return *r;
    invalid(where, "malformed rational \"" + j.get<std::string>() + "\"");
  }
  invalid(where, "expected a rational as string \"p/q\" or integer, got " + std::string(j.type_name()));
}

}  // namespace

Json to_json(const CycNumber& a) {
  Json out = Json::object();
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    if (a.coeffs()[k] != 0) out[std::to_string(k)] = to_string(a.coeffs()[k]);
  }
  return out;
}

Json to_json(const CycMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CycVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return Json(x.convert_to<long long>());
  }
  return Json(x.str());
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CycNumber cyc_from_json(const Json& j, const CycContext& ctx, const std::string& where) {
  if (!j.is_object()) return CycNumber(rational_from_json(j, where), ctx);
  std::vector<Rational> coeffs(static_cast<std::size_t>(ctx.root_order()));
  for (const auto& [key, value] : j.items()) {
    const std::string at = where + "/" + key;
    std::size_t used = 0;
    long long k = -1;
    try {
      k = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || k < 0) invalid(at, "exponent key must be a non-negative integer");
    if (k >= ctx.root_order()) {
      invalid(at, "exponent " + key + " out of range for N = " + std::to_string(ctx.root_order()));
    }
    coeffs[static_cast<std::size_t>(k)] += rational_from_json(value, at);
  }
  return CycNumber(std::move(coeffs), ctx);
}

CycMatrix cyc_matrix_from_json(const Json& j, const CycContext& ctx, const std::string& where) {
  if (!j.is_array() || j.empty()) invalid(where, "matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  CycMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    const std::string at = where + "/" + std::to_string(i);
    if (!row.is_array()) invalid(at, "row must be an array");
    if (static_cast<Eigen::Index>(row.size()) != n) {
      invalid(at, "row has " + std::to_string(row.size()) + " entries; matrix must be " + std::to_string(n) + "x" +
                      std::to_string(n));
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(i, c) = cyc_from_json(row[static_cast<std::size_t>(c)], ctx, at + "/" + std::to_string(c));
    }
  }
  return m;
}

CycVector cyc_vector_from_json(const Json& j, const CycContext& ctx, const std::string& where) {
  if (!j.is_array() || j.empty()) invalid(where, "vector must be a non-empty array");
  CycVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = cyc_from_json(j[i], ctx, where + "/" + std::to_string(i));
  }
  return v;
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
  }
  if (j.is_string()) {
    if (auto r = parse_rational(j.get<std::string>())) {
      if (!is_integral(*r)) invalid(where, "integer ring forbids non-integral entry \"" + j.get<std::string>() + "\"");
      return boost::multiprecision::numerator(*r);
    }
    invalid(where, "malformed integer \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object()) invalid(where, "integer ring forbids cyclotomic coefficients");
  invalid(where, "expected an integer, got " + std::string(j.type_name()));
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) invalid(where, "matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    const std::string at = where + "/" + std::to_string(i);
    if (!row.is_array()) invalid(at, "row must be an array");
    if (static_cast<Eigen::Index>(row.size()) != n) {
      invalid(at, "row has " + std::to_string(row.size()) + " entries; matrix must be " + std::to_string(n) + "x" +
                      std::to_string(n));
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(i, c) = integer_from_json(row[static_cast<std::size_t>(c)], at + "/" + std::to_string(c));
    }
  }
  return m;
}

}  // namespace pgw
