#pragma once

// JSON encodings of exact values.
//
//   CycNumber : {"k": "p/q", ...} meaning sum (p/q) z^k, 0 <= k < N
//   matrices  : row-major nested arrays of entries
//   IntMatrix : row-major nested integer arrays

#include "pgw/matrices.hpp"

#include <json.hpp>

#include <string>

namespace pgw {

using Json = nlohmann::json;

Json to_json(const CycNumber& a);
Json to_json(const CycMatrix& m);
Json to_json(const CycVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const Integer& x);

// `where` is a JSON-pointer-like location used in error messages.
// Bare integers and "p/q" strings are accepted as rational constants.
CycNumber cyc_from_json(const Json& j, const CycContext& ctx, const std::string& where = "");
CycMatrix cyc_matrix_from_json(const Json& j, const CycContext& ctx, const std::string& where = "");
CycVector cyc_vector_from_json(const Json& j, const CycContext& ctx, const std::string& where = "");
Integer integer_from_json(const Json& j, const std::string& where = "");
IntMatrix int_matrix_from_json(const Json& j, const std::string& where = "");

}  // namespace pgw
