#pragma once

// Group and polynomial description files.
//
// Group file:
//   {"name": "...", "ring": "cyclotomic" | "integer", "cyclotomic_order": N,
//    "dimension": n, "generators": [matrix, ...]}
// ring defaults to "cyclotomic" and cyclotomic_order to 3; an integer-ring
// file may omit cyclotomic_order. Matrix entries are CycNumber maps
// {"k": "p/q"} (or plain rationals) for the cyclotomic ring and integers for
// the integer ring.
//
// Polynomial file: either a bare list of terms or
//   {"name": "...", "cyclotomic_order": N, "variables": n, "terms": [...]}
// with each term {"exponents": [e_1, ..., e_n], "coeff": CycNumber}.

#include "pgw/catalog.hpp"
#include "pgw/serialize.hpp"

#include <optional>
#include <string>
#include <variant>

namespace pgw {

using GroupDescription = std::variant<CycGroupSpec, IntGroupSpec>;

// Parse from text; `source` prefixes diagnostics. ParseError carries
// source:line:col, ValidationError carries the JSON path of the offending field.
Json parse_json_text(const std::string& text, const std::string& source);

GroupDescription group_from_json(const Json& j, const std::string& source);
GroupDescription parse_group_text(const std::string& text, const std::string& source = "<input>");
GroupDescription parse_group_file(const std::string& path);

// `default_order` applies when the file does not state cyclotomic_order.
PolynomialSpec polynomial_from_json(const Json& j, int default_order, const std::string& source);
PolynomialSpec parse_polynomial_text(const std::string& text, int default_order = 3,
                                     const std::string& source = "<input>");
PolynomialSpec parse_polynomial_file(const std::string& path, int default_order = 3);

Json to_json(const CycGroupSpec& g);
Json to_json(const IntGroupSpec& g);
Json to_json(const PolynomialSpec& p);
Json to_json(const Construction& c);

// Reads a whole file; ParseError if it cannot be opened.
std::string read_file(const std::string& path);

// Integer groups viewed over Q (N = 1), for the projective commands.
CycGroupSpec as_cyclotomic(const GroupDescription& g);
// Cyclotomic groups whose entries are all integers, for the lattice commands;
// ValidationError otherwise.
IntGroupSpec as_integer(const GroupDescription& g);

}  // namespace pgw
