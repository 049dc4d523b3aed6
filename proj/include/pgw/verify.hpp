#pragma once

// Machine-checkable claims about the built-in constructions.

#include "pgw/catalog.hpp"
#include "pgw/serialize.hpp"

#include <functional>
#include <string>
#include <vector>

namespace pgw {

// DISCREPANCY: the computation reproducibly contradicts the stated claim and
// agrees with an independently derived value.
enum class Verdict { Pass, Fail, Discrepancy };
std::string_view to_string(Verdict v);

struct CheckResult {
  std::string id;
  std::string description;
  Verdict verdict = Verdict::Fail;
  std::string computed;
  std::string expected;
  Provenance provenance = Provenance::Derived;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct Check {
  std::string id;
  std::string description;
  std::string expected;
  Provenance provenance;
  std::function<std::string()> compute;
  // Value the computation is known to give when it contradicts `expected`.
  std::optional<std::string> known_discrepancy;
};

// All checks, in id order.
const std::vector<Check>& checks();

// Runs one check by id, or every check for "all"; UnknownId otherwise.
// Results are in id order regardless of `threads`.
std::vector<CheckResult> verify(const std::string& id = "all", unsigned threads = 1);

CheckResult run_check(const Check& c);

Json to_json(const CheckResult& r);
CheckResult check_result_from_json(const Json& j);
Json to_json(const std::vector<CheckResult>& results);
std::vector<CheckResult> verify_report_from_json(const Json& j);
std::string to_text(const std::vector<CheckResult>& results);

// Cross-checks over every built-in finite group (and projective image) of
// order <= cap: Frattini-route rank against the exhaustive rank, and the
// Frattini subgroup against both independent constructions.
struct OracleOutcome {
  std::string group;
  std::size_t order = 0;
  int rank = 0;
  int bruteforce_rank = 0;
  bool frattini_agrees = false;

  bool holds() const { return rank == bruteforce_rank && frattini_agrees; }
};
std::vector<OracleOutcome> burnside_outcomes(std::size_t cap = kDefaultBruteForceCap);

// Generator-count lemmas over every subgroup H (augment) or normal subgroup N
// (extension) of every built-in p-group.
struct LemmaOutcome {
  std::string group;
  std::size_t subgroup_order = 0;
  std::size_t produced = 0;
  std::size_t bound = 0;
  bool generates = false;

  bool holds() const { return generates && produced <= bound; }
};
std::vector<LemmaOutcome> augment_outcomes();
std::vector<LemmaOutcome> extension_outcomes();

// Unimodular 2x2 matrix from a seed: a product of elementary matrices with
// small multipliers and an optional sign change.
IntMatrix random_unimodular(unsigned seed, int steps = 6);

}  // namespace pgw
