#pragma once

// Result records of the workbench commands. Each record has to_json and
// from_json with from_json(to_json(r)) == r, and a plain-text rendering.

#include "pgw/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pgw {

struct Limits {
  std::size_t max_order = kDefaultClosureCap;
  long long max_element_order = kDefaultElementOrderCap;
};

struct ClosureReport {
  std::size_t order = 0;
  long long exponent = 0;
  bool abelian = false;
  std::size_t center_order = 0;
  std::optional<long long> prime;  // set for nontrivial p-groups

  friend bool operator==(const ClosureReport&, const ClosureReport&) = default;
};

struct RankReport {
  std::size_t order = 0;
  std::optional<long long> prime;
  int rank = 0;
  std::size_t frattini_order = 1;
  std::optional<int> bruteforce_rank;

  bool consistent() const { return !bruteforce_rank || *bruteforce_rank == rank; }
  friend bool operator==(const RankReport&, const RankReport&) = default;
};

struct PglReport {
  std::size_t order = 0;
  std::size_t scalar_order = 0;
  std::size_t image_order = 0;
  long long image_exponent = 0;
  bool image_abelian = false;
  bool image_cyclic = false;
  std::optional<int> image_rank;  // when the image is a p-group (0 if trivial)

  friend bool operator==(const PglReport&, const PglReport&) = default;
};

struct FixedPointsReport {
  int cyclotomic_order = 1;
  std::vector<CycMatrix> subspaces;  // RREF bases, one row per spanning vector

  friend bool operator==(const FixedPointsReport& a, const FixedPointsReport& b);
};

struct WitnessRecord {
  Monomial first;
  CycNumber first_multiplier;
  Monomial second;
  std::optional<CycNumber> second_multiplier;

  friend bool operator==(const WitnessRecord&, const WitnessRecord&) = default;
};

// Per generator (1-based in output): the multiplier, or why there is none.
struct GeneratorOutcome {
  std::size_t generator = 1;
  std::optional<CycNumber> multiplier;
  std::optional<WitnessRecord> witness;

  friend bool operator==(const GeneratorOutcome&, const GeneratorOutcome&) = default;
};

struct SemiInvariantReport {
  int cyclotomic_order = 1;
  bool semi_invariant = false;
  bool invariant = false;
  std::vector<GeneratorOutcome> generators;

  friend bool operator==(const SemiInvariantReport&, const SemiInvariantReport&) = default;
};

struct LatticeReport {
  int dimension = 0;
  int rank = 0;
  IntMatrix basis;

  friend bool operator==(const LatticeReport& a, const LatticeReport& b);
};

struct OrbitReport {
  int cyclotomic_order = 1;
  std::vector<CycVector> points;

  friend bool operator==(const OrbitReport& a, const OrbitReport& b);
};

Json to_json(const ClosureReport& r);
Json to_json(const RankReport& r);
Json to_json(const PglReport& r);
Json to_json(const FixedPointsReport& r);
Json to_json(const SemiInvariantReport& r);
Json to_json(const LatticeReport& r);
Json to_json(const OrbitReport& r);

ClosureReport closure_report_from_json(const Json& j);
RankReport rank_report_from_json(const Json& j);
PglReport pgl_report_from_json(const Json& j);
FixedPointsReport fixed_points_report_from_json(const Json& j);
SemiInvariantReport semi_invariant_report_from_json(const Json& j);
LatticeReport lattice_report_from_json(const Json& j);
OrbitReport orbit_report_from_json(const Json& j);

std::string to_text(const ClosureReport& r);
std::string to_text(const RankReport& r);
std::string to_text(const PglReport& r);
std::string to_text(const FixedPointsReport& r);
std::string to_text(const SemiInvariantReport& r);
std::string to_text(const LatticeReport& r);
std::string to_text(const OrbitReport& r);

ClosureReport closure_report(const GroupDescription& g, const Limits& limits = {});
// NotAPGroup unless the closure is a p-group (the trivial group has rank 0).
RankReport rank_report(const GroupDescription& g, bool brute, const Limits& limits = {});
PglReport pgl_report(const GroupDescription& g, const Limits& limits = {});
FixedPointsReport fixed_points_report(const GroupDescription& g, const Limits& limits = {});
SemiInvariantReport semi_invariant_report(const GroupDescription& g, const PolynomialSpec& f);
LatticeReport lattice_report(const GroupDescription& g, const Limits& limits = {});
OrbitReport orbit_report(const GroupDescription& g, const CycVector& point, const Limits& limits = {});

}  // namespace pgw
