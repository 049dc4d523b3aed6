#include "pgw/verify.hpp"

#include "pgw/group_structure.hpp"
#include "pgw/io.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace pgw {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Discrepancy: return "DISCREPANCY";
  }
  return "?";
}

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

FiniteGroup<CycMatrix> cyc_group(const std::string& id) { return builtin_cyc_group(id).closure(); }

CycMatrix minus_one_corner() {
  const CycContext& q = CycContext::get(3);
  return diagonal_matrix({CycNumber(Rational(1), q), CycNumber(Rational(1), q), CycNumber(Rational(-1), q)});
}

// sigma, t (lambda_i = 1) and the scalar z_9 I.
FiniteGroup<CycMatrix> sigma_t_scalar() {
  auto spec = builtin_cyc_group("sigma_t");
  spec.generators.push_back(scalar_matrix(3, root_of_unity(1, CycContext::get(9))));
  return spec.closure();
}

// Calls f(name, group) for every built-in finite group, the projective image
// of each matrix group and a few auxiliary groups.
template <class F>
void for_each_builtin_group(F&& f) {
  for (const auto& entry : catalog()) {
    const Construction c = builtin(entry.id);
    if (const auto* g = std::get_if<CycGroupSpec>(&c)) {
      const auto group = g->closure();
      f(entry.id, group);
      f(entry.id + "/pgl", pgl_image(group));
    } else if (const auto* g = std::get_if<IntGroupSpec>(&c)) {
      f(entry.id, g->closure());
    }
  }
  const auto extra = sigma_t_scalar();
  f(std::string("sigma_t+scalar"), extra);
  f(std::string("trivial"), matrix_closure(std::vector<CycMatrix>{}, 3));
}

std::string semi_invariance_text(const Polynomial& f, const std::vector<CycMatrix>& gens) {
  std::string out;
  const auto outcomes = generator_multipliers(f, gens);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!out.empty()) out += "; ";
    out += "g" + std::to_string(i + 1) + ": ";
    if (const auto* c = std::get_if<CycNumber>(&outcomes[i])) {
      out += "multiplier " + to_string(*c);
      continue;
    }
    const auto& w = std::get<FailureWitness>(outcomes[i]);
    out += "witness " + to_string(w.first) + " -> (" + to_string(w.first_multiplier) + "), " + to_string(w.second) +
           " -> (" + (w.second_multiplier ? to_string(*w.second_multiplier) : std::string("absent")) + ")";
  }
  return out;
}

std::vector<Check> build_checks() {
  using P = Provenance;
  std::vector<Check> out;

  for (const auto& entry : catalog()) {
    for (const auto& fact : entry.facts) {
      const std::string id = entry.id;
      const std::string property = fact.property;
      out.push_back({entry.id + "-" + fact.property, entry.description + ": " + fact.property, fact.expected,
                     fact.provenance, [id, property] { return evaluate_property(builtin(id), property); }, {}});
    }
  }

  auto add = [&out](std::string id, std::string description, std::string expected, Provenance provenance,
                    std::function<std::string()> compute, std::optional<std::string> discrepancy = std::nullopt) {
    out.push_back({std::move(id), std::move(description), std::move(expected), provenance, std::move(compute),
                   std::move(discrepancy)});
  };

  add("heisenberg-center-scalar", "center of H3 equals its scalar subgroup", "true", P::Paper, [] {
                   const auto g = cyc_group("heisenberg");
                   return bool_text(center(g) == scalar_subgroup(g));
                 });
  add("heisenberg-frattini-center", "Frattini subgroup of H3 equals its center", "true", P::Derived, [] {
                   const auto g = cyc_group("heisenberg");
                   return bool_text(frattini(g, 3) == center(g));
                 });
  add("heisenberg-index-center", "index of the center in H3", "9", P::Paper,
                 [] {
                   const auto g = cyc_group("heisenberg");
                   return std::to_string(index(g, center(g)));
                 });
  add("heisenberg-commutator-scalar", "[X, Y] = z^2 I, written in the power basis of Q(z_3)",
                 "-1 - z", P::Derived, [] {
                   const CycMatrix c = commutator(heisenberg_x(), heisenberg_y());
                   return is_scalar_matrix(c) ? to_string(c(0, 0)) : std::string("not scalar");
                 });
  add("heisenberg-lift-conjugation", "D X D^-1 = X Y and D Y D^-1 = Y", "true", P::Derived, [] {
                   const CycMatrix x = heisenberg_x(), y = heisenberg_y(), d = heisenberg_lift_d();
                   return bool_text(conjugate(x, d) == multiply(x, y) && conjugate(y, d) == y);
                 });
  add("heisenberg_extended-normal-index", "<X, Y> is normal in <X, Y, D> with quotient of order 3",
                 "normal, quotient order 3", P::Derived, [] {
                   const auto g = cyc_group("heisenberg_extended");
                   const Subgroup h = subgroup_of(g, std::vector<CycMatrix>{heisenberg_x(), heisenberg_y()});
                   if (!is_normal(g, h)) return std::string("not normal");
                   return "normal, quotient order " + std::to_string(quotient_order(g, h));
                 });
  add("heisenberg_extended-generators", "extension generators of <X, Y, D> over <X, Y>", "3",
                 P::Derived, [] {
                   const auto g = cyc_group("heisenberg_extended");
                   const Subgroup h = subgroup_of(g, std::vector<CycMatrix>{heisenberg_x(), heisenberg_y()});
                   return std::to_string(extension_generators(g, h).size());
                 });
  add("y-fixed-points", "fixed points of <Y> on P^2", "3 (dimensions 0 0 0)", P::Derived, [] {
                   const auto subspaces = fixed_subspaces(matrix_closure(std::vector<CycMatrix>{heisenberg_y()}, 3));
                   std::string dims;
                   for (const auto& s : subspaces) dims += " " + std::to_string(s.dimension());
                   return std::to_string(subspaces.size()) + " (dimensions" + dims + ")";
                 });
  add("fermat-cubic-invariant", "Fermat cubic under the Fermat group", "trivial character", P::Paper, [] {
                   const auto r = semi_invariant(builtin_polynomial("fermat_cubic_poly").polynomial,
                                                 builtin_cyc_group("fermat_group").generators);
                   if (const auto* chi = std::get_if<Character>(&r)) {
                     return std::string(is_trivial(*chi) ? "trivial character" : "nontrivial character");
                   }
                   return std::string("not semi-invariant");
                 });
  add("cA1-semiinvariance", "z1^2 + z2 z3 + z4^3 under the three diagonal generators", "invariant",
                 P::Paper,
                 [] {
                   const auto f = builtin_polynomial("cA1_poly").polynomial;
                   const auto gens = builtin_cyc_group("cA1_group").generators;
                   const auto r = semi_invariant(f, gens);
                   if (const auto* chi = std::get_if<Character>(&r); chi && is_trivial(*chi)) {
                     return std::string("invariant");
                   }
                   return semi_invariance_text(f, gens);
                 },
                 "g1: witness z1^2 -> (-1 - z), z4^3 -> (1); g2: witness z1^2 -> (-1 - z), z4^3 -> (1); "
                 "g3: multiplier 1");
  add("fermat_group-orbit-all-ones", "orbit of (1:1:1:1) under the Fermat group", "27", P::Derived, [] {
                   const CycContext& q = CycContext::get(3);
                   CycVector p(4);
                   for (Eigen::Index i = 0; i < 4; ++i) p(i) = CycNumber(Rational(1), q);
                   return std::to_string(orbit(p, cyc_group("fermat_group")).size());
                 });
  add("product_c3_4-direct-product", "direct_product(Fermat group, <diag(1, z)>)", "order 81, rank 4",
                 P::Paper, [] {
                   const CycContext& q = CycContext::get(3);
                   const auto c3 = matrix_closure(
                       std::vector<CycMatrix>{diagonal_matrix({root_of_unity(0, q), root_of_unity(1, q)})}, 2);
                   const auto g = direct_product(cyc_group("fermat_group"), c3);
                   return "order " + std::to_string(g.order()) + ", rank " + std::to_string(min_generators(g, 3));
                 });
  add("sigma_t-scalar-rank", "<sigma, t, z_9 I> with lambda_i = 1", "order 81, rank 3, bruteforce 3",
                 P::Derived, [] {
                   const auto g = sigma_t_scalar();
                   return "order " + std::to_string(g.order()) + ", rank " + std::to_string(min_generators(g, 3)) +
                          ", bruteforce " + std::to_string(min_generators_bruteforce(g));
                 });
  add("sylow-order", "Sylow 3-subgroup of <X, Y, diag(1, 1, -1)>", "27", P::Derived, [] {
                   const auto g =
                       matrix_closure(std::vector<CycMatrix>{heisenberg_x(), heisenberg_y(), minus_one_corner()}, 3);
                   return std::to_string(sylow_p(g, 3).order());
                 });
  add("sylow-ambient-order", "order of <X, Y, diag(1, 1, -1)>", "216", P::Derived, [] {
                   return std::to_string(
                       matrix_closure(std::vector<CycMatrix>{heisenberg_x(), heisenberg_y(), minus_one_corner()}, 3)
                           .order());
                 });
  add("trivial-group-rank", "rank of the trivial group", "0", P::Trivial, [] {
                   return std::to_string(min_generators(matrix_closure(std::vector<CycMatrix>{}, 3), 3));
                 });
  add("perm3_gl3z-lattice-basis", "invariant sublattice of the 3-cycle in GL_3(Z)", "[[1,1,1]]",
                 P::Derived, [] {
                   const auto g = builtin_int_group("perm3_gl3z");
                   return to_json(invariant_sublattice(g.generators, g.dimension).basis).dump();
                 });
  add("gl2z-random-conjugates", "largest invariant rank over 100 unimodular conjugates of [[0,-1],[1,-1]]",
                 "0", P::Paper, [] {
                   const IntMatrix a = builtin_int_group("order3_gl2z").generators.front();
                   Eigen::Index worst = 0;
                   for (unsigned seed = 0; seed < 100; ++seed) {
                     const IntMatrix p = random_unimodular(seed);
                     const IntMatrix c = multiply(multiply(p, a), inverse_of(p));
                     worst = std::max(worst, invariant_sublattice({c}, 2).rank);
                   }
                   return std::to_string(worst);
                 });
  add("burnside-oracle", "Frattini-route rank equals exhaustive rank on all built-in groups", "true",
                 P::Derived, [] {
                   std::string bad;
                   for (const auto& o : burnside_outcomes()) {
                     if (o.rank != o.bruteforce_rank) bad += (bad.empty() ? "" : ", ") + o.group;
                   }
                   return bad.empty() ? std::string("true") : "disagree: " + bad;
                 });
  add("frattini-oracle",
                 "Frattini subgroup equals the maximal-subgroup intersection and <commutators, p-th powers>", "true",
                 P::Derived, [] {
                   std::string bad;
                   for (const auto& o : burnside_outcomes()) {
                     if (!o.frattini_agrees) bad += (bad.empty() ? "" : ", ") + o.group;
                   }
                   return bad.empty() ? std::string("true") : "disagree: " + bad;
                 });
  add("lemma-augment", "augmented generators generate G within |H_gens| + log_p[G:H]", "true",
                 P::Paper, [] {
                   for (const auto& o : augment_outcomes()) {
                     if (!o.holds()) return o.group + ": " + std::to_string(o.produced) + " > " + std::to_string(o.bound);
                   }
                   return std::string("true");
                 });
  add("lemma-extension", "extension generators generate G within d(N) + d(G/N)", "true", P::Paper, [] {
                   for (const auto& o : extension_outcomes()) {
                     if (!o.holds()) return o.group + ": " + std::to_string(o.produced) + " > " + std::to_string(o.bound);
                   }
                   return std::string("true");
                 });

  std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return out;
}

}  // namespace

const std::vector<Check>& checks() {
  static const std::vector<Check> all = build_checks();
  return all;
}

CheckResult run_check(const Check& c) {
  CheckResult r{c.id, c.description, Verdict::Fail, "", c.expected, c.provenance};
  try {
    r.computed = c.compute();
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
    return r;
  }
  if (r.computed == c.expected) {
    r.verdict = Verdict::Pass;
  } else if (c.known_discrepancy && r.computed == *c.known_discrepancy) {
    r.verdict = Verdict::Discrepancy;
  }
  return r;
}

std::vector<CheckResult> verify(const std::string& id, unsigned threads) {
  std::vector<const Check*> selected;
  for (const auto& c : checks()) {
    if (id == "all" || c.id == id) selected.push_back(&c);
  }
  if (selected.empty()) fail(ErrorKind::UnknownId, "no check \"" + id + "\"");

  std::vector<CheckResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < selected.size();) results[i] = run_check(*selected[i]);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(selected.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return results;
}

Json to_json(const CheckResult& r) {
  return {{"id", r.id},
          {"description", r.description},
          {"verdict", to_string(r.verdict)},
          {"computed", r.computed},
          {"expected", r.expected},
          {"provenance", to_string(r.provenance)}};
}

CheckResult check_result_from_json(const Json& j) {
  CheckResult r;
  r.id = j.at("id").get<std::string>();
  r.description = j.at("description").get<std::string>();
  r.computed = j.at("computed").get<std::string>();
  r.expected = j.at("expected").get<std::string>();
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict == "PASS") {
    r.verdict = Verdict::Pass;
  } else if (verdict == "FAIL") {
    r.verdict = Verdict::Fail;
  } else if (verdict == "DISCREPANCY") {
    r.verdict = Verdict::Discrepancy;
  } else {
    fail(ErrorKind::ValidationError, "/verdict: unknown verdict \"" + verdict + "\"");
  }
  const auto provenance = j.at("provenance").get<std::string>();
  if (provenance == "PAPER") {
    r.provenance = Provenance::Paper;
  } else if (provenance == "TRIVIAL") {
    r.provenance = Provenance::Trivial;
  } else if (provenance == "DERIVED") {
    r.provenance = Provenance::Derived;
  } else {
    fail(ErrorKind::ValidationError, "/provenance: unknown provenance \"" + provenance + "\"");
  }
  return r;
}

Json to_json(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  std::size_t pass = 0, failed = 0, discrepancy = 0;
  for (const auto& r : results) {
    checks.push_back(to_json(r));
    (r.verdict == Verdict::Pass ? pass : r.verdict == Verdict::Fail ? failed : discrepancy)++;
  }
  return {{"command", "verify"},
          {"summary", {{"pass", pass}, {"fail", failed}, {"discrepancy", discrepancy}}},
          {"checks", std::move(checks)}};
}

std::vector<CheckResult> verify_report_from_json(const Json& j) {
  if (!j.is_object() || j.value("command", "") != "verify") {
    fail(ErrorKind::ValidationError, "expected a \"verify\" record");
  }
  std::vector<CheckResult> out;
  for (const auto& c : j.at("checks")) out.push_back(check_result_from_json(c));
  return out;
}

std::string to_text(const std::vector<CheckResult>& results) {
  std::size_t width = 2;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::ostringstream out;
  std::size_t pass = 0, failed = 0, discrepancy = 0;
  for (const auto& r : results) {
    const std::string verdict(to_string(r.verdict));
    out << r.id << std::string(width + 2 - r.id.size(), ' ') << verdict << std::string(13 - verdict.size(), ' ')
        << "[" << to_string(r.provenance) << "] computed: " << r.computed;
    if (r.verdict != Verdict::Pass) out << " | expected: " << r.expected;
    out << "\n";
    (r.verdict == Verdict::Pass ? pass : r.verdict == Verdict::Fail ? failed : discrepancy)++;
  }
  out << pass << " passed, " << failed << " failed, " << discrepancy << " discrepancies\n";
  return out.str();
}

std::vector<OracleOutcome> burnside_outcomes(std::size_t cap) {
  std::vector<OracleOutcome> out;
  for_each_builtin_group([&](const std::string& name, const auto& g) {
    if (g.order() > cap) return;
    OracleOutcome o{name, g.order(), 0, min_generators_bruteforce(g, cap), true};
    if (g.order() > 1) {
      const auto p = group_prime(g);
      if (!p) return;
      o.rank = min_generators(g, *p);
      const Subgroup phi = frattini(g, *p);
      o.frattini_agrees = phi == frattini_by_maximal_subgroups(g, cap) &&
                          phi == frattini_from_all_commutators_and_powers(g, *p, cap);
    }
    out.push_back(std::move(o));
  });
  return out;
}

namespace {

template <class E>
int rank_of(const FiniteGroup<E>& g) {
  if (g.order() == 1) return 0;
  return min_generators(g, *group_prime(g));
}

}  // namespace

std::vector<LemmaOutcome> augment_outcomes() {
  std::vector<LemmaOutcome> out;
  for_each_builtin_group([&](const std::string& name, const auto& g) {
    if (g.order() == 1) return;
    const auto p = group_prime(g);
    if (!p) return;
    for (const auto& h : all_subgroups(g)) {
      const auto hg = as_group(g, h);
      std::vector<std::size_t> h_gens;
      for (const auto& x : hg.generators()) h_gens.push_back(g.index_of(x));
      const std::size_t m = h_gens.size();
      const auto result = augment_generators(g, h_gens);
      out.push_back({name, h.order(), result.size(),
                     m + static_cast<std::size_t>(log_p(g.order() / h.order(), *p)),
                     subgroup_generated(g, result).order() == g.order()});
    }
  });
  return out;
}

std::vector<LemmaOutcome> extension_outcomes() {
  std::vector<LemmaOutcome> out;
  for_each_builtin_group([&](const std::string& name, const auto& g) {
    if (g.order() == 1 || !group_prime(g)) return;
    for (const auto& n : all_subgroups(g)) {
      if (!is_normal(g, n)) continue;
      const auto result = extension_generators(g, n);
      const auto bound = static_cast<std::size_t>(rank_of(as_group(g, n)) + rank_of(quotient(g, n).group));
      out.push_back({name, n.order(), result.size(), bound, subgroup_generated(g, result).order() == g.order()});
    }
  });
  return out;
}

IntMatrix random_unimodular(unsigned seed, int steps) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> mult(-3, 3);
  IntMatrix p = IntMatrix::Identity(2, 2);
  for (int s = 0; s < steps; ++s) {
    IntMatrix e = IntMatrix::Identity(2, 2);
    if (s % 2 == 0) {
      e(0, 1) = mult(rng);
    } else {
      e(1, 0) = mult(rng);
    }
    p = multiply(p, e);
  }
  if (rng() % 2) p.row(0) = -p.row(0);
  return p;
}

}  // namespace pgw
