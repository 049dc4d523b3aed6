// Acceptance suite: one PASS/FAIL line per criterion, with its time budget.

#include "cli_runner.hpp"
#include "helpers.hpp"
#include "pgw/verify.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

namespace {

using namespace pgw;
using test::zeta;

struct Outcome {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << " [" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < budget_s, "over time budget");
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << n << ". " << name << "  (" << std::fixed
            << std::setprecision(3) << secs << " s / " << budget_s << " s)" << o.why.str() << std::endl;
}

std::vector<std::string> commands() {
  using test::data_file;
  return {"closure " + data_file("heisenberg_extended.json"),
          "rank --brute " + data_file("heisenberg.json"),
          "pgl " + data_file("sigma_t.json"),
          "fixed-points " + data_file("fermat_group.json"),
          "semi-invariant " + data_file("cA1_group.json") + " " + data_file("cA1_poly.json"),
          "invariant-lattice " + data_file("perm3_gl3z.json"),
          "orbit " + data_file("fermat_group.json") + " --point '[1,1,1,1]'",
          "rank " + data_file("sylow_example.json"),
          "closure " + data_file("unipotent.json"),
          "verify",
          "list",
          "export sigma_t"};
}

}  // namespace

int main() {
  criterion(1, "Heisenberg structure", 1.0, [](Outcome& o) {
    const auto g = builtin_cyc_group("heisenberg").closure();
    const Subgroup z = center(g);
    o.expect(g.order() == 27, "order 27");
    o.expect(z.order() == 3, "center order 3");
    o.expect(z == scalar_subgroup(g), "center is the scalar subgroup");
    o.expect(min_generators(g, 3) == 2, "d = 2");
    o.expect(exponent(g) == 3, "exponent 3");
    o.expect(frattini(g, 3) == z, "Frattini = center");
  });

  criterion(2, "Extended Heisenberg", 2.0, [](Outcome& o) {
    const auto g = builtin_cyc_group("heisenberg_extended").closure();
    o.expect(g.order() == 81, "order 81");
    const Subgroup h = subgroup_of(g, {heisenberg_x(), heisenberg_y()});
    o.expect(is_normal(g, h), "<X,Y> normal");
    o.expect(index(g, h) == 3, "index 3");
    const auto p = pgl_image(g);
    o.expect(p.order() == 27, "PGL image order 27");
    o.expect(exponent(p) == 3, "PGL exponent 3");
    o.expect(!is_abelian(p), "PGL non-abelian");
    o.expect(min_generators(p, 3) == 2, "PGL d = 2");
  });

  criterion(3, "Fixed-point freeness", 1.0, [](Outcome& o) {
    const auto h = builtin_cyc_group("c3c3_pgl2").closure();
    o.expect(pgl_image(h).order() == 9, "projective image order 9");
    o.expect(fixed_subspaces(h).empty(), "no fixed points");
    const auto y = fixed_subspaces(matrix_closure<CycNumber>({heisenberg_y()}, 3));
    o.expect(y.size() == 3 && std::all_of(y.begin(), y.end(), [](const auto& s) { return s.dimension() == 0; }),
             "<Y> has 3 fixed points");
    const auto f = fixed_subspaces(builtin_cyc_group("fermat_group").closure());
    o.expect(f.size() == 4 && std::all_of(f.begin(), f.end(), [](const auto& s) { return s.dimension() == 0; }),
             "Fermat group has 4 fixed points");
  });

  criterion(4, "Generator-rank examples", 1.0, [](Outcome& o) {
    const auto f = builtin_cyc_group("fermat_group").closure();
    o.expect(f.order() == 27 && min_generators(f, 3) == 3, "Fermat C3^3 d = 3");
    const auto p = builtin_cyc_group("product_c3_4").closure();
    o.expect(p.order() == 81 && min_generators(p, 3) == 4, "C3^4 d = 4");
  });

  criterion(5, "Burnside oracle equivalence", 60.0, [](Outcome& o) {
    const auto outcomes = burnside_outcomes(729);
    o.expect(!outcomes.empty(), "some groups checked");
    for (const auto& r : outcomes) o.expect(r.holds(), r.group);
  });

  criterion(6, "Semi-invariance", 1.0, [](Outcome& o) {
    const auto fermat = semi_invariant(builtin_polynomial("fermat_cubic_poly").polynomial,
                                       builtin_cyc_group("fermat_group").generators);
    o.expect(std::holds_alternative<Character>(fermat) && is_trivial(std::get<Character>(fermat)),
             "Fermat cubic invariant");
    const auto m = generator_multipliers(builtin_polynomial("cA1_poly").polynomial,
                                         builtin_cyc_group("cA1_group").generators);
    o.expect(m.size() == 3, "three generators");
    if (m.size() == 3) {
      o.expect(std::holds_alternative<FailureWitness>(m[0]), "witness on generator 1");
      o.expect(std::holds_alternative<FailureWitness>(m[1]), "witness on generator 2");
      o.expect(std::holds_alternative<CycNumber>(m[2]) && std::get<CycNumber>(m[2]).is_one(),
               "trivial on generator 3");
    }
    const auto v = verify("cA1-semiinvariance");
    o.expect(v.size() == 1 && v[0].verdict == Verdict::Discrepancy, "reported as DISCREPANCY");
  });

  criterion(7, "Lattice lemma", 5.0, [](Outcome& o) {
    const IntMatrix a = builtin_int_group("order3_gl2z").generators.at(0);
    for (unsigned seed = 0; seed < 100; ++seed) {
      const IntMatrix p = random_unimodular(seed);
      const IntMatrix g = multiply(multiply(p, a), inverse_of(p));
      if (invariant_sublattice({g}, 2).rank != 0) o.expect(false, "seed " + std::to_string(seed));
    }
    const IntGroupSpec perm = builtin_int_group("perm3_gl3z");
    const Sublattice s = invariant_sublattice(perm.generators, perm.dimension);
    o.expect(s.rank == 1 && s.basis == test::int_matrix({{1, 1, 1}}), "3-cycle basis (1,1,1)");
  });

  criterion(8, "GL2 lemma property suite", 30.0, [](Outcome& o) {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> gens(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = matrix_closure(test::random_conjugated_diagonal_3group(rng, 2, gens(rng)), 2);
      const std::string t = "trial " + std::to_string(trial);
      o.expect(g.order() == 1 || is_p_group(g, 3), t + " 3-group");
      o.expect(is_abelian(g), t + " abelian");
      o.expect(min_generators(g, 3) <= 2, t + " d <= 2");
      o.expect(is_cyclic(pgl_image(g)), t + " cyclic PGL image");
    }
  });

  criterion(9, "Constructive lemmas", 30.0, [](Outcome& o) {
    const auto aug = augment_outcomes();
    const auto ext = extension_outcomes();
    o.expect(!aug.empty() && !ext.empty(), "pairs checked");
    for (const auto& r : aug) o.expect(r.holds(), "augment " + r.group + " |H|=" + std::to_string(r.subgroup_order));
    for (const auto& r : ext) o.expect(r.holds(), "extension " + r.group + " |N|=" + std::to_string(r.subgroup_order));
  });

  criterion(10, "Determinism", 60.0, [](Outcome& o) {
    for (const auto& cmd : commands()) {
      const auto a = test::run_cli("--json " + cmd);
      const auto b = test::run_cli("--json " + cmd);
      const auto c = test::run_cli("--json --threads 4 " + cmd);
      o.expect(!a.out.empty(), cmd + ": no output");
      o.expect(a.out == b.out && a.exit_code == b.exit_code, cmd + ": differs across runs");
      o.expect(a.out == c.out && a.exit_code == c.exit_code, cmd + ": differs across thread counts");
    }
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
