// pgroup-workbench: command-line front end for finite matrix p-groups.

#include "pgw/reports.hpp"
#include "pgw/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace {

using namespace pgw;

enum Exit { kOk = 0, kVerificationFailed = 1, kInputError = 2, kCapExceeded = 3, kDiscrepancy = 4 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderCapExceeded:
    case ErrorKind::ClosureCapExceeded:
    case ErrorKind::BruteForceCapExceeded:
      return kCapExceeded;
    default:
      return kInputError;
  }
}

struct Options {
  std::size_t max_order = kDefaultClosureCap;
  long long max_element_order = kDefaultElementOrderCap;
  bool json = false;
  unsigned threads = 1;

  Limits limits() const { return {max_order, max_element_order}; }
};

std::size_t default_max_order() {
  const char* env = std::getenv("PGW_MAX_ORDER");
  if (!env || !*env) return kDefaultClosureCap;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::ValidationError, std::string("PGW_MAX_ORDER: expected a positive integer, got \"") + env + "\"");
}

// A file path, or the id of a built-in group when no such file exists.
GroupDescription load_group(const std::string& arg) {
  if (!std::filesystem::exists(arg)) {
    try {
      const Construction c = builtin(arg);
      if (const auto* g = std::get_if<CycGroupSpec>(&c)) return *g;
      if (const auto* g = std::get_if<IntGroupSpec>(&c)) return *g;
    } catch (const Error&) {
    }
  }
  return parse_group_file(arg);
}

PolynomialSpec load_polynomial(const std::string& arg, int default_order) {
  if (!std::filesystem::exists(arg)) {
    try {
      const Construction c = builtin(arg);
      if (const auto* p = std::get_if<PolynomialSpec>(&c)) return *p;
    } catch (const Error&) {
    }
  }
  return parse_polynomial_file(arg, default_order);
}

int root_order_of(const GroupDescription& g) {
  if (const auto* c = std::get_if<CycGroupSpec>(&g)) return c->root_order;
  return 1;
}

template <class Report>
int emit(const Report& r, const Options& opt) {
  if (opt.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << to_text(r);
  }
  return kOk;
}

void emit_error(const std::string& kind, const std::string& message, const Options& opt) {
  if (opt.json) std::cout << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
  std::cerr << "error: " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact computations with finite matrix p-groups over cyclotomic fields and Z"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pgroup-workbench 1.0");

  std::string env_error;
  try {
    opt.max_order = default_max_order();
  } catch (const Error& e) {
    env_error = e.what();
  }
  app.add_option("--max-order", opt.max_order, "closure cap on the number of group elements (env PGW_MAX_ORDER)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-element-order", opt.max_element_order, "cap on the order of a single matrix")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "structured JSON output");
  app.add_option("--threads", opt.threads, "worker threads for verify")->check(CLI::PositiveNumber);

  std::string file, poly_file, point, check_id = "all", export_id;
  bool brute = false;

  auto* closure_cmd = app.add_subcommand("closure", "order, exponent, abelian, center order");
  closure_cmd->add_option("FILE", file, "group file or built-in id")->required();
  auto* rank_cmd = app.add_subcommand("rank", "minimal number of generators d(G)");
  rank_cmd->add_option("FILE", file, "group file or built-in id")->required();
  rank_cmd->add_flag("--brute", brute, "cross-check by exhaustive search");
  auto* pgl_cmd = app.add_subcommand("pgl", "image in PGL_n (quotient by scalars)");
  pgl_cmd->add_option("FILE", file, "group file or built-in id")->required();
  auto* fixed_cmd = app.add_subcommand("fixed-points", "pointwise-fixed projective subspaces");
  fixed_cmd->add_option("FILE", file, "group file or built-in id")->required();
  auto* semi_cmd = app.add_subcommand("semi-invariant", "character of a polynomial, or a witness against one");
  semi_cmd->add_option("GROUP", file, "group file or built-in id")->required();
  semi_cmd->add_option("POLY", poly_file, "polynomial file or built-in id")->required();
  auto* lattice_cmd = app.add_subcommand("invariant-lattice", "sublattice of Z^n fixed by the group");
  lattice_cmd->add_option("FILE", file, "group file or built-in id")->required();
  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a projective point");
  orbit_cmd->add_option("FILE", file, "group file or built-in id")->required();
  orbit_cmd->add_option("--point", point, "JSON array of coordinates, e.g. [1, 1, {\"1\": \"1\"}]")->required();
  auto* verify_cmd = app.add_subcommand("verify", "run the built-in checks");
  verify_cmd->add_option("ID", check_id, "check id or \"all\"");
  auto* list_cmd = app.add_subcommand("list", "built-in constructions and check ids");
  auto* export_cmd = app.add_subcommand("export", "print a built-in construction in file format");
  export_cmd->add_option("ID", export_id, "built-in id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (!env_error.empty() && app.get_option("--max-order")->count() == 0) {
      emit_error("ValidationError", env_error, opt);
      return kInputError;
    }
    const Limits limits = opt.limits();
    if (*closure_cmd) return emit(closure_report(load_group(file), limits), opt);
    if (*rank_cmd) {
      const RankReport r = rank_report(load_group(file), brute, limits);
      emit(r, opt);
      return r.consistent() ? kOk : kVerificationFailed;
    }
    if (*pgl_cmd) return emit(pgl_report(load_group(file), limits), opt);
    if (*fixed_cmd) return emit(fixed_points_report(load_group(file), limits), opt);
    if (*semi_cmd) {
      const GroupDescription g = load_group(file);
      return emit(semi_invariant_report(g, load_polynomial(poly_file, root_order_of(g))), opt);
    }
    if (*lattice_cmd) return emit(lattice_report(load_group(file), limits), opt);
    if (*orbit_cmd) {
      const GroupDescription g = load_group(file);
      const Json j = parse_json_text(point, "--point");
      const CycVector v = cyc_vector_from_json(j, CycContext::get(root_order_of(g)), "--point");
      return emit(orbit_report(g, v, limits), opt);
    }
    if (*verify_cmd) {
      const auto results = verify(check_id, opt.threads);
      if (opt.json) {
        std::cout << to_json(results).dump(2) << "\n";
      } else {
        std::cout << to_text(results);
      }
      bool failed = false, discrepancy = false;
      for (const auto& r : results) {
        failed = failed || r.verdict == Verdict::Fail;
        discrepancy = discrepancy || r.verdict == Verdict::Discrepancy;
      }
      return failed ? kVerificationFailed : discrepancy ? kDiscrepancy : kOk;
    }
    if (*list_cmd) {
      Json out = {{"constructions", Json::array()}, {"checks", Json::array()}};
      for (const auto& e : catalog()) out["constructions"].push_back({{"id", e.id}, {"description", e.description}});
      for (const auto& c : checks()) out["checks"].push_back(c.id);
      if (opt.json) {
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& e : catalog()) std::cout << e.id << "  " << e.description << "\n";
        std::cout << "\nchecks:\n";
        for (const auto& c : checks()) std::cout << "  " << c.id << "\n";
      }
      return kOk;
    }
    if (*export_cmd) {
      std::cout << to_json(builtin(export_id)).dump(2) << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    emit_error(std::string(to_string(e.kind())), e.what(), opt);
    return exit_code(e.kind());
  } catch (const Json::exception& e) {
    emit_error("ParseError", e.what(), opt);
    return kInputError;
  }
  return kInputError;
}
