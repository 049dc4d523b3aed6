#include "pgw/reports.hpp"

#include "pgw/group_structure.hpp"

#include <numeric>
#include <sstream>

namespace pgw {

namespace {

Json optional_json(const std::optional<long long>& x) { return x ? Json(*x) : Json(nullptr); }
Json optional_json(const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); }

template <class T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

void expect_command(const Json& j, const std::string& command) {
  if (!j.is_object() || j.value("command", "") != command) {
    fail(ErrorKind::ValidationError, "expected a \"" + command + "\" record");
  }
}

bool same_matrix(const CycMatrix& a, const CycMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

std::string text(bool b) { return b ? "yes" : "no"; }

// Field large enough for every eigenvalue of every element of g.
const CycContext& splitting_context(const CycGroupSpec& spec, const FiniteGroup<CycMatrix>& g) {
  return CycContext::get(std::lcm(spec.root_order, static_cast<int>(exponent(g))));
}

std::vector<CycMatrix> embedded(const std::vector<CycMatrix>& ms, const CycContext& ctx) {
  std::vector<CycMatrix> out;
  for (const auto& m : ms) out.push_back(embed(m, ctx));
  return out;
}

CycMatrix rows_from_json(const Json& j, const CycContext& ctx, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::ValidationError, where + ": expected a non-empty array of rows");
  std::vector<CycVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(cyc_vector_from_json(j[i], ctx, where + "/" + std::to_string(i)));
  CycMatrix m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) fail(ErrorKind::ValidationError, where + ": rows of different lengths");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

FiniteGroup<CycMatrix> cyc_closure(const CycGroupSpec& spec, const Limits& limits) {
  for (const auto& x : spec.generators) (void)element_order(x, limits.max_element_order);
  return spec.closure(limits.max_order);
}

FiniteGroup<IntMatrix> int_closure_checked(const IntGroupSpec& spec, const Limits& limits) {
  for (const auto& x : spec.generators) (void)element_order(x, limits.max_element_order);
  return spec.closure(limits.max_order);
}

template <class E>
ClosureReport closure_of(const FiniteGroup<E>& g) {
  ClosureReport r;
  r.order = g.order();
  r.exponent = exponent(g);
  r.abelian = is_abelian(g);
  r.center_order = center(g).order();
  r.prime = group_prime(g);
  return r;
}

template <class E>
RankReport rank_of(const FiniteGroup<E>& g, bool brute) {
  RankReport r;
  r.order = g.order();
  if (g.order() > 1) {
    r.prime = group_prime(g);
    if (!r.prime) fail(ErrorKind::NotAPGroup, "group of order " + std::to_string(g.order()) + " is not a p-group");
    r.rank = min_generators(g, *r.prime);
    r.frattini_order = frattini(g, *r.prime).order();
  }
  if (brute) r.bruteforce_rank = min_generators_bruteforce(g);
  return r;
}

}  // namespace

bool operator==(const FixedPointsReport& a, const FixedPointsReport& b) {
  if (a.cyclotomic_order != b.cyclotomic_order || a.subspaces.size() != b.subspaces.size()) return false;
  for (std::size_t i = 0; i < a.subspaces.size(); ++i) {
    if (!same_matrix(a.subspaces[i], b.subspaces[i])) return false;
  }
  return true;
}

bool operator==(const LatticeReport& a, const LatticeReport& b) {
  return a.dimension == b.dimension && a.rank == b.rank && a.basis.rows() == b.basis.rows() &&
         a.basis.cols() == b.basis.cols() && a.basis == b.basis;
}

bool operator==(const OrbitReport& a, const OrbitReport& b) {
  if (a.cyclotomic_order != b.cyclotomic_order || a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].size() != b.points[i].size() || a.points[i] != b.points[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const ClosureReport& r) {
  return {{"command", "closure"},   {"order", r.order},
          {"exponent", r.exponent}, {"abelian", r.abelian},
          {"center_order", r.center_order}, {"prime", optional_json(r.prime)}};
}

ClosureReport closure_report_from_json(const Json& j) {
  expect_command(j, "closure");
  return {j.at("order").get<std::size_t>(), j.at("exponent").get<long long>(), j.at("abelian").get<bool>(),
          j.at("center_order").get<std::size_t>(), optional_from<long long>(j, "prime")};
}

Json to_json(const RankReport& r) {
  return {{"command", "rank"},
          {"order", r.order},
          {"prime", optional_json(r.prime)},
          {"rank", r.rank},
          {"frattini_order", r.frattini_order},
          {"bruteforce_rank", optional_json(r.bruteforce_rank)}};
}

RankReport rank_report_from_json(const Json& j) {
  expect_command(j, "rank");
  return {j.at("order").get<std::size_t>(), optional_from<long long>(j, "prime"), j.at("rank").get<int>(),
          j.at("frattini_order").get<std::size_t>(), optional_from<int>(j, "bruteforce_rank")};
}

Json to_json(const PglReport& r) {
  return {{"command", "pgl"},
          {"order", r.order},
          {"scalar_order", r.scalar_order},
          {"image_order", r.image_order},
          {"image_exponent", r.image_exponent},
          {"image_abelian", r.image_abelian},
          {"image_cyclic", r.image_cyclic},
          {"image_rank", optional_json(r.image_rank)}};
}

PglReport pgl_report_from_json(const Json& j) {
  expect_command(j, "pgl");
  return {j.at("order").get<std::size_t>(),        j.at("scalar_order").get<std::size_t>(),
          j.at("image_order").get<std::size_t>(),  j.at("image_exponent").get<long long>(),
          j.at("image_abelian").get<bool>(),       j.at("image_cyclic").get<bool>(),
          optional_from<int>(j, "image_rank")};
}

Json to_json(const FixedPointsReport& r) {
  Json subspaces = Json::array();
  for (const auto& b : r.subspaces) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < b.rows(); ++i) rows.push_back(to_json(CycVector(b.row(i).transpose())));
    subspaces.push_back({{"dimension", b.rows() - 1}, {"basis", std::move(rows)}});
  }
  return {{"command", "fixed-points"},
          {"cyclotomic_order", r.cyclotomic_order},
          {"count", r.subspaces.size()},
          {"subspaces", std::move(subspaces)}};
}

FixedPointsReport fixed_points_report_from_json(const Json& j) {
  expect_command(j, "fixed-points");
  FixedPointsReport r;
  r.cyclotomic_order = j.at("cyclotomic_order").get<int>();
  const CycContext& ctx = CycContext::get(r.cyclotomic_order);
  for (const auto& s : j.at("subspaces")) r.subspaces.push_back(rows_from_json(s.at("basis"), ctx, "/basis"));
  return r;
}

namespace {

Json to_json(const WitnessRecord& w) {
  return {{"first", w.first},
          {"first_multiplier", to_json(w.first_multiplier)},
          {"second", w.second},
          {"second_multiplier", w.second_multiplier ? to_json(*w.second_multiplier) : Json(nullptr)}};
}

WitnessRecord witness_from_json(const Json& j, const CycContext& ctx) {
  WitnessRecord w;
  w.first = j.at("first").get<Monomial>();
  w.first_multiplier = cyc_from_json(j.at("first_multiplier"), ctx, "/first_multiplier");
  w.second = j.at("second").get<Monomial>();
  if (!j.at("second_multiplier").is_null()) {
    w.second_multiplier = cyc_from_json(j.at("second_multiplier"), ctx, "/second_multiplier");
  }
  return w;
}

}  // namespace

Json to_json(const SemiInvariantReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    gens.push_back({{"generator", g.generator},
                    {"multiplier", g.multiplier ? to_json(*g.multiplier) : Json(nullptr)},
                    {"witness", g.witness ? to_json(*g.witness) : Json(nullptr)}});
  }
  return {{"command", "semi-invariant"},
          {"cyclotomic_order", r.cyclotomic_order},
          {"semi_invariant", r.semi_invariant},
          {"invariant", r.invariant},
          {"generators", std::move(gens)}};
}

SemiInvariantReport semi_invariant_report_from_json(const Json& j) {
  expect_command(j, "semi-invariant");
  SemiInvariantReport r;
  r.cyclotomic_order = j.at("cyclotomic_order").get<int>();
  r.semi_invariant = j.at("semi_invariant").get<bool>();
  r.invariant = j.at("invariant").get<bool>();
  const CycContext& ctx = CycContext::get(r.cyclotomic_order);
  for (const auto& g : j.at("generators")) {
    GeneratorOutcome o;
    o.generator = g.at("generator").get<std::size_t>();
    if (!g.at("multiplier").is_null()) o.multiplier = cyc_from_json(g.at("multiplier"), ctx, "/multiplier");
    if (!g.at("witness").is_null()) o.witness = witness_from_json(g.at("witness"), ctx);
    r.generators.push_back(std::move(o));
  }
  return r;
}

Json to_json(const LatticeReport& r) {
  Json basis = Json::array();
  for (Eigen::Index i = 0; i < r.basis.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < r.basis.cols(); ++k) row.push_back(to_json(r.basis(i, k)));
    basis.push_back(std::move(row));
  }
  return {{"command", "invariant-lattice"}, {"dimension", r.dimension}, {"rank", r.rank}, {"basis", std::move(basis)}};
}

LatticeReport lattice_report_from_json(const Json& j) {
  expect_command(j, "invariant-lattice");
  LatticeReport r;
  r.dimension = j.at("dimension").get<int>();
  r.rank = j.at("rank").get<int>();
  const Json& basis = j.at("basis");
  r.basis = IntMatrix(static_cast<Eigen::Index>(basis.size()), r.dimension);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != static_cast<std::size_t>(r.dimension)) {
      fail(ErrorKind::ValidationError, "/basis/" + std::to_string(i) + ": wrong length");
    }
    for (int k = 0; k < r.dimension; ++k) {
      r.basis(static_cast<Eigen::Index>(i), k) =
          integer_from_json(basis[i][static_cast<std::size_t>(k)], "/basis/" + std::to_string(i));
    }
  }
  return r;
}

Json to_json(const OrbitReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points) points.push_back(to_json(p));
  return {{"command", "orbit"},
          {"cyclotomic_order", r.cyclotomic_order},
          {"length", r.points.size()},
          {"points", std::move(points)}};
}

OrbitReport orbit_report_from_json(const Json& j) {
  expect_command(j, "orbit");
  OrbitReport r;
  r.cyclotomic_order = j.at("cyclotomic_order").get<int>();
  const CycContext& ctx = CycContext::get(r.cyclotomic_order);
  for (const auto& p : j.at("points")) r.points.push_back(cyc_vector_from_json(p, ctx, "/points"));
  return r;
}

// ---------------------------------------------------------------------------
// text

namespace {

std::string vector_text(const CycVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? " : " : "") + to_string(v(i));
  return out + ")";
}

}  // namespace

std::string to_text(const ClosureReport& r) {
  std::ostringstream out;
  out << "order: " << r.order << "\nexponent: " << r.exponent << "\nabelian: " << text(r.abelian)
      << "\ncenter order: " << r.center_order << "\n";
  if (r.prime) out << "p-group: p = " << *r.prime << "\n";
  return out.str();
}

std::string to_text(const RankReport& r) {
  std::ostringstream out;
  out << r.rank << "\n";
  out << "order: " << r.order;
  if (r.prime) out << " (p = " << *r.prime << ")";
  out << "\nfrattini order: " << r.frattini_order << "\n";
  if (r.bruteforce_rank) {
    out << "brute force: " << *r.bruteforce_rank << (r.consistent() ? " (agrees)" : " (DISAGREES)") << "\n";
  }
  return out.str();
}

std::string to_text(const PglReport& r) {
  std::ostringstream out;
  out << "group order: " << r.order << "\nscalar subgroup order: " << r.scalar_order
      << "\nimage order: " << r.image_order << "\nimage exponent: " << r.image_exponent
      << "\nimage abelian: " << text(r.image_abelian) << "\nimage cyclic: " << text(r.image_cyclic) << "\n";
  if (r.image_rank) out << "image rank: " << *r.image_rank << "\n";
  return out.str();
}

std::string to_text(const FixedPointsReport& r) {
  if (r.subspaces.empty()) return "no fixed points\n";
  std::ostringstream out;
  out << r.subspaces.size() << " fixed subspace(s)\n";
  for (const auto& b : r.subspaces) {
    out << "  dim " << b.rows() - 1 << ":";
    for (Eigen::Index i = 0; i < b.rows(); ++i) out << " " << vector_text(CycVector(b.row(i).transpose()));
    out << "\n";
  }
  return out.str();
}

std::string to_text(const SemiInvariantReport& r) {
  std::ostringstream out;
  out << (r.invariant ? "invariant" : r.semi_invariant ? "semi-invariant" : "not semi-invariant") << "\n";
  for (const auto& g : r.generators) {
    out << "  g" << g.generator << ": ";
    if (g.multiplier) {
      out << "f -> (" << to_string(*g.multiplier) << ") f\n";
    } else {
      const auto& w = *g.witness;
      out << "no multiplier: " << to_string(w.first) << " scales by " << to_string(w.first_multiplier) << ", "
          << to_string(w.second);
      if (w.second_multiplier) {
        out << " by " << to_string(*w.second_multiplier);
      } else {
        out << " appears only in the image";
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string to_text(const LatticeReport& r) {
  std::ostringstream out;
  out << "rank: " << r.rank << "\n";
  for (Eigen::Index i = 0; i < r.basis.rows(); ++i) {
    out << "  (";
    for (Eigen::Index k = 0; k < r.basis.cols(); ++k) out << (k ? ", " : "") << r.basis(i, k).str();
    out << ")\n";
  }
  return out.str();
}

std::string to_text(const OrbitReport& r) {
  std::ostringstream out;
  out << "orbit length: " << r.points.size() << "\n";
  for (const auto& p : r.points) out << "  " << vector_text(p) << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// analyses

ClosureReport closure_report(const GroupDescription& g, const Limits& limits) {
  if (const auto* c = std::get_if<CycGroupSpec>(&g)) return closure_of(cyc_closure(*c, limits));
  return closure_of(int_closure_checked(std::get<IntGroupSpec>(g), limits));
}

RankReport rank_report(const GroupDescription& g, bool brute, const Limits& limits) {
  if (const auto* c = std::get_if<CycGroupSpec>(&g)) return rank_of(cyc_closure(*c, limits), brute);
  return rank_of(int_closure_checked(std::get<IntGroupSpec>(g), limits), brute);
}

PglReport pgl_report(const GroupDescription& g, const Limits& limits) {
  const CycGroupSpec spec = as_cyclotomic(g);
  const auto group = cyc_closure(spec, limits);
  const ProjGroup image = pgl_image(group, limits.max_order);
  PglReport r;
  r.order = group.order();
  r.scalar_order = scalar_subgroup(group).order();
  r.image_order = image.order();
  r.image_exponent = exponent(image);
  r.image_abelian = is_abelian(image);
  r.image_cyclic = is_cyclic(image);
  if (image.order() == 1) {
    r.image_rank = 0;
  } else if (auto p = group_prime(image)) {
    r.image_rank = min_generators(image, *p);
  }
  return r;
}

FixedPointsReport fixed_points_report(const GroupDescription& g, const Limits& limits) {
  const CycGroupSpec spec = as_cyclotomic(g);
  const auto group = cyc_closure(spec, limits);
  const CycContext& ctx = splitting_context(spec, group);
  FixedPointsReport r;
  r.cyclotomic_order = ctx.root_order();
  for (auto& s : fixed_subspaces(embedded(spec.generators, ctx), spec.dimension, ctx, kDefaultCharacterTupleCap,
                                 limits.max_element_order)) {
    r.subspaces.push_back(embed(s.basis, ctx));
  }
  return r;
}

SemiInvariantReport semi_invariant_report(const GroupDescription& g, const PolynomialSpec& f) {
  const CycGroupSpec spec = as_cyclotomic(g);
  if (f.polynomial.variables() != spec.dimension) {
    fail(ErrorKind::ValidationError, "polynomial has " + std::to_string(f.polynomial.variables()) +
                                         " variables but the group acts in dimension " +
                                         std::to_string(spec.dimension));
  }
  const CycContext& ctx = CycContext::get(std::lcm(spec.root_order, f.root_order));
  Polynomial poly(f.polynomial.variables());
  for (const auto& [m, c] : f.polynomial.terms()) poly.add_term(m, embed(c, ctx));

  SemiInvariantReport r;
  r.cyclotomic_order = ctx.root_order();
  r.semi_invariant = true;
  r.invariant = true;
  const auto outcomes = generator_multipliers(poly, embedded(spec.generators, ctx));
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    GeneratorOutcome o;
    o.generator = i + 1;
    if (const auto* c = std::get_if<CycNumber>(&outcomes[i])) {
      o.multiplier = embed(*c, ctx);
      if (!c->is_one()) r.invariant = false;
    } else {
      const auto& w = std::get<FailureWitness>(outcomes[i]);
      WitnessRecord rec{w.first, embed(w.first_multiplier, ctx), w.second, std::nullopt};
      if (w.second_multiplier) rec.second_multiplier = embed(*w.second_multiplier, ctx);
      o.witness = std::move(rec);
      r.semi_invariant = false;
      r.invariant = false;
    }
    r.generators.push_back(std::move(o));
  }
  return r;
}

LatticeReport lattice_report(const GroupDescription& g, const Limits& limits) {
  const IntGroupSpec spec = as_integer(g);
  const Sublattice s = invariant_sublattice(spec.generators, spec.dimension, limits.max_element_order);
  return {static_cast<int>(spec.dimension), static_cast<int>(s.rank), s.basis};
}

OrbitReport orbit_report(const GroupDescription& g, const CycVector& point, const Limits& limits) {
  const CycGroupSpec spec = as_cyclotomic(g);
  const auto group = cyc_closure(spec, limits);
  const CycContext* pctx = nullptr;
  for (Eigen::Index i = 0; i < point.size() && !pctx; ++i) pctx = point(i).context();
  const int n = std::lcm(spec.root_order, pctx ? pctx->root_order() : 1);
  const CycContext& ctx = CycContext::get(n);
  CycVector p(point.size());
  for (Eigen::Index i = 0; i < point.size(); ++i) p(i) = embed(point(i), ctx);
  const auto big = n == spec.root_order ? group : closure(embedded(spec.generators, ctx), limits.max_order);
  OrbitReport r;
  r.cyclotomic_order = n;
  for (auto& q : orbit(p, big)) {
    CycVector e(q.size());
    for (Eigen::Index i = 0; i < q.size(); ++i) e(i) = embed(q(i), ctx);
    r.points.push_back(std::move(e));
  }
  return r;
}

}  // namespace pgw
