#include "pgw/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pgw {

namespace {

[[noreturn]] void invalid(const std::string& source, const std::string& where, const std::string& what) {
  fail(ErrorKind::ValidationError, source + ": " + (where.empty() ? std::string("/") : where) + ": " + what);
}

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& source) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) invalid(source, "/" + key, "unknown field");
  }
}

long long positive_int(const Json& j, const std::string& source, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) invalid(source, where, "expected a positive integer");
  return j.get<long long>();
}

// Errors from the serializers carry a path but not the file name.
template <class F>
auto with_source(const std::string& source, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ValidationError) throw;
    std::string what = e.what();
    const std::string prefix = std::string(to_string(ErrorKind::ValidationError)) + ": ";
    if (what.starts_with(prefix)) what = what.substr(prefix.size());
    fail(ErrorKind::ValidationError, source + ": " + what);
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the last byte read.
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    fail(ErrorKind::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

GroupDescription group_from_json(const Json& j, const std::string& source) {
  if (!j.is_object()) invalid(source, "", "group file must be a JSON object");
  check_keys(j, {"name", "ring", "cyclotomic_order", "dimension", "generators"}, source);

  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) invalid(source, "/name", "expected a string");
    name = j["name"].get<std::string>();
  }
  std::string ring = "cyclotomic";
  if (j.contains("ring")) {
    if (!j["ring"].is_string()) invalid(source, "/ring", "expected \"cyclotomic\" or \"integer\"");
    ring = j["ring"].get<std::string>();
    if (ring != "cyclotomic" && ring != "integer") invalid(source, "/ring", "expected \"cyclotomic\" or \"integer\"");
  }
  long long order = 3;
  if (j.contains("cyclotomic_order")) order = positive_int(j["cyclotomic_order"], source, "/cyclotomic_order");
  if (order > 1000000) invalid(source, "/cyclotomic_order", "too large");
  if (!j.contains("dimension")) invalid(source, "/dimension", "missing field");
  const long long dimension = positive_int(j["dimension"], source, "/dimension");
  if (!j.contains("generators")) invalid(source, "/generators", "missing field");
  const Json& gens = j["generators"];
  if (!gens.is_array()) invalid(source, "/generators", "expected an array of matrices");

  auto check_dim = [&](Eigen::Index rows, std::size_t i) {
    if (rows != dimension) {
      invalid(source, "/generators/" + std::to_string(i),
              "matrix is " + std::to_string(rows) + "x" + std::to_string(rows) + " but dimension is " +
                  std::to_string(dimension));
    }
  };

  if (ring == "integer") {
    if (j.contains("cyclotomic_order") && order != 1) {
      invalid(source, "/cyclotomic_order", "integer ring requires cyclotomic_order 1 or no cyclotomic_order");
    }
    IntGroupSpec out{name, static_cast<Eigen::Index>(dimension), {}};
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out.generators.push_back(
          with_source(source, [&] { return int_matrix_from_json(gens[i], "/generators/" + std::to_string(i)); }));
      check_dim(out.generators.back().rows(), i);
    }
    return out;
  }
  CycGroupSpec out{name, static_cast<int>(order), static_cast<Eigen::Index>(dimension), {}};
  const CycContext& ctx = out.context();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.generators.push_back(
        with_source(source, [&] { return cyc_matrix_from_json(gens[i], ctx, "/generators/" + std::to_string(i)); }));
    check_dim(out.generators.back().rows(), i);
  }
  return out;
}

GroupDescription parse_group_text(const std::string& text, const std::string& source) {
  return group_from_json(parse_json_text(text, source), source);
}

GroupDescription parse_group_file(const std::string& path) { return parse_group_text(read_file(path), path); }

PolynomialSpec polynomial_from_json(const Json& j, int default_order, const std::string& source) {
  PolynomialSpec out;
  out.root_order = default_order;
  const Json* terms = &j;
  long long variables = -1;
  std::string terms_path;
  if (j.is_object()) {
    check_keys(j, {"name", "cyclotomic_order", "variables", "terms"}, source);
    if (j.contains("name")) {
      if (!j["name"].is_string()) invalid(source, "/name", "expected a string");
      out.name = j["name"].get<std::string>();
    }
    if (j.contains("cyclotomic_order")) {
      out.root_order = static_cast<int>(positive_int(j["cyclotomic_order"], source, "/cyclotomic_order"));
    }
    if (j.contains("variables")) variables = positive_int(j["variables"], source, "/variables");
    if (!j.contains("terms")) invalid(source, "/terms", "missing field");
    terms = &j["terms"];
    terms_path = "/terms";
  }
  if (!terms->is_array()) invalid(source, terms_path, "expected an array of terms");
  if (terms->empty() && variables < 0) invalid(source, terms_path, "cannot infer the number of variables");

  const CycContext& ctx = CycContext::get(out.root_order);
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const Json& t = (*terms)[i];
    const std::string at = terms_path + "/" + std::to_string(i);
    if (!t.is_object()) invalid(source, at, "term must be an object with exponents and coeff");
    check_keys(t, {"exponents", "coeff"}, source + ": " + at);
    if (!t.contains("exponents") || !t["exponents"].is_array()) invalid(source, at + "/exponents", "expected an array");
    if (!t.contains("coeff")) invalid(source, at + "/coeff", "missing field");
    Monomial m;
    for (std::size_t k = 0; k < t["exponents"].size(); ++k) {
      const Json& e = t["exponents"][k];
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 1000) {
        invalid(source, at + "/exponents/" + std::to_string(k), "expected a non-negative integer exponent");
      }
      m.push_back(e.get<int>());
    }
    if (variables < 0) variables = static_cast<long long>(m.size());
    if (static_cast<long long>(m.size()) != variables) {
      invalid(source, at + "/exponents",
              "has " + std::to_string(m.size()) + " entries, expected " + std::to_string(variables));
    }
    if (i == 0) out.polynomial = Polynomial(static_cast<int>(variables));
    const CycNumber c = with_source(source, [&] { return cyc_from_json(t["coeff"], ctx, at + "/coeff"); });
    out.polynomial.add_term(m, c);
  }
  if (terms->empty()) out.polynomial = Polynomial(static_cast<int>(variables));
  return out;
}

PolynomialSpec parse_polynomial_text(const std::string& text, int default_order, const std::string& source) {
  return polynomial_from_json(parse_json_text(text, source), default_order, source);
}

PolynomialSpec parse_polynomial_file(const std::string& path, int default_order) {
  return parse_polynomial_text(read_file(path), default_order, path);
}

Json to_json(const CycGroupSpec& g) {
  Json out = Json::object();
  if (!g.name.empty()) out["name"] = g.name;
  out["ring"] = "cyclotomic";
  out["cyclotomic_order"] = g.root_order;
  out["dimension"] = g.dimension;
  Json gens = Json::array();
  for (const auto& m : g.generators) gens.push_back(to_json(embed(m, g.context())));
  out["generators"] = std::move(gens);
  return out;
}

Json to_json(const IntGroupSpec& g) {
  Json out = Json::object();
  if (!g.name.empty()) out["name"] = g.name;
  out["ring"] = "integer";
  out["dimension"] = g.dimension;
  Json gens = Json::array();
  for (const auto& m : g.generators) gens.push_back(to_json(m));
  out["generators"] = std::move(gens);
  return out;
}

Json to_json(const PolynomialSpec& p) {
  Json out = Json::object();
  if (!p.name.empty()) out["name"] = p.name;
  out["cyclotomic_order"] = p.root_order;
  out["variables"] = p.polynomial.variables();
  Json terms = Json::array();
  const CycContext& ctx = CycContext::get(p.root_order);
  for (const auto& [m, c] : p.polynomial.terms()) {
    terms.push_back({{"exponents", m}, {"coeff", to_json(embed(c, ctx))}});
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const Construction& c) {
  return std::visit([](const auto& x) { return to_json(x); }, c);
}

CycGroupSpec as_cyclotomic(const GroupDescription& g) {
  if (const auto* c = std::get_if<CycGroupSpec>(&g)) return *c;
  const auto& i = std::get<IntGroupSpec>(g);
  CycGroupSpec out{i.name, 1, i.dimension, {}};
  const CycContext& q = out.context();
  for (const auto& m : i.generators) {
    CycMatrix c(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index s = 0; s < m.cols(); ++s) c(r, s) = CycNumber(Rational(m(r, s)), q);
    }
    out.generators.push_back(std::move(c));
  }
  return out;
}

IntGroupSpec as_integer(const GroupDescription& g) {
  if (const auto* i = std::get_if<IntGroupSpec>(&g)) return *i;
  const auto& c = std::get<CycGroupSpec>(g);
  IntGroupSpec out{c.name, c.dimension, {}};
  for (std::size_t k = 0; k < c.generators.size(); ++k) {
    const CycMatrix& m = c.generators[k];
    IntMatrix x(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index s = 0; s < m.cols(); ++s) {
        const CycNumber& a = m(r, s);
        if (!a.is_rational() || !is_integral(a.coeff(0))) {
          fail(ErrorKind::ValidationError, "/generators/" + std::to_string(k) + "/" + std::to_string(r) + "/" +
                                               std::to_string(s) + ": lattice commands need integer entries");
        }
        x(r, s) = boost::multiprecision::numerator(a.coeff(0));
      }
    }
    out.generators.push_back(std::move(x));
  }
  return out;
}

}  // namespace pgw
