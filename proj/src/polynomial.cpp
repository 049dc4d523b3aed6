#include "pgw/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace pgw {

Polynomial Polynomial::variable(int variables, int i) {
  Polynomial p(variables);
  Monomial m(static_cast<std::size_t>(variables), 0);
  m.at(static_cast<std::size_t>(i)) = 1;
  p.add_term(m, CycNumber(1));
  return p;
}

Polynomial Polynomial::constant(int variables, const CycNumber& c) {
  Polynomial p(variables);
  p.add_term(Monomial(static_cast<std::size_t>(variables), 0), c);
  return p;
}

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

void Polynomial::add_term(const Monomial& m, const CycNumber& c) {
  if (static_cast<int>(m.size()) != variables_) fail(ErrorKind::ShapeError, "monomial has the wrong number of variables");
  if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; })) {
    fail(ErrorKind::ShapeError, "negative exponent");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CycNumber Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycNumber(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.variables_ != variables_) fail(ErrorKind::ShapeError, "polynomials in different numbers of variables");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) fail(ErrorKind::ShapeError, "polynomials in different numbers of variables");
  Polynomial out(a.variables_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const CycNumber& c, const Polynomial& f) {
  Polynomial out(f.variables_);
  for (const auto& [m, x] : f.terms_) out.add_term(m, c * x);
  return out;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += (out.empty() ? "" : "*") + std::string("z") + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    const std::string mono = to_string(m);
    if (c.is_one()) {
      out += mono;
    } else {
      out += "(" + to_string(c) + ")" + (mono == "1" ? "" : "*" + mono);
    }
  }
  return out;
}

Polynomial homogeneous_part(const Polynomial& f, int degree) {
  Polynomial out(f.variables());
  for (const auto& [m, c] : f.terms()) {
    if (total_degree(m) == degree) out.add_term(m, c);
  }
  return out;
}

namespace {

void check_dimension(const Polynomial& f, const CycMatrix& g) {
  if (g.rows() != f.variables() || g.cols() != f.variables()) {
    fail(ErrorKind::ShapeError, "matrix is " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                                    " but the polynomial has " + std::to_string(f.variables()) + " variables");
  }
}

}  // namespace

Polynomial act(const Polynomial& f, const CycMatrix& g) {
  check_dimension(f, g);
  const int n = f.variables();
  // (g z)_i as linear forms, with cached powers.
  std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Polynomial form(n);
    for (int j = 0; j < n; ++j) {
      Monomial m(static_cast<std::size_t>(n), 0);
      m[static_cast<std::size_t>(j)] = 1;
      form.add_term(m, g(i, j));
    }
    powers[static_cast<std::size_t>(i)] = {Polynomial::constant(n, CycNumber(1)), form};
  }
  auto power_of = [&](int i, int e) -> const Polynomial& {
    auto& cache = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i) {
      if (m[static_cast<std::size_t>(i)] > 0) term = term * power_of(i, m[static_cast<std::size_t>(i)]);
    }
    out += term;
  }
  return out;
}

Polynomial act_diagonal(const Polynomial& f, const CycMatrix& g) {
  check_dimension(f, g);
  if (!is_diagonal(g)) fail(ErrorKind::ShapeError, "act_diagonal needs a diagonal matrix");
  Polynomial out(f.variables());
  for (const auto& [m, c] : f.terms()) {
    CycNumber scale = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) scale *= g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).pow(m[i]);
    }
    out.add_term(m, scale);
  }
  return out;
}

GeneratorMultiplier generator_multiplier(const Polynomial& f, const CycMatrix& g, std::size_t generator_index) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "semi-invariance of the zero polynomial");
  const Polynomial image = act(f, g);
  const auto& [lead, lead_coeff] = *f.terms().begin();
  const CycNumber ratio = image.coefficient(lead) / lead_coeff;

  // Walk the union of both supports in monomial order.
  std::map<Monomial, bool, MonomialOrder> support;
  for (const auto& [m, c] : f.terms()) support[m] = true;
  for (const auto& [m, c] : image.terms()) support.emplace(m, false);
  for (const auto& [m, in_f] : support) {
    const CycNumber fc = f.coefficient(m);
    const CycNumber ic = image.coefficient(m);
    if (ic == ratio * fc) continue;
    FailureWitness w;
    w.generator = generator_index;
    w.first = lead;
    w.first_multiplier = ratio;
    w.second = m;
    if (in_f) w.second_multiplier = ic / fc;
    return w;
  }
  return ratio;
}

std::vector<GeneratorMultiplier> generator_multipliers(const Polynomial& f, const std::vector<CycMatrix>& generators) {
  std::vector<GeneratorMultiplier> out;
  for (std::size_t i = 0; i < generators.size(); ++i) out.push_back(generator_multiplier(f, generators[i], i));
  return out;
}

SemiInvariance semi_invariant(const Polynomial& f, const std::vector<CycMatrix>& generators) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "semi-invariance of the zero polynomial");
  Character chi;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto r = generator_multiplier(f, generators[i], i);
    if (auto* w = std::get_if<FailureWitness>(&r)) return *w;
    chi.push_back(std::get<CycNumber>(r));
  }
  return chi;
}

SemiInvariance semi_invariant(const Polynomial& f, const FiniteGroup<CycMatrix>& g) {
  return semi_invariant(f, g.generators());
}

bool is_trivial(const Character& chi) {
  return std::all_of(chi.begin(), chi.end(), [](const CycNumber& c) { return c.is_one(); });
}

}  // namespace pgw
