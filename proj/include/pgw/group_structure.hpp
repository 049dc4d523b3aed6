#pragma once

// Structural computations on enumerated finite groups: subgroups generated by
// index sets, normal closures, center, commutator and power subgroups, the
// Frattini subgroup (algebraic route and maximal-subgroup route), generator
// ranks, cosets and quotients, Sylow subgroups and the generator-building
// procedures for subgroups of small index and for extensions.

#include "pgw/group.hpp"

#include <functional>
#include <unordered_set>

namespace pgw {

template <class E>
long long element_order(const FiniteGroup<E>& g, std::size_t i) {
  long long m = 1;
  for (std::size_t x = i; x != g.identity(); x = g.multiply(x, i)) ++m;
  return m;
}

template <class E>
Subgroup subgroup_generated(const FiniteGroup<E>& g, std::span<const std::size_t> generators) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> members{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (auto s : generators) {
      const std::size_t x = g.multiply(members[k], s);
      if (!seen[x]) {
        seen[x] = true;
        members.push_back(x);
      }
    }
  }
  return Subgroup(g.order(), std::move(members));
}

template <class E>
Subgroup subgroup_generated(const FiniteGroup<E>& g, const std::vector<std::size_t>& generators) {
  return subgroup_generated(g, std::span<const std::size_t>(generators));
}

// Subgroup generated by explicit elements; NotASubset if any is outside g.
template <class E>
Subgroup subgroup_of(const FiniteGroup<E>& g, const std::vector<E>& elements) {
  std::vector<std::size_t> idx;
  for (const auto& x : elements) idx.push_back(g.index_of(x));
  return subgroup_generated(g, idx);
}

template <class E>
std::size_t commutator(const FiniteGroup<E>& g, std::size_t a, std::size_t b) {
  return g.multiply(g.multiply(a, b), g.inverse(g.multiply(b, a)));
}

// Generators of the normal closure of `seeds`: the seeds plus every
// conjugate that was needed to make the generated subgroup normal.
template <class E>
std::vector<std::size_t> normal_closure_generators(const FiniteGroup<E>& g, std::vector<std::size_t> seeds) {
  std::vector<std::size_t> gens;
  for (auto s : seeds) {
    if (s != g.identity() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  Subgroup current = subgroup_generated(g, gens);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (auto h : g.generator_indices()) {
      const std::size_t c = g.multiply(g.multiply(g.inverse(h), gens[k]), h);
      if (!current.contains(c)) {
        gens.push_back(c);
        current = subgroup_generated(g, gens);
      }
    }
  }
  return gens;
}

template <class E>
Subgroup normal_closure(const FiniteGroup<E>& g, std::vector<std::size_t> seeds) {
  return subgroup_generated(g, normal_closure_generators(g, std::move(seeds)));
}

template <class E>
bool is_abelian(const FiniteGroup<E>& g) {
  const auto& gens = g.generator_indices();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (g.multiply(gens[a], gens[b]) != g.multiply(gens[b], gens[a])) return false;
    }
  }
  return true;
}

template <class E>
long long exponent(const FiniteGroup<E>& g) {
  long long e = 1;
  for (std::size_t i = 0; i < g.order(); ++i) e = std::lcm(e, element_order(g, i));
  return e;
}

template <class E>
bool is_p_group(const FiniteGroup<E>& g, long long p) {
  return p_part(g.order(), p) == g.order();
}

// The prime of a nontrivial p-group; nullopt for the trivial group and for
// groups whose order is not a prime power.
template <class E>
std::optional<long long> group_prime(const FiniteGroup<E>& g) {
  if (auto pp = prime_power(g.order())) return pp->prime;
  return std::nullopt;
}

template <class E>
Subgroup center(const FiniteGroup<E>& g) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < g.order(); ++i) {
    bool central = true;
    for (auto h : g.generator_indices()) {
      if (g.multiply(i, h) != g.multiply(h, i)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(i);
  }
  return Subgroup(g.order(), std::move(members));
}

template <class E>
Subgroup commutator_subgroup(const FiniteGroup<E>& g) {
  const auto& gens = g.generator_indices();
  std::vector<std::size_t> seeds;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) seeds.push_back(commutator(g, gens[a], gens[b]));
  }
  return normal_closure(g, std::move(seeds));
}

// Subgroup generated by all p-th powers.
template <class E>
Subgroup power_subgroup(const FiniteGroup<E>& g, long long p) {
  std::vector<std::size_t> powers;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    const std::size_t x = g.power(i, p);
    if (!seen[x]) {
      seen[x] = true;
      powers.push_back(x);
    }
  }
  return subgroup_generated(g, powers);
}

template <class E>
void require_p_group(const FiniteGroup<E>& g, long long p) {
  if (!is_prime(p)) fail(ErrorKind::NotAPGroup, std::to_string(p) + " is not prime");
  if (!is_p_group(g, p)) {
    fail(ErrorKind::NotAPGroup, "group of order " + std::to_string(g.order()) + " is not a " + std::to_string(p) +
                                    "-group");
  }
}

// Generators of the Frattini subgroup of a p-group: the normal closure of the
// generator commutators and generator p-th powers. The quotient by it is the
// largest elementary abelian quotient, which for p-groups is G / Phi(G).
template <class E>
std::vector<std::size_t> frattini_generators(const FiniteGroup<E>& g, long long p) {
  require_p_group(g, p);
  const auto& gens = g.generator_indices();
  std::vector<std::size_t> seeds;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    seeds.push_back(g.power(gens[a], p));
    for (std::size_t b = a + 1; b < gens.size(); ++b) seeds.push_back(commutator(g, gens[a], gens[b]));
  }
  return normal_closure_generators(g, std::move(seeds));
}

template <class E>
Subgroup frattini(const FiniteGroup<E>& g, long long p) {
  return subgroup_generated(g, frattini_generators(g, p));
}

// <all commutators [x, y], all p-th powers x^p>, element by element.
template <class E>
Subgroup frattini_from_all_commutators_and_powers(const FiniteGroup<E>& g, long long p,
                                                  std::size_t cap = kDefaultBruteForceCap) {
  require_p_group(g, p);
  if (g.order() > cap) fail(ErrorKind::BruteForceCapExceeded, "group order exceeds " + std::to_string(cap));
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> gens;
  auto add = [&](std::size_t x) {
    if (!seen[x]) {
      seen[x] = true;
      gens.push_back(x);
    }
  };
  for (std::size_t x = 0; x < g.order(); ++x) {
    add(g.power(x, p));
    for (std::size_t y = 0; y < g.order(); ++y) add(commutator(g, x, y));
  }
  return subgroup_generated(g, gens);
}

// d(G) = log_p |G / Phi(G)|; 0 for the trivial group.
template <class E>
int min_generators(const FiniteGroup<E>& g, long long p) {
  const Subgroup phi = frattini(g, p);
  return log_p(g.order() / phi.order(), p);
}

// A generating set of size d(G): elements taken greedily in canonical order,
// each outside the subgroup generated by Phi(G) and the previous choices.
template <class E>
std::vector<std::size_t> minimal_generating_set(const FiniteGroup<E>& g, long long p) {
  std::vector<std::size_t> base = frattini_generators(g, p);
  std::vector<std::size_t> chosen;
  Subgroup current = subgroup_generated(g, base);
  for (std::size_t i = 0; i < g.order() && current.order() < g.order(); ++i) {
    if (current.contains(i)) continue;
    chosen.push_back(i);
    base.push_back(i);
    current = subgroup_generated(g, base);
  }
  if (subgroup_generated(g, chosen).order() != g.order()) {
    fail(ErrorKind::NotAPGroup, "Frattini-basis selection did not generate the group");
  }
  return chosen;
}

struct SubgroupHasher {
  std::size_t operator()(const Subgroup& s) const noexcept { return hash_value(s); }
};

struct GeneratedSubgroup {
  Subgroup subgroup;
  std::vector<std::size_t> generators;
};

namespace detail {

// One breadth-first sweep of the subgroup lattice by number of generators.
// `visit(level, subgroup)` returns false to stop early. Returns the number of
// distinct subgroups visited.
template <class E, class Visit>
std::size_t sweep_subgroups(const FiniteGroup<E>& g, std::size_t subgroup_cap, Visit visit) {
  std::unordered_set<Subgroup, SubgroupHasher> seen;
  std::vector<GeneratedSubgroup> level{{g.trivial(), {}}};
  seen.insert(level.front().subgroup);
  if (!visit(0, level.front().subgroup)) return seen.size();
  for (int k = 1; !level.empty(); ++k) {
    std::vector<GeneratedSubgroup> next;
    for (const auto& h : level) {
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (h.subgroup.contains(x)) continue;
        std::vector<std::size_t> gens = h.generators;
        gens.push_back(x);
        Subgroup s = subgroup_generated(g, gens);
        if (seen.contains(s)) continue;
        if (seen.size() >= subgroup_cap) {
          fail(ErrorKind::BruteForceCapExceeded, "more than " + std::to_string(subgroup_cap) + " subgroups");
        }
        seen.insert(s);
        if (!visit(k, s)) return seen.size();
        next.push_back({std::move(s), std::move(gens)});
      }
    }
    level = std::move(next);
  }
  return seen.size();
}

}  // namespace detail

inline constexpr std::size_t kDefaultSubgroupCap = 200000;

// Exhaustive minimal generator count: the least k such that some k elements
// generate G, found level by level over subgroups generated by k elements.
template <class E>
int min_generators_bruteforce(const FiniteGroup<E>& g, std::size_t cap = kDefaultBruteForceCap) {
  if (g.order() > cap) fail(ErrorKind::BruteForceCapExceeded, "group order exceeds " + std::to_string(cap));
  if (g.order() == 1) return 0;
  int found = -1;
  detail::sweep_subgroups(g, kDefaultSubgroupCap, [&](int level, const Subgroup& s) {
    if (s.order() == g.order()) {
      found = level;
      return false;
    }
    return true;
  });
  return found;
}

// Every subgroup of g (including trivial and g), ordered by size then members.
template <class E>
std::vector<Subgroup> all_subgroups(const FiniteGroup<E>& g, std::size_t cap = kDefaultBruteForceCap) {
  if (g.order() > cap) fail(ErrorKind::BruteForceCapExceeded, "group order exceeds " + std::to_string(cap));
  std::vector<Subgroup> out;
  detail::sweep_subgroups(g, kDefaultSubgroupCap, [&](int, const Subgroup& s) {
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members() < b.members();
  });
  return out;
}

template <class E>
std::vector<Subgroup> maximal_subgroups(const FiniteGroup<E>& g, std::size_t cap = kDefaultBruteForceCap) {
  const auto subgroups = all_subgroups(g, cap);
  std::vector<Subgroup> out;
  for (const auto& m : subgroups) {
    if (m.order() == g.order()) continue;
    bool maximal = true;
    for (const auto& k : subgroups) {
      if (k.order() > m.order() && k.order() < g.order() && m.is_subset_of(k)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

// Intersection of all maximal subgroups, by exhaustive lattice enumeration.
template <class E>
Subgroup frattini_by_maximal_subgroups(const FiniteGroup<E>& g, std::size_t cap = kDefaultBruteForceCap) {
  Subgroup acc = g.whole();
  for (const auto& m : maximal_subgroups(g, cap)) acc = acc.intersect(m);
  return acc;
}

template <class E>
bool is_normal(const FiniteGroup<E>& g, const Subgroup& h) {
  for (auto x : g.generator_indices()) {
    const std::size_t xi = g.inverse(x);
    for (auto m : h.members()) {
      if (!h.contains(g.multiply(g.multiply(xi, m), x))) return false;
    }
  }
  return true;
}

template <class E>
bool is_subgroup_of(const FiniteGroup<E>& g, const Subgroup& h) {
  if (h.ambient_order() != g.order() || !h.contains(g.identity())) return false;
  for (auto a : h.members()) {
    for (auto b : h.members()) {
      if (!h.contains(g.multiply(a, b))) return false;
    }
  }
  return true;
}

template <class E>
std::size_t index(const FiniteGroup<E>& g, const Subgroup& h) {
  return g.order() / h.order();
}

template <class E>
std::size_t quotient_order(const FiniteGroup<E>& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(ErrorKind::NotNormal, "subgroup is not normal");
  return index(g, n);
}

// Canonical (smallest-index) representative of each left coset xH, plus the
// coset number of every element.
struct CosetTable {
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> coset_of;
};

template <class E>
CosetTable left_cosets(const FiniteGroup<E>& g, const Subgroup& h) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  CosetTable t;
  t.coset_of.assign(g.order(), unset);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (t.coset_of[x] != unset) continue;
    const std::size_t c = t.representatives.size();
    t.representatives.push_back(x);
    for (auto m : h.members()) t.coset_of[g.multiply(x, m)] = c;
  }
  return t;
}

template <class E>
std::vector<std::size_t> coset_representatives(const FiniteGroup<E>& g, const Subgroup& h) {
  return left_cosets(g, h).representatives;
}

// ---------------------------------------------------------------------------
// Quotients as coset-table groups

struct CayleyTable {
  std::size_t order = 0;
  std::size_t identity = 0;
  std::vector<std::uint32_t> product;
  std::vector<std::uint32_t> inverse;
};

struct TableElement {
  std::shared_ptr<const CayleyTable> table;
  std::uint32_t index = 0;
};

template <>
struct GroupTraits<TableElement> {
  using Element = TableElement;
  static Element multiply(const Element& a, const Element& b) {
    return {a.table, a.table->product[a.index * a.table->order + b.index]};
  }
  static Element inverse(const Element& a) { return {a.table, a.table->inverse[a.index]}; }
  static Element identity_like(const Element& a) {
    return {a.table, static_cast<std::uint32_t>(a.table->identity)};
  }
  static std::size_t hash(const Element& a) { return a.index; }
  static bool equal(const Element& a, const Element& b) { return a.index == b.index; }
  static std::string key(const Element& a) {
    std::string s = std::to_string(a.index);
    return std::string(10 - std::min<std::size_t>(10, s.size()), '0') + s;
  }
};

struct QuotientMap {
  FiniteGroup<TableElement> group;  // element k is coset k
  CosetTable cosets;
};

template <class E>
QuotientMap quotient(const FiniteGroup<E>& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(ErrorKind::NotNormal, "subgroup is not normal");
  CosetTable cosets = left_cosets(g, n);
  auto table = std::make_shared<CayleyTable>();
  const std::size_t m = cosets.representatives.size();
  table->order = m;
  table->identity = cosets.coset_of[g.identity()];
  table->product.resize(m * m);
  table->inverse.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t ra = cosets.representatives[a];
    table->inverse[a] = static_cast<std::uint32_t>(cosets.coset_of[g.inverse(ra)]);
    for (std::size_t b = 0; b < m; ++b) {
      table->product[a * m + b] =
          static_cast<std::uint32_t>(cosets.coset_of[g.multiply(ra, cosets.representatives[b])]);
    }
  }
  std::shared_ptr<const CayleyTable> shared = table;
  std::vector<TableElement> elements;
  for (std::size_t a = 0; a < m; ++a) elements.push_back({shared, static_cast<std::uint32_t>(a)});
  std::vector<TableElement> gens;
  for (auto x : g.generator_indices()) gens.push_back({shared, static_cast<std::uint32_t>(cosets.coset_of[x])});
  return {FiniteGroup<TableElement>::from_elements(std::move(gens), std::move(elements)), std::move(cosets)};
}

// A subgroup as a group in its own right; generators are picked greedily in
// canonical order.
template <class E>
FiniteGroup<E> as_group(const FiniteGroup<E>& g, const Subgroup& h) {
  std::vector<std::size_t> chosen;
  Subgroup current = g.trivial();
  for (auto x : h.members()) {
    if (current.order() == h.order()) break;
    if (current.contains(x)) continue;
    chosen.push_back(x);
    current = subgroup_generated(g, chosen);
  }
  // Members are ascending indices, hence already in canonical order.
  std::vector<E> gens, elements;
  std::vector<std::uint32_t> position(g.order(), 0), right;
  const auto& members = h.members();
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = static_cast<std::uint32_t>(i);
  for (auto x : chosen) gens.push_back(g.element(x));
  for (auto x : members) {
    elements.push_back(g.element(x));
    for (auto c : chosen) right.push_back(position[g.multiply(x, c)]);
  }
  return FiniteGroup<E>::from_elements(std::move(gens), std::move(elements), std::move(right), true);
}

// Extend generators of H to generators of G by repeatedly adjoining the
// canonically smallest element outside the current subgroup. For a p-group
// each step at least multiplies the order by p, so at most log_p [G:H]
// elements are added.
template <class E>
std::vector<std::size_t> augment_generators(const FiniteGroup<E>& g, std::vector<std::size_t> h_generators) {
  for (auto x : h_generators) {
    if (x >= g.order()) fail(ErrorKind::NotASubset, "generator index outside the group");
  }
  Subgroup current = subgroup_generated(g, h_generators);
  for (std::size_t x = 0; x < g.order() && current.order() < g.order(); ++x) {
    if (current.contains(x)) continue;
    h_generators.push_back(x);
    current = subgroup_generated(g, h_generators);
  }
  return h_generators;
}

template <class E>
std::vector<std::size_t> augment_generators(const FiniteGroup<E>& g, const std::vector<E>& h_generators) {
  std::vector<std::size_t> idx;
  for (const auto& x : h_generators) idx.push_back(g.index_of(x));
  return augment_generators(g, std::move(idx));
}

template <class E>
std::vector<std::size_t> generating_set(const FiniteGroup<E>& g) {
  if (auto p = group_prime(g)) return minimal_generating_set(g, *p);
  if (g.order() == 1) return {};
  return augment_generators(g, std::vector<std::size_t>{});
}

// gens(N) together with one lift per generator of G/N. For p-groups both
// parts are minimal, giving d(N) + d(G/N) elements.
template <class E>
std::vector<std::size_t> extension_generators(const FiniteGroup<E>& g, const Subgroup& n) {
  const QuotientMap q = quotient(g, n);  // throws NotNormal
  const FiniteGroup<E> n_group = as_group(g, n);
  std::vector<std::size_t> out;
  for (auto x : generating_set(n_group)) out.push_back(g.index_of(n_group.element(x)));
  for (auto c : generating_set(q.group)) out.push_back(q.cosets.representatives[q.group.element(c).index]);
  if (subgroup_generated(g, out).order() != g.order()) {
    fail(ErrorKind::NotNormal, "extension generators failed to generate the group");
  }
  return out;
}

// Sylow p-subgroup grown from the trivial group by adjoining, in canonical
// order, p-elements that normalize the current subgroup.
template <class E>
Subgroup sylow_p(const FiniteGroup<E>& g, long long p) {
  if (!is_prime(p)) fail(ErrorKind::NotAPGroup, std::to_string(p) + " is not prime");
  const unsigned long long target = p_part(g.order(), p);
  std::vector<std::size_t> gens;
  Subgroup current = g.trivial();
  while (current.order() < target) {
    bool grown = false;
    for (std::size_t x = 0; x < g.order() && !grown; ++x) {
      if (current.contains(x)) continue;
      const auto ord = static_cast<unsigned long long>(element_order(g, x));
      if (p_part(ord, p) != ord) continue;
      const std::size_t xi = g.inverse(x);
      bool normalizes = true;
      for (auto h : gens) {
        if (!current.contains(g.multiply(g.multiply(x, h), xi))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      gens.push_back(x);
      current = subgroup_generated(g, gens);
      grown = true;
    }
    if (!grown) fail(ErrorKind::NotAPGroup, "no normalizing p-element found");
  }
  return current;
}

// ---------------------------------------------------------------------------
// matrix-group specifics

template <class Scalar>
Subgroup scalar_subgroup(const FiniteGroup<MatrixX<Scalar>>& g) {
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (is_scalar_matrix(g.element(i))) members.push_back(i);
  }
  return Subgroup(g.order(), std::move(members));
}

template <class Scalar>
FiniteGroup<MatrixX<Scalar>> direct_product(const FiniteGroup<MatrixX<Scalar>>& a,
                                            const FiniteGroup<MatrixX<Scalar>>& b,
                                            std::size_t cap = kDefaultClosureCap) {
  const MatrixX<Scalar> ia = a.element(a.identity());
  const MatrixX<Scalar> ib = b.element(b.identity());
  std::vector<MatrixX<Scalar>> gens;
  for (const auto& x : a.generators()) gens.push_back(block_diagonal(x, ib));
  for (const auto& y : b.generators()) gens.push_back(block_diagonal(ia, y));
  return closure(MatrixX<Scalar>(block_diagonal(ia, ib)), gens, cap);
}

// Direct product over Q(z_lcm(M, N)) when the factors live in different fields.
FiniteGroup<CycMatrix> direct_product_embedded(const FiniteGroup<CycMatrix>& a, const FiniteGroup<CycMatrix>& b,
                                               std::size_t cap = kDefaultClosureCap);

}  // namespace pgw
