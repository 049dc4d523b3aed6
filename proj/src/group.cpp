#include "pgw/group.hpp"
#include "pgw/group_structure.hpp"

#include <algorithm>
#include <numeric>

namespace pgw {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> prime_power(unsigned long long n) {
  if (n < 2) return std::nullopt;
  unsigned long long p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return PrimePower{static_cast<long long>(p), k};
}

unsigned long long p_part(unsigned long long n, long long p) {
  unsigned long long part = 1;
  const auto up = static_cast<unsigned long long>(p);
  while (n % up == 0) {
    n /= up;
    part *= up;
  }
  return part;
}

int log_p(unsigned long long n, long long p) {
  if (p_part(n, p) != n) {
    fail(ErrorKind::NotAPGroup, std::to_string(n) + " is not a power of " + std::to_string(p));
  }
  int k = 0;
  while (n > 1) {
    n /= static_cast<unsigned long long>(p);
    ++k;
  }
  return k;
}

Subgroup::Subgroup(std::size_t ambient_order, std::vector<std::size_t> members)
    : members_(std::move(members)), mask_(ambient_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (auto i : members_) mask_.at(i) = true;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](std::size_t i) { return other.contains(i); });
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  std::vector<std::size_t> common;
  for (auto i : members_) {
    if (other.contains(i)) common.push_back(i);
  }
  return Subgroup(mask_.size(), std::move(common));
}

std::size_t hash_value(const Subgroup& s) noexcept {
  std::size_t seed = s.order();
  for (auto i : s.members()) hash_combine(seed, i);
  return seed;
}

FiniteGroup<CycMatrix> direct_product_embedded(const FiniteGroup<CycMatrix>& a, const FiniteGroup<CycMatrix>& b,
                                               std::size_t cap) {
  auto root_order = [](const FiniteGroup<CycMatrix>& g) {
    int n = 1;
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (const CycContext* c = matrix_context(g.element(i))) n = std::lcm(n, c->root_order());
    }
    return n;
  };
  const CycContext& target = CycContext::get(std::lcm(root_order(a), root_order(b)));
  const CycMatrix ia = embed(a.element(a.identity()), target);
  const CycMatrix ib = embed(b.element(b.identity()), target);
  std::vector<CycMatrix> gens;
  for (const auto& x : a.generators()) gens.push_back(block_diagonal(embed(x, target), ib));
  for (const auto& y : b.generators()) gens.push_back(block_diagonal(ia, embed(y, target)));
  return closure(CycMatrix(block_diagonal(ia, ib)), gens, cap);
}

}  // namespace pgw
