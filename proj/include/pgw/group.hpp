#pragma once

// Finite groups given by a complete element enumeration.
//
// A FiniteGroup<E> works for any element type with a GroupTraits<E>
// specialization (multiply, inverse, identity_like, hash, equal, key).
// Elements are stored in canonical order (ascending key) and most algorithms
// work on element indices; subgroups are index sets into the ambient group.

#include "pgw/error.hpp"
#include "pgw/matrices.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pgw {

inline constexpr std::size_t kDefaultClosureCap = 531441;  // 3^12
inline constexpr std::size_t kDefaultBruteForceCap = 729;

template <class E>
struct GroupTraits;

template <class Scalar>
struct GroupTraits<MatrixX<Scalar>> {
  using Element = MatrixX<Scalar>;
  static Element multiply(const Element& a, const Element& b) { return pgw::multiply(a, b); }
  static Element inverse(const Element& a) { return inverse_of(a); }
  static Element identity_like(const Element& a) { return pgw::identity_like(a); }
  static std::size_t hash(const Element& a) { return hash_value(a); }
  static bool equal(const Element& a, const Element& b) { return a.rows() == b.rows() && a == b; }
  static std::string key(const Element& a) { return canonical_key(a); }
};

// ---------------------------------------------------------------------------
// number theory helpers

struct PrimePower {
  long long prime;
  int exponent;
};

// n = p^k with k >= 1; nullopt for n = 1 or composite non-prime-powers.
std::optional<PrimePower> prime_power(unsigned long long n);
bool is_prime(long long p);
// Largest power of p dividing n.
unsigned long long p_part(unsigned long long n, long long p);
// k with n = p^k; throws NotAPGroup when n is not a power of p.
int log_p(unsigned long long n, long long p);

// ---------------------------------------------------------------------------

class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t ambient_order, std::vector<std::size_t> members);

  std::size_t order() const noexcept { return members_.size(); }
  bool contains(std::size_t i) const { return i < mask_.size() && mask_[i]; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t ambient_order() const noexcept { return mask_.size(); }

  bool is_subset_of(const Subgroup& other) const;
  Subgroup intersect(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  std::vector<std::size_t> members_;  // ascending
  std::vector<bool> mask_;
};

std::size_t hash_value(const Subgroup& s) noexcept;

template <class E>
class FiniteGroup {
 public:
  using Element = E;
  using Traits = GroupTraits<E>;

  // `elements` must be closed under multiplication and contain the identity;
  // `generators` must generate it. Both are validated only for membership.
  static FiniteGroup from_elements(std::vector<E> generators, std::vector<E> elements);
  // Same, with right_multiples[i * |generators| + j] = index of elements[i] * generators[j]
  // (as produced by a closure run), which saves recomputing those products.
  // `canonical` asserts that `elements` is already in canonical order.
  static FiniteGroup from_elements(std::vector<E> generators, std::vector<E> elements,
                                   std::vector<std::uint32_t> right_multiples, bool canonical = false);

  const std::vector<E>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }
  const std::vector<E>& elements() const noexcept { return elements_; }
  const E& element(std::size_t i) const { return elements_[i]; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t identity() const noexcept { return identity_; }

  std::optional<std::size_t> find(const E& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const E& x) const {
    if (auto i = find(x)) return *i;
    fail(ErrorKind::NotASubset, "element is not in the group");
  }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t power(std::size_t a, long long e) const;

  Subgroup whole() const;
  Subgroup trivial() const { return Subgroup(order(), {identity_}); }

 private:
  struct Hasher {
    std::size_t operator()(const E& x) const { return Traits::hash(x); }
  };
  struct Equal {
    bool operator()(const E& a, const E& b) const { return Traits::equal(a, b); }
  };
  // Lazily filled product and inverse tables; entries store index + 1, 0 = unknown.
  struct Memo {
    std::vector<std::atomic<std::uint32_t>> product;
    std::vector<std::atomic<std::uint32_t>> inverse;
  };
  static constexpr std::size_t kTableLimit = 1024;
  static constexpr std::uint32_t kNone = ~std::uint32_t{0};

  // Products are evaluated along words in the generators: every element b
  // reachable from the identity has a parent p and generator j with
  // b = p * generators[j], and right_[x * k + j] indexes x * generators[j].
  void build_words();

  std::vector<E> generators_;
  std::vector<std::size_t> generator_indices_;
  std::vector<E> elements_;
  std::unordered_map<E, std::size_t, Hasher, Equal> index_;
  std::size_t identity_ = 0;
  std::shared_ptr<Memo> memo_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> parent_generator_;
};

template <class E>
FiniteGroup<E> FiniteGroup<E>::from_elements(std::vector<E> generators, std::vector<E> elements) {
  return from_elements(std::move(generators), std::move(elements), {});
}

template <class E>
FiniteGroup<E> FiniteGroup<E>::from_elements(std::vector<E> generators, std::vector<E> elements,
                                             std::vector<std::uint32_t> right_multiples, bool canonical) {
  if (elements.empty()) fail(ErrorKind::ShapeError, "a group needs at least the identity");
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) keyed.emplace_back(canonical ? std::string() : Traits::key(elements[i]), i);
  if (!canonical) std::sort(keyed.begin(), keyed.end());

  FiniteGroup g;
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> position(n);
  g.elements_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    position[keyed[i].second] = static_cast<std::uint32_t>(i);
    g.elements_.push_back(std::move(elements[keyed[i].second]));
  }
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.elements_[i], i).second) fail(ErrorKind::ShapeError, "duplicate element in group");
  }
  g.identity_ = g.index_of(Traits::identity_like(g.elements_.front()));
  g.generators_ = std::move(generators);
  for (const auto& x : g.generators_) g.generator_indices_.push_back(g.index_of(x));

  const std::size_t k = g.generators_.size();
  if (right_multiples.size() == n * k) {
    g.right_.assign(n * k, kNone);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) g.right_[position[i] * k + j] = position[right_multiples[i * k + j]];
    }
  } else {
    g.right_.resize(n * k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        g.right_[i * k + j] = static_cast<std::uint32_t>(g.index_of(Traits::multiply(g.elements_[i], g.generators_[j])));
      }
    }
  }
  g.build_words();

  g.memo_ = std::make_shared<Memo>();
  if (n <= kTableLimit) g.memo_->product = std::vector<std::atomic<std::uint32_t>>(n * n);
  g.memo_->inverse = std::vector<std::atomic<std::uint32_t>>(n);
  return g;
}

template <class E>
void FiniteGroup<E>::build_words() {
  const std::size_t n = order();
  const std::size_t k = generators_.size();
  parent_.assign(n, kNone);
  parent_generator_.assign(n, kNone);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(identity_)};
  parent_[identity_] = static_cast<std::uint32_t>(identity_);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::uint32_t x = queue[q];
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint32_t y = right_[x * k + j];
      if (parent_[y] != kNone) continue;
      parent_[y] = x;
      parent_generator_[y] = static_cast<std::uint32_t>(j);
      queue.push_back(y);
    }
  }
}

template <class E>
std::size_t FiniteGroup<E>::multiply(std::size_t a, std::size_t b) const {
  auto& table = memo_->product;
  const std::size_t n = order();
  if (!table.empty()) {
    const std::uint32_t cached = table[a * n + b].load(std::memory_order_relaxed);
    if (cached) return cached - 1;
  }
  std::size_t r;
  if (parent_[b] == kNone) {
    // Not reachable by words in the generators.
    r = index_of(Traits::multiply(elements_[a], elements_[b]));
  } else {
    // b = g_1 ... g_m; walk up to the identity (or a cached prefix), then down.
    thread_local std::vector<std::uint32_t> path;
    path.clear();
    std::size_t x = b;
    r = a;
    while (x != identity_) {
      if (!table.empty()) {
        const std::uint32_t cached = table[a * n + x].load(std::memory_order_relaxed);
        if (cached) {
          r = cached - 1;
          break;
        }
      }
      path.push_back(static_cast<std::uint32_t>(x));
      x = parent_[x];
    }
    const std::size_t k = generators_.size();
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      r = right_[r * k + parent_generator_[*it]];
      if (!table.empty()) table[a * n + *it].store(static_cast<std::uint32_t>(r + 1), std::memory_order_relaxed);
    }
  }
  if (!table.empty()) table[a * n + b].store(static_cast<std::uint32_t>(r + 1), std::memory_order_relaxed);
  return r;
}

template <class E>
std::size_t FiniteGroup<E>::inverse(std::size_t a) const {
  const std::uint32_t cached = memo_->inverse[a].load(std::memory_order_relaxed);
  if (cached) return cached - 1;
  const std::size_t r = index_of(Traits::inverse(elements_[a]));
  memo_->inverse[a].store(static_cast<std::uint32_t>(r + 1), std::memory_order_relaxed);
  return r;
}

template <class E>
std::size_t FiniteGroup<E>::power(std::size_t a, long long e) const {
  std::size_t base = e < 0 ? inverse(a) : a;
  auto k = static_cast<unsigned long long>(e < 0 ? -e : e);
  std::size_t result = identity_;
  while (k) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k) base = multiply(base, base);
  }
  return result;
}

template <class E>
Subgroup FiniteGroup<E>::whole() const {
  std::vector<std::size_t> all(order());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Subgroup(order(), std::move(all));
}

// Breadth-first closure of `generators` under right multiplication, starting
// from `identity`. Throws ClosureCapExceeded as soon as more than `cap`
// distinct elements appear.
template <class E>
FiniteGroup<E> closure(const E& identity, const std::vector<E>& generators, std::size_t cap = kDefaultClosureCap) {
  using Traits = GroupTraits<E>;
  struct Hasher {
    std::size_t operator()(const E& x) const { return Traits::hash(x); }
  };
  struct Equal {
    bool operator()(const E& a, const E& b) const { return Traits::equal(a, b); }
  };
  std::vector<E> elements{identity};
  std::vector<std::uint32_t> right;
  std::unordered_map<E, std::size_t, Hasher, Equal> seen{{identity, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : generators) {
      E x = Traits::multiply(elements[k], g);
      if (auto it = seen.find(x); it != seen.end()) {
        right.push_back(static_cast<std::uint32_t>(it->second));
        continue;
      }
      if (elements.size() >= cap) {
        fail(ErrorKind::ClosureCapExceeded, "more than " + std::to_string(cap) + " elements (group may be infinite)");
      }
      right.push_back(static_cast<std::uint32_t>(elements.size()));
      seen.emplace(x, elements.size());
      elements.push_back(std::move(x));
    }
  }
  return FiniteGroup<E>::from_elements(generators, std::move(elements), std::move(right));
}

template <class E>
FiniteGroup<E> closure(const std::vector<E>& generators, std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) fail(ErrorKind::ShapeError, "closure of an empty generator list needs an explicit identity");
  return closure(GroupTraits<E>::identity_like(generators.front()), generators, cap);
}

// Matrix-group closure with the generator checks: same dimension, invertible.
template <class Scalar>
FiniteGroup<MatrixX<Scalar>> matrix_closure(const std::vector<MatrixX<Scalar>>& generators, Eigen::Index dimension,
                                            std::size_t cap = kDefaultClosureCap) {
  for (const auto& g : generators) {
    if (g.rows() != dimension || g.cols() != dimension) {
      fail(ErrorKind::ShapeError, "generator is not " + std::to_string(dimension) + "x" + std::to_string(dimension));
    }
    (void)inverse_of(g);
  }
  return closure(MatrixX<Scalar>(MatrixX<Scalar>::Identity(dimension, dimension)), generators, cap);
}

}  // namespace pgw
