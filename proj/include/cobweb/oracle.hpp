#pragma once

// Brute-force ground truth for small posets. Everything here is exponential
// and guarded by hard size limits.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cobweb/chain.hpp"
#include "cobweb/order_core.hpp"
#include "cobweb/realizer.hpp"

namespace cobweb::oracle {

/// A finite set with a strict partial order on it.
class FinitePoset {
 public:
  FinitePoset(std::vector<Vertex> elements, const std::vector<Arc>& strict)
      : elements_(distinct(std::move(elements))), strict_(elements_.size()) {
    for (const auto& [a, b] : strict) strict_.set(elements_.at(a), elements_.at(b));
    validate();
  }

  explicit FinitePoset(const Relation& strict) : elements_(strict.vertices()), strict_(strict.matrix()) { validate(); }

  static FinitePoset from_digraph(const Digraph& g) { return FinitePoset(reachability(g)); }

  const VertexIndex& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool less(std::size_t a, std::size_t b) const { return strict_.test(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return less(a, b) || less(b, a); }

  Relation strict() const { return Relation(elements_, strict_); }

  // Cover graph: a < b with nothing strictly between.
  Digraph hasse() const {
    Digraph g(elements_.list());
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) {
        if (!less(a, b)) continue;
        bool covered = true;
        for (std::size_t c = 0; c < size() && covered; ++c) covered = !(less(a, c) && less(c, b));
        if (covered) g.add_arc(a, b);
      }
    return g;
  }

 private:
  static VertexIndex distinct(std::vector<Vertex> elements) {
    const std::size_t n = elements.size();
    VertexIndex index(std::move(elements));
    if (index.size() != n) throw InvalidInput("duplicate poset element");
    return index;
  }

  void validate() const {
    const Relation r(elements_, strict_);
    if (!r.is_irreflexive()) throw InvalidInput("strict order must be irreflexive");
    if (!r.is_antisymmetric()) throw InvalidInput("strict order must be antisymmetric");
    if (!r.is_transitive()) throw InvalidInput("strict order must be transitive");
  }

  VertexIndex elements_;
  BitMatrix strict_;
};

inline constexpr std::size_t max_enumeration_size = 12;
inline constexpr std::size_t max_dim_two_size = 9;
inline constexpr std::size_t max_dimension_size = 7;

namespace detail {

inline void require_size(const FinitePoset& p, std::size_t limit, const char* what) {
  if (p.size() > limit)
    throw TooLarge(std::string(what) + " supports at most " + std::to_string(limit) + " elements, got " +
                   std::to_string(p.size()));
}

// Backtracking over minimal elements in ascending index order; visit gets
// the extension as element indices and returns false to stop.
inline void for_each_extension(const FinitePoset& p, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = p.size();
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (p.less(a, b)) ++below[b];
  std::vector<bool> used(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);

  std::function<bool()> extend = [&]() -> bool {
    if (order.size() == n) return visit(order);
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || below[v] != 0) continue;
      used[v] = true;
      order.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (p.less(v, w)) --below[w];
      bool go_on = extend();
      for (std::size_t w = 0; w < n; ++w)
        if (p.less(v, w)) ++below[w];
      order.pop_back();
      used[v] = false;
      if (!go_on) return false;
    }
    return true;
  };
  extend();
}

inline Chain to_chain(const FinitePoset& p, const std::vector<std::size_t>& order) {
  std::vector<Vertex> vs;
  vs.reserve(order.size());
  for (std::size_t i : order) vs.push_back(p.elements()[i]);
  return Chain(std::move(vs));
}

// Each extension reduced to the orientation of the incomparable pairs:
// bit k is set when the k-th incomparable pair (a, b), a < b by index, has
// a before b. Extensions differ iff their signatures differ, and a family
// realizes p iff every incomparable pair is oriented both ways in it.
struct Signatures {
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<std::size_t>> orders;
  std::uint64_t full = 0;
};

inline Signatures signatures(const FinitePoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> incomparable;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (!p.comparable(a, b)) incomparable.emplace_back(a, b);
  Signatures sig;
  sig.full = incomparable.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << incomparable.size()) - 1;
  std::vector<std::size_t> rank(p.size());
  for_each_extension(p, [&](const std::vector<std::size_t>& order) {
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < incomparable.size(); ++k)
      if (rank[incomparable[k].first] < rank[incomparable[k].second]) m |= std::uint64_t{1} << k;
    sig.masks.push_back(m);
    sig.orders.push_back(order);
    return true;
  });
  return sig;
}

}  // namespace detail

/// Linear extensions of p in lexicographic order of element indices, at
/// most `limit` of them.
inline std::vector<Chain> enumerate_linear_extensions(const FinitePoset& p, std::size_t limit) {
  detail::require_size(p, max_enumeration_size, "enumerate_linear_extensions");
  std::vector<Chain> out;
  if (limit == 0) return out;
  detail::for_each_extension(p, [&](const std::vector<std::size_t>& order) {
    out.push_back(detail::to_chain(p, order));
    return out.size() < limit;
  });
  return out;
}

struct DimTwoResult {
  bool dim_le_2 = false;
  std::optional<Realizer> witness;
  explicit operator bool() const noexcept { return dim_le_2; }
};

/// Exhaustive search over pairs of linear extensions for one whose
/// intersection is p. The pair loop is a hash join on signatures: (L1, L2)
/// realizes p exactly when L2's signature is the complement of L1's.
inline DimTwoResult brute_force_dim_le_2(const FinitePoset& p) {
  detail::require_size(p, max_dim_two_size, "brute_force_dim_le_2");
  const auto sig = detail::signatures(p);
  std::unordered_map<std::uint64_t, std::size_t> by_mask;
  for (std::size_t i = 0; i < sig.masks.size(); ++i) by_mask.emplace(sig.masks[i], i);
  for (std::size_t i = 0; i < sig.masks.size(); ++i) {
    auto it = by_mask.find(~sig.masks[i] & sig.full);
    if (it == by_mask.end()) continue;
    return {true, Realizer(detail::to_chain(p, sig.orders[i]), detail::to_chain(p, sig.orders[it->second]), p.hasse())};
  }
  return {false, std::nullopt};
}

/// Smallest s <= max_k such that some s linear extensions intersect to p,
/// or nullopt when none does (dimension exceeds max_k).
inline std::optional<int> order_dimension(const FinitePoset& p, int max_k) {
  detail::require_size(p, max_dimension_size, "order_dimension");
  if (max_k < 1 || max_k > 3) throw InvalidInput("order_dimension supports 1 <= max_k <= 3");
  const auto sig = detail::signatures(p);
  const auto& m = sig.masks;
  // With no incomparable pairs the single extension is p itself.
  if (sig.full == 0) return 1;
  if (max_k < 2) return std::nullopt;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      if ((m[i] | m[j]) == sig.full && (m[i] & m[j]) == 0) return 2;
  if (max_k < 3) return std::nullopt;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const std::uint64_t need_set = sig.full & ~(m[i] | m[j]);
      const std::uint64_t need_clear = m[i] & m[j];
      for (std::size_t k = j + 1; k < m.size(); ++k)
        if ((m[k] & need_set) == need_set && (m[k] & need_clear) == 0) return 3;
    }
  return std::nullopt;
}

}  // namespace cobweb::oracle
