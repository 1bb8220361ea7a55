#pragma once

// Shared test helpers: small graph builders, random generators and
// independent reference computations that avoid the library's code paths.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "cobweb/cobweb.hpp"

namespace cobweb::testing {

inline Vertex V(std::uint64_t pos, std::uint64_t lvl) { return Vertex(pos, lvl); }

// Abstract vertex k rendered as <k+1, 0>.
inline Vertex node(std::size_t k) { return Vertex(k + 1, 0); }

inline Digraph graph_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  std::vector<Vertex> vs;
  for (std::size_t k = 0; k < n; ++k) vs.push_back(node(k));
  Digraph g(vs);
  for (auto [a, b] : arcs) g.add_arc(node(a), node(b));
  return g;
}

inline Chain chain_of(std::initializer_list<std::size_t> ks) {
  std::vector<Vertex> vs;
  for (auto k : ks) vs.push_back(node(k));
  return Chain(vs);
}

// Closure by repeated boolean matrix squaring R <- R | R*R until stable.
inline std::set<std::pair<Vertex, Vertex>> closure_by_squaring(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const auto& [t, h] : g.arcs()) r[g.index().at(t)][g.index().at(h)] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    auto next = r;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (r[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (r[k][j] && !next[i][j]) next[i][j] = changed = true;
    r = std::move(next);
  }
  std::set<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j]) out.emplace(g.vertex(i), g.vertex(j));
  return out;
}

inline std::set<std::pair<Vertex, Vertex>> pair_set(const Relation& r) {
  auto p = r.pairs();
  return {p.begin(), p.end()};
}

// Breadth-first search from u; true if v is reached by >= 1 arc.
inline bool bfs_reaches(const Digraph& g, const Vertex& u, const Vertex& v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{g.index().at(u)};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto y : g.successors(x)) {
      if (g.vertex(y) == v) return true;
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return false;
}

// Random DAG: arcs only go from lower to higher hidden rank, vertices are
// inserted in a shuffled order so insertion order carries no hint.
inline Digraph random_dag(std::size_t n, double density, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(density);
  std::vector<Vertex> vs;
  for (std::size_t k = 0; k < n; ++k) vs.push_back(node(perm[k]));
  Digraph g(vs);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_arc(node(a), node(b));
  return g;
}

// All DAGs on n labeled vertices whose arcs respect the labeling; every
// DAG on n vertices is isomorphic to one of these.
template <class Visit>
void for_each_labeled_dag(std::size_t n, Visit&& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1U) arcs.push_back(slots[k]);
    visit(graph_of(n, arcs));
  }
}

// Standard example S_3: a_i < b_j iff i != j.
inline Digraph standard_example_s3() {
  // a_k = node(k), b_k = node(k + 3)
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) arcs.emplace_back(i, j + 3);
  return graph_of(6, arcs);
}

// The "N" poset a < c, b < c, b < d with a=0, b=1, c=2, d=3.
inline Digraph n_poset() { return graph_of(4, {{0, 2}, {1, 2}, {1, 3}}); }

inline LevelSequence random_explicit_sequence(std::size_t levels, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> size(1, 5);
  std::vector<std::int64_t> sizes(levels);
  for (auto& s : sizes) s = size(rng);
  return LevelSequence::explicit_list(sizes);
}

}  // namespace cobweb::testing
