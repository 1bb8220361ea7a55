#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "cobweb/chain.hpp"
#include "cobweb/digraph.hpp"
#include "cobweb/relation.hpp"

namespace cobweb {

/// Lexicographically smallest topological order of vertex indices (ties
/// broken by insertion index), or nullopt if g has a directed cycle.
inline std::optional<std::vector<std::size_t>> topological_order(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = g.predecessors(v).size();

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);

  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : g.successors(v))
      if (--indegree[w] == 0) ready.push(w);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

inline bool is_acyclic(const Digraph& g) { return topological_order(g).has_value(); }

/// Transitive closure of the arc relation. Rows are filled in reverse
/// topological order, so each vertex ORs in its successors' finished rows.
inline Reachability reachability(const Digraph& g) {
  auto topo = topological_order(g);
  if (!topo) throw CyclicInput("digraph contains a directed cycle");
  BitMatrix m(g.vertex_count());
  for (auto it = topo->rbegin(); it != topo->rend(); ++it) {
    std::size_t v = *it;
    for (std::size_t w : g.successors(v)) {
      m.set(v, w);
      m.or_row(v, w);
    }
  }
  return Reachability(g.index(), std::move(m));
}

namespace detail {

// True if tail->head is implied by a path of length >= 2.
inline bool is_shortcut(const Digraph& g, const Reachability& reach, std::size_t tail, std::size_t head) {
  for (std::size_t w : g.successors(tail))
    if (w != head && reach.contains(w, head)) return true;
  return false;
}

}  // namespace detail

/// The unique minimal subgraph with the same reachability: drops every arc
/// (u, v) for which a longer path u -> ... -> v exists.
inline Digraph transitive_reduction(const Digraph& g) {
  const Reachability reach = reachability(g);
  Digraph out(g.vertices());
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v : g.successors(u))
      if (!detail::is_shortcut(g, reach, u, v)) out.add_arc(u, v);
  return out;
}

struct RegularityResult {
  bool regular = true;
  std::optional<Arc> witness;  // a shortcut arc when !regular
  explicit operator bool() const noexcept { return regular; }
};

/// A digraph is regular when it has no arc (u, v) alongside a longer path
/// from u to v, i.e. when it equals its transitive reduction. The witness is
/// the first shortcut arc in (tail, head) index order.
inline RegularityResult is_regular(const Digraph& g) {
  const Reachability reach = reachability(g);
  for (const auto& [tail, head] : g.arcs()) {
    std::size_t t = g.index().at(tail);
    std::size_t h = g.index().at(head);
    if (detail::is_shortcut(g, reach, t, h)) return {false, Arc{tail, head}};
  }
  return {};
}

inline void require_same_vertices(const Chain& c, const Digraph& g) {
  if (!c.covers(g.index()))
    throw VertexSetMismatch("chain of " + std::to_string(c.size()) + " vertices does not cover the digraph's " +
                            std::to_string(g.vertex_count()) + " vertices");
}

namespace detail {

// m(a, b) = reach(c[a], c[b]) with rows and columns permuted into chain order.
inline BitMatrix reach_in_chain_order(const Chain& c, const Reachability& reach) {
  const std::size_t n = c.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t a = 0; a < n; ++a) idx[a] = reach.vertices().at(c[a]);
  BitMatrix m(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (reach.contains(idx[a], idx[b])) m.set(a, b);
  return m;
}

inline bool is_linear_extension(const Chain& c, const Reachability& reach) {
  const auto& vs = reach.vertices();
  for (std::size_t u = 0; u < vs.size(); ++u) {
    std::size_t ru = c.rank(vs[u]);
    auto row = reach.matrix().row(u);
    for (std::size_t v = BitMatrix::find_next(row, 0); v != BitMatrix::npos; v = BitMatrix::find_next(row, v + 1))
      if (ru >= c.rank(vs[v])) return false;
  }
  return true;
}

}  // namespace detail

/// True iff every path u -> v of g places u strictly before v in c.
inline bool is_linear_extension(const Chain& c, const Digraph& g) {
  require_same_vertices(c, g);
  return detail::is_linear_extension(c, reachability(g));
}

struct AdmissibilityResult {
  bool admissible = true;
  // (x_i1, x_i2, x_i3) with i1 < i2 < i3, no path x_i1->x_i2, no path
  // x_i2->x_i3, and a path x_i1->x_i3.
  std::optional<std::array<Vertex, 3>> witness;
  explicit operator bool() const noexcept { return admissible; }
};

namespace detail {

inline AdmissibilityResult is_admissible(const Chain& c, const Reachability& reach) {
  const std::size_t n = c.size();
  const BitMatrix m = reach_in_chain_order(c, reach);
  const std::size_t words = m.words_per_row();
  std::vector<std::uint64_t> candidates(words);
  // Lexicographic scan over (i1, i2); the smallest admissible i3 is the
  // first set bit of row(i1) & ~row(i2) above i2.
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    auto r1 = m.row(i1);
    for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
      if (m.test(i1, i2)) continue;
      auto r2 = m.row(i2);
      for (std::size_t w = 0; w < words; ++w) candidates[w] = r1[w] & ~r2[w];
      std::size_t i3 = BitMatrix::find_next(candidates, i2 + 1);
      if (i3 != BitMatrix::npos) return {false, std::array<Vertex, 3>{c[i1], c[i2], c[i3]}};
    }
  }
  return {};
}

}  // namespace detail

/// Checks whether c presents g's vertices in admissible form. The witness is
/// the lexicographically first offending index triple.
inline AdmissibilityResult is_admissible(const Chain& c, const Digraph& g) {
  require_same_vertices(c, g);
  return detail::is_admissible(c, reachability(g));
}

}  // namespace cobweb
