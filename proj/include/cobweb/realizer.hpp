#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cobweb/chain.hpp"
#include "cobweb/cobweb_poset.hpp"
#include "cobweb/order_core.hpp"

namespace cobweb {

/// Levels ascending, positions ascending within a level.
inline Chain chain_x(const CobwebPoset& p) {
  std::vector<Vertex> order;
  order.reserve(p.vertex_count());
  for (std::uint64_t s = 0; s <= p.max_level(); ++s)
    for (const auto& v : p.level(s)) order.push_back(v);
  return Chain(std::move(order));
}

/// Levels ascending, positions descending within a level.
inline Chain chain_y(const CobwebPoset& p) {
  std::vector<Vertex> order;
  order.reserve(p.vertex_count());
  for (std::uint64_t s = 0; s <= p.max_level(); ++s) {
    auto lvl = p.level(s);
    order.insert(order.end(), lvl.rbegin(), lvl.rend());
  }
  return Chain(std::move(order));
}

/// Reflexive relation {(u, v) : u <= v in both a and b}, indexed in a's order.
inline Relation intersect_chains(const Chain& a, const Chain& b) {
  if (!a.covers_same_set(b)) throw VertexSetMismatch("chains cover different vertex sets");
  const std::size_t n = a.size();
  std::vector<std::size_t> rank_b(n);
  for (std::size_t i = 0; i < n; ++i) rank_b[i] = b.rank(a[i]);
  Relation r{VertexIndex(a.order())};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v)
      if (rank_b[u] <= rank_b[v]) r.insert(u, v);
  return r;
}

/// Two linear extensions of a target digraph's reachability order. The
/// constructor checks coverage and the extension property; whether the pair
/// actually realizes the order is left to verify_realizer.
class Realizer {
 public:
  Realizer(Chain first, Chain second, Digraph target)
      : first_(std::move(first)), second_(std::move(second)), target_(std::move(target)) {
    require_same_vertices(first_, target_);
    require_same_vertices(second_, target_);
    const Reachability reach = reachability(target_);
    if (!detail::is_linear_extension(first_, reach))
      throw NotLinearExtension("first chain is not a linear extension of the target");
    if (!detail::is_linear_extension(second_, reach))
      throw NotLinearExtension("second chain is not a linear extension of the target");
  }

  const Chain& first() const noexcept { return first_; }
  const Chain& second() const noexcept { return second_; }
  const Digraph& target() const noexcept { return target_; }

 private:
  Chain first_;
  Chain second_;
  Digraph target_;
};

struct RealizerCheck {
  bool ok = true;
  std::optional<Arc> witness;  // first pair, in target order, where the relations differ
  explicit operator bool() const noexcept { return ok; }
};

inline RealizerCheck verify_realizer(const Realizer& r) {
  const Relation expected = reachability(r.target()).reflexive_closure();
  const Relation actual = intersect_chains(r.first(), r.second());
  if (auto diff = expected.first_difference(actual)) return {false, diff};
  return {};
}

/// Conjugate tournament that is not transitive; cycle[i] precedes cycle[i+1]
/// and the last vertex precedes the first.
struct ConjugateCycle {
  std::vector<Vertex> cycle;
};

namespace detail {

// Orients every pair of x's positions: comparable pairs keep x's order,
// incomparable pairs are inverted. Returns the resulting linear order, or a
// cycle found by depth-first search in x order.
inline std::variant<Chain, ConjugateCycle> conjugate_of_extension(const Chain& x, const Reachability& reach) {
  const std::size_t n = x.size();
  const BitMatrix m = reach_in_chain_order(x, reach);
  auto before = [&](std::size_t a, std::size_t b) { return a < b ? m.test(a, b) : !m.test(b, a); };

  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> color(n, White);
  std::vector<std::size_t> parent(n, BitMatrix::npos);
  std::vector<std::size_t> next(n, 0);
  std::vector<std::size_t> postorder;
  postorder.reserve(n);

  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != White) continue;
    std::vector<std::size_t> stack{root};
    color[root] = Grey;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      bool descended = false;
      while (next[a] < n) {
        std::size_t b = next[a]++;
        if (b == a || !before(a, b)) continue;
        if (color[b] == Grey) {
          std::vector<Vertex> cycle;
          for (std::size_t v = a; v != b; v = parent[v]) cycle.push_back(x[v]);
          cycle.push_back(x[b]);
          std::reverse(cycle.begin(), cycle.end());
          return ConjugateCycle{std::move(cycle)};
        }
        if (color[b] == White) {
          color[b] = Grey;
          parent[b] = a;
          stack.push_back(b);
          descended = true;
          break;
        }
      }
      if (!descended) {
        color[a] = Black;
        postorder.push_back(a);
        stack.pop_back();
      }
    }
  }

  std::vector<Vertex> order;
  order.reserve(n);
  for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) order.push_back(x[*it]);
  return Chain(std::move(order));
}

}  // namespace detail

/// Inverts every pair of x that is incomparable in g and keeps the rest.
/// Throws NotLinearExtension if x is not a linear extension of g.
inline std::variant<Chain, ConjugateCycle> conjugate_chain(const Chain& x, const Digraph& g) {
  require_same_vertices(x, g);
  const Reachability reach = reachability(g);
  if (!detail::is_linear_extension(x, reach)) throw NotLinearExtension("chain is not a linear extension of the digraph");
  return detail::conjugate_of_extension(x, reach);
}

struct Orderable {
  Realizer realizer;
};
struct NotRegular {
  Arc witness;
};
struct NoAdmissibleChain {};
struct NonTransitiveConjugate {
  std::vector<Vertex> cycle;
};

struct OrderabilityVerdict {
  std::variant<Orderable, NotRegular, NoAdmissibleChain, NonTransitiveConjugate> outcome;
  // False when the topological-order search fell back to the heuristic
  // sweep; negative verdicts are then inconclusive.
  bool exhaustive = true;
  std::uint64_t explored = 0;

  bool orderable() const noexcept { return std::holds_alternative<Orderable>(outcome); }
  const Realizer* realizer() const noexcept {
    auto* o = std::get_if<Orderable>(&outcome);
    return o ? &o->realizer : nullptr;
  }

  std::string kind() const {
    switch (outcome.index()) {
      case 0: return "orderable";
      case 1: return "not_regular";
      case 2: return "no_admissible_chain";
      default: return "non_transitive_conjugate";
    }
  }
};

inline constexpr std::uint64_t default_search_budget = 1'000'000;

namespace detail {

// Enumerates topological orders of a DAG that are admissible, growing
// prefixes one vertex at a time and pruning any prefix that already holds
// an inadmissible triple. Prefixes are extended in ascending vertex index,
// so complete orders appear in lexicographic order.
class AdmissibleOrderSearch {
 public:
  AdmissibleOrderSearch(const Digraph& g, const Reachability& reach)
      : g_(g), n_(g.vertex_count()), words_((n_ + 63) / 64), reach_(reach.matrix()), preds_(n_) {
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v)
        if (reach_.test(u, v)) preds_.set(v, u);
  }

  std::uint64_t explored() const noexcept { return explored_; }

  // Calls visit(order) for each admissible topological order until visit
  // returns true or the node budget runs out. Returns true iff the search
  // space was exhausted (or visit stopped it) within budget.
  template <class Visit>
  bool exhaustive(std::uint64_t budget, Visit&& visit) {
    reset();
    struct Frame {
      std::vector<std::size_t> candidates;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({available(), 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (prefix_.size() == n_) {
        if (visit(prefix_)) return true;
        stack.pop_back();
        if (!prefix_.empty()) pop();
        continue;
      }
      bool pushed = false;
      while (top.next < top.candidates.size()) {
        std::size_t z = top.candidates[top.next++];
        if (!can_append(z)) continue;
        if (++explored_ > budget) return false;
        push(z);
        stack.push_back({available(), 0});
        pushed = true;
        break;
      }
      if (!pushed) {
        stack.pop_back();
        if (!stack.empty()) pop();
      }
    }
    return true;
  }

  // Randomized greedy sweep: round r picks among admissible-preserving
  // available vertices with a generator seeded by r (round 0 always takes
  // the smallest index). Stops when visit returns true or after `rounds`.
  template <class Visit>
  void sweep(std::uint64_t rounds, Visit&& visit) {
    for (std::uint64_t r = 0; r < rounds; ++r) {
      reset_prefix();
      std::mt19937_64 rng(r);
      bool dead_end = false;
      while (prefix_.size() < n_) {
        std::vector<std::size_t> viable;
        for (std::size_t z : available())
          if (can_append(z)) viable.push_back(z);
        if (viable.empty()) {
          dead_end = true;
          break;
        }
        std::size_t pick = r == 0 ? 0 : static_cast<std::size_t>(rng() % viable.size());
        ++explored_;
        push(viable[pick]);
      }
      if (!dead_end && visit(prefix_)) return;
    }
  }

 private:
  void reset() {
    explored_ = 0;
    reset_prefix();
  }

  void reset_prefix() {
    prefix_.clear();
    before_.assign(1, std::vector<std::uint64_t>(words_, 0));
    placed_.assign(n_, false);
    indegree_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) indegree_[v] = g_.predecessors(v).size();
  }

  std::vector<std::size_t> available() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n_; ++v)
      if (!placed_[v] && indegree_[v] == 0) out.push_back(v);
    return out;
  }

  // Appending z creates an inadmissible triple (i1, i2, z) iff some earlier
  // prefix vertex i2 does not reach z while a vertex i1 placed before i2
  // reaches z but not i2.
  bool can_append(std::size_t z) const {
    auto pz = preds_.row(z);
    for (std::size_t k = 0; k < prefix_.size(); ++k) {
      std::size_t mid = prefix_[k];
      if (reach_.test(mid, z)) continue;
      auto pm = preds_.row(mid);
      const auto& earlier = before_[k];
      for (std::size_t w = 0; w < words_; ++w)
        if ((earlier[w] & pz[w] & ~pm[w]) != 0) return false;
    }
    return true;
  }

  void push(std::size_t z) {
    std::vector<std::uint64_t> next = before_.back();
    next[z / 64] |= BitMatrix::bit(z);
    before_.push_back(std::move(next));
    prefix_.push_back(z);
    placed_[z] = true;
    for (std::size_t w : g_.successors(z)) --indegree_[w];
  }

  void pop() {
    std::size_t z = prefix_.back();
    prefix_.pop_back();
    before_.pop_back();
    placed_[z] = false;
    for (std::size_t w : g_.successors(z)) ++indegree_[w];
  }

  const Digraph& g_;
  std::size_t n_;
  std::size_t words_;
  const BitMatrix& reach_;
  BitMatrix preds_;
  std::vector<std::size_t> prefix_;
  // before_[k] = vertices at prefix positions < k
  std::vector<std::vector<std::uint64_t>> before_;
  std::vector<bool> placed_;
  std::vector<std::size_t> indegree_;
  std::uint64_t explored_ = 0;
};

}  // namespace detail

/// Decides whether g is the Hasse diagram of a two-dimensional poset and,
/// if so, builds a realizer.
///
/// g must be regular and admit an admissible topological order x; the second
/// chain is the conjugate of x. Admissible orders are searched exhaustively
/// in lexicographic order while the number of explored prefix nodes stays
/// within search_budget; past that a seeded greedy sweep of up to
/// search_budget rounds takes over and negative verdicts become
/// inconclusive (exhaustive == false).
inline OrderabilityVerdict decide_odag(const Digraph& g, std::uint64_t search_budget = default_search_budget) {
  if (search_budget == 0) throw InvalidInput("search budget must be positive");
  if (!is_acyclic(g)) throw CyclicInput("digraph contains a directed cycle");
  if (auto reg = is_regular(g); !reg) return {NotRegular{*reg.witness}, true, 0};

  const Reachability reach = reachability(g);
  detail::AdmissibleOrderSearch search(g, reach);
  std::optional<Realizer> found;
  std::optional<ConjugateCycle> failed_conjugate;

  auto visit = [&](const std::vector<std::size_t>& order) {
    std::vector<Vertex> vs;
    vs.reserve(order.size());
    for (std::size_t i : order) vs.push_back(g.vertex(i));
    Chain x(std::move(vs));
    auto conj = detail::conjugate_of_extension(x, reach);
    if (auto* y = std::get_if<Chain>(&conj)) {
      found.emplace(std::move(x), std::move(*y), g);
      return true;
    }
    if (!failed_conjugate) failed_conjugate = std::get<ConjugateCycle>(std::move(conj));
    return false;
  };

  bool exhaustive = search.exhaustive(search_budget, visit);
  if (!exhaustive && !found) search.sweep(search_budget, visit);

  if (found) {
    if (!verify_realizer(*found)) throw std::logic_error("decide_odag produced a realizer that does not verify");
    return {Orderable{std::move(*found)}, exhaustive, search.explored()};
  }
  if (failed_conjugate) return {NonTransitiveConjugate{std::move(failed_conjugate->cycle)}, exhaustive, search.explored()};
  return {NoAdmissibleChain{}, exhaustive, search.explored()};
}

}  // namespace cobweb
