#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cobweb/errors.hpp"
#include "cobweb/vertex.hpp"

namespace cobweb {

// Insertion-ordered vertex set with O(1) lookup of a vertex's index.
class VertexIndex {
 public:
  VertexIndex() = default;
  explicit VertexIndex(std::vector<Vertex> vertices) {
    for (const auto& v : vertices) insert(v);
  }

  // Returns the index of v, inserting it at the end if absent.
  std::size_t insert(const Vertex& v) {
    auto [it, fresh] = index_.try_emplace(v, order_.size());
    if (fresh) order_.push_back(v);
    return it->second;
  }

  std::optional<std::size_t> find(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t at(const Vertex& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw InvalidInput("unknown vertex " + v.str());
    return it->second;
  }

  bool contains(const Vertex& v) const { return index_.contains(v); }
  const Vertex& operator[](std::size_t i) const { return order_[i]; }
  const std::vector<Vertex>& list() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }

  // Same members, order ignored.
  bool same_set(const VertexIndex& other) const {
    if (size() != other.size()) return false;
    return std::all_of(order_.begin(), order_.end(), [&](const Vertex& v) { return other.contains(v); });
  }

 private:
  std::vector<Vertex> order_;
  std::unordered_map<Vertex, std::size_t> index_;
};

using Arc = std::pair<Vertex, Vertex>;

/// Finite loop-free directed graph without multiple arcs. Vertices keep
/// insertion order, and every traversal over them is deterministic.
class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(std::vector<Vertex> vertices) {
    for (const auto& v : vertices) add_vertex(v);
  }

  Digraph(std::vector<Vertex> vertices, const std::vector<Arc>& arcs) : Digraph(std::move(vertices)) {
    for (const auto& [t, h] : arcs) add_arc(t, h);
  }

  std::size_t add_vertex(const Vertex& v) {
    std::size_t i = index_.insert(v);
    if (i == out_.size()) {
      out_.emplace_back();
      in_.emplace_back();
    }
    return i;
  }

  // Adds tail -> head. Both endpoints must already be vertices. Returns
  // false if the arc was already present.
  bool add_arc(const Vertex& tail, const Vertex& head) {
    auto t = index_.find(tail);
    auto h = index_.find(head);
    if (!t || !h) throw InvalidInput("arc endpoint not in vertex set: " + tail.str() + " -> " + head.str());
    return add_arc(*t, *h);
  }

  bool add_arc(std::size_t t, std::size_t h) {
    if (t == h) throw InvalidInput("loop at vertex " + index_[t].str());
    if (!arc_set_.emplace(t, h).second) return false;
    out_[t].push_back(h);
    in_[h].push_back(t);
    return true;
  }

  std::size_t vertex_count() const noexcept { return index_.size(); }
  std::size_t arc_count() const noexcept { return arc_set_.size(); }

  const VertexIndex& index() const noexcept { return index_; }
  const std::vector<Vertex>& vertices() const noexcept { return index_.list(); }
  const Vertex& vertex(std::size_t i) const { return index_[i]; }

  const std::vector<std::size_t>& successors(std::size_t i) const { return out_[i]; }
  const std::vector<std::size_t>& predecessors(std::size_t i) const { return in_[i]; }

  bool has_arc(std::size_t t, std::size_t h) const { return arc_set_.contains({t, h}); }
  bool has_arc(const Vertex& tail, const Vertex& head) const {
    auto t = index_.find(tail);
    auto h = index_.find(head);
    return t && h && has_arc(*t, *h);
  }

  // Arcs ordered by (tail index, head index).
  std::vector<Arc> arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_set_.size());
    for (const auto& [t, h] : arc_set_) result.emplace_back(index_[t], index_[h]);
    return result;
  }

  // Set equality on vertices and arcs; insertion order is ignored.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    if (!a.index_.same_set(b.index_) || a.arc_count() != b.arc_count()) return false;
    for (const auto& [t, h] : a.arc_set_)
      if (!b.has_arc(a.index_[t], a.index_[h])) return false;
    return true;
  }

 private:
  VertexIndex index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::set<std::pair<std::size_t, std::size_t>> arc_set_;
};

}  // namespace cobweb
