#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cobweb/bit_matrix.hpp"
#include "cobweb/digraph.hpp"

namespace cobweb {

/// A binary relation over a finite vertex set, stored as a dense bit matrix
/// indexed by the vertex set's insertion order.
class Relation {
 public:
  Relation() = default;
  explicit Relation(VertexIndex vertices) : vertices_(std::move(vertices)), bits_(vertices_.size()) {}
  Relation(VertexIndex vertices, BitMatrix bits) : vertices_(std::move(vertices)), bits_(std::move(bits)) {}

  const VertexIndex& vertices() const noexcept { return vertices_; }
  const BitMatrix& matrix() const noexcept { return bits_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }

  bool contains(std::size_t u, std::size_t v) const { return bits_.test(u, v); }
  bool contains(const Vertex& u, const Vertex& v) const {
    auto a = vertices_.find(u);
    auto b = vertices_.find(v);
    return a && b && bits_.test(*a, *b);
  }

  void insert(std::size_t u, std::size_t v) { bits_.set(u, v); }
  void insert(const Vertex& u, const Vertex& v) { bits_.set(vertices_.at(u), vertices_.at(v)); }

  std::size_t pair_count() const noexcept { return bits_.count(); }

  // Pairs in (first index, second index) order.
  std::vector<Arc> pairs() const {
    std::vector<Arc> out;
    for (std::size_t u = 0; u < vertex_count(); ++u)
      for (std::size_t v = 0; v < vertex_count(); ++v)
        if (bits_.test(u, v)) out.emplace_back(vertices_[u], vertices_[v]);
    return out;
  }

  Relation reflexive_closure() const {
    Relation r = *this;
    for (std::size_t i = 0; i < vertex_count(); ++i) r.bits_.set(i, i);
    return r;
  }

  bool is_reflexive() const {
    for (std::size_t i = 0; i < vertex_count(); ++i)
      if (!bits_.test(i, i)) return false;
    return true;
  }

  bool is_irreflexive() const {
    for (std::size_t i = 0; i < vertex_count(); ++i)
      if (bits_.test(i, i)) return false;
    return true;
  }

  bool is_antisymmetric() const {
    for (std::size_t u = 0; u < vertex_count(); ++u)
      for (std::size_t v = u + 1; v < vertex_count(); ++v)
        if (bits_.test(u, v) && bits_.test(v, u)) return false;
    return true;
  }

  bool is_transitive() const {
    const std::size_t n = vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
      auto ru = bits_.row(u);
      for (std::size_t v = 0; v < n; ++v) {
        if (!bits_.test(u, v)) continue;
        auto rv = bits_.row(v);
        for (std::size_t w = 0; w < ru.size(); ++w)
          if ((rv[w] & ~ru[w]) != 0) return false;
      }
    }
    return true;
  }

  /// First pair (in this relation's index order) on which the two relations
  /// disagree, or nullopt if they are equal as sets of pairs. Throws
  /// VertexSetMismatch when the vertex sets differ.
  std::optional<Arc> first_difference(const Relation& other) const {
    if (!vertices_.same_set(other.vertices_)) throw VertexSetMismatch("relations over different vertex sets");
    std::vector<std::size_t> map(vertex_count());
    for (std::size_t i = 0; i < vertex_count(); ++i) map[i] = other.vertices_.at(vertices_[i]);
    for (std::size_t u = 0; u < vertex_count(); ++u)
      for (std::size_t v = 0; v < vertex_count(); ++v)
        if (bits_.test(u, v) != other.bits_.test(map[u], map[v])) return Arc{vertices_[u], vertices_[v]};
    return std::nullopt;
  }

  // Number of pairs in exactly one of the two relations.
  std::size_t symmetric_difference_size(const Relation& other) const {
    if (!vertices_.same_set(other.vertices_)) throw VertexSetMismatch("relations over different vertex sets");
    std::size_t diff = 0;
    for (std::size_t u = 0; u < vertex_count(); ++u)
      for (std::size_t v = 0; v < vertex_count(); ++v)
        diff += bits_.test(u, v) != other.contains(vertices_[u], vertices_[v]);
    return diff;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.vertices_.same_set(b.vertices_) && !a.first_difference(b);
  }

 private:
  VertexIndex vertices_;
  BitMatrix bits_;
};

/// Strict "a directed path of length >= 1 exists" relation of an acyclic digraph.
using Reachability = Relation;

}  // namespace cobweb
