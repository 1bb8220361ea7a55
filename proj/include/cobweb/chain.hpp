#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "cobweb/digraph.hpp"

namespace cobweb {

/// A total order on a vertex set, stored as its enumeration. rank() is the
/// inverse of the enumeration.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<Vertex> order) {
    for (const auto& v : order) {
      if (index_.contains(v)) throw InvalidInput("chain repeats vertex " + v.str());
      index_.insert(v);
    }
  }

  std::size_t size() const noexcept { return index_.size(); }
  const std::vector<Vertex>& order() const noexcept { return index_.list(); }
  const Vertex& operator[](std::size_t i) const { return index_[i]; }
  std::size_t rank(const Vertex& v) const { return index_.at(v); }
  bool contains(const Vertex& v) const { return index_.contains(v); }

  // u <= v in this linear order.
  bool leq(const Vertex& u, const Vertex& v) const { return rank(u) <= rank(v); }

  bool covers(const VertexIndex& vertices) const { return index_.same_set(vertices); }
  bool covers_same_set(const Chain& other) const { return index_.same_set(other.index_); }

  Chain reversed() const {
    std::vector<Vertex> rev(order().rbegin(), order().rend());
    return Chain(std::move(rev));
  }

  auto begin() const { return order().begin(); }
  auto end() const { return order().end(); }

  friend bool operator==(const Chain& a, const Chain& b) { return a.order() == b.order(); }

 private:
  VertexIndex index_;
};

}  // namespace cobweb
