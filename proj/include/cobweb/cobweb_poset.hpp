#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cobweb/digraph.hpp"
#include "cobweb/relation.hpp"

namespace cobweb {

/// Generator of level sizes a_0, a_1, ...
///
/// The Fibonacci kind starts 1, 1, 1 and then adds the two previous terms,
/// giving 1, 1, 1, 2, 3, 5, 8, ... for s = 0, 1, 2, ... Constant and explicit
/// kinds are checked lazily: a size below 1 is reported when it is queried.
class LevelSequence {
 public:
  enum class Kind { Fibonacci, Constant, Explicit };

  static LevelSequence fibonacci() { return LevelSequence(Kind::Fibonacci, 0, {}); }
  static LevelSequence constant(std::int64_t c) { return LevelSequence(Kind::Constant, c, {}); }
  static LevelSequence explicit_list(std::vector<std::int64_t> sizes) {
    return LevelSequence(Kind::Explicit, 0, std::move(sizes));
  }

  Kind kind() const noexcept { return kind_; }
  std::int64_t constant_value() const noexcept { return constant_; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  std::uint64_t level_size(std::uint64_t s) const {
    switch (kind_) {
      case Kind::Fibonacci:
        return fibonacci_size(s);
      case Kind::Constant:
        return checked(constant_, s);
      case Kind::Explicit:
        if (s >= entries_.size())
          throw IndexOutOfRange("level " + std::to_string(s) + " requested but the explicit sequence has only " +
                                std::to_string(entries_.size()) + " entries");
        return checked(entries_[s], s);
    }
    return 0;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::Fibonacci:
        return "fib";
      case Kind::Constant:
        return "const:" + std::to_string(constant_);
      case Kind::Explicit: {
        std::string out = "list:";
        for (std::size_t i = 0; i < entries_.size(); ++i) out += (i ? "," : "") + std::to_string(entries_[i]);
        return out;
      }
    }
    return {};
  }

 private:
  LevelSequence(Kind k, std::int64_t c, std::vector<std::int64_t> e) : kind_(k), constant_(c), entries_(std::move(e)) {}

  static std::uint64_t checked(std::int64_t value, std::uint64_t s) {
    if (value < 1)
      throw NonPositiveSize("level " + std::to_string(s) + " has size " + std::to_string(value) + "; sizes must be >= 1");
    return static_cast<std::uint64_t>(value);
  }

  static std::uint64_t fibonacci_size(std::uint64_t s) {
    std::uint64_t prev = 1, cur = 1;  // a_1, a_2
    if (s <= 2) return 1;
    for (std::uint64_t i = 3; i <= s; ++i) {
      if (cur > std::numeric_limits<std::uint64_t>::max() - prev)
        throw TooLarge("Fibonacci level size overflows at level " + std::to_string(s));
      std::uint64_t next = prev + cur;
      prev = cur;
      cur = next;
    }
    return cur;
  }

  Kind kind_;
  std::int64_t constant_;
  std::vector<std::int64_t> entries_;
};

inline std::uint64_t level_size(const LevelSequence& seq, std::uint64_t s) { return seq.level_size(s); }

/// Finite truncation (levels 0..max_level inclusive) of the cobweb poset of
/// a level sequence. Every vertex of level p is joined to every vertex of
/// level p + 1; vertices are inserted level by level, left to right.
class CobwebPoset {
 public:
  static constexpr std::uint64_t max_vertices = 100'000;
  static constexpr std::uint64_t max_arcs = 20'000'000;

  CobwebPoset(LevelSequence seq, std::uint64_t max_level) : sequence_(std::move(seq)), max_level_(max_level) {
    std::uint64_t total = 0, arcs = 0;
    for (std::uint64_t s = 0; s <= max_level_; ++s) {
      std::uint64_t a = sequence_.level_size(s);
      if (a > max_vertices || total + a > max_vertices)
        throw TooLarge("cobweb truncation exceeds " + std::to_string(max_vertices) + " vertices");
      if (s > 0) {
        std::uint64_t prev = sizes_.back();
        if (prev > max_arcs / a || arcs + prev * a > max_arcs)
          throw TooLarge("cobweb truncation exceeds " + std::to_string(max_arcs) + " arcs");
        arcs += prev * a;
      }
      total += a;
      sizes_.push_back(a);
    }

    std::size_t first = 0;
    for (std::uint64_t s = 0; s <= max_level_; ++s) {
      level_start_.push_back(first);
      for (std::uint64_t j = 1; j <= sizes_[s]; ++j) hasse_.add_vertex(Vertex(j, s));
      first += sizes_[s];
    }
    for (std::uint64_t p = 0; p < max_level_; ++p)
      for (std::size_t t = 0; t < sizes_[p]; ++t)
        for (std::size_t h = 0; h < sizes_[p + 1]; ++h) hasse_.add_arc(level_start_[p] + t, level_start_[p + 1] + h);
  }

  const LevelSequence& sequence() const noexcept { return sequence_; }
  std::uint64_t max_level() const noexcept { return max_level_; }
  const std::vector<std::uint64_t>& level_sizes() const noexcept { return sizes_; }
  const Digraph& hasse() const noexcept { return hasse_; }
  std::size_t vertex_count() const noexcept { return hasse_.vertex_count(); }

  // The level set Phi_s, left to right.
  std::vector<Vertex> level(std::uint64_t s) const {
    std::vector<Vertex> out;
    if (s > max_level_) return out;
    for (std::uint64_t j = 1; j <= sizes_[s]; ++j) out.emplace_back(j, s);
    return out;
  }

  bool contains(const Vertex& v) const { return v.level <= max_level_ && v.position <= sizes_[v.level]; }

 private:
  LevelSequence sequence_;
  std::uint64_t max_level_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::size_t> level_start_;
  Digraph hasse_;
};

inline CobwebPoset build_cobweb(const LevelSequence& seq, std::uint64_t max_level) { return CobwebPoset(seq, max_level); }

/// x <= y in a cobweb poset: y is on a higher level, or x and y coincide.
constexpr bool leq_p(const Vertex& x, const Vertex& y) noexcept {
  return x.level < y.level || (x.level == y.level && x.position == y.position);
}

/// {(x, y) : x <= y, x != y}, computed directly from leq_p.
inline Reachability strict_order_relation(const CobwebPoset& p) {
  const auto& vs = p.hasse().index();
  Reachability r(vs);
  for (std::size_t u = 0; u < vs.size(); ++u)
    for (std::size_t v = 0; v < vs.size(); ++v)
      if (u != v && leq_p(vs[u], vs[v])) r.insert(u, v);
  return r;
}

}  // namespace cobweb
