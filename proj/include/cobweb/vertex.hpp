#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "cobweb/errors.hpp"

namespace cobweb {

/// A labeled poset element <position, level>: the position-th element
/// (1-based, left to right) of the given level.
struct Vertex {
  std::uint64_t position = 1;
  std::uint64_t level = 0;

  constexpr Vertex() = default;
  constexpr Vertex(std::uint64_t pos, std::uint64_t lvl) : position(pos), level(lvl) {
    if (pos < 1) throw InvalidInput("vertex position must be >= 1");
  }

  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;

  // Level-major, then position: the order chain X enumerates.
  friend constexpr std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    return a.position <=> b.position;
  }

  std::string str() const { return std::to_string(position) + "," + std::to_string(level); }
};

inline std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << '<' << v.position << ',' << v.level << '>';
}

}  // namespace cobweb

template <>
struct std::hash<cobweb::Vertex> {
  std::size_t operator()(const cobweb::Vertex& v) const noexcept {
    std::uint64_t h = v.position * 0x9E3779B97F4A7C15ULL;
    h ^= v.level + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};
