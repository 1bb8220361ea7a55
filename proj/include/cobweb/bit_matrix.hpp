#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cobweb {

// Dense square boolean matrix, one packed row of 64-bit words per vertex.
class BitMatrix {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c) noexcept { bits_[r * words_ + c / 64] |= bit(c); }
  void reset(std::size_t r, std::size_t c) noexcept { bits_[r * words_ + c / 64] &= ~bit(c); }

  std::span<std::uint64_t> row(std::size_t r) noexcept { return {bits_.data() + r * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t r) const noexcept {
    return {bits_.data() + r * words_, words_};
  }

  // row(dst) |= row(src)
  void or_row(std::size_t dst, std::size_t src) noexcept {
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  static constexpr std::uint64_t bit(std::size_t c) noexcept { return std::uint64_t{1} << (c % 64); }

  // First set column >= from in a packed row, or npos.
  static std::size_t find_next(std::span<const std::uint64_t> r, std::size_t from) noexcept {
    std::size_t w = from / 64;
    if (w >= r.size()) return npos;
    std::uint64_t cur = r[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (cur != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w >= r.size()) return npos;
      cur = r[w];
    }
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace cobweb
