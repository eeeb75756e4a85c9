#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace hgkit {

/// Fixed-capacity bitset with word-level set algebra. Unlike std::bitset it
/// exposes first/next iteration and subset/intersection tests without
/// materializing temporaries.
template <std::size_t Words>
class BitArray {
 public:
  static constexpr std::size_t kWords = Words;
  static constexpr std::size_t kBits = Words * 64;

  constexpr BitArray() = default;

  constexpr void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  constexpr void clear() { words_.fill(0); }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  constexpr bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  constexpr bool none() const { return !any(); }

  /// Lowest set bit, or -1.
  constexpr int first() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  /// Lowest set bit strictly greater than `after`, or -1.
  constexpr int next(int after) const {
    std::size_t pos = static_cast<std::size_t>(after + 1);
    if (pos >= kBits) return -1;
    std::size_t wi = pos >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (pos & 63));
    for (;;) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == Words) return -1;
      w = words_[wi];
    }
  }

  /// Highest set bit, or -1.
  constexpr int last() const {
    for (std::size_t i = Words; i-- > 0;)
      if (words_[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(words_[i]));
    return -1;
  }

  constexpr bool intersects(const BitArray& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  constexpr bool is_subset_of(const BitArray& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  constexpr int intersection_count(const BitArray& o) const {
    int c = 0;
    for (std::size_t i = 0; i < Words; ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  constexpr BitArray& operator&=(const BitArray& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr BitArray& operator|=(const BitArray& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr BitArray& operator^=(const BitArray& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// this := this \ o
  constexpr BitArray& subtract(const BitArray& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend constexpr BitArray operator&(BitArray a, const BitArray& b) { return a &= b; }
  friend constexpr BitArray operator|(BitArray a, const BitArray& b) { return a |= b; }
  friend constexpr BitArray operator^(BitArray a, const BitArray& b) { return a ^= b; }
  friend constexpr BitArray operator-(BitArray a, const BitArray& b) { return a.subtract(b); }
  friend constexpr bool operator==(const BitArray&, const BitArray&) = default;

  /// Iterates set bits in increasing order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }
  constexpr void set_word(std::size_t i, std::uint64_t w) { words_[i] = w; }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
    return h;
  }

 private:
  std::array<std::uint64_t, Words> words_{};
};

}  // namespace hgkit
