// Fixed-length vectors over a small finite domain {0, ..., d-1}.
//
// Boolean vectors (d == 2) are packed one bit per coordinate into 64-bit
// words, coordinate 0 at the most significant bit of word 0.  That layout
// makes unsigned word comparison agree with lexicographic coordinate order,
// and gives meet/join/xor/complement/subset tests in O(n/64) word steps.
// Vectors over d > 2 store one byte per coordinate.
#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "clenum/errors.hpp"

namespace clenum {

class Vector {
 public:
  Vector() = default;

  Vector(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw SpecError("vector length must be at least 1");
    if (d < 2 || d > 10) throw SpecError("domain size must be in [2, 10]");
    if (d == 2) {
      words_.assign(word_count(), 0);
    } else {
      digits_.assign(static_cast<std::size_t>(n), 0);
    }
  }

  static Vector from_string(const std::string& s, int d = 2) {
    Vector v(static_cast<int>(s.size()), d);
    for (int i = 0; i < v.n_; ++i) {
      char c = s[static_cast<std::size_t>(i)];
      if (c < '0' || c >= '0' + d)
        throw ParseError("coordinate '" + std::string(1, c) +
                         "' out of range for domain " + std::to_string(d));
      v.set(i, c - '0');
    }
    return v;
  }

  int size() const { return n_; }
  int domain() const { return d_; }

  int get(int i) const {
    if (d_ == 2) return (words_[static_cast<std::size_t>(i >> 6)] >> bit_pos(i)) & 1u ? 1 : 0;
    return digits_[static_cast<std::size_t>(i)];
  }

  void set(int i, int value) {
    if (d_ == 2) {
      std::uint64_t mask = std::uint64_t{1} << bit_pos(i);
      if (value)
        words_[static_cast<std::size_t>(i >> 6)] |= mask;
      else
        words_[static_cast<std::size_t>(i >> 6)] &= ~mask;
    } else {
      digits_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value);
    }
  }

  // --- boolean word operations (require d == 2) ---

  void meet_with(const Vector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  }
  void join_with(const Vector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }
  void xor_with(const Vector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }
  void complement_in_place() {
    if (d_ == 2) {
      for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = ~words_[w];
      words_.back() &= last_word_mask();
    } else {
      for (auto& dig : digits_) dig = static_cast<std::uint8_t>(d_ - 1 - dig);
    }
  }
  Vector complemented() const {
    Vector r = *this;
    r.complement_in_place();
    return r;
  }

  // true iff every 1-coordinate of *this is a 1-coordinate of o.
  bool ones_subset_of(const Vector& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  bool all_zero() const {
    if (d_ == 2) {
      for (auto w : words_)
        if (w) return false;
      return true;
    }
    for (auto dig : digits_)
      if (dig) return false;
    return true;
  }

  int popcount() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  std::size_t word_count() const { return static_cast<std::size_t>((n_ + 63) >> 6); }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  bool operator==(const Vector& o) const {
    return n_ == o.n_ && d_ == o.d_ && words_ == o.words_ && digits_ == o.digits_;
  }
  bool operator!=(const Vector& o) const { return !(*this == o); }

  // Lexicographic by coordinates (coordinate 0 most significant).
  bool operator<(const Vector& o) const {
    if (d_ == 2 && o.d_ == 2) return words_ < o.words_;
    return digits_ < o.digits_;
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + get(i));
    return s;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n_) ^
                      (static_cast<std::uint64_t>(d_) << 32);
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (auto w : words_) mix(w);
    for (auto dig : digits_) mix(dig);
    return static_cast<std::size_t>(h);
  }

 private:
  static int bit_pos(int i) { return 63 - (i & 63); }

  std::uint64_t last_word_mask() const {
    int used = n_ - 64 * (static_cast<int>(word_count()) - 1);
    if (used == 64) return ~std::uint64_t{0};
    return ~std::uint64_t{0} << (64 - used);
  }

  int n_ = 0;
  int d_ = 2;
  std::vector<std::uint64_t> words_;   // d == 2
  std::vector<std::uint8_t> digits_;   // d > 2
};

struct VectorHash {
  std::size_t operator()(const Vector& v) const { return v.hash(); }
};

}  // namespace clenum
