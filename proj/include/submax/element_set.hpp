// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

#include "submax/errors.hpp"

namespace submax {

// Dense bitmask over ground-set elements 0..n-1. Fixed capacity of 256
// elements (four 64-bit words), enough for every instance the library
// targets, so all set operations are branch-free word arithmetic and the
// type has plain value semantics.
class ElementSet {
 public:
  static constexpr int kMaxElements = 256;
  static constexpr int kWords = kMaxElements / 64;

  constexpr ElementSet() = default;

  constexpr ElementSet(std::initializer_list<int> elements) {
    for (int u : elements) add(u);
  }

  // Set {0, 1, ..., n-1}.
  static constexpr ElementSet full(int n) {
    ElementSet s;
    for (int w = 0; w < kWords; ++w) {
      int lo = 64 * w;
      if (n <= lo) break;
      int bits = n - lo >= 64 ? 64 : n - lo;
      s.words_[w] = bits == 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << bits) - 1;
    }
    return s;
  }

  // Set from the low bits of a plain mask (elements 0..63 only).
  static constexpr ElementSet from_mask(std::uint64_t mask) {
    ElementSet s;
    s.words_[0] = mask;
    return s;
  }

  constexpr bool contains(int u) const {
    return (words_[word(u)] >> bit(u)) & 1u;
  }

  constexpr void add(int u) { words_[word(u)] |= std::uint64_t{1} << bit(u); }
  constexpr void remove(int u) {
    words_[word(u)] &= ~(std::uint64_t{1} << bit(u));
  }

  // S + u and S - u as values.
  constexpr ElementSet with(int u) const {
    ElementSet s = *this;
    s.add(u);
    return s;
  }
  constexpr ElementSet without(int u) const {
    ElementSet s = *this;
    s.remove(u);
    return s;
  }

  constexpr int size() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  constexpr bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  constexpr bool is_subset_of(const ElementSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  friend constexpr ElementSet operator&(const ElementSet& a,
                                        const ElementSet& b) {
    ElementSet s;
    for (int w = 0; w < kWords; ++w) s.words_[w] = a.words_[w] & b.words_[w];
    return s;
  }
  friend constexpr ElementSet operator|(const ElementSet& a,
                                        const ElementSet& b) {
    ElementSet s;
    for (int w = 0; w < kWords; ++w) s.words_[w] = a.words_[w] | b.words_[w];
    return s;
  }

  friend constexpr bool operator==(const ElementSet& a,
                                   const ElementSet& b) = default;

  // Numeric order of the underlying 256-bit mask; gives the canonical
  // "bitmask ascending" tuple order used by distributions and tie breaks.
  friend constexpr std::strong_ordering operator<=>(const ElementSet& a,
                                                    const ElementSet& b) {
    for (int w = kWords - 1; w >= 0; --w) {
      if (a.words_[w] != b.words_[w])
        return a.words_[w] <=> b.words_[w];
    }
    return std::strong_ordering::equal;
  }

  // Low 64-bit word as a table index. Valid only when all elements are
  // below 64; table oracles enforce n <= 24 on top of this.
  constexpr std::uint64_t low_mask() const { return words_[0]; }

  // Calls fn(u) for each element, ascending.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int u = 64 * w + std::countr_zero(bits);
        fn(u);
        bits &= bits - 1;
      }
    }
  }

  // Minimal hex rendering of the mask (no leading zeros, "0" for empty).
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (int w = kWords - 1; w >= 0; --w) {
      for (int nib = 15; nib >= 0; --nib) {
        unsigned d = (words_[w] >> (4 * nib)) & 0xF;
        if (d != 0) started = true;
        if (started) out.push_back(digits[d]);
      }
    }
    return started ? out : "0";
  }

  struct Hash {
    std::size_t operator()(const ElementSet& s) const {
      std::uint64_t h = 0x9E3779B97F4A7C15ull;
      for (std::uint64_t w : s.words_) {
        h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };

 private:
  static constexpr int word(int u) { return u >> 6; }
  static constexpr int bit(int u) { return u & 63; }

  std::array<std::uint64_t, kWords> words_{};
};

inline void require_element_in_range(int u, int n) {
  if (u < 0 || u >= n) {
    throw InvalidInputError("element index " + std::to_string(u) +
                            " outside ground set of size " + std::to_string(n));
  }
}

}  // namespace submax
