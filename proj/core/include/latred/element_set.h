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

#ifndef LATRED_ELEMENT_SET_H_
#define LATRED_ELEMENT_SET_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latred {

// Largest ground set the toolkit accepts.
inline constexpr int kMaxElements = 4096;

// A finite ground set N = {0, ..., n-1}.
struct GroundSet {
  int n = 0;

  // Throws std::invalid_argument unless 1 <= n <= kMaxElements.
  static GroundSet Of(int n);

  friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

// A subset of a ground set, stored as a membership bitmask.
//
// Ground sets of up to 64 elements live in a single inline machine word;
// larger ones use a heap array of ceil(n/64) words. Bits at positions >= n
// are always zero, so word-wise comparison and hashing are exact.
//
// All binary operations require both operands to share the same universe
// size and throw std::invalid_argument otherwise.
class ElementSet {
 public:
  // The empty set over an empty universe. Mostly useful as a placeholder.
  ElementSet() = default;

  // The empty set over {0, ..., n-1}.
  explicit ElementSet(int n);

  static ElementSet Empty(int n) { return ElementSet(n); }
  static ElementSet Full(int n);
  static ElementSet FromIndices(int n, std::span<const int> indices);
  static ElementSet FromIndices(int n, std::initializer_list<int> indices);
  // Bit i of `mask` is element i. Requires n <= 64.
  static ElementSet FromMask(int n, uint64_t mask);
  // Parses the sorted comma-separated form produced by ToString(). The empty
  // string is the empty set.
  static ElementSet Parse(int n, std::string_view text);

  int universe_size() const { return n_; }

  bool Contains(int i) const;
  void Insert(int i);
  void Erase(int i);
  ElementSet With(int i) const;
  ElementSet Without(int i) const;

  int Count() const;
  bool IsEmpty() const;
  bool IsSubsetOf(const ElementSet& other) const;

  ElementSet Complement() const;
  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  ElementSet& operator^=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b);
  // Orders sets as unsigned integers of their masks (element 0 is the least
  // significant bit). Requires equal universe sizes.
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b);

  // Member indices in increasing order.
  std::vector<int> Members() const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    const std::span<const uint64_t> w = words();
    for (size_t k = 0; k < w.size(); ++k) {
      uint64_t bits = w[k];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<int>(k * 64) + bit);
        bits &= bits - 1;
      }
    }
  }

  // Mask of a set with universe size <= 64.
  uint64_t ToMask() const;

  // Sorted comma-separated member list, e.g. "0,2,5".
  std::string ToString() const;

  std::span<const uint64_t> words() const;
  size_t Hash() const;

 private:
  std::span<uint64_t> mutable_words();
  void CheckIndex(int i) const;
  void CheckSameUniverse(const ElementSet& other) const;
  void ClearPadding();

  int n_ = 0;
  uint64_t inline_word_ = 0;
  std::vector<uint64_t> heap_words_;
};

struct ElementSetHash {
  size_t operator()(const ElementSet& s) const { return s.Hash(); }
};

}  // namespace latred

#endif  // LATRED_ELEMENT_SET_H_
