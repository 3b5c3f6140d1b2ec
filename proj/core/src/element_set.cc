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

#include "latred/element_set.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace latred {
namespace {

constexpr int kInlineLimit = 64;

int WordCount(int n) { return (n + 63) / 64; }

}  // namespace

GroundSet GroundSet::Of(int n) {
  if (n < 1 || n > kMaxElements) {
    throw std::invalid_argument("ground set size must be in [1, " +
                                std::to_string(kMaxElements) + "], got " +
                                std::to_string(n));
  }
  return GroundSet{n};
}

ElementSet::ElementSet(int n) : n_(n) {
  if (n < 0 || n > kMaxElements) {
    throw std::invalid_argument("element set universe out of range: " +
                                std::to_string(n));
  }
  if (n > kInlineLimit) heap_words_.assign(WordCount(n), 0);
}

ElementSet ElementSet::Full(int n) {
  ElementSet s(n);
  for (uint64_t& w : s.mutable_words()) w = ~uint64_t{0};
  s.ClearPadding();
  return s;
}

ElementSet ElementSet::FromIndices(int n, std::span<const int> indices) {
  ElementSet s(n);
  for (int i : indices) s.Insert(i);
  return s;
}

ElementSet ElementSet::FromIndices(int n, std::initializer_list<int> indices) {
  return FromIndices(n, std::span<const int>(indices.begin(), indices.size()));
}

ElementSet ElementSet::FromMask(int n, uint64_t mask) {
  if (n > kInlineLimit) {
    throw std::invalid_argument("FromMask requires n <= 64");
  }
  ElementSet s(n);
  s.inline_word_ = mask;
  s.ClearPadding();
  if (s.inline_word_ != mask) {
    throw std::invalid_argument("mask has bits outside the ground set");
  }
  return s;
}

ElementSet ElementSet::Parse(int n, std::string_view text) {
  ElementSet s(n);
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad element index '" + std::string(token) +
                                  "'");
    }
    s.Insert(value);
    pos = end + 1;
  }
  return s;
}

std::span<const uint64_t> ElementSet::words() const {
  if (n_ > kInlineLimit) return heap_words_;
  return std::span<const uint64_t>(&inline_word_, n_ == 0 ? 0 : 1);
}

std::span<uint64_t> ElementSet::mutable_words() {
  if (n_ > kInlineLimit) return heap_words_;
  return std::span<uint64_t>(&inline_word_, n_ == 0 ? 0 : 1);
}

void ElementSet::ClearPadding() {
  if (n_ == 0) return;
  const int tail = n_ % 64;
  if (tail != 0) mutable_words().back() &= (uint64_t{1} << tail) - 1;
}

void ElementSet::CheckIndex(int i) const {
  if (i < 0 || i >= n_) {
    throw std::out_of_range("element " + std::to_string(i) +
                            " outside ground set of size " +
                            std::to_string(n_));
  }
}

void ElementSet::CheckSameUniverse(const ElementSet& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("ground set size mismatch: " +
                                std::to_string(n_) + " vs " +
                                std::to_string(other.n_));
  }
}

bool ElementSet::Contains(int i) const {
  CheckIndex(i);
  return (words()[i / 64] >> (i % 64)) & 1u;
}

void ElementSet::Insert(int i) {
  CheckIndex(i);
  mutable_words()[i / 64] |= uint64_t{1} << (i % 64);
}

void ElementSet::Erase(int i) {
  CheckIndex(i);
  mutable_words()[i / 64] &= ~(uint64_t{1} << (i % 64));
}

ElementSet ElementSet::With(int i) const {
  ElementSet s = *this;
  s.Insert(i);
  return s;
}

ElementSet ElementSet::Without(int i) const {
  ElementSet s = *this;
  s.Erase(i);
  return s;
}

int ElementSet::Count() const {
  int count = 0;
  for (uint64_t w : words()) count += __builtin_popcountll(w);
  return count;
}

bool ElementSet::IsEmpty() const {
  for (uint64_t w : words()) {
    if (w != 0) return false;
  }
  return true;
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  CheckSameUniverse(other);
  const auto a = words();
  const auto b = other.words();
  for (size_t k = 0; k < a.size(); ++k) {
    if ((a[k] & ~b[k]) != 0) return false;
  }
  return true;
}

ElementSet ElementSet::Complement() const {
  ElementSet s = *this;
  for (uint64_t& w : s.mutable_words()) w = ~w;
  s.ClearPadding();
  return s;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  CheckSameUniverse(other);
  auto a = mutable_words();
  auto b = other.words();
  for (size_t k = 0; k < a.size(); ++k) a[k] |= b[k];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  CheckSameUniverse(other);
  auto a = mutable_words();
  auto b = other.words();
  for (size_t k = 0; k < a.size(); ++k) a[k] &= b[k];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  CheckSameUniverse(other);
  auto a = mutable_words();
  auto b = other.words();
  for (size_t k = 0; k < a.size(); ++k) a[k] &= ~b[k];
  return *this;
}

ElementSet& ElementSet::operator^=(const ElementSet& other) {
  CheckSameUniverse(other);
  auto a = mutable_words();
  auto b = other.words();
  for (size_t k = 0; k < a.size(); ++k) a[k] ^= b[k];
  return *this;
}

bool operator==(const ElementSet& a, const ElementSet& b) {
  if (a.n_ != b.n_) return false;
  const auto wa = a.words();
  const auto wb = b.words();
  return std::equal(wa.begin(), wa.end(), wb.begin());
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  a.CheckSameUniverse(b);
  const auto wa = a.words();
  const auto wb = b.words();
  for (size_t k = wa.size(); k-- > 0;) {
    if (wa[k] != wb[k]) return wa[k] <=> wb[k];
  }
  return std::strong_ordering::equal;
}

std::vector<int> ElementSet::Members() const {
  std::vector<int> out;
  out.reserve(Count());
  ForEach([&](int i) { out.push_back(i); });
  return out;
}

uint64_t ElementSet::ToMask() const {
  if (n_ > kInlineLimit) {
    throw std::invalid_argument("ToMask requires n <= 64");
  }
  return inline_word_;
}

std::string ElementSet::ToString() const {
  std::string out;
  ForEach([&](int i) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(i);
  });
  return out;
}

size_t ElementSet::Hash() const {
  // FNV-1a over the words, seeded with the universe size.
  uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(n_);
  for (uint64_t w : words()) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<size_t>(h);
}

}  // namespace latred
