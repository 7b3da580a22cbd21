// Copyright 2026 The Hintforge Authors
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

#include <cstdint>
#include <span>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace hintforge {

/// SplitMix64 finalizer; the mixing function behind CounterRng.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a over the bytes of a string; used to fold text tags into seeds.
constexpr std::uint64_t hashString(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t combineSeed(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(a ^ mix64(b + 0x632be59bd9b4e019ULL));
}

/// Counter-based 64-bit generator: output i is mix64(key + i * golden).
///
/// Every draw is a pure function of (key, counter), so streams are
/// reproducible bit-for-bit on every platform. All distributions below are
/// implemented here rather than through <random> because the standard
/// distributions are not specified bit-exactly.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key = 0) noexcept : key_(mix64(key)) {}

  /// Independent stream for a (seed, tag...) tuple.
  template <class... Tags>
  static CounterRng derive(std::uint64_t seed, Tags... tags) noexcept {
    std::uint64_t k = seed;
    ((k = combineSeed(k, toKey(tags))), ...);
    return CounterRng(k);
  }

  std::uint64_t next() noexcept {
    return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  bool bernoulli(double p) noexcept { return uniform() < p; }

  /// Standard normal via Box-Muller (one value per call).
  double normal() noexcept;

  template <class T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  template <class T>
  void shuffle(std::vector<T>& items) noexcept {
    shuffle(std::span<T>(items));
  }

  /// Uniform random permutation of [0, n).
  std::vector<int> permutation(int n);

  /// Uniform k-subset of [0, n), returned in sampling order.
  std::vector<int> sample(int n, int k);

  std::uint64_t counter() const noexcept { return counter_; }

 private:
  template <class T>
  static constexpr std::uint64_t toKey(const T& v) noexcept {
    if constexpr (std::is_integral_v<T>) {
      return static_cast<std::uint64_t>(v);
    } else {
      return hashString(std::string_view(v));
    }
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace hintforge
