// Copyright 2026 The linbicat Authors.
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

#ifndef LINBICAT_SAMPLER_HPP
#define LINBICAT_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace linbicat {

/// Name recorded in reports for the random stream. Bump the suffix whenever
/// the derivation of draws from seeds changes.
inline constexpr std::string_view kGeneratorName = "mt19937_64/v1";

/// Deterministic random source. Bounded draws use rejection on raw engine
/// output so the stream is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a user seed with a label so independent streams (one per law) do
/// not depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

/// How law suites pick their test tuples.
///
/// In exhaustive mode every enumerable slot is enumerated; a shape whose
/// slots are not enumerable within `slot_cap`, or whose tuple count exceeds
/// `tuple_cap`, is covered by `fallback_count` seeded random draws instead,
/// and the report says so.
struct Sampler {
  enum class Mode { kExhaustive, kRandom };

  Mode mode = Mode::kExhaustive;
  std::uint64_t seed = 0;
  std::size_t count = 200;
  std::size_t slot_cap = 4096;
  std::size_t tuple_cap = 1u << 16;
  std::size_t fallback_count = 2000;
  /// Extended-integer entries are drawn from [-window, window] plus the two
  /// infinities, each infinity with probability 1/8.
  int window = 10;

  static Sampler exhaustive(std::uint64_t seed = 0) {
    Sampler s;
    s.seed = seed;
    return s;
  }
  static Sampler random(std::uint64_t seed, std::size_t count) {
    Sampler s;
    s.mode = Mode::kRandom;
    s.seed = seed;
    s.count = count;
    return s;
  }

  std::string random_label(std::size_t draws) const;
};

}  // namespace linbicat

#endif  // LINBICAT_SAMPLER_HPP
