// Copyright 2026 The Interp Authors.
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

#ifndef INTERP_HARNESS_H_
#define INTERP_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "interp/basis.h"
#include "interp/field.h"
#include "interp/fit.h"

namespace interp {

// Randomized check of the classical point counts: "general" points are
// i.i.d. uniform points of F_p^n for a large prime p. A configuration that
// is special for a family lies on a hypersurface of bounded degree, so by
// Schwartz-Zippel a trial degenerates with probability O(degree / p).

inline constexpr uint64_t kDefaultSeed = 1729;
inline constexpr uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1
inline constexpr uint64_t kSmallPrimeWarning = 1000000;

enum class SuiteKind { kLine, kCircle, kConic, kCubic, kPlane, kQuadricSurface, kGraph };

struct Suite {
  SuiteKind kind = SuiteKind::kConic;
  // Only meaningful for kPlane and kGraph.
  uint32_t degree = 0;

  // "line", "circle", "conic", "cubic", "quadric_surface", "plane(d)",
  // "graph(d)".
  std::string name() const;
  BasisSpec basis(const Field& f) const;

  // Accepts the names above; "plane" and "graph" may also take the degree
  // from `degree`. Throws ParseError.
  static Suite parse(std::string_view text, std::optional<uint32_t> degree = std::nullopt);
};

struct SuiteConfig {
  Suite suite;
  PrimeModulus prime{kDefaultPrime};
  size_t trials = 100;
  uint64_t seed = kDefaultSeed;

  bool small_prime() const { return prime.value() < kSmallPrimeWarning; }
};

struct Tally {
  size_t pass = 0;
  size_t fail = 0;

  friend bool operator==(const Tally&, const Tally&) = default;
};

struct TrialFailure {
  size_t trial = 0;
  // "at_count" or "over_count".
  std::string stage;
  size_t kernel_dim = 0;

  friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

struct SuiteReport {
  std::string suite;
  uint64_t prime = 0;
  size_t trials = 0;
  uint64_t seed = 0;
  // Expected kernel dimension 1 with exactly the expected number of points.
  Tally at_count;
  // Expected kernel dimension 0 with one point more.
  Tally over_count;
  std::vector<TrialFailure> failures;

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// Trial t draws its points from SeededRng(seed).split(t), so trials are
// independent and the report does not depend on evaluation order.
SuiteReport run_suite(const SuiteConfig& cfg);

// True iff exactly one curve of the family passes through the points, up to
// scaling.
bool check_uniqueness(const PointSet& points, const BasisSpec& basis);

}  // namespace interp

#endif  // INTERP_HARNESS_H_
