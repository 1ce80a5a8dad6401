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

#ifndef INTERP_BRILL_NOETHER_H_
#define INTERP_BRILL_NOETHER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace interp {

// Closed-form interpolation arithmetic for curves of genus g and degree d in
// P^r. All arithmetic is checked int64; overflow throws Overflow.

struct CurveClass {
  int64_t g = 0;
  int64_t r = 2;
  int64_t d = 1;

  // Throws InvalidCurveClass unless g >= 0, r >= 2, d >= 1.
  void validate() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// g - (r+1)(g - d + r).
int64_t rho(const CurveClass& c);

// (r+1)d - (r-3)(g-1), without the existence gate.
int64_t bn_dimension_formula(const CurveClass& c);

// Dimension of the Brill-Noether component; empty when rho < 0.
std::optional<int64_t> bn_dimension(const CurveClass& c);

// floor(bn_dimension / (r-1)). Present when rho >= 0, and always for r = 2,
// where it is the classical plane count 3d + g - 1.
std::optional<int64_t> expected_points(const CurveClass& c);

// A surface that every curve of the class lies on, and the number of
// general points that surface can pass through.
struct Obstruction {
  std::string surface;
  int64_t point_bound = 0;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

// The four classes where the expected count fails.
const std::vector<CurveClass>& main_theorem_exceptions();
// Those four plus (2, 4, 6).
const std::vector<CurveClass>& normal_bundle_exceptions();

std::optional<Obstruction> obstruction(const CurveClass& c);

enum class Verdict { kYes, kNoException, kNotApplicable };
enum class NormalBundleVerdict { kSatisfies, kFails, kNotApplicable };

const char* to_string(Verdict v);
const char* to_string(NormalBundleVerdict v);

// g = 0 and d is not congruent to 1 mod (r-1).
bool char2_constraint_violated(const CurveClass& c);

// `characteristic` must be 0 or a prime; throws NotPrime otherwise.
NormalBundleVerdict normal_bundle_verdict(const CurveClass& c, uint64_t characteristic);

struct BNReport {
  CurveClass curve;
  int64_t rho = 0;
  bool bn_exists = false;
  std::optional<int64_t> bn_dim;
  std::optional<int64_t> expected_points;
  Verdict interpolates = Verdict::kNotApplicable;
  std::optional<Obstruction> exception;
  uint64_t characteristic = 0;
  NormalBundleVerdict nb_interpolation = NormalBundleVerdict::kNotApplicable;
  NormalBundleVerdict nb_char0 = NormalBundleVerdict::kNotApplicable;
  NormalBundleVerdict nb_char2 = NormalBundleVerdict::kNotApplicable;
  bool char2_constraint_violated = false;

  // One-line human summary of the exception, empty if none.
  std::string exception_note() const;
};

BNReport interpolation_verdict(const CurveClass& c, uint64_t characteristic = 0);

// max(0, (r+1)d - (r-3)(g-1) - (r-1)n): sections of the normal bundle
// vanishing at n general points, when interpolation holds.
int64_t section_space_dim(const CurveClass& c, int64_t n);

// (d-1)(d-2)/2.
int64_t max_plane_genus(int64_t d);

// 3d + g - 1. Throws InvalidGenus unless 0 <= g <= max_plane_genus(d).
int64_t plane_interpolation_count(int64_t d, int64_t g);

// C(num_vars + d, d) - 1.
int64_t hypersurface_count(int64_t num_vars, int64_t d);

// Exact binomial coefficient; throws Overflow.
int64_t binomial(int64_t n, int64_t k);

// One report per class with 0 <= g <= g_max, 2 <= r <= r_max,
// 1 <= d <= d_max, ordered by g, then r, then d.
std::vector<BNReport> bn_table(int64_t g_max, int64_t r_max, int64_t d_max);

}  // namespace interp

#endif  // INTERP_BRILL_NOETHER_H_
