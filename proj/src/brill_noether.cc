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

#include "interp/brill_noether.h"

#include <algorithm>
#include <numeric>

#include "interp/errors.h"
#include "interp/field.h"

namespace interp {
namespace {

int64_t add(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow("integer overflow in addition");
  return out;
}

int64_t sub(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow("integer overflow in subtraction");
  return out;
}

int64_t mul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow("integer overflow in multiplication");
  return out;
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

void CurveClass::validate() const {
  if (g < 0 || r < 2 || d < 1) {
    throw InvalidCurveClass("invalid curve class (g=" + std::to_string(g) + ", r=" +
                            std::to_string(r) + ", d=" + std::to_string(d) +
                            "): need g >= 0, r >= 2, d >= 1");
  }
}

int64_t rho(const CurveClass& c) {
  c.validate();
  return sub(c.g, mul(add(c.r, 1), add(sub(c.g, c.d), c.r)));
}

int64_t bn_dimension_formula(const CurveClass& c) {
  c.validate();
  return sub(mul(add(c.r, 1), c.d), mul(sub(c.r, 3), sub(c.g, 1)));
}

std::optional<int64_t> bn_dimension(const CurveClass& c) {
  if (rho(c) < 0) return std::nullopt;
  return bn_dimension_formula(c);
}

std::optional<int64_t> expected_points(const CurveClass& c) {
  if (rho(c) < 0 && c.r != 2) return std::nullopt;
  return floor_div(bn_dimension_formula(c), c.r - 1);
}

const std::vector<CurveClass>& main_theorem_exceptions() {
  static const std::vector<CurveClass> kSet = {{2, 3, 5}, {4, 3, 6}, {2, 5, 7}, {6, 5, 10}};
  return kSet;
}

const std::vector<CurveClass>& normal_bundle_exceptions() {
  static const std::vector<CurveClass> kSet = {
      {2, 3, 5}, {4, 3, 6}, {2, 4, 6}, {2, 5, 7}, {6, 5, 10}};
  return kSet;
}

std::optional<Obstruction> obstruction(const CurveClass& c) {
  if (c == CurveClass{2, 3, 5}) return Obstruction{"quadric surface (a hyperelliptic scroll)", 9};
  if (c == CurveClass{4, 3, 6}) return Obstruction{"quadric surface", 9};
  if (c == CurveClass{2, 5, 7}) return Obstruction{"hyperelliptic scroll of degree 4", 9};
  if (c == CurveClass{6, 5, 10}) return Obstruction{"del Pezzo surface of degree 5", 11};
  return std::nullopt;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "yes";
    case Verdict::kNoException:
      return "no_exception";
    case Verdict::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

const char* to_string(NormalBundleVerdict v) {
  switch (v) {
    case NormalBundleVerdict::kSatisfies:
      return "satisfies";
    case NormalBundleVerdict::kFails:
      return "fails";
    case NormalBundleVerdict::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

bool char2_constraint_violated(const CurveClass& c) {
  c.validate();
  return c.g == 0 && (c.d - 1) % (c.r - 1) != 0;
}

NormalBundleVerdict normal_bundle_verdict(const CurveClass& c, uint64_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw NotPrime("characteristic " + std::to_string(characteristic) +
                   " is neither 0 nor a prime");
  }
  if (rho(c) < 0) return NormalBundleVerdict::kNotApplicable;
  const auto& ex = normal_bundle_exceptions();
  if (std::find(ex.begin(), ex.end(), c) != ex.end()) return NormalBundleVerdict::kFails;
  if (characteristic == 2 && char2_constraint_violated(c)) return NormalBundleVerdict::kFails;
  return NormalBundleVerdict::kSatisfies;
}

std::string BNReport::exception_note() const {
  if (!exception) return {};
  return "lies on a " + exception->surface + " which passes through at most " +
         std::to_string(exception->point_bound) + " general points";
}

BNReport interpolation_verdict(const CurveClass& c, uint64_t characteristic) {
  BNReport rep;
  rep.curve = c;
  rep.rho = rho(c);
  rep.bn_exists = rep.rho >= 0;
  rep.bn_dim = bn_dimension(c);
  rep.expected_points = expected_points(c);
  rep.characteristic = characteristic;
  rep.nb_interpolation = normal_bundle_verdict(c, characteristic);
  rep.nb_char0 = normal_bundle_verdict(c, 0);
  rep.nb_char2 = normal_bundle_verdict(c, 2);
  rep.char2_constraint_violated = char2_constraint_violated(c);
  if (!rep.bn_exists) return rep;
  rep.exception = obstruction(c);
  rep.interpolates = rep.exception ? Verdict::kNoException : Verdict::kYes;
  return rep;
}

int64_t section_space_dim(const CurveClass& c, int64_t n) {
  if (n < 0) throw InvalidCurveClass("number of points must be non-negative");
  return std::max<int64_t>(0, sub(bn_dimension_formula(c), mul(c.r - 1, n)));
}

int64_t max_plane_genus(int64_t d) {
  if (d < 1) throw InvalidCurveClass("degree must be >= 1");
  return mul(d - 1, d - 2) / 2;
}

int64_t plane_interpolation_count(int64_t d, int64_t g) {
  const int64_t top = max_plane_genus(d);
  if (g < 0 || g > top) {
    throw InvalidGenus("genus " + std::to_string(g) + " is outside [0, " + std::to_string(top) +
                       "] for plane curves of degree " + std::to_string(d));
  }
  return add(mul(3, d), g) - 1;
}

int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int64_t out = 1;
  for (int64_t i = 1; i <= k; ++i) {
    // out * (n - k + i) is divisible by i at every step.
    const int64_t g = std::gcd(out, i);
    out = mul(out / g, (n - k + i) / (i / g));
  }
  return out;
}

int64_t hypersurface_count(int64_t num_vars, int64_t d) {
  if (num_vars < 1 || d < 1) throw InvalidCurveClass("need num_vars >= 1 and degree >= 1");
  return binomial(add(num_vars, d), d) - 1;
}

std::vector<BNReport> bn_table(int64_t g_max, int64_t r_max, int64_t d_max) {
  CurveClass{g_max, r_max, d_max}.validate();
  std::vector<BNReport> out;
  for (int64_t g = 0; g <= g_max; ++g) {
    for (int64_t r = 2; r <= r_max; ++r) {
      for (int64_t d = 1; d <= d_max; ++d) out.push_back(interpolation_verdict({g, r, d}));
    }
  }
  return out;
}

}  // namespace interp
