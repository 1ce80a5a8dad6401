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

#ifndef INTERP_RANDOM_H_
#define INTERP_RANDOM_H_

#include <cstdint>
#include <random>

#include "interp/field.h"

namespace interp {

// Seeded generator used by every randomized routine.
//
// The stream is std::mt19937_64 seeded with a single 64-bit word; its output
// sequence is fixed by the C++ standard, so results reproduce across
// toolchains. Bounded draws use modulo reduction with rejection of the
// low (2^64 mod bound) outputs instead of std::uniform_int_distribution,
// whose algorithm is implementation-defined.
//
// Independent streams are derived with split(): child seed =
// splitmix64(seed ^ splitmix64(stream_index)). Splitting depends only on the
// parent seed, not on how much of the parent stream was consumed.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t next_u64() { return engine_(); }
  // Uniform in [0, bound); bound must be nonzero.
  uint64_t uniform_below(uint64_t bound);
  SeededRng split(uint64_t stream) const;

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

uint64_t splitmix64(uint64_t x);

// Uniform element of F_p.
FieldValue sample_uniform(const PrimeModulus& m, SeededRng& rng);

// Rational a/b with |a| <= max_abs and 1 <= b <= max_abs.
FieldValue sample_rational(int64_t max_abs, SeededRng& rng);

// Uniform over F_p; for Q a rational of height at most 16.
FieldValue sample_in(const Field& f, SeededRng& rng);

}  // namespace interp

#endif  // INTERP_RANDOM_H_
