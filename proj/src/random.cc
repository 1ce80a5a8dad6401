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

#include "interp/random.h"

namespace interp {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t SeededRng::uniform_below(uint64_t bound) {
  // 2^64 mod bound, computed without 128-bit arithmetic.
  const uint64_t reject_below = (0 - bound) % bound;
  uint64_t x;
  do {
    x = engine_();
  } while (x < reject_below);
  return x % bound;
}

SeededRng SeededRng::split(uint64_t stream) const {
  return SeededRng(splitmix64(seed_ ^ splitmix64(stream)));
}

FieldValue sample_uniform(const PrimeModulus& m, SeededRng& rng) {
  return FieldValue::residue(rng.uniform_below(m.value()), m);
}

FieldValue sample_rational(int64_t max_abs, SeededRng& rng) {
  const uint64_t span = 2 * static_cast<uint64_t>(max_abs) + 1;
  const int64_t num = static_cast<int64_t>(rng.uniform_below(span)) - max_abs;
  const int64_t den = static_cast<int64_t>(rng.uniform_below(static_cast<uint64_t>(max_abs))) + 1;
  return FieldValue::rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

FieldValue sample_in(const Field& f, SeededRng& rng) {
  if (f.is_prime()) return sample_uniform(f.modulus(), rng);
  return sample_rational(16, rng);
}

}  // namespace interp
