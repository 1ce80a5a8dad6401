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

#ifndef INTERP_REED_SOLOMON_H_
#define INTERP_REED_SOLOMON_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "interp/field.h"
#include "interp/fit.h"
#include "interp/polynomial.h"

namespace interp {

// n numbers p_1..p_n over F_p, read as f(x) = p_1 x^{n-1} + ... + p_n.
// The leading coefficient may be zero.
struct Message {
  PrimeModulus modulus;
  std::vector<FieldValue> coefficients;

  // Throws DimensionMismatch if empty, MixedFields on foreign coefficients.
  void validate() const;
  Polynomial as_polynomial() const;

  friend bool operator==(const Message&, const Message&) = default;
};

// Evaluations (x_i, f(x_i)) for i < n + k, with k extra values beyond the
// n needed to pin down f.
struct Codeword {
  PrimeModulus modulus;
  size_t message_length = 0;
  size_t redundancy = 0;
  std::vector<NodeValue> pairs;

  // Checks k <= 2, |pairs| == n + k, p > n + k, distinct nodes and fields.
  // Throws the matching Error subclass.
  void validate() const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

// Nodes are x_i = i for i = 0..n+k-1. Throws FieldTooSmall if p <= n + k.
Codeword rs_encode(const Message& m, size_t redundancy);

// True iff one polynomial of degree <= n-1 passes through every pair.
// Throws InsufficientRedundancy when k == 0.
bool rs_detect(const Codeword& c);

enum class DecodeStatus {
  kDecoded,
  // No degree <= n-1 polynomial survives dropping any single pair.
  kDetectedError,
  // Dropping different pairs yields different consistent polynomials.
  kAmbiguous,
};

struct DecodeResult {
  DecodeStatus status = DecodeStatus::kDetectedError;
  std::optional<Message> message;
  // Index of the pair that was discarded to reach a consistent fit.
  std::optional<size_t> corrected_index;
  // Distinct consistent polynomials found by the omission search.
  size_t candidates = 0;
};

DecodeResult rs_decode(const Codeword& c);

struct CorruptResult {
  Codeword codeword;
  // Set when new_y equals the value already present.
  bool no_op = false;
};

// Replaces y at `index`. Throws IndexOutOfRange.
CorruptResult rs_corrupt(const Codeword& c, size_t index, const FieldValue& new_y);

const char* to_string(DecodeStatus s);

}  // namespace interp

#endif  // INTERP_REED_SOLOMON_H_
