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

#include "interp/reed_solomon.h"

#include <span>
#include <string>

#include "interp/errors.h"

namespace interp {
namespace {

// Horner evaluation of p_1 x^{n-1} + ... + p_n.
FieldValue eval_message(const Message& m, const FieldValue& x) {
  FieldValue acc = FieldValue::zero(x.field());
  for (const FieldValue& c : m.coefficients) acc = acc * x + c;
  return acc;
}

// Fits the first n pairs, then checks the remaining ones against the fit.
std::optional<Polynomial> consistent_fit(std::span<const NodeValue> pairs, size_t n) {
  Polynomial f = lagrange_fit(pairs.first(n));
  for (const auto& [x, y] : pairs.subspan(n)) {
    const Vector point{x};
    if (evaluate(f, point) != y) return std::nullopt;
  }
  return f;
}

Message message_from(const Polynomial& f, const PrimeModulus& modulus, size_t n) {
  const Field field = Field::prime(modulus);
  Message m{modulus, {}};
  m.coefficients.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const auto power = static_cast<uint32_t>(n - 1 - i);
    m.coefficients.push_back(f.coefficient(Monomial::variable(1, 0, power), field));
  }
  return m;
}

}  // namespace

void Message::validate() const {
  if (coefficients.empty()) throw DimensionMismatch("message must have at least one number");
  const Field field = Field::prime(modulus);
  for (const FieldValue& c : coefficients) {
    if (c.field() != field) throw MixedFields();
  }
}

Polynomial Message::as_polynomial() const {
  Polynomial f(1);
  const size_t n = coefficients.size();
  for (size_t i = 0; i < n; ++i) {
    f.add_term(Monomial::variable(1, 0, static_cast<uint32_t>(n - 1 - i)), coefficients[i]);
  }
  return f;
}

void Codeword::validate() const {
  if (message_length == 0) throw DimensionMismatch("codeword message length must be >= 1");
  if (redundancy > 2) {
    throw DimensionMismatch("redundancy must be 0, 1 or 2, got " + std::to_string(redundancy));
  }
  const size_t total = message_length + redundancy;
  if (pairs.size() != total) {
    throw DimensionMismatch("codeword has " + std::to_string(pairs.size()) +
                            " pairs, expected n + k = " + std::to_string(total));
  }
  if (modulus.value() <= total) {
    throw FieldTooSmall("p = " + std::to_string(modulus.value()) + " must exceed n + k = " +
                        std::to_string(total));
  }
  const Field field = Field::prime(modulus);
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first.field() != field || pairs[i].second.field() != field) {
      throw MixedFields();
    }
    for (size_t j = 0; j < i; ++j) {
      if (pairs[i].first == pairs[j].first) {
        throw DuplicateNode("codeword repeats node " + pairs[i].first.to_string());
      }
    }
  }
}

Codeword rs_encode(const Message& m, size_t redundancy) {
  m.validate();
  if (redundancy > 2) {
    throw DimensionMismatch("redundancy must be 0, 1 or 2, got " + std::to_string(redundancy));
  }
  const size_t n = m.coefficients.size();
  const size_t total = n + redundancy;
  if (m.modulus.value() <= total) {
    throw FieldTooSmall("p = " + std::to_string(m.modulus.value()) + " must exceed n + k = " +
                        std::to_string(total));
  }
  Codeword c{m.modulus, n, redundancy, {}};
  c.pairs.reserve(total);
  for (size_t i = 0; i < total; ++i) {
    FieldValue x = FieldValue::residue(i, m.modulus);
    FieldValue y = eval_message(m, x);
    c.pairs.emplace_back(std::move(x), std::move(y));
  }
  return c;
}

bool rs_detect(const Codeword& c) {
  c.validate();
  if (c.redundancy == 0) {
    throw InsufficientRedundancy("error detection needs at least one extra value");
  }
  return consistent_fit(c.pairs, c.message_length).has_value();
}

DecodeResult rs_decode(const Codeword& c) {
  c.validate();
  const size_t n = c.message_length;
  DecodeResult out;

  if (auto f = consistent_fit(c.pairs, n)) {
    out.status = DecodeStatus::kDecoded;
    out.message = message_from(*f, c.modulus, n);
    out.candidates = 1;
    return out;
  }
  if (c.redundancy < 2) {
    out.status = DecodeStatus::kDetectedError;
    return out;
  }

  // Drop each pair in turn and keep the fits the other n + 1 pairs agree on.
  std::vector<std::pair<size_t, Polynomial>> found;
  for (size_t skip = 0; skip < c.pairs.size(); ++skip) {
    std::vector<NodeValue> rest;
    for (size_t i = 0; i < c.pairs.size(); ++i) {
      if (i != skip) rest.push_back(c.pairs[i]);
    }
    if (auto f = consistent_fit(rest, n)) found.emplace_back(skip, std::move(*f));
  }
  out.candidates = found.size();
  if (found.empty()) {
    out.status = DecodeStatus::kDetectedError;
  } else if (found.size() == 1) {
    out.status = DecodeStatus::kDecoded;
    out.corrected_index = found.front().first;
    out.message = message_from(found.front().second, c.modulus, n);
  } else {
    out.status = DecodeStatus::kAmbiguous;
  }
  return out;
}

CorruptResult rs_corrupt(const Codeword& c, size_t index, const FieldValue& new_y) {
  if (index >= c.pairs.size()) {
    throw IndexOutOfRange("index " + std::to_string(index) + " outside codeword of length " +
                          std::to_string(c.pairs.size()));
  }
  if (new_y.field() != Field::prime(c.modulus)) throw MixedFields();
  CorruptResult out{c, c.pairs[index].second == new_y};
  out.codeword.pairs[index].second = new_y;
  return out;
}

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::kDecoded:
      return "decoded";
    case DecodeStatus::kDetectedError:
      return "detected_error";
    case DecodeStatus::kAmbiguous:
      return "ambiguous";
  }
  return "unknown";
}

}  // namespace interp
