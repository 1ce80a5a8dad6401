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

#ifndef INTERP_FIELD_H_
#define INTERP_FIELD_H_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace interp {

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(uint64_t n);

// An odd prime p with p < 2^62, validated at construction.
class PrimeModulus {
 public:
  static constexpr uint64_t kLimit = uint64_t{1} << 62;

  // Throws NotPrime if p is not a prime in (2, 2^62).
  explicit PrimeModulus(uint64_t p);

  uint64_t value() const { return p_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  friend class FieldValue;
  struct Validated {};
  PrimeModulus(uint64_t p, Validated) : p_(p) {}

  uint64_t p_;
};

// Descriptor of the field a value lives in: F_p or Q.
class Field {
 public:
  static Field rational() { return Field(std::nullopt); }
  static Field prime(PrimeModulus m) { return Field(m); }

  bool is_rational() const { return !modulus_.has_value(); }
  bool is_prime() const { return modulus_.has_value(); }

  // Only valid for prime fields.
  const PrimeModulus& modulus() const;

  // "prime:<p>" or "rational".
  std::string to_string() const;
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::optional<PrimeModulus> m) : modulus_(m) {}
  std::optional<PrimeModulus> modulus_;
};

// An exact scalar: a canonical residue in [0, p) or a reduced rational with
// positive denominator. Arithmetic between different fields throws
// MixedFields.
class FieldValue {
 public:
  static FieldValue zero(const Field& f) { return from_int(f, 0); }
  static FieldValue one(const Field& f) { return from_int(f, 1); }
  static FieldValue from_int(const Field& f, int64_t v);
  static FieldValue from_mpz(const Field& f, const mpz_class& v);
  static FieldValue residue(uint64_t v, PrimeModulus m);
  // Throws DivisionByZero if den == 0.
  static FieldValue rational(const mpz_class& num, const mpz_class& den = 1);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  // Residue of a prime-field value.
  uint64_t residue_value() const;
  // Value of a rational; throws MixedFields on a prime-field value.
  const mpq_class& rational_value() const;

  // Throws DivisionByZero on zero.
  FieldValue inv() const;
  FieldValue pow(uint64_t e) const;

  FieldValue operator-() const;
  FieldValue& operator+=(const FieldValue& o);
  FieldValue& operator-=(const FieldValue& o);
  FieldValue& operator*=(const FieldValue& o);
  FieldValue& operator/=(const FieldValue& o);

  friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
  friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
  friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }

  // Values in different fields compare unequal.
  friend bool operator==(const FieldValue& a, const FieldValue& b);

  // Decimal residue for F_p; "a/b" or "a" for Q.
  std::string to_string() const;
  // Accepts an optionally signed decimal integer for F_p (reduced mod p) and
  // "a", "a/b" for Q. Throws ParseError.
  static FieldValue parse(std::string_view text, const Field& f);

 private:
  struct Residue {
    uint64_t value;
    uint64_t modulus;
  };

  explicit FieldValue(Residue r) : rep_(r) {}
  explicit FieldValue(mpq_class q) : rep_(std::move(q)) {}

  const Residue& same_field_residue(const FieldValue& o) const;

  std::variant<Residue, mpq_class> rep_;
};

}  // namespace interp

#endif  // INTERP_FIELD_H_
