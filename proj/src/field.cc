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

#include "interp/field.h"

#include <charconv>
#include <utility>

#include "interp/errors.h"

namespace interp {
namespace {

using u128 = unsigned __int128;

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Inverse of a nonzero residue via extended Euclid; m < 2^62 keeps the
// Bezout coefficients inside int64.
uint64_t inv_mod(uint64_t a, uint64_t m) {
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a);
  while (new_r != 0) {
    const int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<int64_t>(m);
  return static_cast<uint64_t>(t);
}

uint64_t reduce_mpz(const mpz_class& v, uint64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return r.get_ui();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::string_view digits = s;
  if (digits.front() == '-' || digits.front() == '+') digits.remove_prefix(1);
  if (digits.empty()) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  if (s.front() == '+') s.remove_prefix(1);
  return out.set_str(std::string(s), 10) == 0;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set for all n < 3.3 * 10^24.
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(uint64_t p) : p_(p) {
  if (p <= 2 || p >= kLimit || !is_prime(p)) {
    throw NotPrime("modulus " + std::to_string(p) +
                   " is not an odd prime below 2^62");
  }
}

const PrimeModulus& Field::modulus() const {
  if (!modulus_) throw MixedFields("rational field has no modulus");
  return *modulus_;
}

std::string Field::to_string() const {
  if (is_rational()) return "rational";
  return "prime:" + std::to_string(modulus_->value());
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "rational") return rational();
  constexpr std::string_view kPrefix = "prime:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view digits = text.substr(kPrefix.size());
    uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("bad prime in field descriptor '" + std::string(text) + "'");
    }
    return prime(PrimeModulus(p));
  }
  throw ParseError("unknown field descriptor '" + std::string(text) +
                   "' (expected 'rational' or 'prime:<p>')");
}

FieldValue FieldValue::from_int(const Field& f, int64_t v) {
  if (f.is_rational()) return FieldValue(mpq_class(mpz_class(static_cast<long>(v))));
  const uint64_t m = f.modulus().value();
  int64_t r = v % static_cast<int64_t>(m);
  if (r < 0) r += static_cast<int64_t>(m);
  return FieldValue(Residue{static_cast<uint64_t>(r), m});
}

FieldValue FieldValue::from_mpz(const Field& f, const mpz_class& v) {
  if (f.is_rational()) return FieldValue(mpq_class(v));
  const uint64_t m = f.modulus().value();
  return FieldValue(Residue{reduce_mpz(v, m), m});
}

FieldValue FieldValue::residue(uint64_t v, PrimeModulus m) {
  return FieldValue(Residue{v % m.value(), m.value()});
}

FieldValue FieldValue::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return FieldValue(std::move(q));
}

Field FieldValue::field() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    // The modulus was validated when the value was created.
    return Field::prime(PrimeModulus(r->modulus, PrimeModulus::Validated{}));
  }
  return Field::rational();
}

bool FieldValue::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return sgn(std::get<mpq_class>(rep_)) == 0;
}

bool FieldValue::is_one() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

uint64_t FieldValue::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value;
  throw MixedFields("rational value has no residue");
}

const mpq_class& FieldValue::rational_value() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw MixedFields("prime-field value is not rational");
}

const FieldValue::Residue& FieldValue::same_field_residue(const FieldValue& o) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&o.rep_);
  if (a == nullptr || b == nullptr || a->modulus != b->modulus) throw MixedFields();
  return *b;
}

FieldValue FieldValue::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return FieldValue(Residue{inv_mod(r->value, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(rep_);
  q.canonicalize();
  return FieldValue(std::move(q));
}

FieldValue FieldValue::pow(uint64_t e) const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return FieldValue(Residue{pow_mod(r->value, e, r->modulus), r->modulus});
  }
  const mpq_class& q = std::get<mpq_class>(rep_);
  mpq_class out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  out.canonicalize();
  return FieldValue(std::move(out));
}

FieldValue FieldValue::operator-() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return FieldValue(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return FieldValue(mpq_class(-std::get<mpq_class>(rep_)));
}

FieldValue& FieldValue::operator+=(const FieldValue& o) {
  if (auto* a = std::get_if<Residue>(&rep_)) {
    const uint64_t b = same_field_residue(o).value;
    a->value += b;
    if (a->value >= a->modulus) a->value -= a->modulus;
    return *this;
  }
  const auto* b = std::get_if<mpq_class>(&o.rep_);
  if (b == nullptr) throw MixedFields();
  std::get<mpq_class>(rep_) += *b;
  return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& o) {
  if (auto* a = std::get_if<Residue>(&rep_)) {
    const uint64_t b = same_field_residue(o).value;
    a->value = a->value >= b ? a->value - b : a->value + a->modulus - b;
    return *this;
  }
  const auto* b = std::get_if<mpq_class>(&o.rep_);
  if (b == nullptr) throw MixedFields();
  std::get<mpq_class>(rep_) -= *b;
  return *this;
}

FieldValue& FieldValue::operator*=(const FieldValue& o) {
  if (auto* a = std::get_if<Residue>(&rep_)) {
    a->value = mul_mod(a->value, same_field_residue(o).value, a->modulus);
    return *this;
  }
  const auto* b = std::get_if<mpq_class>(&o.rep_);
  if (b == nullptr) throw MixedFields();
  std::get<mpq_class>(rep_) *= *b;
  return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& o) {
  if (std::holds_alternative<Residue>(rep_)) same_field_residue(o);
  else if (!std::holds_alternative<mpq_class>(o.rep_)) throw MixedFields();
  return *this *= o.inv();
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  const auto* ra = std::get_if<FieldValue::Residue>(&a.rep_);
  const auto* rb = std::get_if<FieldValue::Residue>(&b.rep_);
  if (ra != nullptr && rb != nullptr) {
    return ra->modulus == rb->modulus && ra->value == rb->value;
  }
  if (ra != nullptr || rb != nullptr) return false;
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::string FieldValue::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  // mpq_class::get_str omits the denominator when it is 1.
  return std::get<mpq_class>(rep_).get_str(10);
}

FieldValue FieldValue::parse(std::string_view text, const Field& f) {
  const std::string_view s = trim(text);
  const auto bad = [&] {
    return ParseError("cannot parse '" + std::string(text) + "' as an element of " +
                      f.to_string());
  };
  if (f.is_prime()) {
    mpz_class v;
    if (!parse_integer(s, v)) throw bad();
    return from_mpz(f, v);
  }
  const size_t slash = s.find('/');
  mpz_class num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(s, num)) throw bad();
  } else {
    if (!parse_integer(s.substr(0, slash), num) || !parse_integer(s.substr(slash + 1), den)) {
      throw bad();
    }
    if (den == 0) throw DivisionByZero();
  }
  return rational(num, den);
}

}  // namespace interp
