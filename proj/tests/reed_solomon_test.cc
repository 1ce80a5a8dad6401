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

#include "gtest/gtest.h"
#include "interp/errors.h"
#include "interp/matrix.h"
#include "interp/random.h"
#include "test_util.h"

namespace interp {
namespace {

using testing::fp;

Message message(uint64_t p, std::initializer_list<int64_t> coeffs) {
  Message m{PrimeModulus(p), {}};
  for (int64_t c : coeffs) m.coefficients.push_back(fp(c, p));
  return m;
}

Message random_message(const PrimeModulus& m, size_t n, SeededRng& rng) {
  Message out{m, {}};
  for (size_t i = 0; i < n; ++i) out.coefficients.push_back(sample_uniform(m, rng));
  return out;
}

FieldValue nonzero(const PrimeModulus& m, SeededRng& rng) {
  return FieldValue::residue(1 + rng.uniform_below(m.value() - 1), m);
}

TEST(RsEncode, IdentityPolynomial) {
  const Codeword c = rs_encode(message(101, {1, 0}), 2);
  ASSERT_EQ(c.pairs.size(), 4u);
  for (int64_t i = 0; i < 4; ++i) {
    EXPECT_EQ(c.pairs[i].first, fp(i, 101));
    EXPECT_EQ(c.pairs[i].second, fp(i, 101));
  }
}

TEST(RsEncode, ConstantMessage) {
  const Codeword c = rs_encode(message(101, {42}), 1);
  ASSERT_EQ(c.pairs.size(), 2u);
  EXPECT_EQ(c.pairs[0], NodeValue(fp(0, 101), fp(42, 101)));
  EXPECT_EQ(c.pairs[1], NodeValue(fp(1, 101), fp(42, 101)));
}

TEST(RsEncode, LeadingCoefficientFirst) {
  // f(x) = 2x^2 + 3x + 5; f(2) = 19.
  const Codeword c = rs_encode(message(101, {2, 3, 5}), 0);
  EXPECT_EQ(c.pairs[2].second, fp(19, 101));
  EXPECT_EQ(message(101, {2, 3, 5}).as_polynomial().to_string(), "2*x^2 + 3*x + 5");
}

TEST(RsEncode, Errors) {
  EXPECT_THROW(rs_encode(message(5, {1, 2, 3}), 2), FieldTooSmall);
  EXPECT_NO_THROW(rs_encode(message(7, {1, 2, 3}), 2));
  EXPECT_THROW(rs_encode(message(101, {}), 1), DimensionMismatch);
  EXPECT_THROW(rs_encode(message(101, {1}), 3), DimensionMismatch);
}

TEST(RsDetect, CleanAndCorrupted) {
  const Message m = message(101, {3, 1, 4, 1});
  for (size_t k : {1u, 2u}) {
    const Codeword c = rs_encode(m, k);
    EXPECT_TRUE(rs_detect(c));
    const Codeword bad = rs_corrupt(c, 1, c.pairs[1].second + fp(1, 101)).codeword;
    EXPECT_FALSE(rs_detect(bad)) << "k=" << k;
  }
  EXPECT_THROW(rs_detect(rs_encode(m, 0)), InsufficientRedundancy);
}

TEST(RsDecode, Roundtrip) {
  SeededRng rng(1);
  const PrimeModulus p(101);
  for (int t = 0; t < 1000; ++t) {
    const size_t k = t % 3;
    const Message m = random_message(p, 1 + rng.uniform_below(8), rng);
    const DecodeResult r = rs_decode(rs_encode(m, k));
    ASSERT_EQ(r.status, DecodeStatus::kDecoded);
    ASSERT_EQ(*r.message, m);
    ASSERT_FALSE(r.corrected_index.has_value());
  }
}

TEST(RsDecode, LeadingZeroIsPreserved) {
  const Message m = message(101, {0, 0, 7});
  EXPECT_EQ(*rs_decode(rs_encode(m, 2)).message, m);
}

TEST(RsDecode, CorrectsEverySingleError) {
  SeededRng rng(2);
  const PrimeModulus p(101);
  for (size_t n = 1; n <= 6; ++n) {
    const Message m = random_message(p, n, rng);
    const Codeword c = rs_encode(m, 2);
    for (size_t pos = 0; pos < c.pairs.size(); ++pos) {
      for (int rep = 0; rep < 100; ++rep) {
        const FieldValue bad = c.pairs[pos].second + nonzero(p, rng);
        const DecodeResult r = rs_decode(rs_corrupt(c, pos, bad).codeword);
        ASSERT_EQ(r.status, DecodeStatus::kDecoded);
        ASSERT_EQ(*r.message, m);
        ASSERT_EQ(r.corrected_index, pos);
        ASSERT_EQ(r.candidates, 1u);
      }
    }
  }
}

TEST(RsDecode, SingleRedundancyOnlyDetects) {
  const Message m = message(101, {5, 6, 7});
  const Codeword c = rs_encode(m, 1);
  const DecodeResult r = rs_decode(rs_corrupt(c, 0, fp(0, 101)).codeword);
  EXPECT_EQ(r.status, DecodeStatus::kDetectedError);
  EXPECT_FALSE(r.message.has_value());
}

// Two substituted values survive the omission search only if the n + 1
// remaining pairs happen to be consistent, which for each omitted index
// j has probability about 1/p; a union bound gives (n + 2)/p per trial.
TEST(RsDecode, TwoErrorsAreUsuallyDetected) {
  SeededRng rng(3);
  const PrimeModulus p(2147483647);
  int undetected = 0;
  constexpr int kTrials = 500;
  for (int t = 0; t < kTrials; ++t) {
    const size_t n = 1 + rng.uniform_below(8);
    const Codeword c = rs_encode(random_message(p, n, rng), 2);
    const size_t i = rng.uniform_below(n + 2);
    size_t j = rng.uniform_below(n + 1);
    if (j >= i) ++j;
    Codeword bad = rs_corrupt(c, i, c.pairs[i].second + nonzero(p, rng)).codeword;
    bad = rs_corrupt(bad, j, bad.pairs[j].second + nonzero(p, rng)).codeword;
    const DecodeResult r = rs_decode(bad);
    ASSERT_NE(r.status, DecodeStatus::kAmbiguous);
    if (r.status != DecodeStatus::kDetectedError) ++undetected;
  }
  EXPECT_EQ(undetected, 0);
}

// With k = 2 two distinct candidates would agree on the n pairs that both
// keep, so they coincide: ambiguity cannot arise even over tiny fields.
TEST(RsDecode, NeverAmbiguousWithTwoExtraValues) {
  SeededRng rng(4);
  const PrimeModulus p(7);
  for (int t = 0; t < 2000; ++t) {
    const size_t n = 1 + rng.uniform_below(4);
    Codeword c = rs_encode(random_message(p, n, rng), 2);
    for (auto& pr : c.pairs) pr.second = sample_uniform(p, rng);
    ASSERT_NE(rs_decode(c).status, DecodeStatus::kAmbiguous);
  }
}

TEST(RsCorrupt, FlagsNoOpAndRange) {
  const Codeword c = rs_encode(message(101, {1, 2}), 1);
  const CorruptResult same = rs_corrupt(c, 0, c.pairs[0].second);
  EXPECT_TRUE(same.no_op);
  EXPECT_EQ(same.codeword, c);
  const CorruptResult changed = rs_corrupt(c, 0, c.pairs[0].second + fp(1, 101));
  EXPECT_FALSE(changed.no_op);
  size_t differing = 0;
  for (size_t i = 0; i < c.pairs.size(); ++i) differing += c.pairs[i] != changed.codeword.pairs[i];
  EXPECT_EQ(differing, 1u);
  EXPECT_FALSE(rs_detect(changed.codeword));
  EXPECT_THROW(rs_corrupt(c, 3, fp(0, 101)), IndexOutOfRange);
  EXPECT_THROW(rs_corrupt(c, 0, fp(0, 103)), MixedFields);
}

TEST(Codeword, ValidateRejectsMalformed) {
  Codeword c = rs_encode(message(101, {1, 2}), 2);
  c.pairs[1].first = c.pairs[0].first;
  EXPECT_THROW(c.validate(), DuplicateNode);
  c = rs_encode(message(101, {1, 2}), 2);
  c.pairs.pop_back();
  EXPECT_THROW(c.validate(), DimensionMismatch);
  c = rs_encode(message(101, {1, 2}), 2);
  c.redundancy = 3;
  EXPECT_THROW(c.validate(), DimensionMismatch);
}

TEST(Codeword, OverheadBelowRepetition) {
  for (size_t n = 3; n <= 50; ++n) {
    for (size_t k : {1u, 2u}) EXPECT_LT(rs_encode(Message{PrimeModulus(101), std::vector<FieldValue>(n, fp(1, 101))}, k).pairs.size(), 2 * n);
  }
}

// The decoder's Lagrange fit agrees with a Vandermonde solve over the nodes.
TEST(RsDecode, LagrangeAndVandermondeAgreeOnCodewords) {
  SeededRng rng(5);
  const PrimeModulus p(101);
  const Field f = Field::prime(p);
  for (int t = 0; t < 200; ++t) {
    const size_t n = 1 + rng.uniform_below(8);
    const Message m = random_message(p, n, rng);
    const Codeword c = rs_encode(m, 0);
    Matrix v(f, n, n);
    Vector rhs;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) v.at(i, j) = c.pairs[i].first.pow(n - 1 - j);
      rhs.push_back(c.pairs[i].second);
    }
    ASSERT_EQ(*solve(v, rhs).particular, m.coefficients);
    ASSERT_EQ(lagrange_fit(c.pairs), m.as_polynomial());
  }
}

}  // namespace
}  // namespace interp
