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

#include "interp/io.h"

#include <sstream>

#include "gtest/gtest.h"
#include "interp/errors.h"
#include "interp/random.h"
#include "test_util.h"

namespace interp {
namespace {

using testing::Fp;
using testing::fp;
using testing::Q;
using testing::q;

TEST(PointsCsv, ParsesRationalFile) {
  const PointSet pts = parse_points_csv("# field=rational\n1,2\n\n3/4, -5\n# trailing note\n");
  EXPECT_EQ(pts.field(), Q());
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[1][0], q(3, 4));
  EXPECT_EQ(pts[1][1], q(-5));
  EXPECT_EQ(write_points_csv(pts), "# field=rational\n1,2\n3/4,-5\n");
}

TEST(PointsCsv, ParsesPrimeFile) {
  const PointSet pts = parse_points_csv("# field=prime:101\r\n1,2,3\r\n-1,0,205\r\n");
  EXPECT_EQ(pts.dim(), 3u);
  EXPECT_EQ(pts[1][0], fp(100, 101));
  EXPECT_EQ(pts[1][2], fp(3, 101));
}

TEST(PointsCsv, Errors) {
  EXPECT_THROW(parse_points_csv("1,2\n"), ParseError);
  EXPECT_THROW(parse_points_csv("# field=rational\n"), ParseError);
  EXPECT_THROW(parse_points_csv("# field=rational\n1,2\n3\n"), ParseError);
  EXPECT_THROW(parse_points_csv("# field=rational\n1,x\n"), ParseError);
  EXPECT_THROW(parse_points_csv("# field=prime:100\n1\n"), NotPrime);
  EXPECT_THROW(parse_points_csv("# fields are fun\n1\n"), ParseError);
}

TEST(PolynomialJson, Format) {
  Polynomial p(2);
  p.add_term(Monomial({0, 0}), q(-1, 2));
  p.add_term(Monomial({1, 1}), q(3));
  EXPECT_EQ(polynomial_to_json(p).dump(),
            R"({"num_vars":2,"terms":[{"exponents":[1,1],"coeff":"3"},)"
            R"({"exponents":[0,0],"coeff":"-1/2"}]})");
}

TEST(PolynomialJson, RoundTripsRandomPolynomials) {
  SeededRng rng(12);
  for (const Field& f : {Fp(101), Q()}) {
    for (int t = 0; t < 100; ++t) {
      const size_t n = 1 + rng.uniform_below(3);
      Polynomial p(n);
      for (const Monomial& m : monomial_basis(n, 3)) {
        if (rng.uniform_below(2) == 0) p.add_term(m, sample_in(f, rng));
      }
      const std::string text = polynomial_to_json(p).dump();
      const Polynomial back = polynomial_from_json(Json::parse(text), f);
      ASSERT_EQ(back, p);
      ASSERT_EQ(polynomial_to_json(back).dump(), text);
    }
  }
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"terms":[]})"), Q()), ParseError);
}

TEST(CodewordJson, BitExactRoundTrip) {
  SeededRng rng(13);
  const PrimeModulus p(1000003);
  for (int t = 0; t < 100; ++t) {
    Message m{p, {}};
    for (size_t i = 0, n = 1 + rng.uniform_below(8); i < n; ++i) {
      m.coefficients.push_back(sample_uniform(p, rng));
    }
    const Codeword c = rs_encode(m, t % 3);
    const std::string text = codeword_to_json(c).dump();
    const Codeword back = codeword_from_json(Json::parse(text));
    ASSERT_EQ(back, c);
    ASSERT_EQ(codeword_to_json(back).dump(), text);
    ASSERT_EQ(*rs_decode(back).message, m);
  }
}

TEST(CodewordJson, FormatAndValidation) {
  const Codeword c = rs_encode(Message{PrimeModulus(101), {fp(1, 101), fp(0, 101)}}, 1);
  EXPECT_EQ(codeword_to_json(c).dump(),
            R"({"n":2,"k":1,"p":101,"pairs":[["0","0"],["1","1"],["2","2"]]})");
  EXPECT_THROW(codeword_from_json(Json::parse(R"({"n":2,"k":1,"p":101,"pairs":[["0","0"]]})")),
               DimensionMismatch);
  EXPECT_THROW(codeword_from_json(Json::parse(
                   R"({"n":1,"k":1,"p":101,"pairs":[["0","0"],["101","1"]]})")),
               DuplicateNode);
  EXPECT_THROW(codeword_from_json(Json::parse(R"({"n":1,"k":1,"p":100,"pairs":[]})")), NotPrime);
  EXPECT_THROW(codeword_from_json(Json::parse(R"({"n":1})")), ParseError);
  EXPECT_THROW(codeword_from_json(Json::parse(R"({"n":1,"k":0,"p":101,"pairs":[[0,1]]})")),
               ParseError);
}

TEST(BnTableCsv, HeaderAndEmptyCells) {
  const std::string csv = bn_table_csv({interpolation_verdict({0, 3, 1}),
                                        interpolation_verdict({2, 3, 5}),
                                        interpolation_verdict({1, 3, 4})});
  std::istringstream in(csv);
  std::string header, no_component, exception, ordinary;
  std::getline(in, header);
  std::getline(in, no_component);
  std::getline(in, exception);
  std::getline(in, ordinary);
  EXPECT_EQ(header,
            "g,r,d,rho,bn_exists,bn_dim,expected_points,interpolates,exception_note,nb_char0,"
            "nb_char2");
  EXPECT_EQ(no_component, "0,3,1,-8,false,,,,,,");
  EXPECT_EQ(exception,
            "2,3,5,2,true,20,10,no_exception,lies on a quadric surface (a hyperelliptic scroll) "
            "which passes through at most 9 general points,fails,fails");
  EXPECT_EQ(ordinary, "1,3,4,1,true,16,8,yes,,satisfies,satisfies");
}

TEST(BnReportJson, Fields) {
  const Json j = bn_report_to_json(interpolation_verdict({6, 5, 10}, 2));
  EXPECT_EQ(j.at("expected_points"), 12);
  EXPECT_EQ(j.at("interpolates"), "no_exception");
  EXPECT_EQ(j.at("exception").at("point_bound"), 11);
  EXPECT_EQ(j.at("nb_interpolation"), "fails");
  EXPECT_TRUE(bn_report_to_json(interpolation_verdict({3, 3, 3})).at("bn_dim").is_null());
}

}  // namespace
}  // namespace interp
