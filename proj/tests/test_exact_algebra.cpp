// Copyright 2026 The typeb Authors
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

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "typeb/poly.hpp"

using namespace typeb;

namespace {

const BivariatePoly kA = BivariatePoly::alpha();
const BivariatePoly kQ = BivariatePoly::q();

BivariatePoly trace_defect() { return kA * kA * kQ * kQ - BivariatePoly(4) * kA * kA + BivariatePoly(3) * kA + kA * kA * kA - 1; }

}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-6/3")), "-2");
  EXPECT_EQ(to_string(parse_rational(" 7 ")), "7");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(PolyMul, DifferenceOfSquares) {
  BivariatePoly aq = kA * kQ;
  EXPECT_EQ((BivariatePoly(1) + aq) * (BivariatePoly(1) - aq), BivariatePoly(1) - aq * aq);
  EXPECT_EQ((kA + kQ) * (kA - kQ), kA * kA - kQ * kQ);
}

TEST(PolyMul, OneIsIdentity) {
  typeb::testing::Gen g(1);
  for (int i = 0; i < 20; ++i) {
    BivariatePoly p = g.poly();
    EXPECT_EQ(p * BivariatePoly(1), p);
  }
}

TEST(PolyEval, TraceDefectValues) {
  BivariatePoly p = trace_defect();
  EXPECT_EQ(p.eval(Rational(1), Rational(1)), 0);
  EXPECT_EQ(p.eval(Rational(0), Rational(0)), -1);
  EXPECT_EQ(p.eval(Rational(0), Rational(0)), p.coefficient(0, 0));
}

TEST(PolyText, CanonicalOrderAndRoundTrip) {
  EXPECT_EQ(to_string(trace_defect()), "1*a^2*q^2 + 1*a^3 + -4*a^2 + 3*a^1 + -1");
  EXPECT_EQ(to_string(BivariatePoly()), "0");
  EXPECT_EQ(to_string(BivariatePoly::monomial(Rational(-1, 2), 0, 3)), "-1/2*q^3");
  typeb::testing::Gen g(2);
  for (int i = 0; i < 50; ++i) {
    BivariatePoly p = g.poly(6, 5);
    EXPECT_EQ(parse_poly(to_string(p)), p);
  }
}

TEST(PolyProperties, RingAxiomsOnRandomSamples) {
  typeb::testing::Gen g(3);
  for (int i = 0; i < 100; ++i) {
    BivariatePoly x = g.poly(), y = g.poly(), z = g.poly();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
  }
}

TEST(PolyProperties, EvalIsAHomomorphism) {
  typeb::testing::Gen g(4);
  for (int i = 0; i < 100; ++i) {
    BivariatePoly x = g.poly(), y = g.poly();
    Rational a = g.rational(), b = g.rational();
    EXPECT_EQ((x * y).eval(a, b), x.eval(a, b) * y.eval(a, b));
    EXPECT_EQ((x + y).eval(a, b), x.eval(a, b) + y.eval(a, b));
  }
}

TEST(PolySubstitution, PartialEvaluationAgreesWithFullEvaluation) {
  typeb::testing::Gen g(5);
  for (int i = 0; i < 30; ++i) {
    BivariatePoly p = g.poly(5, 4);
    Rational a = g.rational(), b = g.rational(), c = g.rational();
    EXPECT_EQ(p.substitute_alpha(a).eval(Rational(0), b), p.eval(a, b));
    EXPECT_EQ(p.substitute_q(b).eval(a, Rational(0)), p.eval(a, b));
    EXPECT_EQ(p.scale_alpha(c).eval(a, b), p.eval(c * a, b));
  }
}
