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

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "typeb/rational.hpp"

namespace typeb {

// Exponent pair (power of alpha, power of q).
struct Exponent {
  int a = 0;
  int q = 0;
  bool operator==(const Exponent&) const = default;
};

// Graded lexicographic: higher total degree first, then higher alpha power.
struct GradedLex {
  bool operator()(const Exponent& x, const Exponent& y) const {
    if (x.a + x.q != y.a + y.q) return x.a + x.q > y.a + y.q;
    return x.a > y.a;
  }
};

Rational rational_pow(const Rational& base, int exponent);

// Sparse polynomial in alpha and q with rational coefficients. Zero
// coefficients are never stored, so equality is structural.
class BivariatePoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLex>;

  BivariatePoly() = default;
  BivariatePoly(const Rational& c);  // NOLINT: constants convert implicitly
  BivariatePoly(long c) : BivariatePoly(Rational(c)) {}  // NOLINT

  static BivariatePoly monomial(const Rational& c, int a_exp, int q_exp);
  static BivariatePoly alpha() { return monomial(1, 1, 0); }
  static BivariatePoly q() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int a_exp, int q_exp) const;
  int degree_alpha() const;
  int degree_q() const;

  // this += c * alpha^a_exp * q^q_exp * p
  void add_scaled(const BivariatePoly& p, const Rational& c, int a_exp = 0, int q_exp = 0);
  void add_term(const Rational& c, int a_exp, int q_exp);

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const BivariatePoly& o);
  BivariatePoly& operator*=(const Rational& c);

  friend BivariatePoly operator+(BivariatePoly x, const BivariatePoly& y) { return x += y; }
  friend BivariatePoly operator-(BivariatePoly x, const BivariatePoly& y) { return x -= y; }
  friend BivariatePoly operator*(const BivariatePoly& x, const BivariatePoly& y);
  friend BivariatePoly operator*(BivariatePoly x, const Rational& c) { return x *= c; }
  BivariatePoly operator-() const;
  bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

  Rational eval(const Rational& alpha, const Rational& q) const;
  double eval(double alpha, double q) const;

  // p(c * alpha, q)
  BivariatePoly scale_alpha(const Rational& c) const;
  BivariatePoly substitute_alpha(const Rational& alpha) const;
  BivariatePoly substitute_q(const Rational& q) const;

 private:
  TermMap terms_;
};

BivariatePoly pow(const BivariatePoly& p, int exponent);

// Terms "c*a^i*q^j" in graded-lex order joined by " + "; factors with a zero
// exponent are omitted and the zero polynomial prints as "0".
std::string to_string(const BivariatePoly& p);
BivariatePoly parse_poly(std::string_view text);

}  // namespace typeb
