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

#include "typeb/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace typeb {

Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) return rational_pow(Rational(1) / base, -exponent);
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

BivariatePoly::BivariatePoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0}, c);
}

BivariatePoly BivariatePoly::monomial(const Rational& c, int a_exp, int q_exp) {
  if (a_exp < 0 || q_exp < 0) throw std::invalid_argument("negative exponent");
  BivariatePoly p;
  p.add_term(c, a_exp, q_exp);
  return p;
}

Rational BivariatePoly::coefficient(int a_exp, int q_exp) const {
  auto it = terms_.find(Exponent{a_exp, q_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePoly::degree_alpha() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.a);
  return d;
}

int BivariatePoly::degree_q() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.q);
  return d;
}

void BivariatePoly::add_term(const Rational& c, int a_exp, int q_exp) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Exponent{a_exp, q_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void BivariatePoly::add_scaled(const BivariatePoly& p, const Rational& c, int a_exp, int q_exp) {
  if (c == 0) return;
  for (const auto& [e, coeff] : p.terms_) add_term(coeff * c, e.a + a_exp, e.q + q_exp);
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  add_scaled(o, 1);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  add_scaled(o, -1);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& x, const BivariatePoly& y) {
  BivariatePoly r;
  for (const auto& [e, c] : y.terms_) r.add_scaled(x, c, e.a, e.q);
  return r;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) { return *this = *this * o; }

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, coeff] : terms_) coeff *= c;
  }
  return *this;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  return r *= Rational(-1);
}

Rational BivariatePoly::eval(const Rational& alpha, const Rational& q) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * rational_pow(alpha, e.a) * rational_pow(q, e.q);
  return sum;
}

double BivariatePoly::eval(double alpha, double q) const {
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    // std::pow(0.0, 0) is 1, matching the algebraic convention.
    sum += c.get_d() * std::pow(alpha, e.a) * std::pow(q, e.q);
  }
  return sum;
}

BivariatePoly BivariatePoly::scale_alpha(const Rational& c) const {
  BivariatePoly r;
  for (const auto& [e, coeff] : terms_) r.add_term(coeff * rational_pow(c, e.a), e.a, e.q);
  return r;
}

BivariatePoly BivariatePoly::substitute_alpha(const Rational& alpha) const {
  BivariatePoly r;
  for (const auto& [e, coeff] : terms_) r.add_term(coeff * rational_pow(alpha, e.a), 0, e.q);
  return r;
}

BivariatePoly BivariatePoly::substitute_q(const Rational& q) const {
  BivariatePoly r;
  for (const auto& [e, coeff] : terms_) r.add_term(coeff * rational_pow(q, e.q), e.a, 0);
  return r;
}

BivariatePoly pow(const BivariatePoly& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative power of a polynomial");
  BivariatePoly r(1);
  for (int i = 0; i < exponent; ++i) r *= p;
  return r;
}

std::string to_string(const BivariatePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (e.a > 0) out += "*a^" + std::to_string(e.a);
    if (e.q > 0) out += "*q^" + std::to_string(e.q);
  }
  return out;
}

namespace {

int parse_power(std::string_view factor, char var) {
  if (factor.size() < 3 || factor[0] != var || factor[1] != '^') {
    throw std::invalid_argument("malformed factor: '" + std::string(factor) + "'");
  }
  std::string digits(factor.substr(2));
  if (digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("malformed exponent: '" + std::string(factor) + "'");
  }
  return std::stoi(digits);
}

}  // namespace

BivariatePoly parse_poly(std::string_view text) {
  BivariatePoly p;
  if (text == "0") return p;
  while (!text.empty()) {
    auto sep = text.find(" + ");
    std::string_view term = text.substr(0, sep);
    text = sep == std::string_view::npos ? std::string_view() : text.substr(sep + 3);

    auto star = term.find('*');
    Rational c = parse_rational(term.substr(0, star));
    int a = 0, q = 0;
    while (star != std::string_view::npos) {
      term = term.substr(star + 1);
      star = term.find('*');
      std::string_view factor = term.substr(0, star);
      if (!factor.empty() && factor[0] == 'a') {
        a += parse_power(factor, 'a');
      } else {
        q += parse_power(factor, 'q');
      }
    }
    p.add_term(c, a, q);
  }
  return p;
}

}  // namespace typeb
