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

#include <complex>
#include <optional>
#include <vector>

#include "typeb/poly.hpp"
#include "typeb/rational.hpp"

namespace typeb {

// [n]_q = 1 + q + ... + q^{n-1}
Rational q_number(int n, const Rational& q);
// (s; q)_n = prod_{k=1}^{n} (1 - s q^{k-1})
Rational q_pochhammer(const Rational& s, const Rational& q, int n);
// [n]_q as a polynomial in q.
BivariatePoly q_number_poly(int n);

struct JacobiParams {
  Rational alpha, q;
  std::vector<Rational> beta;   // beta_0 .. beta_N
  std::vector<Rational> gamma;  // gamma_0 .. gamma_N
};

// beta_0 = 0, beta_n = gamma_{n-1} = [n]_q (1 + alpha q^{n-1}).
JacobiParams jacobi(const Rational& alpha, const Rational& q, int N);

// Symbolic beta_n and gamma_n in (alpha, q), with alpha replaced by c * alpha.
BivariatePoly beta_poly(int n, const Rational& c = 1);
BivariatePoly gamma_poly(int n, const Rational& c = 1);

// Polynomial in t with coefficients in (alpha, q); coeffs[k] multiplies t^k.
struct TPoly {
  std::vector<BivariatePoly> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Monic Q_0 .. Q_n from Q_{k+1} = (t - beta_k) Q_k - gamma_{k-1} Q_{k-1}.
std::vector<TPoly> poly_Q(int n, const Rational& c = 1);

// m_k = (J^k)_{00} for k = 0..N with J tridiagonal: J_ii = beta_i,
// J_{i,i+1} = 1, J_{i+1,i} = gamma_i.
std::vector<Rational> moments_from_jacobi(const Rational& alpha, const Rational& q, int N);
std::vector<BivariatePoly> moments_symbolic(int N, const Rational& c = 1);

inline constexpr int kDefaultDepth = 200;
inline constexpr double kDefaultEpsilon = 1e-6;

// Continued fraction 1/(z - beta_0 - gamma_0/(z - beta_1 - ...)) cut after
// `depth` levels. With `tail` and |q| < 1 the remainder is replaced by the
// periodic limit beta = gamma = 1/(1-q), which is exact at q = 0. Throws
// std::invalid_argument for real z and std::domain_error on blow-up.
std::complex<double> cauchy_cf(double alpha, double q, std::complex<double> z, int depth = kDefaultDepth,
                               bool tail = true);

struct Atom {
  double location = 0;
  double mass = 0;
};

// The q = 0 measure: density sqrt(4-(x-1)^2)/p_alpha(x) on (-1, 3) plus an
// atom for alpha > 0.
class MeixnerMeasure {
 public:
  explicit MeixnerMeasure(double alpha);
  double alpha() const { return alpha_; }
  double p(double x) const;
  double density(double x) const;
  const std::optional<Atom>& atom() const { return atom_; }
  // Integral of x^k against the absolutely continuous part.
  double density_moment(int k) const;
  double total_mass() const;
  // Moment of the full measure.
  double moment(int k) const;

 private:
  double alpha_;
  std::optional<Atom> atom_;
};

double meixner_atom_location(double alpha);
double meixner_atom_mass(double alpha);

// -(1/pi) Im G(x + i eps).
double stieltjes_density(double alpha, double q, double x, double eps = kDefaultEpsilon, int depth = kDefaultDepth);
// |i eps G(x + i eps)|
double atom_mass_estimate(double alpha, double q, double x, double eps, int depth = kDefaultDepth);

}  // namespace typeb
