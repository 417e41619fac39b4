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

#include "typeb/orthopoly.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace typeb {

Rational q_number(int n, const Rational& q) {
  if (n < 1) throw std::invalid_argument("q_number needs n >= 1");
  Rational sum = 0, power = 1;
  for (int i = 0; i < n; ++i, power *= q) sum += power;
  return sum;
}

Rational q_pochhammer(const Rational& s, const Rational& q, int n) {
  if (n < 1) throw std::invalid_argument("q_pochhammer needs n >= 1");
  Rational prod = 1, power = 1;
  for (int k = 1; k <= n; ++k, power *= q) prod *= 1 - s * power;
  return prod;
}

BivariatePoly q_number_poly(int n) {
  if (n < 1) throw std::invalid_argument("q_number needs n >= 1");
  BivariatePoly p;
  for (int i = 0; i < n; ++i) p.add_term(1, 0, i);
  return p;
}

JacobiParams jacobi(const Rational& alpha, const Rational& q, int N) {
  if (N < 0) throw std::invalid_argument("jacobi needs N >= 0");
  JacobiParams jp{alpha, q, {}, {}};
  for (int n = 0; n <= N; ++n) {
    jp.beta.push_back(n == 0 ? Rational(0) : q_number(n, q) * (1 + alpha * rational_pow(q, n - 1)));
    jp.gamma.push_back(q_number(n + 1, q) * (1 + alpha * rational_pow(q, n)));
  }
  return jp;
}

BivariatePoly gamma_poly(int n, const Rational& c) {
  BivariatePoly factor(1);
  factor.add_term(c, 1, n);
  return q_number_poly(n + 1) * factor;
}

BivariatePoly beta_poly(int n, const Rational& c) { return n == 0 ? BivariatePoly() : gamma_poly(n - 1, c); }

std::vector<TPoly> poly_Q(int n, const Rational& c) {
  if (n < 0) throw std::invalid_argument("poly_Q needs n >= 0");
  std::vector<TPoly> qs;
  qs.push_back(TPoly{{BivariatePoly(1)}});
  for (int k = 0; k < n; ++k) {
    const TPoly& cur = qs[k];
    TPoly next{std::vector<BivariatePoly>(cur.coeffs.size() + 1)};
    BivariatePoly b = beta_poly(k, c);
    for (std::size_t i = 0; i < cur.coeffs.size(); ++i) {
      next.coeffs[i + 1] += cur.coeffs[i];
      next.coeffs[i] -= b * cur.coeffs[i];
    }
    if (k >= 1) {
      BivariatePoly g = gamma_poly(k - 1, c);
      const TPoly& prev = qs[k - 1];
      for (std::size_t i = 0; i < prev.coeffs.size(); ++i) next.coeffs[i] -= g * prev.coeffs[i];
    }
    qs.push_back(std::move(next));
  }
  return qs;
}

namespace {

// Powers of the tridiagonal operator applied to e_0; entries are read at index 0.
template <typename T, typename Beta, typename Gamma>
std::vector<T> tridiagonal_moments(int N, Beta beta, Gamma gamma) {
  const int size = N / 2 + 2;
  std::vector<T> v(size), w(size);
  v[0] = T(1);
  std::vector<T> m;
  m.push_back(v[0]);
  for (int k = 1; k <= N; ++k) {
    for (int i = 0; i < size; ++i) {
      T s = beta(i) * v[i];
      if (i + 1 < size) s += v[i + 1];
      if (i >= 1) s += gamma(i - 1) * v[i - 1];
      w[i] = s;
    }
    std::swap(v, w);
    m.push_back(v[0]);
  }
  return m;
}

}  // namespace

std::vector<Rational> moments_from_jacobi(const Rational& alpha, const Rational& q, int N) {
  if (N < 0) throw std::invalid_argument("moments_from_jacobi needs N >= 0");
  JacobiParams jp = jacobi(alpha, q, N / 2 + 2);
  return tridiagonal_moments<Rational>(N, [&](int i) { return jp.beta[i]; }, [&](int i) { return jp.gamma[i]; });
}

std::vector<BivariatePoly> moments_symbolic(int N, const Rational& c) {
  if (N < 0) throw std::invalid_argument("moments_symbolic needs N >= 0");
  return tridiagonal_moments<BivariatePoly>(N, [&](int i) { return beta_poly(i, c); },
                                            [&](int i) { return gamma_poly(i, c); });
}

namespace {

double q_number_d(int n, double q) {
  double s = 0, p = 1;
  for (int i = 0; i < n; ++i, p *= q) s += p;
  return s;
}

double gamma_d(int n, double alpha, double q) { return q_number_d(n + 1, q) * (1 + alpha * std::pow(q, n)); }
double beta_d(int n, double alpha, double q) { return n == 0 ? 0.0 : gamma_d(n - 1, alpha, q); }

}  // namespace

std::complex<double> cauchy_cf(double alpha, double q, std::complex<double> z, int depth, bool tail) {
  if (depth < 1) throw std::invalid_argument("cauchy_cf needs depth >= 1");
  if (z.imag() == 0) throw std::invalid_argument("cauchy_cf needs Im z != 0");
  std::complex<double> g = 0;
  if (tail && std::abs(q) < 1) {
    const double b = 1 / (1 - q), r = 2 * std::sqrt(b);
    const std::complex<double> u = z - b;
    g = (u - std::sqrt(u - r) * std::sqrt(u + r)) / (2 * b);
  }
  for (int k = depth - 1; k >= 0; --k) {
    const std::complex<double> den = z - beta_d(k, alpha, q) - gamma_d(k, alpha, q) * g;
    if (!std::isfinite(den.real()) || !std::isfinite(den.imag()) || std::abs(den) < 1e-300) {
      throw std::domain_error("continued fraction blew up at level " + std::to_string(k));
    }
    g = 1.0 / den;
  }
  return g;
}

double meixner_atom_location(double a) { return (a + 1) * (a + std::sqrt(a * (a + 4))) / (2 * a); }

double meixner_atom_mass(double a) {
  const double s = std::sqrt(a * (a + 4));
  const double inner = (a * a * a + (a * a - 1) * s + 2 * a * a - 3 * a + 2) / a;
  const double num = a * a + std::sqrt(2.0) * a * std::sqrt(inner) + (a - 1) * s + a;
  const double den = 2 * a * (a * a + (a + 3) * s + 5 * a + 4);
  return num / den;
}

MeixnerMeasure::MeixnerMeasure(double alpha) : alpha_(alpha) {
  if (!(alpha > -1)) throw std::invalid_argument("meixner measure needs alpha > -1");
  if (alpha > 0) atom_ = Atom{meixner_atom_location(alpha), meixner_atom_mass(alpha)};
}

double MeixnerMeasure::p(double x) const {
  const double a = alpha_;
  return 2 * std::numbers::pi / (a + 1) * (-a * x * x * x + a * a * x * x + (2 * a * a + 3 * a + 1) * x + (a + 1) * (a + 1));
}

double MeixnerMeasure::density(double x) const {
  if (x <= -1 || x >= 3) return 0;
  return std::sqrt(4 - (x - 1) * (x - 1)) / p(x);
}

double MeixnerMeasure::density_moment(int k) const {
  // x = 1 + 2 cos(theta). p_alpha(x) has the factor (x + 1), which cancels
  // against sin^2(theta) and leaves a smooth integrand.
  const double a = alpha_;
  auto f = [&](double theta) {
    const double x = 1 + 2 * std::cos(theta);
    const double quad = -a * x * x + a * (a + 1) * x + (a + 1) * (a + 1);
    const double s = std::sin(theta / 2);
    // 4 sin^2(theta) / (x + 1) = 4 sin^2(theta / 2)
    return std::pow(x, k) * 4 * s * s * (a + 1) / (2 * std::numbers::pi * quad);
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::numbers::pi, 15, 1e-14);
}

double MeixnerMeasure::total_mass() const { return moment(0); }

double MeixnerMeasure::moment(int k) const {
  double m = density_moment(k);
  if (atom_) m += atom_->mass * std::pow(atom_->location, k);
  return m;
}

double stieltjes_density(double alpha, double q, double x, double eps, int depth) {
  return -cauchy_cf(alpha, q, {x, eps}, depth).imag() / std::numbers::pi;
}

double atom_mass_estimate(double alpha, double q, double x, double eps, int depth) {
  return std::abs(std::complex<double>(0, eps) * cauchy_cf(alpha, q, {x, eps}, depth));
}

}  // namespace typeb
