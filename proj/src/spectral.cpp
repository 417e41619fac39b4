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

#include "typeb/spectral.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "typeb/coxeter.hpp"
#include "typeb/fock.hpp"

namespace typeb {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Word <-> index, most significant letter first.
std::vector<int> decode(long index, int len, int d) {
  std::vector<int> w(len);
  for (int p = len - 1; p >= 0; --p) {
    w[p] = static_cast<int>(index % d);
    index /= d;
  }
  return w;
}

long encode(const std::vector<int>& w, int d) {
  long index = 0;
  for (int letter : w) index = index * d + letter;
  return index;
}

double weight(double alpha, double q, int a, int q_exp) { return std::pow(alpha, a) * std::pow(q, q_exp); }

Eigen::MatrixXd gram_matrix(int n, int d, double alpha, double q) {
  const long dim = ipow(d, 2 * n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  if (n == 0) {
    g(0, 0) = 1;
    return g;
  }
  for (const auto& t : symmetrizer_terms(n)) {
    const double c = weight(alpha, q, t.a, t.q_exp);
    if (c == 0) continue;
    for (long w = 0; w < dim; ++w) g(encode(act_on_word(t.sigma, decode(w, 2 * n, d)), d), w) += c;
  }
  return g;
}

// Matrix of b(x⊗y) b*(x⊗y) on level n, with b = r ∘ R^(n+1).
Eigen::MatrixXd annihilate_create(int n, int d, const std::vector<double>& x, const std::vector<double>& y,
                                  double alpha, double q) {
  const long dim = ipow(d, 2 * n);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  const auto& terms = r_terms(n + 1);
  for (long w = 0; w < dim; ++w) {
    std::vector<int> word = decode(w, 2 * n, d);
    std::vector<int> full(2 * n + 2);
    std::copy(word.begin(), word.end(), full.begin() + 1);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const double c = x[i] * y[j];
        if (c == 0) continue;
        full.front() = i;
        full.back() = j;
        for (const auto& t : terms) {
          std::vector<int> img = act_on_word(t.sigma, full);
          const double coeff = c * weight(alpha, q, t.a, t.q_exp) * x[img.front()] * y[img.back()];
          if (coeff == 0) continue;
          m(encode(std::vector<int>(img.begin() + 1, img.end() - 1), d), w) += coeff;
        }
      }
    }
  }
  return m;
}

void check_cap(int n, int d, long cap) {
  if (ipow(d, 2 * n) > cap) {
    throw std::length_error("level " + std::to_string(n) + " with d = " + std::to_string(d) +
                            " exceeds the dense cap of " + std::to_string(cap));
  }
}

}  // namespace

std::vector<double> symmetrizer_gram(int n, int d, double alpha, double q) {
  Eigen::MatrixXd g = gram_matrix(n, d, alpha, q);
  return std::vector<double>(g.data(), g.data() + g.size());
}

SpectrumResult symmetrizer_spectrum(int n, int d, double alpha, double q, long cap) {
  if (n < 0 || d < 1) throw std::invalid_argument("symmetrizer_spectrum needs n >= 0, d >= 1");
  check_cap(n, d, cap);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram_matrix(n, d, alpha, q), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  SpectrumResult r;
  r.min_eigenvalue = ev.minCoeff();
  r.max_eigenvalue = ev.maxCoeff();
  r.determinant = ev.prod();
  r.det_zero = std::abs(r.min_eigenvalue) < kKernelTolerance;
  return r;
}

double creation_norm(const std::vector<double>& x, const std::vector<double>& y, double alpha, double q,
                     int max_level, long cap) {
  if (max_level < 1) throw std::invalid_argument("creation_norm needs max_level >= 1");
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("creation_norm: dimension mismatch");
  const int d = static_cast<int>(x.size());
  double best = 0;
  for (int n = 0; n < max_level; ++n) {
    check_cap(n, d, cap);
    Eigen::MatrixXd g = gram_matrix(n, d, alpha, q);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gs(g, Eigen::EigenvaluesOnly);
    if (gs.eigenvalues().minCoeff() < kKernelTolerance) {
      throw std::runtime_error("numerically singular Gram matrix at level " + std::to_string(n));
    }
    // <b* f, b* g> = <f, b b* g>, so the quadratic form is G * (b b*).
    Eigen::MatrixXd a = g * annihilate_create(n, d, x, y, alpha, q);
    a = 0.5 * (a + a.transpose()).eval();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(a, g, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("generalized eigensolver failed at level " + std::to_string(n));
    best = std::max(best, es.eigenvalues().maxCoeff());
  }
  return std::sqrt(std::max(best, 0.0));
}

double r_norm(int n, double alpha, double q) {
  auto group = enumerate_group(n);
  std::map<SignedPermutation, long> index;
  for (long i = 0; i < static_cast<long>(group.size()); ++i) index.emplace(group[i], i);
  const long dim = static_cast<long>(group.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& t : r_terms(n)) {
    const double c = weight(alpha, q, t.a, t.q_exp);
    for (long j = 0; j < dim; ++j) m(index.at(compose(t.sigma, group[j])), j) += c;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

CreationNormBounds creation_norm_bounds(const std::vector<double>& x, const std::vector<double>& y, double alpha,
                                        double q) {
  if (alpha < -1 || alpha > 1 || q <= -1 || q >= 1)
    throw std::invalid_argument("norm bounds need alpha in [-1,1] and q in (-1,1)");
  if (x.size() != y.size()) throw std::invalid_argument("x and y differ in dimension");
  double xx = 0, yy = 0, xy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xx += x[i] * x[i];
    yy += y[i] * y[i];
    xy += x[i] * y[i];
  }
  const double free_norm = std::sqrt(xx * yy);
  const double q_norm = free_norm / std::sqrt(1 - q);
  if (alpha >= 0 && q <= 0) {
    const double v = std::sqrt(xx * yy + alpha * xy * xy);
    return {NormRegion::kA, v, v};
  }
  if (alpha < 0 && q <= 0) return {NormRegion::kB, q_norm, free_norm};
  if (std::abs(alpha) <= q) return {NormRegion::kC, q_norm, q_norm};
  return {NormRegion::kOther, q_norm, std::sqrt((1 + std::abs(alpha)) / (1 - q)) * free_norm};
}

const char* to_string(NormRegion r) {
  switch (r) {
    case NormRegion::kA:
      return "A";
    case NormRegion::kB:
      return "B";
    case NormRegion::kC:
      return "C";
    case NormRegion::kOther:
      break;
  }
  return "other";
}

}  // namespace typeb
