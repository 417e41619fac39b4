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

#include <vector>

namespace typeb {

// Floating-point checks on explicitly assembled Gram matrices of P^(n).

struct SpectrumResult {
  double min_eigenvalue = 0;
  double max_eigenvalue = 0;
  double determinant = 0;
  bool det_zero = false;  // |min eigenvalue| < kernel_tol
};

inline constexpr long kDefaultDenseCap = 4096;
inline constexpr double kKernelTolerance = 1e-10;

// Gram matrix <e_u, P^(n) e_w>_{0,0} on the d^{2n} basis words of level n.
std::vector<double> symmetrizer_gram(int n, int d, double alpha, double q);

SpectrumResult symmetrizer_spectrum(int n, int d, double alpha, double q, long cap = kDefaultDenseCap);

// Operator norm of b*(x ⊗ y) from levels 0..max_level-1 into levels 1..max_level
// under the deformed inner product. Throws std::runtime_error when a Gram
// matrix is numerically singular.
double creation_norm(const std::vector<double>& x, const std::vector<double>& y, double alpha, double q,
                     int max_level, long cap = kDefaultDenseCap);

// Bounds on ||b*(x ⊗ y)||_{alpha,q} by parameter region:
//   A = [0,1] x (-1,0]: equality with sqrt(|x|^2|y|^2 + alpha <x,y>^2)
//   B = [-1,0) x (-1,0]: |x||y|/sqrt(1-q) <= norm <= |x||y|
//   C = {|alpha| <= q < 1}: equality with |x||y|/sqrt(1-q)
//   otherwise: |x||y|/sqrt(1-q) <= norm <= sqrt((1+|alpha|)/(1-q)) |x||y|
enum class NormRegion { kA, kB, kC, kOther };
struct CreationNormBounds {
  NormRegion region;
  double lower;
  double upper;
};
CreationNormBounds creation_norm_bounds(const std::vector<double>& x, const std::vector<double>& y, double alpha,
                                        double q);
const char* to_string(NormRegion r);

// ||R^(n)||_{0,0} on H^{⊗2n} with H infinite dimensional; computed in the
// regular representation of B(n), which the tensor action contains.
double r_norm(int n, double alpha, double q);

}  // namespace typeb
