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
#include <vector>

#include "typeb/coxeter.hpp"
#include "typeb/poly.hpp"
#include "typeb/rational.hpp"

namespace typeb {

// Basis word: letters are 0-based basis indices of H = Q^d. A word of length
// 2n sits at level n with positions n̄..1̄,1..n from left to right.
using Word = std::vector<int>;
using VectorQ = std::vector<Rational>;
using MatrixQ = std::vector<std::vector<Rational>>;  // row-major, M[i][j]

MatrixQ identity_matrix(int d);
MatrixQ zero_matrix(int d);
MatrixQ transpose(const MatrixQ& m);
VectorQ mat_vec(const MatrixQ& m, const VectorQ& v);
Rational dot(const VectorQ& u, const VectorQ& v);

// One Poisson factor B(x_left ⊗ x_right) with gauge symbols T_left = T̄_i,
// T_right = T_i and scalars lam_left, lam_right.
struct FactorSpec {
  VectorQ x_left, x_right;
  MatrixQ T_left, T_right;
  Rational lam_left = 0, lam_right = 0;

  int dimension() const { return static_cast<int>(x_left.size()); }
  void validate(int d) const;
};

class FockVector {
 public:
  using TermMap = std::map<Word, BivariatePoly>;

  explicit FockVector(int d) : d_(d) {}
  static FockVector vacuum(int d);
  static FockVector basis(int d, const Word& w, const BivariatePoly& c = BivariatePoly(1));
  // x_1 ⊗ ... ⊗ x_k expanded in the basis.
  static FockVector simple_tensor(const std::vector<VectorQ>& factors);

  int dimension() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BivariatePoly coefficient(const Word& w) const;
  int max_level() const;

  // this[w] += c * alpha^a * q^q_exp * p
  void add(const Word& w, const BivariatePoly& p, const Rational& c = 1, int a = 0, int q_exp = 0);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector& operator*=(const BivariatePoly& p);
  friend FockVector operator+(FockVector x, const FockVector& y) { return x += y; }
  friend FockVector operator-(FockVector x, const FockVector& y) { return x -= y; }
  bool operator==(const FockVector& o) const { return d_ == o.d_ && terms_ == o.terms_; }

  FockVector level(int n) const;
  FockVector truncated(int max_level) const;
  // Substitutes alpha and q in every coefficient.
  FockVector evaluate(const Rational& alpha, const Rational& q) const;

 private:
  int d_;
  TermMap terms_;
};

// Terms "(coefficient)*[i_1,...,i_2n]" with 1-based letters joined by " + ";
// the vacuum word prints as "[]" and the zero vector as "0".
std::string to_string(const FockVector& v);

// sigma weighted by alpha^a q^q_exp.
struct WeightedPermutation {
  SignedPermutation sigma;
  int a = 0;
  int q_exp = 0;
};

// Terms of R^(n) and P^(n); cached per n.
const std::vector<WeightedPermutation>& r_terms(int n);
const std::vector<WeightedPermutation>& symmetrizer_terms(int n);

FockVector apply_R(const FockVector& v);
FockVector apply_symmetrizer(const FockVector& v);
// P^(n) = (I ⊗ P^(n-1) ⊗ I) R^(n), applied recursively.
FockVector apply_symmetrizer_recursive(const FockVector& v);

FockVector creation(const VectorQ& x, const VectorQ& y, const FockVector& v);
// r(x ⊗ y) reads <x, first letter><y, last letter> and keeps the inner word.
FockVector free_annihilation(const VectorQ& x, const VectorQ& y, const FockVector& v);
FockVector annihilation(const VectorQ& x, const VectorQ& y, const FockVector& v);
FockVector annihilation_positive(const VectorQ& x, const VectorQ& y, const FockVector& v);  // p_q
FockVector annihilation_negative(const VectorQ& x, const VectorQ& y, const FockVector& v);  // n_q
FockVector annihilation_closed(const VectorQ& x, const VectorQ& y, const FockVector& v);    // p_q + alpha n_q

// p_0(T̄ ⊗ T): T̄ on the leftmost letter, T on the rightmost.
FockVector free_gauge(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v);
FockVector gauge(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v);
FockVector gauge_positive(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v);  // r_q
FockVector gauge_negative(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v);  // n_q^N
FockVector gauge_closed(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v);

FockVector poisson_apply(const FactorSpec& f, const FockVector& v);

enum class InnerProductMode { kFree, kDeformed };
BivariatePoly inner_product(const FockVector& u, const FockVector& v, InnerProductMode mode);

// phi(B_n ... B_1) with factors[0] the rightmost operator.
BivariatePoly vacuum_expectation_oracle(const std::vector<FactorSpec>& factors);

}  // namespace typeb
