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

#include <string>
#include <vector>

#include "typeb/fock.hpp"
#include "typeb/partitions.hpp"
#include "typeb/poly.hpp"

namespace typeb {

// phi(B(x_n̄ ⊗ x_n) ⋯ B(x_1̄ ⊗ x_1)); factors[0] is index 1, the rightmost operator.
struct MomentProblem {
  int dimension = 0;
  std::vector<FactorSpec> factors;

  int n() const { return static_cast<int>(factors.size()); }
  void validate() const;

  // Label j < 0 resolves to the left member of factor |j|, j > 0 to the right one.
  const VectorQ& x(int j) const;
  const MatrixQ& T(int j) const;
  const Rational& lambda(int j) const;
};

// lambda_ā lambda_a for a singleton, otherwise
// <x_{ā_k}, T_{ā_{k-1}} ⋯ T_{ā_2} x_{ā_1}> <x_{a_k}, T_{a_{k-1}} ⋯ T_{a_2} x_{a_1}>.
Rational b_cumulant(const BBlock& block, const MomentProblem& problem);
// Product over all B-blocks.
Rational cumulant_product(const TypeBPartition& p, const MomentProblem& problem);

// Sum over P^B(n) of alpha^Na q^Rc times the cumulant product.
BivariatePoly moment(const MomentProblem& problem);

struct WickTerm {
  ExtendedTypeBPartition partition;
  BivariatePoly coefficient;  // alpha^Na q^(Rc+MinMax) times the regular-block cumulants
  FockVector state;           // the tensor built from extended blocks
};

std::vector<WickTerm> wick_terms(const std::vector<Letter>& eps, const MomentProblem& problem);
FockVector wick_vector(const std::vector<Letter>& eps, const MomentProblem& problem);
// b^{ε(n)} ⋯ b^{ε(1)} Ω⊗Ω with act = p_q + alpha n_q and gauge = r_q + alpha n_q^N.
FockVector apply_letters(const std::vector<Letter>& eps, const MomentProblem& problem);

enum class Specialization { kTypeA, kGaussian, kMeixnerQ0 };
Specialization parse_specialization(const std::string& name);

// Independent sums over P^A(n), P^B_2(n) and NC^A(n) respectively. Throws
// std::invalid_argument when the mode's precondition fails.
BivariatePoly specialized_moment(const MomentProblem& problem, Specialization mode);

}  // namespace typeb
