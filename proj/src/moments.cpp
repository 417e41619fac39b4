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

#include "typeb/moments.hpp"

#include <cstdlib>
#include <stdexcept>

namespace typeb {

void MomentProblem::validate() const {
  if (factors.empty()) throw std::invalid_argument("moment problem has no factors");
  if (dimension < 1) throw std::invalid_argument("moment problem needs dimension >= 1");
  for (const auto& f : factors) f.validate(dimension);
}

namespace {

const FactorSpec& factor_at(const MomentProblem& p, int j) {
  if (j == 0 || std::abs(j) > p.n()) throw std::out_of_range("label " + std::to_string(j) + " outside ±[n]");
  return p.factors[std::abs(j) - 1];
}

// <x_{c_k}, T_{c_{k-1}} ⋯ T_{c_2} x_{c_1}>
Rational chain_pairing(const std::vector<int>& c, const MomentProblem& p) {
  VectorQ v = p.x(c.front());
  for (std::size_t i = 1; i + 1 < c.size(); ++i) v = mat_vec(p.T(c[i]), v);
  return dot(p.x(c.back()), v);
}

// T_{c_m} ⋯ T_{c_2} x_{c_1}
VectorQ chain_vector(const std::vector<int>& c, const MomentProblem& p) {
  VectorQ v = p.x(c.front());
  for (std::size_t i = 1; i < c.size(); ++i) v = mat_vec(p.T(c[i]), v);
  return v;
}

std::vector<int> negated(std::vector<int> c) {
  for (int& x : c) x = -x;
  return c;
}

}  // namespace

const VectorQ& MomentProblem::x(int j) const {
  const FactorSpec& f = factor_at(*this, j);
  return j < 0 ? f.x_left : f.x_right;
}

const MatrixQ& MomentProblem::T(int j) const {
  const FactorSpec& f = factor_at(*this, j);
  return j < 0 ? f.T_left : f.T_right;
}

const Rational& MomentProblem::lambda(int j) const {
  const FactorSpec& f = factor_at(*this, j);
  return j < 0 ? f.lam_left : f.lam_right;
}

Rational b_cumulant(const BBlock& block, const MomentProblem& problem) {
  if (block.singleton()) return problem.lambda(-block.top()) * problem.lambda(block.top());
  return chain_pairing(negated(block.chain), problem) * chain_pairing(block.chain, problem);
}

Rational cumulant_product(const TypeBPartition& p, const MomentProblem& problem) {
  Rational r = 1;
  for (const auto& b : b_blocks(p)) {
    r *= b_cumulant(b, problem);
    if (r == 0) break;
  }
  return r;
}

namespace {

BivariatePoly sum_over(const std::vector<TypeBPartition>& parts, const MomentProblem& problem, bool with_alpha) {
  BivariatePoly sum;
  for (const auto& p : parts) {
    Rational c = cumulant_product(p, problem);
    if (c == 0) continue;
    StatRecord st = statistics(p);
    sum.add_term(c, with_alpha ? st.na : 0, st.rc);
  }
  return sum;
}

}  // namespace

BivariatePoly moment(const MomentProblem& problem) {
  problem.validate();
  return sum_over(enumerate(problem.n(), PartitionClass::kB), problem, true);
}

std::vector<WickTerm> wick_terms(const std::vector<Letter>& eps, const MomentProblem& problem) {
  problem.validate();
  if (static_cast<int>(eps.size()) != problem.n()) throw std::invalid_argument("letter word length differs from n");
  std::vector<WickTerm> out;
  for (auto& p : enumerate_extended(eps)) {
    auto blocks = b_blocks(p.base);
    auto arcs = b_arcs(blocks);
    Rational c = 1;
    std::vector<const BBlock*> extended;
    for (const auto& b : blocks) {
      if (p.is_extended(b)) {
        extended.push_back(&b);
      } else {
        c *= b_cumulant(b, problem);
      }
    }
    if (c == 0) continue;
    std::sort(extended.begin(), extended.end(), [](const BBlock* x, const BBlock* y) { return x->top() < y->top(); });
    FockVector state = FockVector::vacuum(problem.dimension);
    if (!extended.empty()) {
      std::vector<VectorQ> letters;
      for (auto it = extended.rbegin(); it != extended.rend(); ++it) {
        letters.push_back(chain_vector(negated((*it)->chain), problem));
      }
      for (const BBlock* b : extended) letters.push_back(chain_vector(b->chain, problem));
      state = FockVector::simple_tensor(letters);
    }
    if (state.is_zero()) continue;
    const int rc_minmax = restricted_crossings(arcs) + minmax(p);
    WickTerm t{p, BivariatePoly::monomial(c, count_negative(arcs), rc_minmax), std::move(state)};
    out.push_back(std::move(t));
  }
  return out;
}

FockVector wick_vector(const std::vector<Letter>& eps, const MomentProblem& problem) {
  FockVector sum(problem.dimension);
  for (const auto& t : wick_terms(eps, problem)) {
    FockVector s = t.state;
    sum += s *= t.coefficient;
  }
  return sum;
}

FockVector apply_letters(const std::vector<Letter>& eps, const MomentProblem& problem) {
  problem.validate();
  if (static_cast<int>(eps.size()) != problem.n()) throw std::invalid_argument("letter word length differs from n");
  FockVector v = FockVector::vacuum(problem.dimension);
  for (std::size_t k = 0; k < eps.size(); ++k) {
    const FactorSpec& f = problem.factors[k];
    switch (eps[k]) {
      case Letter::kCreate: v = creation(f.x_left, f.x_right, v); break;
      case Letter::kAct: v = annihilation_closed(f.x_left, f.x_right, v); break;
      case Letter::kGauge: v = gauge_closed(f.T_left, f.T_right, v); break;
    }
  }
  return v;
}

Specialization parse_specialization(const std::string& name) {
  if (name == "typeA") return Specialization::kTypeA;
  if (name == "gaussian") return Specialization::kGaussian;
  if (name == "meixnerQ0") return Specialization::kMeixnerQ0;
  throw std::invalid_argument("unknown specialization '" + name + "'");
}

BivariatePoly specialized_moment(const MomentProblem& problem, Specialization mode) {
  problem.validate();
  const int n = problem.n();
  switch (mode) {
    case Specialization::kTypeA:
      return sum_over(enumerate(n, PartitionClass::kA), problem, false);
    case Specialization::kGaussian: {
      const MatrixQ zero = zero_matrix(problem.dimension);
      for (const auto& f : problem.factors) {
        if (f.T_left != zero || f.T_right != zero || f.lam_left != 0 || f.lam_right != 0) {
          throw std::invalid_argument("gaussian specialization needs T = 0 and lambda = 0");
        }
      }
      return sum_over(enumerate(n, PartitionClass::kPairB), problem, true);
    }
    case Specialization::kMeixnerQ0: {
      for (const auto& f : problem.factors) {
        if (f.x_left != f.x_right || f.T_left != f.T_right) {
          throw std::invalid_argument("meixnerQ0 specialization needs x_left = x_right and T_left = T_right");
        }
      }
      const BivariatePoly one_plus_alpha = BivariatePoly(1) + BivariatePoly::alpha();
      BivariatePoly sum;
      for (const auto& p : enumerate(n, PartitionClass::kNcA)) {
        Rational c = cumulant_product(p, problem);
        if (c == 0) continue;
        sum.add_scaled(pow(one_plus_alpha, outer_arcs(p)), c);
      }
      return sum;
    }
  }
  throw std::logic_error("unhandled specialization");
}

}  // namespace typeb
