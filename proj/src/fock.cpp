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

#include "typeb/fock.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace typeb {

MatrixQ identity_matrix(int d) {
  MatrixQ m = zero_matrix(d);
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

MatrixQ zero_matrix(int d) { return MatrixQ(d, VectorQ(d, Rational(0))); }

MatrixQ transpose(const MatrixQ& m) {
  MatrixQ t = zero_matrix(static_cast<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

VectorQ mat_vec(const MatrixQ& m, const VectorQ& v) {
  if (m.size() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  VectorQ out(v.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

Rational dot(const VectorQ& u, const VectorQ& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

void FactorSpec::validate(int d) const {
  auto square = [d](const MatrixQ& m) {
    if (static_cast<int>(m.size()) != d) return false;
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != d) return false;
    }
    return true;
  };
  if (static_cast<int>(x_left.size()) != d || static_cast<int>(x_right.size()) != d || !square(T_left) ||
      !square(T_right)) {
    throw std::invalid_argument("factor dimension mismatch: expected d = " + std::to_string(d));
  }
}

// ---------------------------------------------------------------- FockVector

FockVector FockVector::vacuum(int d) { return basis(d, Word{}); }

FockVector FockVector::basis(int d, const Word& w, const BivariatePoly& c) {
  FockVector v(d);
  v.add(w, c);
  return v;
}

FockVector FockVector::simple_tensor(const std::vector<VectorQ>& factors) {
  if (factors.empty()) throw std::invalid_argument("simple_tensor needs at least one factor");
  const int d = static_cast<int>(factors.front().size());
  std::map<Word, Rational> acc{{Word{}, Rational(1)}};
  for (const auto& x : factors) {
    if (static_cast<int>(x.size()) != d) throw std::invalid_argument("simple_tensor: dimension mismatch");
    std::map<Word, Rational> next;
    for (const auto& [w, c] : acc) {
      for (int i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        Word e = w;
        e.push_back(i);
        next[e] += c * x[i];
      }
    }
    acc = std::move(next);
  }
  FockVector v(d);
  for (const auto& [w, c] : acc) v.add(w, BivariatePoly(c));
  return v;
}

BivariatePoly FockVector::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? BivariatePoly() : it->second;
}

int FockVector::max_level() const {
  int m = -1;
  for (const auto& [w, c] : terms_) m = std::max(m, static_cast<int>(w.size()) / 2);
  return m;
}

void FockVector::add(const Word& w, const BivariatePoly& p, const Rational& c, int a, int q_exp) {
  if (w.size() % 2 != 0) throw std::invalid_argument("Fock words have even length");
  if (p.is_zero() || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w);
  it->second.add_scaled(p, c, a, q_exp);
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  if (d_ != o.d_) throw std::invalid_argument("FockVector: dimension mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  if (d_ != o.d_) throw std::invalid_argument("FockVector: dimension mismatch");
  for (const auto& [w, c] : o.terms_) add(w, c, -1);
  return *this;
}

FockVector& FockVector::operator*=(const BivariatePoly& p) {
  FockVector out(d_);
  for (const auto& [w, c] : terms_) out.add(w, c * p);
  return *this = std::move(out);
}

FockVector FockVector::level(int n) const {
  FockVector out(d_);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) == 2 * n) out.terms_.emplace(w, c);
  }
  return out;
}

FockVector FockVector::truncated(int max_level) const {
  FockVector out(d_);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) <= 2 * max_level) out.terms_.emplace(w, c);
  }
  return out;
}

FockVector FockVector::evaluate(const Rational& alpha, const Rational& q) const {
  FockVector out(d_);
  for (const auto& [w, c] : terms_) out.add(w, BivariatePoly(c.eval(alpha, q)));
  return out;
}

std::string to_string(const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")*[";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i] + 1);
    out += "]";
  }
  return out;
}

// ---------------------------------------------------------------- R and P

namespace {

std::vector<int> descending(int from, int to) {
  std::vector<int> w;
  for (int i = from; i >= to; --i) w.push_back(i);
  return w;
}

std::vector<WeightedPermutation> build_r_terms(int n) {
  std::vector<WeightedPermutation> terms;
  terms.push_back({SignedPermutation::identity(n), 0, 0});
  for (int k = 1; k <= n - 1; ++k) terms.push_back({from_word(descending(n - 1, n - k), n), 0, k});
  std::vector<int> head = descending(n - 1, 0);
  terms.push_back({from_word(head, n), 1, n - 1});
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<int> w = head;
    for (int i = 1; i <= k; ++i) w.push_back(i);
    terms.push_back({from_word(w, n), 1, n - 1 + k});
  }
  return terms;
}

std::vector<WeightedPermutation> build_symmetrizer_terms(int n) {
  std::vector<WeightedPermutation> terms;
  for (auto& sigma : enumerate_group(n)) {
    InversionStats st = inversion_stats(sigma);
    terms.push_back({std::move(sigma), st.ninv, st.pinv});
  }
  return terms;
}

template <typename Builder>
const std::vector<WeightedPermutation>& cached(std::map<int, std::vector<WeightedPermutation>>& cache,
                                               std::mutex& mu, int n, Builder build) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build(n)).first;
  return it->second;
}

FockVector apply_weighted(const FockVector& v, const std::vector<WeightedPermutation>& (*terms_for)(int)) {
  FockVector out(v.dimension());
  for (const auto& [w, c] : v.terms()) {
    const int n = static_cast<int>(w.size()) / 2;
    if (n == 0) {
      out.add(w, c);
      continue;
    }
    for (const auto& t : terms_for(n)) out.add(act_on_word(t.sigma, w), c, 1, t.a, t.q_exp);
  }
  return out;
}

Word inner(const Word& w) { return Word(w.begin() + 1, w.end() - 1); }

// Word with the letters at labels -k and k removed.
Word remove_pair(const Word& w, int k) {
  const int n = static_cast<int>(w.size()) / 2;
  Word out;
  out.reserve(w.size() - 2);
  const int left = label_position(-k, n), right = label_position(k, n);
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    if (p != left && p != right) out.push_back(w[p]);
  }
  return out;
}

void check_dim(const FockVector& v, std::size_t d) {
  if (static_cast<std::size_t>(v.dimension()) != d) throw std::invalid_argument("operator dimension mismatch");
}

void check_dim(const FockVector& v, const MatrixQ& a, const MatrixQ& b) {
  check_dim(v, a.size());
  check_dim(v, b.size());
}

// Wraps i ⊗ rest ⊗ j over all (i, j), weighting by left(i) * right(j).
template <typename Left, typename Right>
void add_wrapped(FockVector& out, const Word& rest, const BivariatePoly& c, int a, int q_exp, int d, Left left,
                 Right right) {
  for (int i = 0; i < d; ++i) {
    Rational li = left(i);
    if (li == 0) continue;
    for (int j = 0; j < d; ++j) {
      Rational rj = right(j);
      if (rj == 0) continue;
      Word w;
      w.reserve(rest.size() + 2);
      w.push_back(i);
      w.insert(w.end(), rest.begin(), rest.end());
      w.push_back(j);
      out.add(w, c, li * rj, a, q_exp);
    }
  }
}

}  // namespace

const std::vector<WeightedPermutation>& r_terms(int n) {
  static std::map<int, std::vector<WeightedPermutation>> cache;
  static std::mutex mu;
  return cached(cache, mu, n, build_r_terms);
}

const std::vector<WeightedPermutation>& symmetrizer_terms(int n) {
  static std::map<int, std::vector<WeightedPermutation>> cache;
  static std::mutex mu;
  return cached(cache, mu, n, build_symmetrizer_terms);
}

FockVector apply_R(const FockVector& v) { return apply_weighted(v, r_terms); }

FockVector apply_symmetrizer(const FockVector& v) { return apply_weighted(v, symmetrizer_terms); }

FockVector apply_symmetrizer_recursive(const FockVector& v) {
  FockVector out(v.dimension());
  const FockVector r = apply_R(v);
  for (const auto& [w, c] : r.terms()) {
    if (w.size() <= 2) {
      out.add(w, c);
      continue;
    }
    FockVector in = apply_symmetrizer_recursive(FockVector::basis(v.dimension(), inner(w), c));
    for (const auto& [u, cu] : in.terms()) {
      Word full;
      full.reserve(w.size());
      full.push_back(w.front());
      full.insert(full.end(), u.begin(), u.end());
      full.push_back(w.back());
      out.add(full, cu);
    }
  }
  return out;
}

// ---------------------------------------------------------------- creation / annihilation

FockVector creation(const VectorQ& x, const VectorQ& y, const FockVector& v) {
  check_dim(v, x.size());
  check_dim(v, y.size());
  FockVector out(v.dimension());
  for (const auto& [w, c] : v.terms()) {
    add_wrapped(out, w, c, 0, 0, v.dimension(), [&](int i) { return x[i]; }, [&](int j) { return y[j]; });
  }
  return out;
}

FockVector free_annihilation(const VectorQ& x, const VectorQ& y, const FockVector& v) {
  check_dim(v, x.size());
  check_dim(v, y.size());
  FockVector out(v.dimension());
  for (const auto& [w, c] : v.terms()) {
    if (w.empty()) continue;
    out.add(inner(w), c, x[w.front()] * y[w.back()]);
  }
  return out;
}

FockVector annihilation(const VectorQ& x, const VectorQ& y, const FockVector& v) {
  return free_annihilation(x, y, apply_R(v));
}

FockVector annihilation_positive(const VectorQ& x, const VectorQ& y, const FockVector& v) {
  check_dim(v, x.size());
  check_dim(v, y.size());
  FockVector out(v.dimension());
  for (const auto& [w, c] : v.terms()) {
    const int n = static_cast<int>(w.size()) / 2;
    for (int k = 1; k <= n; ++k) {
      Rational s = x[w[label_position(-k, n)]] * y[w[label_position(k, n)]];
      out.add(remove_pair(w, k), c, s, 0, n - k);
    }
  }
  return out;
}

FockVector annihilation_negative(const VectorQ& x, const VectorQ& y, const FockVector& v) {
  check_dim(v, x.size());
  check_dim(v, y.size());
  FockVector out(v.dimension());
  for (const auto& [w, c] : v.terms()) {
    const int n = static_cast<int>(w.size()) / 2;
    for (int k = 1; k <= n; ++k) {
      Rational s = x[w[label_position(k, n)]] * y[w[label_position(-k, n)]];
      out.add(remove_pair(w, k), c, s, 0, n - 1 + k - 1);
    }
  }
  return out;
}

FockVector annihilation_closed(const VectorQ& x, const VectorQ& y, const FockVector& v) {
  FockVector out = annihilation_positive(x, y, v);
  out += annihilation_negative(x, y, v) *= BivariatePoly::alpha();
  return out;
}

// ---------------------------------------------------------------- gauge

FockVector free_gauge(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v) {
  check_dim(v, t_left, t_right);
  FockVector out(v.dimension());
  for (const auto& [w, c] : v.terms()) {
    if (w.empty()) continue;
    const int a = w.front(), b = w.back();
    add_wrapped(out, inner(w), c, 0, 0, v.dimension(), [&](int i) { return t_left[i][a]; },
                [&](int j) { return t_right[j][b]; });
  }
  return out;
}

FockVector gauge(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v) {
  return free_gauge(t_left, t_right, apply_R(v));
}

FockVector gauge_positive(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v) {
  check_dim(v, t_left, t_right);
  FockVector out(v.dimension());
  for (const auto& [w, c] : v.terms()) {
    const int n = static_cast<int>(w.size()) / 2;
    for (int k = 1; k <= n; ++k) {
      const int a = w[label_position(-k, n)], b = w[label_position(k, n)];
      add_wrapped(out, remove_pair(w, k), c, 0, n - k, v.dimension(), [&](int i) { return t_left[i][a]; },
                  [&](int j) { return t_right[j][b]; });
    }
  }
  return out;
}

FockVector gauge_negative(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v) {
  check_dim(v, t_left, t_right);
  FockVector out(v.dimension());
  for (const auto& [w, c] : v.terms()) {
    const int n = static_cast<int>(w.size()) / 2;
    for (int k = 1; k <= n; ++k) {
      const int a = w[label_position(k, n)], b = w[label_position(-k, n)];
      add_wrapped(out, remove_pair(w, k), c, 0, n - 1 + k - 1, v.dimension(), [&](int i) { return t_left[i][a]; },
                  [&](int j) { return t_right[j][b]; });
    }
  }
  return out;
}

FockVector gauge_closed(const MatrixQ& t_left, const MatrixQ& t_right, const FockVector& v) {
  FockVector out = gauge_positive(t_left, t_right, v);
  out += gauge_negative(t_left, t_right, v) *= BivariatePoly::alpha();
  return out;
}

// ---------------------------------------------------------------- Poisson, inner product, oracle

FockVector poisson_apply(const FactorSpec& f, const FockVector& v) {
  f.validate(v.dimension());
  FockVector out = creation(f.x_left, f.x_right, v);
  out += annihilation(f.x_left, f.x_right, v);
  out += gauge(f.T_left, f.T_right, v);
  Rational lam = f.lam_left * f.lam_right;
  if (lam != 0) {
    for (const auto& [w, c] : v.terms()) out.add(w, c, lam);
  }
  return out;
}

BivariatePoly inner_product(const FockVector& u, const FockVector& v, InnerProductMode mode) {
  if (u.dimension() != v.dimension()) throw std::invalid_argument("inner_product: dimension mismatch");
  const FockVector& rhs = v;
  FockVector sym = mode == InnerProductMode::kDeformed ? apply_symmetrizer(v) : FockVector(v.dimension());
  const FockVector& other = mode == InnerProductMode::kDeformed ? sym : rhs;
  BivariatePoly sum;
  for (const auto& [w, c] : u.terms()) {
    auto it = other.terms().find(w);
    if (it != other.terms().end()) sum += c * it->second;
  }
  return sum;
}

BivariatePoly vacuum_expectation_oracle(const std::vector<FactorSpec>& factors) {
  if (factors.empty()) throw std::invalid_argument("oracle needs at least one factor");
  const int d = factors.front().dimension();
  const int n = static_cast<int>(factors.size());
  FockVector v = FockVector::vacuum(d);
  for (int t = 0; t < n; ++t) {
    // Components above the number of remaining factors cannot return to the vacuum.
    v = poisson_apply(factors[t], v).truncated(n - 1 - t);
  }
  return v.coefficient(Word{});
}

}  // namespace typeb
