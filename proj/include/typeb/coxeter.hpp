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

#include <functional>
#include <string>
#include <vector>

namespace typeb {

struct InversionStats {
  int ninv = 0;
  int pinv = 0;
  bool operator==(const InversionStats&) const = default;
};

// Element of B(n) in one-line notation: image[i-1] = sigma(i), sigma(-i) = -sigma(i).
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> image);
  static SignedPermutation identity(int n);
  static SignedPermutation generator(int i, int n);

  int n() const { return static_cast<int>(image_.size()); }
  const std::vector<int>& image() const { return image_; }
  int operator()(int x) const { return x > 0 ? image_[x - 1] : -image_[-x - 1]; }

  SignedPermutation inverse() const;
  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> image_;
};

// (sigma o tau)(x) = sigma(tau(x)).
SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau);

// Evaluates pi_{w[0]} pi_{w[1]} ... right to left.
SignedPermutation from_word(const std::vector<int>& word, int n);

InversionStats inversion_stats(const SignedPermutation& sigma);

// Position index of a word label: n̄..1̄ map to 0..n-1 and 1..n to n..2n-1.
inline int label_position(int label, int n) { return label > 0 ? n - 1 + label : n + label; }

// Output at position k carries the input letter at position sigma^{-1}(k).
template <typename Letter>
std::vector<Letter> act_on_word(const SignedPermutation& sigma, const std::vector<Letter>& word);

// All 2^n n! elements, lexicographic on the one-line image.
std::vector<SignedPermutation> enumerate_group(int n);

std::string to_string(const SignedPermutation& sigma);
SignedPermutation parse_signed_permutation(const std::string& text);

}  // namespace typeb

#include <stdexcept>

namespace typeb {

template <typename Letter>
std::vector<Letter> act_on_word(const SignedPermutation& sigma, const std::vector<Letter>& word) {
  const int n = sigma.n();
  if (static_cast<int>(word.size()) != 2 * n) throw std::invalid_argument("word length does not match 2n");
  std::vector<Letter> out(word.size());
  for (int k = 1; k <= n; ++k) {
    int s = sigma(k);
    // sigma maps position k to sigma(k), so the letter at k lands at sigma(k).
    out[label_position(s, n)] = word[label_position(k, n)];
    out[label_position(-s, n)] = word[label_position(-k, n)];
  }
  return out;
}

}  // namespace typeb
