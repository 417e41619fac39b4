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

#include "typeb/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace typeb {

SignedPermutation::SignedPermutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1) throw std::invalid_argument("signed permutation needs n >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int s : image_) {
    int a = std::abs(s);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("image is not a signed permutation");
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return SignedPermutation(std::move(image));
}

SignedPermutation SignedPermutation::generator(int i, int n) {
  if (n < 1 || i < 0 || i > n - 1) {
    throw std::out_of_range("generator index " + std::to_string(i) + " outside [0, " + std::to_string(n - 1) + "]");
  }
  SignedPermutation s = identity(n);
  if (i == 0) {
    s.image_[0] = -1;
  } else {
    std::swap(s.image_[i - 1], s.image_[i]);
  }
  return s;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= n(); ++i) {
    int s = image_[i - 1];
    inv[std::abs(s) - 1] = s > 0 ? i : -i;
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau) {
  if (sigma.n() != tau.n()) throw std::invalid_argument("compose: mismatched n");
  std::vector<int> image(sigma.n());
  for (int i = 1; i <= sigma.n(); ++i) image[i - 1] = sigma(tau(i));
  return SignedPermutation(std::move(image));
}

SignedPermutation from_word(const std::vector<int>& word, int n) {
  SignedPermutation s = SignedPermutation::identity(n);
  for (int g : word) s = compose(s, SignedPermutation::generator(g, n));
  return s;
}

InversionStats inversion_stats(const SignedPermutation& sigma) {
  InversionStats st;
  const int n = sigma.n();
  for (int i = 1; i <= n; ++i) {
    if (sigma(i) < 0) ++st.ninv;
    for (int j = i + 1; j <= n; ++j) {
      if (sigma(i) > sigma(j)) ++st.pinv;
      if (sigma(i) + sigma(j) < 0) ++st.pinv;
    }
  }
  return st;
}

std::vector<SignedPermutation> enumerate_group(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_group needs n >= 1");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> images;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> img = perm;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) img[i] = -img[i];
      }
      images.push_back(std::move(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(images.begin(), images.end());
  std::vector<SignedPermutation> out;
  out.reserve(images.size());
  for (auto& img : images) out.emplace_back(std::move(img));
  return out;
}

std::string to_string(const SignedPermutation& sigma) {
  std::string out = "[";
  for (int i = 0; i < sigma.n(); ++i) {
    if (i) out += ",";
    out += std::to_string(sigma.image()[i]);
  }
  return out + "]";
}

SignedPermutation parse_signed_permutation(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("malformed signed permutation: '" + text + "'");
  }
  std::vector<int> image;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("malformed signed permutation: '" + text + "'");
    image.push_back(v);
  }
  return SignedPermutation(std::move(image));
}

}  // namespace typeb
