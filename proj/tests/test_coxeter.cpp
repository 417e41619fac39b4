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

#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <set>

#include "typeb/coxeter.hpp"

using namespace typeb;

namespace {

SignedPermutation sp(std::vector<int> image) { return SignedPermutation(std::move(image)); }

// Breadth-first search over generator words: minimal length and the number of
// pi_0 letters in the first reduced word found.
std::map<SignedPermutation, std::pair<int, int>> reduced_words(int n) {
  std::map<SignedPermutation, std::pair<int, int>> seen;
  std::deque<SignedPermutation> queue;
  auto e = SignedPermutation::identity(n);
  seen.emplace(e, std::make_pair(0, 0));
  queue.push_back(e);
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    auto [len, zeros] = seen.at(s);
    for (int i = 0; i < n; ++i) {
      auto t = compose(s, SignedPermutation::generator(i, n));
      if (seen.emplace(t, std::make_pair(len + 1, zeros + (i == 0))).second) queue.push_back(t);
    }
  }
  return seen;
}

}  // namespace

TEST(Generator, Images) {
  EXPECT_EQ(SignedPermutation::generator(1, 2), sp({2, 1}));
  EXPECT_EQ(SignedPermutation::generator(0, 2), sp({-1, 2}));
  EXPECT_EQ(SignedPermutation::generator(2, 3), sp({1, 3, 2}));
  EXPECT_THROW(SignedPermutation::generator(3, 3), std::out_of_range);
  EXPECT_THROW(SignedPermutation::generator(-1, 3), std::out_of_range);
}

TEST(Compose, ReducedWordExamples) {
  EXPECT_EQ(from_word({1, 0, 1}, 2), sp({1, -2}));
  EXPECT_EQ(from_word({0, 2}, 3), sp({-1, 3, 2}));
  for (const auto& s : enumerate_group(3)) EXPECT_EQ(compose(s, s.inverse()), SignedPermutation::identity(3));
  EXPECT_THROW(compose(sp({1}), sp({1, 2})), std::invalid_argument);
}

TEST(InversionStats, Examples) {
  EXPECT_EQ(inversion_stats(from_word({1, 0, 1}, 2)), (InversionStats{1, 2}));
  EXPECT_EQ(inversion_stats(from_word({0, 1, 0}, 2)), (InversionStats{2, 1}));
  EXPECT_EQ(inversion_stats(from_word({1, 2, 0, 1}, 3)), (InversionStats{1, 3}));
  EXPECT_EQ(inversion_stats(from_word({1}, 2)), (InversionStats{0, 1}));
  EXPECT_EQ(inversion_stats(from_word({0, 2}, 3)), (InversionStats{1, 1}));
}

TEST(ActOnWord, Examples) {
  std::vector<int> w{7, 8};
  EXPECT_EQ(act_on_word(SignedPermutation::identity(1), w), w);
  EXPECT_EQ(act_on_word(SignedPermutation::generator(0, 1), w), (std::vector<int>{8, 7}));
  EXPECT_EQ(act_on_word(SignedPermutation::generator(1, 2), std::vector<int>{1, 2, 3, 4}),
            (std::vector<int>{2, 1, 4, 3}));
  EXPECT_THROW(act_on_word(SignedPermutation::identity(2), w), std::invalid_argument);
}

TEST(ActOnWord, IsAGroupAction) {
  std::vector<int> w{1, 2, 3, 4, 5, 6};
  auto group = enumerate_group(3);
  for (const auto& s : group) {
    for (const auto& t : group) {
      EXPECT_EQ(act_on_word(compose(s, t), w), act_on_word(s, act_on_word(t, w)));
    }
  }
}

TEST(EnumerateGroup, CountsAndOrder) {
  EXPECT_EQ(enumerate_group(1).size(), 2u);
  EXPECT_EQ(enumerate_group(2).size(), 8u);
  EXPECT_EQ(enumerate_group(3).size(), 48u);
  auto g = enumerate_group(4);
  EXPECT_EQ(g.size(), 384u);
  EXPECT_EQ(std::set<SignedPermutation>(g.begin(), g.end()).size(), g.size());
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_EQ(to_string(enumerate_group(2).front()), "[-2,-1]");
}

TEST(Relations, CoxeterPresentation) {
  for (int n = 2; n <= 4; ++n) {
    auto e = SignedPermutation::identity(n);
    for (int i = 0; i < n; ++i) EXPECT_EQ(from_word({i, i}, n), e);
    EXPECT_EQ(from_word({0, 1, 0, 1, 0, 1, 0, 1}, n), e);
    EXPECT_NE(from_word({0, 1, 0, 1}, n), e);
    for (int i = 1; i + 1 < n; ++i) EXPECT_EQ(from_word({i, i + 1, i, i + 1, i, i + 1}, n), e);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) EXPECT_EQ(from_word({i, j, i, j}, n), e);
    }
  }
}

TEST(InversionStats, MatchReducedWords) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& [s, lw] : reduced_words(n)) {
      auto st = inversion_stats(s);
      EXPECT_EQ(st.ninv + st.pinv, lw.first) << to_string(s);
      EXPECT_EQ(st.ninv, lw.second) << to_string(s);
      EXPECT_EQ(st, inversion_stats(s.inverse()));
    }
  }
}

TEST(SignedPermutation, TextRoundTripAndValidation) {
  for (const auto& s : enumerate_group(3)) EXPECT_EQ(parse_signed_permutation(to_string(s)), s);
  EXPECT_THROW(sp({1, 1}), std::invalid_argument);
  EXPECT_THROW(sp({1, 3}), std::invalid_argument);
  EXPECT_THROW(parse_signed_permutation("2,1"), std::invalid_argument);
}
