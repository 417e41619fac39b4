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

#include <map>
#include <set>

#include "test_support.hpp"
#include "typeb/partitions.hpp"

using namespace typeb;

namespace {

TypeBPartition P(const char* text) { return parse_partition(text); }
ExtendedTypeBPartition PE(const char* text) { return parse_extended_partition(text); }

const char* kTenPointA = "{(-10,-7,-4),(4,7,10),(-6,5),(-5,6),(-3,1),(-1,3),(-9,2),(-2,9),(-8),(8)}";
const char* kTenPointB = "{(-10,-6,5),(-5,6,10),(-9,-8),(8,9),(-7,-4,-3,1),(-1,3,4,7),(-2),(2)}";

struct FourthMomentEntry {
  std::vector<int> first_chain;  // remaining chains follow by the pairing in the text form
  const char* text;
  int na;
  int rc;
};

}  // namespace

TEST(Canonicalize, Examples) {
  EXPECT_NO_THROW(canonicalize({{-2, -1}, {1, 2}}, 2));
  EXPECT_NO_THROW(canonicalize({{-2, 1}, {-1, 2}}, 2));
  EXPECT_THROW(canonicalize({{-1, 1}}, 1), std::invalid_argument);
  EXPECT_THROW(canonicalize({{-3, -1, 1}, {-2}, {2}, {3}}, 3), std::invalid_argument);
  EXPECT_THROW(canonicalize({{-2, -1}, {1}, {2}}, 2), std::invalid_argument);
  EXPECT_THROW(canonicalize({{-1}, {1}}, 2), std::invalid_argument);
  auto p = canonicalize({{2, 1}, {-1, -2}}, 2);
  EXPECT_EQ(to_string(p), "{(-2,-1),(1,2)}");
}

TEST(TextForm, RejectsDuplicatesAndRoundTrips) {
  EXPECT_THROW(PE("{(-2)E,(2)E,(-2,-1)E,(1,2)E}"), std::invalid_argument);
  EXPECT_THROW(P("{(-1),(1)"), std::invalid_argument);
  EXPECT_THROW(PE("{(-2,-1)E,(1,2),(-3)E,(3)E}"), std::invalid_argument);
  EXPECT_THROW(PE("{(-1),(1)}"), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : enumerate(n, PartitionClass::kB)) {
      EXPECT_EQ(parse_partition(to_string(p), n), p);
      EXPECT_EQ(statistics(parse_partition(to_string(p), n)), statistics(p));
    }
  }
  auto e = PE("{(-2,-1)E,(-3)E,(1,2)E,(3)E}");
  EXPECT_EQ(to_string(e), "{(-3)E,(-2,-1)E,(1,2)E,(3)E}");
  EXPECT_EQ(parse_extended_partition(to_string(e)), e);
}

TEST(Enumerate, Examples) {
  auto b2 = enumerate(2, PartitionClass::kB);
  ASSERT_EQ(b2.size(), 3u);
  std::set<TypeBPartition> got(b2.begin(), b2.end());
  EXPECT_TRUE(got.count(P("{(-2),(-1),(1),(2)}")));
  EXPECT_TRUE(got.count(P("{(-2,-1),(1,2)}")));
  EXPECT_TRUE(got.count(P("{(-2,1),(-1,2)}")));
  EXPECT_EQ(enumerate(3, PartitionClass::kA).size(), 5u);
  EXPECT_EQ(enumerate(1, PartitionClass::kB), std::vector<TypeBPartition>{P("{(-1),(1)}")});
  EXPECT_THROW(enumerate(7, PartitionClass::kB), std::length_error);
  EXPECT_THROW(enumerate(0, PartitionClass::kB), std::invalid_argument);
}

TEST(Enumerate, MatchesFilterOracle) {
  for (int n = 1; n <= 4; ++n) {
    auto fast = enumerate(n, PartitionClass::kB);
    std::set<TypeBPartition> fast_set(fast.begin(), fast.end());
    EXPECT_EQ(fast_set.size(), fast.size());
    EXPECT_EQ(fast_set, typeb::testing::filter_type_b(n)) << "n = " << n;
  }
}

TEST(Enumerate, ClassCountsAndInvariants) {
  auto bell = typeb::testing::bell_numbers(6);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(static_cast<long>(enumerate(n, PartitionClass::kA).size()), bell[n]);
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate(n, PartitionClass::kNcB)) EXPECT_EQ(statistics(p).rc, 0);
    for (const auto& p : enumerate(n, PartitionClass::kNcA)) {
      EXPECT_EQ(statistics(p).rc, 0);
      EXPECT_EQ(statistics(p).na, 0);
    }
    for (const auto& p : enumerate(n, PartitionClass::kA)) EXPECT_EQ(statistics(p).na, 0);
    for (const auto& p : enumerate(n, PartitionClass::kPairB)) {
      for (const auto& b : p.blocks) EXPECT_EQ(b.size(), 2u);
    }
  }
  EXPECT_TRUE(enumerate(3, PartitionClass::kPairB).empty());
  EXPECT_EQ(enumerate(4, PartitionClass::kNoSingletonB).size(), 20u);
}

TEST(BArcs, Examples) {
  auto arcs = b_arcs(P("{(-4,1),(-1,4),(-3,-2),(2,3)}"));
  ASSERT_EQ(arcs.size(), 2u);
  EXPECT_EQ(count_negative(arcs), 1);
  EXPECT_TRUE(b_arcs(P("{(-1),(1)}")).empty());

  auto blocks = b_blocks(P("{(-7,-4,-3,1),(-1,3,4,7),(-2),(2),(-6,-5),(5,6)}"));
  auto it = std::find_if(blocks.begin(), blocks.end(), [](const BBlock& b) { return b.top() == 7; });
  ASSERT_NE(it, blocks.end());
  EXPECT_EQ(it->chain, (std::vector<int>{-1, 3, 4, 7}));
  auto chain_arcs = b_arcs(std::vector<BBlock>{*it});
  ASSERT_EQ(chain_arcs.size(), 3u);
  EXPECT_TRUE(chain_arcs[0].negative());
  EXPECT_FALSE(chain_arcs[1].negative());
  EXPECT_FALSE(chain_arcs[2].negative());
}

TEST(Statistics, TenPointExamples) {
  EXPECT_EQ(statistics(P(kTenPointA)), (StatRecord{3, 6, 2, 0}));
  EXPECT_EQ(statistics(P(kTenPointB)), (StatRecord{2, 3, 3, 0}));
  EXPECT_EQ(statistics(P("{(-3),(-2),(-1),(1),(2),(3)}")), (StatRecord{}));
}

TEST(MinMax, MarkedTenPointVariants) {
  EXPECT_EQ(minmax(PE("{(-10,-6,5),(-5,6,10),(-9,-8),(8,9),(-7,-4,-3,1),(-1,3,4,7),(-2)E,(2)E}")), 3);
  EXPECT_EQ(minmax(PE("{(-10,-6,5)E,(-5,6,10)E,(-9,-8),(8,9),(-7,-4,-3,1),(-1,3,4,7),(-2)E,(2)E}")), 3);
  EXPECT_EQ(minmax(PE("{(-10,-6,5),(-5,6,10),(-9,-8)E,(8,9)E,(-7,-4,-3,1),(-1,3,4,7),(-2)E,(2)E}")), 4);
  EXPECT_EQ(minmax(PE("{(-10,-6,5),(-5,6,10),(-9,-8),(8,9),(-7,-4,-3,1)E,(-1,3,4,7)E,(-2)E,(2)E}")), 4);
  EXPECT_EQ(minmax(PE("{(-10,-6,5),(-5,6,10),(-9,-8)E,(8,9)E,(-7,-4,-3,1)E,(-1,3,4,7)E,(-2)E,(2)E}")), 5);
}

TEST(MinMax, SingletonOnlyMarksAgreeWithCs) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate(n, PartitionClass::kB)) {
      ExtendedTypeBPartition e{p, {}};
      for (const auto& b : b_blocks(p)) {
        if (b.singleton()) e.extended.insert(b.top());
      }
      EXPECT_EQ(minmax(e), statistics(p).cs);
    }
  }
}

TEST(Statistics, FourthMomentTable) {
  // Twelve pairings and the eight sign patterns of one chain through 1..4.
  const std::vector<std::pair<const char*, std::pair<int, int>>> pairings = {
      {"{(-4,-3),(-2,-1),(1,2),(3,4)}", {0, 0}}, {"{(-4,-2),(-3,-1),(1,3),(2,4)}", {0, 1}},
      {"{(-4,-1),(-3,-2),(2,3),(1,4)}", {0, 0}}, {"{(-4,-3),(-2,1),(-1,2),(3,4)}", {1, 0}},
      {"{(-4,-2),(-3,1),(-1,3),(2,4)}", {1, 1}}, {"{(-4,-1),(-3,2),(-2,3),(1,4)}", {1, 2}},
      {"{(-4,3),(-2,-1),(1,2),(-3,4)}", {1, 0}}, {"{(-4,2),(-3,-1),(1,3),(-2,4)}", {1, 1}},
      {"{(-4,1),(-3,-2),(2,3),(-1,4)}", {1, 0}}, {"{(-4,3),(-2,1),(-1,2),(-3,4)}", {2, 0}},
      {"{(-4,2),(-3,1),(-1,3),(-2,4)}", {2, 1}}, {"{(-4,1),(-3,2),(-2,3),(-1,4)}", {2, 2}},
  };
  const std::vector<std::pair<std::vector<int>, int>> chains = {
      {{1, 2, 3, 4}, 0},   {{-1, 2, 3, 4}, 1},  {{-1, -2, 3, 4}, 1}, {{-1, -2, -3, 4}, 1},
      {{1, -2, 3, 4}, 2},  {{-1, 2, -3, 4}, 3}, {{1, -2, -3, 4}, 2}, {{1, 2, -3, 4}, 2},
  };
  std::set<TypeBPartition> seen;
  for (const auto& [text, expected] : pairings) {
    auto st = statistics(P(text));
    EXPECT_EQ(std::make_pair(st.na, st.rc), expected) << text;
    seen.insert(P(text));
  }
  for (const auto& [chain, na] : chains) {
    auto p = from_chains({BBlock{chain}}, 4);
    auto st = statistics(p);
    EXPECT_EQ(st.na, na) << to_string(p);
    EXPECT_EQ(st.rc, 0) << to_string(p);
    seen.insert(p);
  }
  auto all = enumerate(4, PartitionClass::kNoSingletonB);
  EXPECT_EQ(seen, std::set<TypeBPartition>(all.begin(), all.end()));
}

TEST(Projector, Examples) {
  auto r = project_and_outer(P("{(-4,3),(-3,4),(-2,-1),(1,2)}"));
  EXPECT_EQ(r.image, P("{(-4,-3),(3,4),(-2,-1),(1,2)}"));
  EXPECT_EQ(r.outer_count, 2);
  EXPECT_EQ(r.preimage_count, 4);
  for (const auto& p : enumerate(4, PartitionClass::kNcA)) {
    auto s = project_and_outer(p);
    EXPECT_EQ(s.image, p);
    EXPECT_EQ(s.preimage_count, 1L << outer_arcs(p));
  }
  EXPECT_THROW(project_and_outer(P("{(-4,-2),(-3,-1),(1,3),(2,4)}")), std::invalid_argument);
}

TEST(Projector, OuterArcCountsMatchFibers) {
  for (int n = 1; n <= 5; ++n) {
    long total = 0;
    for (const auto& p : enumerate(n, PartitionClass::kNcA)) total += 1L << outer_arcs(p);
    EXPECT_EQ(total, static_cast<long>(enumerate(n, PartitionClass::kNcB).size())) << "n = " << n;
  }
  for (int n = 1; n <= 4; ++n) {
    std::map<TypeBPartition, long> fiber;
    for (const auto& p : enumerate(n, PartitionClass::kNcB)) ++fiber[project_and_outer(p).image];
    for (const auto& p : enumerate(n, PartitionClass::kNcA)) {
      EXPECT_EQ(fiber[p], project_and_outer(p).preimage_count) << to_string(p);
    }
  }
}

TEST(EnumerateExtended, Examples) {
  using L = Letter;
  auto cc = enumerate_extended({L::kCreate, L::kCreate});
  ASSERT_EQ(cc.size(), 1u);
  EXPECT_EQ(to_string(cc[0]), "{(-2)E,(-1)E,(1)E,(2)E}");
  auto c1 = enumerate_extended({L::kCreate, L::kAct});
  ASSERT_EQ(c1.size(), 2u);
  for (const auto& p : c1) EXPECT_TRUE(p.extended.empty());
  std::size_t total = 0;
  for (L a : {L::kCreate, L::kAct, L::kGauge}) {
    for (L b : {L::kCreate, L::kAct, L::kGauge}) total += enumerate_extended({a, b}).size();
  }
  EXPECT_EQ(total, 5u);
  EXPECT_TRUE(enumerate_extended({L::kAct, L::kCreate}).empty());
}

TEST(EnumerateExtended, MarksAreConsistent) {
  std::vector<Letter> letters{Letter::kCreate, Letter::kAct, Letter::kGauge};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          for (const auto& p : enumerate_extended({letters[a], letters[b], letters[c], letters[d]})) {
            EXPECT_NO_THROW(validate_extended(p));
            EXPECT_EQ(parse_extended_partition(to_string(p), 4), p);
          }
        }
      }
    }
  }
}
