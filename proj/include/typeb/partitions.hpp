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

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace typeb {

// Bar-invariant partition of {±1, …, ±n}. Canonical form: elements ascending
// within a block, blocks sorted by their minimum.
struct TypeBPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  bool operator==(const TypeBPartition&) const = default;
  auto operator<=>(const TypeBPartition&) const = default;
};

// Validates and sorts. Throws std::invalid_argument for anything that is not a
// type-B partition of ±[n].
TypeBPartition canonicalize(std::vector<std::vector<int>> blocks, int n);

// A block together with its reflection, stored as the time-ordered chain
// a_1, …, a_k of the positive block: |a_1| < … < |a_k| and a_k > 0.
struct BBlock {
  std::vector<int> chain;
  bool singleton() const { return chain.size() == 1; }
  int top() const { return chain.back(); }
};

struct Interval {
  int lo = 0, hi = 0;
  bool covers(int s) const { return lo < s && s < hi; }
};

bool crosses(const Interval& x, const Interval& y);

// Consecutive chain elements (u, v), |u| < |v|, signs flipped so that v > 0.
// Drawn as the interval between its endpoints; the reflection is negated.
struct BArc {
  int u = 0, v = 0;
  bool negative() const { return u < 0; }
  Interval pos() const { return {std::min(u, v), std::max(u, v)}; }
  Interval neg() const { return {-std::max(u, v), -std::min(u, v)}; }
};

// B-blocks ordered by |a_1|.
std::vector<BBlock> b_blocks(const TypeBPartition& p);
std::vector<BArc> b_arcs(const TypeBPartition& p);
std::vector<BArc> b_arcs(const std::vector<BBlock>& blocks);
// Rebuilds the canonical partition from chains.
TypeBPartition from_chains(const std::vector<BBlock>& chains, int n);

struct StatRecord {
  int na = 0;
  int rc = 0;
  int cs = 0;
  int minmax = 0;
  bool operator==(const StatRecord&) const = default;
};

int count_negative(const std::vector<BArc>& arcs);
int restricted_crossings(const std::vector<BArc>& arcs);
// Drawn arcs (both halves) strictly covering s.
int covering_arcs(const std::vector<BArc>& arcs, int s);

StatRecord statistics(const TypeBPartition& p);

enum class PartitionClass { kB, kA, kPairB, kNoSingletonB, kNcB, kNcA };
PartitionClass parse_partition_class(std::string_view name);
std::string to_string(PartitionClass c);
bool in_class(const TypeBPartition& p, PartitionClass c);

inline constexpr int kDefaultEnumerationCap = 6;

// Built by inserting ±k at time k into a new singleton pair or at the end of
// an existing chain in either orientation. Output is sorted canonically.
std::vector<TypeBPartition> enumerate(int n, PartitionClass c, int cap = kDefaultEnumerationCap);

struct Projection {
  TypeBPartition image;
  int outer_count = 0;
  long preimage_count = 0;
};

// Positive-side arcs of a type-A partition not strictly covered by another.
int outer_arcs(const TypeBPartition& type_a);
// Rewrites every negative arc to a positive one. Throws if rc(p) != 0.
Projection project_and_outer(const TypeBPartition& p);

// Type-B partition whose B-blocks are marked extended by their top a_k.
struct ExtendedTypeBPartition {
  TypeBPartition base;
  std::set<int> extended;
  bool operator==(const ExtendedTypeBPartition&) const = default;
  auto operator<=>(const ExtendedTypeBPartition&) const = default;
  bool is_extended(const BBlock& b) const { return extended.count(b.top()) > 0; }
};

// Throws unless every mark names a B-block and every singleton is marked.
void validate_extended(const ExtendedTypeBPartition& p);
int minmax(const ExtendedTypeBPartition& p);
StatRecord statistics(const ExtendedTypeBPartition& p);

// Letters of the operator word b^{ε(n)} ⋯ b^{ε(1)}.
enum class Letter { kCreate, kAct, kGauge };
char to_char(Letter l);  // '*', '1', 'E'
std::vector<Letter> parse_letters(std::string_view text);

// P^B_{E;ε}(n): regular B-blocks read (*, E, …, E, 1) along the chain,
// extended ones (*, E, …, E); singletons are extended.
std::vector<ExtendedTypeBPartition> enumerate_extended(const std::vector<Letter>& eps);

std::string to_string(const TypeBPartition& p);
std::string to_string(const ExtendedTypeBPartition& p);
// n = 0 infers n from the largest absolute value present.
TypeBPartition parse_partition(std::string_view text, int n = 0);
ExtendedTypeBPartition parse_extended_partition(std::string_view text, int n = 0);

}  // namespace typeb
