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

#include "typeb/partitions.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>

namespace typeb {

namespace {

int abs_less(int x, int y) { return std::abs(x) < std::abs(y); }

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) out.push_back(-x);
  return out;
}

}  // namespace

TypeBPartition canonicalize(std::vector<std::vector<int>> blocks, int n) {
  if (n < 1) throw std::invalid_argument("partition needs n >= 1");
  std::map<int, int> owner;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    for (int x : blocks[b]) {
      if (x == 0 || std::abs(x) > n) throw std::invalid_argument("element " + std::to_string(x) + " outside ±[n]");
      if (!owner.emplace(x, b).second) throw std::invalid_argument("element " + std::to_string(x) + " repeated");
    }
  }
  if (static_cast<int>(owner.size()) != 2 * n) throw std::invalid_argument("blocks do not cover ±[n]");
  for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
  for (const auto& blk : blocks) {
    for (int x : blk) {
      if (owner.at(x) == owner.at(-x)) {
        throw std::invalid_argument("self-reflected arc: block contains both " + std::to_string(x) +
                                    " and its negative");
      }
    }
    std::vector<int> mirror = negated(blk);
    std::sort(mirror.begin(), mirror.end());
    if (blocks[owner.at(mirror.front())] != mirror) throw std::invalid_argument("partition is not bar-invariant");
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return TypeBPartition{n, std::move(blocks)};
}

bool crosses(const Interval& x, const Interval& y) {
  return (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) || (y.lo < x.lo && x.lo < y.hi && y.hi < x.hi);
}

std::vector<BBlock> b_blocks(const TypeBPartition& p) {
  std::vector<BBlock> out;
  for (const auto& blk : p.blocks) {
    std::vector<int> chain = blk;
    std::sort(chain.begin(), chain.end(), abs_less);
    if (chain.back() > 0) out.push_back(BBlock{std::move(chain)});
  }
  std::sort(out.begin(), out.end(),
            [](const BBlock& x, const BBlock& y) { return std::abs(x.chain.front()) < std::abs(y.chain.front()); });
  return out;
}

std::vector<BArc> b_arcs(const std::vector<BBlock>& blocks) {
  std::vector<BArc> arcs;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i + 1 < b.chain.size(); ++i) {
      int u = b.chain[i], v = b.chain[i + 1];
      if (v < 0) u = -u, v = -v;
      arcs.push_back(BArc{u, v});
    }
  }
  return arcs;
}

std::vector<BArc> b_arcs(const TypeBPartition& p) { return b_arcs(b_blocks(p)); }

TypeBPartition from_chains(const std::vector<BBlock>& chains, int n) {
  std::vector<std::vector<int>> blocks;
  for (const auto& c : chains) {
    blocks.push_back(c.chain);
    blocks.push_back(negated(c.chain));
  }
  return canonicalize(std::move(blocks), n);
}

int count_negative(const std::vector<BArc>& arcs) {
  int na = 0;
  for (const auto& a : arcs) na += a.negative();
  return na;
}

int restricted_crossings(const std::vector<BArc>& arcs) {
  int rc = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      rc += crosses(arcs[i].pos(), arcs[j].pos());
      rc += crosses(arcs[i].neg(), arcs[j].pos());
    }
  }
  return rc;
}

int covering_arcs(const std::vector<BArc>& arcs, int s) {
  int c = 0;
  for (const auto& a : arcs) c += a.pos().covers(s) + a.neg().covers(s);
  return c;
}

StatRecord statistics(const TypeBPartition& p) {
  auto blocks = b_blocks(p);
  auto arcs = b_arcs(blocks);
  StatRecord st;
  st.na = count_negative(arcs);
  st.rc = restricted_crossings(arcs);
  for (const auto& b : blocks) {
    if (b.singleton()) st.cs += covering_arcs(arcs, b.top());
  }
  return st;
}

PartitionClass parse_partition_class(std::string_view name) {
  static const std::map<std::string_view, PartitionClass> names = {
      {"B", PartitionClass::kB},         {"A", PartitionClass::kA},
      {"pairB", PartitionClass::kPairB}, {"noSingletonB", PartitionClass::kNoSingletonB},
      {"ncB", PartitionClass::kNcB},     {"ncA", PartitionClass::kNcA},
  };
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown partition class '" + std::string(name) + "'");
  return it->second;
}

std::string to_string(PartitionClass c) {
  switch (c) {
    case PartitionClass::kB: return "B";
    case PartitionClass::kA: return "A";
    case PartitionClass::kPairB: return "pairB";
    case PartitionClass::kNoSingletonB: return "noSingletonB";
    case PartitionClass::kNcB: return "ncB";
    case PartitionClass::kNcA: return "ncA";
  }
  return "?";
}

bool in_class(const TypeBPartition& p, PartitionClass c) {
  auto blocks = b_blocks(p);
  auto arcs = b_arcs(blocks);
  switch (c) {
    case PartitionClass::kB:
      return true;
    case PartitionClass::kA:
      return count_negative(arcs) == 0;
    case PartitionClass::kPairB:
      return std::all_of(blocks.begin(), blocks.end(), [](const BBlock& b) { return b.chain.size() == 2; });
    case PartitionClass::kNoSingletonB:
      return std::none_of(blocks.begin(), blocks.end(), [](const BBlock& b) { return b.singleton(); });
    case PartitionClass::kNcB:
      return restricted_crossings(arcs) == 0;
    case PartitionClass::kNcA:
      return restricted_crossings(arcs) == 0 && count_negative(arcs) == 0;
  }
  return false;
}

namespace {

void check_cap(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > cap) throw std::length_error("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
}

void insert_all(int k, int n, std::vector<BBlock>& chains, const std::function<void()>& emit) {
  if (k > n) {
    emit();
    return;
  }
  chains.push_back(BBlock{{k}});
  insert_all(k + 1, n, chains, emit);
  chains.pop_back();
  for (std::size_t i = 0; i < chains.size(); ++i) {
    for (int flip = 0; flip < 2; ++flip) {
      BBlock saved = chains[i];
      if (flip) chains[i].chain = negated(chains[i].chain);
      chains[i].chain.push_back(k);
      insert_all(k + 1, n, chains, emit);
      chains[i] = std::move(saved);
    }
  }
}

}  // namespace

std::vector<TypeBPartition> enumerate(int n, PartitionClass c, int cap) {
  check_cap(n, cap);
  std::vector<TypeBPartition> out;
  std::vector<BBlock> chains;
  insert_all(1, n, chains, [&] {
    TypeBPartition p = from_chains(chains, n);
    if (in_class(p, c)) out.push_back(std::move(p));
  });
  std::sort(out.begin(), out.end());
  return out;
}

int outer_arcs(const TypeBPartition& type_a) {
  auto arcs = b_arcs(type_a);
  int outer = 0;
  for (const auto& a : arcs) {
    if (a.negative()) throw std::invalid_argument("outer_arcs expects a type-A partition");
    bool covered = std::any_of(arcs.begin(), arcs.end(), [&](const BArc& b) {
      return b.pos().lo < a.pos().lo && a.pos().hi < b.pos().hi;
    });
    outer += !covered;
  }
  return outer;
}

Projection project_and_outer(const TypeBPartition& p) {
  auto blocks = b_blocks(p);
  if (restricted_crossings(b_arcs(blocks)) != 0) throw std::invalid_argument("projector input has crossings");
  for (auto& b : blocks) {
    for (int& x : b.chain) x = std::abs(x);
  }
  Projection r;
  r.image = from_chains(blocks, p.n);
  r.outer_count = outer_arcs(r.image);
  r.preimage_count = 1L << r.outer_count;
  return r;
}

void validate_extended(const ExtendedTypeBPartition& p) {
  auto blocks = b_blocks(p.base);
  std::set<int> tops;
  for (const auto& b : blocks) {
    tops.insert(b.top());
    if (b.singleton() && !p.is_extended(b)) throw std::invalid_argument("singleton must be extended");
  }
  for (int t : p.extended) {
    if (!tops.count(t)) throw std::invalid_argument("extended mark does not name a B-block");
  }
}

int minmax(const ExtendedTypeBPartition& p) {
  auto blocks = b_blocks(p.base);
  auto arcs = b_arcs(blocks);
  int m = 0;
  for (const auto& b : blocks) {
    if (p.is_extended(b)) m += covering_arcs(arcs, b.top());
  }
  return m;
}

StatRecord statistics(const ExtendedTypeBPartition& p) {
  StatRecord st = statistics(p.base);
  st.minmax = minmax(p);
  return st;
}

char to_char(Letter l) {
  switch (l) {
    case Letter::kCreate: return '*';
    case Letter::kAct: return '1';
    case Letter::kGauge: return 'E';
  }
  return '?';
}

std::vector<Letter> parse_letters(std::string_view text) {
  static const std::map<std::string_view, Letter> words = {
      {"*", Letter::kCreate},     {"1", Letter::kAct},    {"E", Letter::kGauge},
      {"create", Letter::kCreate}, {"act", Letter::kAct}, {"gauge", Letter::kGauge},
  };
  std::vector<Letter> out;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      auto it = words.find(std::string_view(&ch, 1));
      if (it == words.end()) throw std::invalid_argument("unknown letter '" + std::string(1, ch) + "'");
      out.push_back(it->second);
    }
    return out;
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view w = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    auto it = words.find(w);
    if (it == words.end()) throw std::invalid_argument("unknown letter '" + std::string(w) + "'");
    out.push_back(it->second);
  }
  return out;
}

namespace {

struct OpenChain {
  BBlock block;
  bool open = true;
};

void insert_extended(std::size_t k, const std::vector<Letter>& eps, std::vector<OpenChain>& chains,
                     std::vector<ExtendedTypeBPartition>& out) {
  const int n = static_cast<int>(eps.size());
  if (k > eps.size()) {
    std::vector<BBlock> blocks;
    ExtendedTypeBPartition p;
    for (const auto& c : chains) {
      blocks.push_back(c.block);
      if (c.open) p.extended.insert(c.block.top());
    }
    p.base = from_chains(blocks, n);
    out.push_back(std::move(p));
    return;
  }
  const int label = static_cast<int>(k);
  if (eps[k - 1] == Letter::kCreate) {
    chains.push_back(OpenChain{BBlock{{label}}, true});
    insert_extended(k + 1, eps, chains, out);
    chains.pop_back();
    return;
  }
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (!chains[i].open) continue;
    for (int flip = 0; flip < 2; ++flip) {
      OpenChain saved = chains[i];
      if (flip) chains[i].block.chain = negated(chains[i].block.chain);
      chains[i].block.chain.push_back(label);
      chains[i].open = eps[k - 1] == Letter::kGauge;
      insert_extended(k + 1, eps, chains, out);
      chains[i] = std::move(saved);
    }
  }
}

}  // namespace

std::vector<ExtendedTypeBPartition> enumerate_extended(const std::vector<Letter>& eps) {
  if (eps.empty()) throw std::invalid_argument("enumerate_extended needs a nonempty word");
  check_cap(static_cast<int>(eps.size()), kDefaultEnumerationCap);
  std::vector<ExtendedTypeBPartition> out;
  std::vector<OpenChain> chains;
  insert_extended(1, eps, chains, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- text form

namespace {

std::string block_string(const std::vector<int>& blk) {
  std::string s = "(";
  for (std::size_t i = 0; i < blk.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(blk[i]);
  }
  return s + ")";
}

int top_of(const std::vector<int>& blk) {
  int best = blk.front();
  for (int x : blk) {
    if (std::abs(x) > std::abs(best)) best = x;
  }
  return std::abs(best);
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  // Blocks with their E flags.
  std::vector<std::pair<std::vector<int>, bool>> parse() {
    std::vector<std::pair<std::vector<int>, bool>> blocks;
    expect('{');
    if (peek() == '}') {
      ++i_;
    } else {
      while (true) {
        blocks.push_back(parse_block());
        char c = next();
        if (c == '}') break;
        if (c != ',') fail("expected ',' or '}'");
      }
    }
    skip();
    if (i_ != s_.size()) fail("trailing characters");
    return blocks;
  }

 private:
  std::pair<std::vector<int>, bool> parse_block() {
    expect('(');
    std::vector<int> blk;
    while (true) {
      blk.push_back(parse_int());
      char c = next();
      if (c == ')') break;
      if (c != ',') fail("expected ',' or ')'");
    }
    bool ext = false;
    if (peek() == 'E') {
      ++i_;
      ext = true;
    }
    return {blk, ext};
  }

  int parse_int() {
    skip();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::string tok(s_.substr(start, i_ - start));
    if (tok.empty() || tok == "-" || tok == "+") fail("expected an integer");
    return std::stoi(tok);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  char next() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    ++i_;
    return c;
  }
  void expect(char c) {
    if (next() != c) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("partition text: " + what + " at offset " + std::to_string(i_));
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

int infer_n(const std::vector<std::pair<std::vector<int>, bool>>& blocks) {
  int n = 0;
  for (const auto& [blk, ext] : blocks) {
    for (int x : blk) n = std::max(n, std::abs(x));
  }
  return n;
}

}  // namespace

std::string to_string(const TypeBPartition& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) s += ",";
    s += block_string(p.blocks[i]);
  }
  return s + "}";
}

std::string to_string(const ExtendedTypeBPartition& p) {
  std::string s = "{";
  for (std::size_t i = 0; i < p.base.blocks.size(); ++i) {
    if (i) s += ",";
    s += block_string(p.base.blocks[i]);
    if (p.extended.count(top_of(p.base.blocks[i]))) s += "E";
  }
  return s + "}";
}

TypeBPartition parse_partition(std::string_view text, int n) {
  auto blocks = Parser(text).parse();
  if (n == 0) n = infer_n(blocks);
  std::vector<std::vector<int>> plain;
  for (auto& [blk, ext] : blocks) {
    if (ext) throw std::invalid_argument("extended mark in a plain partition");
    plain.push_back(std::move(blk));
  }
  return canonicalize(std::move(plain), n);
}

ExtendedTypeBPartition parse_extended_partition(std::string_view text, int n) {
  auto blocks = Parser(text).parse();
  if (n == 0) n = infer_n(blocks);
  std::vector<std::vector<int>> plain;
  std::map<int, int> marks;  // top -> number of marked halves
  for (auto& [blk, ext] : blocks) {
    if (ext) ++marks[top_of(blk)];
    plain.push_back(blk);
  }
  ExtendedTypeBPartition p;
  p.base = canonicalize(std::move(plain), n);
  for (const auto& [top, count] : marks) {
    if (count != 2) throw std::invalid_argument("extended mark must be on a block and its reflection");
    p.extended.insert(top);
  }
  validate_extended(p);
  return p;
}

}  // namespace typeb
