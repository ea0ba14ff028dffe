// Copyright 2026 The ccslab Authors
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
//
// ── Terms ────────────────────────────────────────────────────────────────────
//
// CCS terms (plus left merge, communication merge and user-defined binary
// operators) live in an interned DAG owned by a TermArena.  Two structurally
// identical terms share the same TermId, so equality is an integer compare.
//
// Every node also carries the id of its AC-canonical representative: the
// term with all sums flattened, summands sorted under a fixed total order and
// rebuilt as a left-nested comb.  Only associativity/commutativity of + is
// normalised; duplicates are retained (A3 is an axiom, not a convention) and
// the arguments of || are never reordered (P1 stays a proper axiom).
//
// The total term order is lexicographic on (constructor tag, action/name,
// children), with tags ordered Nil < Var < Prefix < Sum < Par < LeftMerge <
// CommMerge < OpApp and actions ordered tau, a, ~a, b, ~b, ...  It is stable
// across runs.
// ─────────────────────────────────────────────────────────────────────────────

#ifndef CCS_TERM_HPP
#define CCS_TERM_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccs/action.hpp"

namespace ccs {

using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = static_cast<TermId>(-1);

enum class Tag : std::uint8_t {
  Nil = 0,
  Var = 1,
  Prefix = 2,
  Sum = 3,
  Par = 4,
  LeftMerge = 5,
  CommMerge = 6,
  OpApp = 7,
};

struct TermNode {
  Tag tag;
  bool closed;
  Action act;         // Prefix only
  std::uint32_t sym;  // Var: variable symbol; OpApp: operator symbol
  TermId kid0, kid1;  // Prefix uses kid0 only
  std::uint32_t size;      // number of operator symbols (Nil/Var count 0)
  std::uint32_t prefixes;  // number of Prefix nodes in the syntax tree
  std::uint64_t hash;
  TermId canon;  // AC-canonical representative
};

using Substitution = std::map<std::uint32_t, TermId>;  // var symbol -> term

class TermArena {
 public:
  TermArena();

  // Constructors.  All return interned ids.
  TermId nil() const { return 0; }
  TermId var(const std::string& name);
  TermId prefix(Action a, TermId body);
  TermId sum(TermId l, TermId r);
  TermId par(TermId l, TermId r);
  TermId lmerge(TermId l, TermId r);
  TermId cmerge(TermId l, TermId r);
  TermId opapp(const std::string& op, TermId l, TermId r);
  TermId opapp(std::uint32_t opSym, TermId l, TermId r);

  // Folds a list of summands into a left-nested sum; the empty list is 0 and
  // a singleton is the element itself.
  TermId sum_of(const std::vector<TermId>& summands);

  const TermNode& node(TermId t) const { return nodes_[t]; }
  Tag tag(TermId t) const { return nodes_[t].tag; }
  TermId kid0(TermId t) const { return nodes_[t].kid0; }
  TermId kid1(TermId t) const { return nodes_[t].kid1; }
  Action action_of(TermId t) const { return nodes_[t].act; }

  std::uint32_t var_sym(const std::string& name);
  const std::string& var_name(std::uint32_t sym) const { return varNames_[sym]; }
  const std::string& var_name_of(TermId t) const { return varNames_[nodes_[t].sym]; }
  std::uint32_t op_sym(const std::string& name);
  const std::string& op_name(std::uint32_t sym) const { return opNames_[sym]; }
  const std::string& op_name_of(TermId t) const { return opNames_[nodes_[t].sym]; }

  // Number of operator symbols (Prefix, Sum, Par, LeftMerge, CommMerge,
  // OpApp); Nil and Var contribute 0.
  std::uint32_t size(TermId t) const { return nodes_[t].size; }
  std::uint32_t prefix_count(TermId t) const { return nodes_[t].prefixes; }
  bool is_closed(TermId t) const { return nodes_[t].closed; }

  TermId canonical(TermId t) const { return nodes_[t].canon; }
  bool ac_equal(TermId a, TermId b) const { return nodes_[a].canon == nodes_[b].canon; }

  // Total term order; see the header note.  Returns <0, 0, >0.
  int compare(TermId a, TermId b) const;

  // The summands of t: the +-spine flattened modulo associativity.  No
  // element has Sum as head; the result is empty iff t is Nil.
  std::vector<TermId> summands(TermId t) const;

  // Homomorphic replacement of variables; unmapped variables are untouched.
  TermId substitute(const Substitution& sigma, TermId t);

  std::set<std::uint32_t> free_vars(TermId t) const;

  // Path navigation.  A position is a list of child indices (Prefix has one
  // child, index 0; binary nodes have children 0 and 1).
  TermId subterm_at(TermId t, const std::vector<int>& pos) const;
  TermId replace_at(TermId t, const std::vector<int>& pos, TermId repl);

  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Key {
    std::uint64_t a, b;
    bool operator==(const Key& o) const { return a == o.a && b == o.b; }
  };

  TermId mk(Tag tag, Action act, std::uint32_t sym, TermId k0, TermId k1);
  TermId mk_canonical_sum(const std::vector<TermId>& sorted, std::size_t from);
  void flatten(TermId t, std::vector<TermId>& out) const;
  static Key make_key(Tag tag, Action act, std::uint32_t sym, TermId k0, TermId k1);

  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.a * 0x9E3779B97F4A7C15ull ^ (k.b + 0x7F4A7C15u);
      h ^= h >> 29;
      h *= 0xBF58476D1CE4E5B9ull;
      h ^= h >> 32;
      return static_cast<std::size_t>(h);
    }
  };

  std::vector<TermNode> nodes_;
  std::unordered_map<Key, TermId, KeyHash> intern_;
  std::vector<std::string> varNames_;
  std::unordered_map<std::string, std::uint32_t> varIds_;
  std::vector<std::string> opNames_;
  std::unordered_map<std::string, std::uint32_t> opIds_;
};

}  // namespace ccs

#endif  // CCS_TERM_HPP
