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
// ── SOS engine ───────────────────────────────────────────────────────────────
//
// Derives transitions for the built-in operators (prefix, +, ||, left merge,
// communication merge) and for user-defined binary operators given by rules
// in de Simone format:
//
//     x -mu-> x'            y -nu-> y'
//     ------------------------------------   (each argument tested at most
//     f(x,y) -lbl-> target(x, y, x', y')       once, no negative premises)
//
// where target uses each available variable at most once and is either a
// single variable or one operator applied to variables.  Open terms are
// allowed everywhere; variables have no transitions.
// ─────────────────────────────────────────────────────────────────────────────

#ifndef CCS_SOS_HPP
#define CCS_SOS_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccs/term.hpp"

namespace ccs {

struct UnknownOperator : Error {
  explicit UnknownOperator(const std::string& op)
      : Error("unknown operator '" + op + "' (no registered rule set)") {}
};

struct OpenTerm : Error {
  OpenTerm() : Error("operation requires a closed term") {}
};

// One de Simone rule for a binary operator.  Premises are per-argument
// optional actions; the target is a term over the rule variables x, y, x', y'
// (primed variables stand for the derivative of the tested argument).
struct DeSimoneRule {
  std::optional<Action> premise_x;
  std::optional<Action> premise_y;
  Action label;
  TermId target = kNoTerm;
};

struct DeSimoneRuleSet {
  std::string op;
  int arity = 2;
  std::vector<DeSimoneRule> rules;
};

// Rule-variable symbols used in targets ("x", "y", "x'", "y'").
struct RuleVars {
  std::uint32_t x, y, xp, yp;
  static RuleVars in(TermArena& arena);
};

// A violation of the de Simone constraints, as data.
struct Violation {
  int rule_index;  // -1 for rule-set level problems
  std::string what;
};

// Checks the de Simone format constraints plus the target shape: each
// argument tested at most once (representable by construction), no negative
// premises (unrepresentable), target uses only available variables, each at
// most once, and is a variable or a single operator application.
std::vector<Violation> validate_de_simone(TermArena& arena, const DeSimoneRuleSet& rs);

class OperatorRegistry {
 public:
  void register_op(TermArena& arena, const DeSimoneRuleSet& rs);
  const DeSimoneRuleSet* find(std::uint32_t opSym) const;
  bool empty() const { return byOp_.empty(); }

 private:
  std::map<std::uint32_t, DeSimoneRuleSet> byOp_;
};

// All transitions of t provable from the SOS rules, with ac-canonical
// targets, deduplicated and sorted.  Variables are inert.
std::vector<std::pair<Action, TermId>> step(TermArena& arena, TermId t,
                                            const OperatorRegistry& ops);

class StepCache;
std::vector<std::pair<Action, TermId>> step_with(TermArena& arena, TermId t, StepCache& cache);

// Memoising wrapper used by LTS construction and the fuzzers.
class StepCache {
 public:
  explicit StepCache(const OperatorRegistry& ops) : ops_(&ops) {}
  const std::vector<std::pair<Action, TermId>>& step(TermArena& arena, TermId t);
  const OperatorRegistry& ops() const { return *ops_; }

 private:
  const OperatorRegistry* ops_;
  std::unordered_map<TermId, std::vector<std::pair<Action, TermId>>> memo_;
};

// ── LTS ──────────────────────────────────────────────────────────────────────

struct Lts {
  std::vector<TermId> states;  // ac-canonical closed terms, interned per build
  std::vector<std::vector<std::pair<Action, int>>> succ;
  std::vector<int> roots;

  int root() const { return roots.at(0); }
  std::size_t transition_count() const {
    std::size_t n = 0;
    for (const auto& v : succ) n += v.size();
    return n;
  }
};

// Breadth-first closure of `step` from each root; states deduplicated modulo
// AC of +.  Throws OpenTerm when a root is open.
Lts build_lts(TermArena& arena, const std::vector<TermId>& roots, StepCache& cache);
Lts build_lts(TermArena& arena, TermId root, const OperatorRegistry& ops);

std::string lts_to_json(const TermArena& arena, const Lts& lts, const Alphabet& alphabet);

}  // namespace ccs

#endif  // CCS_SOS_HPP
