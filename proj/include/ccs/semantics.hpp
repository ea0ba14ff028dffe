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
// ── Behavioural equivalences ─────────────────────────────────────────────────
//
// Decision procedures for the strong spectrum (bisimilarity, 2-nested
// simulation, ready/completed/plain simulation, possible futures, ready
// trace, failure trace, readies, failures, completed trace, trace) plus weak
// and rooted weak bisimilarity.
//
// Strong bisimilarity is decided by partition refinement on the disjoint
// union LTS of both processes.  The other checkers run on the bisimulation
// quotient: simulations as greatest-fixpoint computations, decorated traces
// by DAG traversals producing canonical denotation sets.
//
// Definitions not spelled out in the standard short presentations are fixed
// as follows (the usual formulations over finite trees):
//   - simulation: p R q and p -a-> p' implies q -a-> q' with p' R q'
//   - completed simulation: a simulation relating deadlock only to deadlock
//   - ready simulation: a simulation with init(p) = init(q) on related pairs
//   - 2-nested simulation: the greatest simulation contained in the inverse
//     of the plain simulation preorder
//   - traces/completed traces: action sequences; completed = ending in a
//     state with empty init (over finite acyclic LTSs the trace set is the
//     prefix closure of the completed trace set)
//   - failures: pairs (trace, X) with X disjoint from the init of some
//     derivative; readies: pairs (trace, init of a derivative)
//   - failure traces: alternating refusal-set/action sequences, refusals
//     downward closed; ready traces: alternating exact ready-set/action
//     sequences
//   - possible futures: pairs (trace, trace set of a derivative)
// ─────────────────────────────────────────────────────────────────────────────

#ifndef CCS_SEMANTICS_HPP
#define CCS_SEMANTICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccs/sos.hpp"

namespace ccs {

enum class Semantics { B, S2, RS, CS, S, PF, RT, FT, R, F, CT, T, WB, RWB };

const char* semantics_name(Semantics s);  // "B", "2S", "RS", ...
std::optional<Semantics> semantics_from(const std::string& tag);
const std::vector<Semantics>& all_semantics();

// The arrows of the linear time-branching time spectrum (finer -> coarser),
// plus B -> RWB -> WB.
const std::vector<std::pair<Semantics, Semantics>>& spectrum_arrows();
// Reflexive-transitive closure of the arrows.
bool spectrum_implies(Semantics fine, Semantics coarse);

// ── Strong bisimilarity ─────────────────────────────────────────────────────

// Partition refinement; returns one block id per state.
std::vector<int> bisim_partition(const Lts& lts);

// Quotient LTS under a partition (deduplicated edges, roots remapped).
Lts quotient_lts(const Lts& lts, const std::vector<int>& blocks);

bool strong_bisim(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops);

// ── Simulations ─────────────────────────────────────────────────────────────

enum class SimVariant { Plain, Completed, Ready };

bool simulation_preorder(TermArena& arena, TermId p, TermId q, SimVariant v,
                         const OperatorRegistry& ops);
bool simulation_equiv(TermArena& arena, TermId p, TermId q, SimVariant v,
                      const OperatorRegistry& ops);
bool nested_simulation_2(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops);

// ── Decorated traces & possible futures ─────────────────────────────────────

enum class TraceKind { T, CT, F, R, FT, RT };

// Canonical denotation set, rendered as sorted strings (for inspection and
// tests; the equivalence checkers use the same computation internally).
std::vector<std::string> decorated_traces(TermArena& arena, TermId p, TraceKind kind,
                                          const OperatorRegistry& ops,
                                          const Alphabet& alphabet);

// All pairs (trace, trace set of a derivative), rendered.
std::vector<std::pair<std::string, std::vector<std::string>>> possible_futures_set(
    TermArena& arena, TermId p, const OperatorRegistry& ops, const Alphabet& alphabet);

bool pf_equiv(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops);

// ── Weak semantics ──────────────────────────────────────────────────────────

struct WeakClosure {
  // eps[i]: states reachable by zero or more tau steps (includes i).
  std::vector<std::vector<int>> eps;
  // wsucc[i]: weak transitions =mu=> with at least one visible step for
  // mu != tau and at least one tau step for mu = tau (the "hat" relation).
  std::vector<std::vector<std::pair<Action, int>>> wsucc;
};

WeakClosure weak_saturate(const Lts& lts);

bool weak_bisim(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops);
bool rooted_weak_bisim(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops);

// ── Dispatcher ──────────────────────────────────────────────────────────────

struct Verdict {
  bool equal = false;
  // A distinguishing observation when one is available: a trace, decorated
  // trace, possible future (for the denotational semantics) or an HML-style
  // formula (for the bisimulation-like ones).  Empty when equal.
  std::string witness_kind;
  std::string witness;
  std::string witness_side;  // "left" or "right": who owns the observation
};

bool equiv(TermArena& arena, TermId p, TermId q, Semantics s, const OperatorRegistry& ops);

Verdict equiv_verdict(TermArena& arena, TermId p, TermId q, Semantics s,
                      const OperatorRegistry& ops, const Alphabet& alphabet);

// All fourteen semantics at once.  Must be upward closed along the arrows.
std::map<Semantics, bool> spectrum_matrix(TermArena& arena, TermId p, TermId q,
                                          const OperatorRegistry& ops);

}  // namespace ccs

#endif  // CCS_SEMANTICS_HPP
