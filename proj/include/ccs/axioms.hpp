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
// ── Axiom systems ────────────────────────────────────────────────────────────
//
// Equations, named axiom systems, alphabet-dependent schema instantiation and
// the axiom/rule file formats.
//
// Axiom file format (one item per line, '#' starts a comment):
//
//     NAME : term = term
//     @schema EL1|EL2|RT|RSP2
//
// Action metavariables ?m, ?n, ... in an equation expand over the whole of
// A_tau; an instance named NAME[a,~b] is generated per assignment.  Schema
// lines instantiate the axiom schemas that are not expressible with plain
// action metavariables (EL1 picks the tau variant for complementary pairs,
// EL2 ranges over duplicate-free summand sets, RT over ready-set tuples,
// RSP2 over duplicate-free left-hand summand sets).
//
// Rule file format:
//
//     op NAME arity 2
//     x -a-> x' , y -~a-> y' ==> NAME(x,y) -tau-> x' || y'
//
// Premise metavariables ?c expand over A u co(A) when the complement ~?c is
// mentioned anywhere in the rule, and over the whole of A_tau otherwise.
// ─────────────────────────────────────────────────────────────────────────────

#ifndef CCS_AXIOMS_HPP
#define CCS_AXIOMS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccs/sos.hpp"
#include "ccs/term.hpp"

namespace ccs {

struct Equation {
  std::string name;
  TermId lhs = kNoTerm;
  TermId rhs = kNoTerm;
};

class AxiomSystem {
 public:
  std::string name;

  void add(const Equation& eq);  // throws on duplicate name
  const std::vector<Equation>& equations() const { return eqs_; }
  const Equation* find(const std::string& name) const;

  // When set (the bisimilarity system), instances of the expansion law and
  // of the left/communication merge expansions are generated on demand from
  // their names: EL[a,b|c], LMEL[a], CMEL[a|~a].
  bool el_instances = false;

  // Resolves a name to an axiom, generating schema instances when allowed.
  std::optional<Equation> lookup(TermArena& arena, const Alphabet& alphabet,
                                 const std::string& name) const;

 private:
  std::vector<Equation> eqs_;
  std::map<std::string, int> byName_;
};

// ── Schema instantiation ────────────────────────────────────────────────────

// Instantiates the named schemas over a finite alphabet.  The guard keeps
// EL2/RT/RSP2 instance counts tractable (they are exponential in |A|).
std::vector<Equation> instantiate_schemas(TermArena& arena,
                                          const std::vector<std::string>& tags,
                                          const Alphabet& alphabet,
                                          std::size_t max_names = 3);

std::vector<Equation> el1_instances(TermArena& arena, const Alphabet& alphabet);
std::vector<Equation> el2_instances(TermArena& arena, const Alphabet& alphabet);
std::vector<Equation> rt_instances(TermArena& arena, const Alphabet& alphabet);
std::vector<Equation> rsp2_instances(TermArena& arena, const Alphabet& alphabet);

// One instance of the unbounded expansion law for the given summand action
// lists (both nonempty), named EL[mu1,...|nu1,...].
Equation make_expansion_instance(TermArena& arena, const std::vector<Action>& left,
                                 const std::vector<Action>& right, const Alphabet& alphabet);
// Left-merge expansion lmerge(sum mu_i.X_i, Y) = sum mu_i.(X_i || Y); the
// empty list gives lmerge(0, Y) = 0.
Equation make_lmel_instance(TermArena& arena, const std::vector<Action>& left,
                            const Alphabet& alphabet);
// Communication-merge expansion: cmerge(sum mu_i.X_i, sum nu_j.Y_j) =
// sum over complementary pairs of tau.(X_i || Y_j), possibly 0.
Equation make_cmel_instance(TermArena& arena, const std::vector<Action>& left,
                            const std::vector<Action>& right, const Alphabet& alphabet);

// ── Files ───────────────────────────────────────────────────────────────────

AxiomSystem parse_axiom_system(TermArena& arena, const std::string& text,
                               const Alphabet& alphabet, const std::string& name);
AxiomSystem load_axiom_system(TermArena& arena, const std::string& path,
                              const Alphabet& alphabet);
std::string save_axiom_system(const TermArena& arena, const AxiomSystem& sys,
                              const Alphabet& alphabet);

DeSimoneRuleSet parse_rule_set(TermArena& arena, const std::string& text,
                               const Alphabet& alphabet);
DeSimoneRuleSet load_rule_set(TermArena& arena, const std::string& path,
                              const Alphabet& alphabet);

// ── Built-in systems ────────────────────────────────────────────────────────

// Directory holding the shipped axiom and rule files (CCSLAB_DATA overrides
// the compiled-in default).
std::string data_dir();

// Tags: e0, e1, b (E_1 with on-demand expansion-law instances), rs, cs, s,
// rt, ft, r, f, ct, t, pe.
AxiomSystem builtin_system(TermArena& arena, const std::string& tag, const Alphabet& alphabet);

}  // namespace ccs

#endif  // CCS_AXIOMS_HPP
