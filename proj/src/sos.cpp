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

#include "ccs/sos.hpp"

#include <algorithm>
#include <deque>

#include "json.hpp"

#include "ccs/syntax.hpp"

namespace ccs {

RuleVars RuleVars::in(TermArena& arena) {
  return RuleVars{arena.var_sym("x"), arena.var_sym("y"), arena.var_sym("x'"),
                  arena.var_sym("y'")};
}

std::vector<Violation> validate_de_simone(TermArena& arena, const DeSimoneRuleSet& rs) {
  std::vector<Violation> out;
  if (rs.arity != 2) out.push_back({-1, "only binary operators are supported (arity 2)"});
  if (rs.op.empty()) out.push_back({-1, "operator name is empty"});
  RuleVars rv = RuleVars::in(arena);
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    const DeSimoneRule& r = rs.rules[i];
    int idx = static_cast<int>(i);
    if (!r.premise_x && !r.premise_y)
      out.push_back({idx, "rule has no premise (axioms are not in de Simone format here)"});
    if (r.target == kNoTerm) {
      out.push_back({idx, "rule has no target"});
      continue;
    }
    // Available variables: x or x' (x' only if x was tested), same for y.
    auto vars = arena.free_vars(r.target);
    std::map<std::uint32_t, int> occ;
    std::vector<TermId> stack{r.target};
    while (!stack.empty()) {
      TermId t = stack.back();
      stack.pop_back();
      switch (arena.tag(t)) {
        case Tag::Var:
          occ[arena.node(t).sym]++;
          break;
        case Tag::Prefix:
          stack.push_back(arena.kid0(t));
          break;
        case Tag::Nil:
          break;
        default:
          stack.push_back(arena.kid0(t));
          stack.push_back(arena.kid1(t));
          break;
      }
    }
    for (auto [sym, count] : occ) {
      if (sym != rv.x && sym != rv.y && sym != rv.xp && sym != rv.yp)
        out.push_back({idx, "target uses a variable other than x, y, x', y'"});
      if (count > 1)
        out.push_back({idx, "target uses variable '" + arena.var_name(sym) + "' twice"});
    }
    if (vars.count(rv.xp) && !r.premise_x)
      out.push_back({idx, "target uses x' but the rule has no premise on x"});
    if (vars.count(rv.yp) && !r.premise_y)
      out.push_back({idx, "target uses y' but the rule has no premise on y"});
    if (vars.count(rv.x) && r.premise_x)
      out.push_back({idx, "target uses x although x was tested (no copying of tested arguments)"});
    if (vars.count(rv.y) && r.premise_y)
      out.push_back({idx, "target uses y although y was tested (no copying of tested arguments)"});
    // Target shape: a variable or a single operator applied to variables.
    switch (arena.tag(r.target)) {
      case Tag::Var:
        break;
      case Tag::Prefix:
        if (arena.tag(arena.kid0(r.target)) != Tag::Var)
          out.push_back({idx, "target nests more than one operator"});
        break;
      case Tag::Nil:
        out.push_back({idx, "target must use at least one rule variable"});
        break;
      default:
        if (arena.tag(arena.kid0(r.target)) != Tag::Var ||
            arena.tag(arena.kid1(r.target)) != Tag::Var)
          out.push_back({idx, "target nests more than one operator"});
        break;
    }
  }
  return out;
}

void OperatorRegistry::register_op(TermArena& arena, const DeSimoneRuleSet& rs) {
  auto violations = validate_de_simone(arena, rs);
  if (!violations.empty())
    throw Error("rule set for '" + rs.op + "' violates the de Simone format: " +
                violations.front().what);
  byOp_[arena.op_sym(rs.op)] = rs;
}

const DeSimoneRuleSet* OperatorRegistry::find(std::uint32_t opSym) const {
  auto it = byOp_.find(opSym);
  return it == byOp_.end() ? nullptr : &it->second;
}

namespace {

void emit(TermArena& arena, std::vector<std::pair<Action, TermId>>& out, Action a, TermId t) {
  out.emplace_back(a, arena.canonical(t));
}

void step_into(TermArena& arena, TermId t, StepCache& cache,
               std::vector<std::pair<Action, TermId>>& out) {
  switch (arena.tag(t)) {
    case Tag::Nil:
    case Tag::Var:
      return;
    case Tag::Prefix:
      emit(arena, out, arena.action_of(t), arena.kid0(t));
      return;
    case Tag::Sum:
      step_into(arena, arena.kid0(t), cache, out);
      step_into(arena, arena.kid1(t), cache, out);
      return;
    case Tag::Par: {
      TermId l = arena.kid0(t), r = arena.kid1(t);
      const auto& ls = cache.step(arena, l);
      const auto& rs = cache.step(arena, r);
      for (auto& [a, l2] : ls) emit(arena, out, a, arena.par(l2, r));
      for (auto& [a, r2] : rs) emit(arena, out, a, arena.par(l, r2));
      for (auto& [a, l2] : ls) {
        if (a.is_tau()) continue;
        for (auto& [b, r2] : rs) {
          if (complementary(a, b)) emit(arena, out, Action::tau(), arena.par(l2, r2));
        }
      }
      return;
    }
    case Tag::LeftMerge: {
      TermId l = arena.kid0(t), r = arena.kid1(t);
      for (auto& [a, l2] : cache.step(arena, l)) emit(arena, out, a, arena.par(l2, r));
      return;
    }
    case Tag::CommMerge: {
      const auto& ls = cache.step(arena, arena.kid0(t));
      const auto& rs = cache.step(arena, arena.kid1(t));
      for (auto& [a, l2] : ls) {
        if (a.is_tau()) continue;
        for (auto& [b, r2] : rs) {
          if (complementary(a, b)) emit(arena, out, Action::tau(), arena.par(l2, r2));
        }
      }
      return;
    }
    case Tag::OpApp: {
      const DeSimoneRuleSet* rs = cache.ops().find(arena.node(t).sym);
      if (!rs) throw UnknownOperator(arena.op_name_of(t));
      TermId l = arena.kid0(t), r = arena.kid1(t);
      const auto& ls = cache.step(arena, l);
      const auto& rsteps = cache.step(arena, r);
      RuleVars rv = RuleVars::in(arena);
      for (const DeSimoneRule& rule : rs->rules) {
        Substitution sigma;
        sigma[rv.x] = l;
        sigma[rv.y] = r;
        if (rule.premise_x && rule.premise_y) {
          for (auto& [a, l2] : ls) {
            if (a != *rule.premise_x) continue;
            for (auto& [b, r2] : rsteps) {
              if (b != *rule.premise_y) continue;
              sigma[rv.xp] = l2;
              sigma[rv.yp] = r2;
              emit(arena, out, rule.label, arena.substitute(sigma, rule.target));
            }
          }
        } else if (rule.premise_x) {
          for (auto& [a, l2] : ls) {
            if (a != *rule.premise_x) continue;
            sigma[rv.xp] = l2;
            emit(arena, out, rule.label, arena.substitute(sigma, rule.target));
          }
        } else if (rule.premise_y) {
          for (auto& [b, r2] : rsteps) {
            if (b != *rule.premise_y) continue;
            sigma[rv.yp] = r2;
            emit(arena, out, rule.label, arena.substitute(sigma, rule.target));
          }
        }
      }
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Action, TermId>> step(TermArena& arena, TermId t,
                                            const OperatorRegistry& ops) {
  StepCache cache(ops);
  return step_with(arena, t, cache);
}

std::vector<std::pair<Action, TermId>> step_with(TermArena& arena, TermId t, StepCache& cache) {
  std::vector<std::pair<Action, TermId>> out;
  step_into(arena, arena.canonical(t), cache, out);
  std::sort(out.begin(), out.end(), [&](const auto& p, const auto& q) {
    if (!(p.first == q.first)) return p.first < q.first;
    return arena.compare(p.second, q.second) < 0;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<std::pair<Action, TermId>>& StepCache::step(TermArena& arena, TermId t) {
  TermId c = arena.canonical(t);
  auto it = memo_.find(c);
  if (it != memo_.end()) return it->second;
  auto res = step_with(arena, c, *this);
  return memo_.emplace(c, std::move(res)).first->second;
}

Lts build_lts(TermArena& arena, const std::vector<TermId>& roots, StepCache& cache) {
  Lts lts;
  std::unordered_map<TermId, int> index;
  std::deque<TermId> queue;
  auto intern = [&](TermId t) {
    TermId c = arena.canonical(t);
    auto it = index.find(c);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(lts.states.size());
    index.emplace(c, id);
    lts.states.push_back(c);
    queue.push_back(c);
    return id;
  };
  for (TermId r : roots) {
    if (!arena.is_closed(r)) throw OpenTerm();
    lts.roots.push_back(intern(r));
  }
  while (!queue.empty()) {
    TermId t = queue.front();
    queue.pop_front();
    int from = index.at(t);
    const auto& moves = cache.step(arena, t);
    std::vector<std::pair<Action, int>> row;
    row.reserve(moves.size());
    for (auto& [a, target] : moves) row.emplace_back(a, intern(target));
    if (static_cast<std::size_t>(from) >= lts.succ.size()) lts.succ.resize(from + 1);
    lts.succ[from] = std::move(row);
  }
  lts.succ.resize(lts.states.size());
  return lts;
}

Lts build_lts(TermArena& arena, TermId root, const OperatorRegistry& ops) {
  StepCache cache(ops);
  return build_lts(arena, std::vector<TermId>{root}, cache);
}

std::string lts_to_json(const TermArena& arena, const Lts& lts, const Alphabet& alphabet) {
  nlohmann::ordered_json j;
  j["root"] = lts.root();
  auto states = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lts.states.size(); ++i) {
    nlohmann::ordered_json s;
    s["id"] = i;
    s["term"] = render_term(arena, lts.states[i], alphabet);
    states.push_back(std::move(s));
  }
  j["states"] = std::move(states);
  auto trans = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lts.succ.size(); ++i) {
    for (auto& [a, to] : lts.succ[i]) {
      nlohmann::ordered_json e;
      e["from"] = i;
      e["label"] = render_action(a, alphabet);
      e["to"] = to;
      trans.push_back(std::move(e));
    }
  }
  j["transitions"] = std::move(trans);
  return j.dump();
}

}  // namespace ccs
