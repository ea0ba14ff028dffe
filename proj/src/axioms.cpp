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

#include "ccs/axioms.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ccs/syntax.hpp"

namespace ccs {

void AxiomSystem::add(const Equation& eq) {
  if (byName_.count(eq.name)) throw Error("duplicate axiom name '" + eq.name + "'");
  byName_[eq.name] = static_cast<int>(eqs_.size());
  eqs_.push_back(eq);
}

const Equation* AxiomSystem::find(const std::string& n) const {
  auto it = byName_.find(n);
  return it == byName_.end() ? nullptr : &eqs_[it->second];
}

// ── Action list naming ──────────────────────────────────────────────────────

namespace {

std::string actions_str(const std::vector<Action>& acts, const Alphabet& al) {
  std::string out;
  for (std::size_t i = 0; i < acts.size(); ++i) {
    if (i) out += ',';
    out += render_action(acts[i], al);
  }
  return out;
}

std::optional<Action> action_from_str(const std::string& s, const Alphabet& al) {
  if (s == "tau") return Action::tau();
  bool co = !s.empty() && s[0] == '~';
  std::string base = co ? s.substr(1) : s;
  int idx = al.index_of(base);
  if (idx < 0) return std::nullopt;
  return co ? Action::coname(idx) : Action::name(idx);
}

std::optional<std::vector<Action>> actions_from_str(const std::string& s, const Alphabet& al) {
  std::vector<Action> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? comma : comma - start);
    auto a = action_from_str(tok, al);
    if (!a) return std::nullopt;
    out.push_back(*a);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

TermId ivar(TermArena& a, const std::string& base, std::size_t i) {
  return a.var(base + std::to_string(i + 1));
}

}  // namespace

// ── Schema instances ────────────────────────────────────────────────────────

Equation make_expansion_instance(TermArena& a, const std::vector<Action>& left,
                                 const std::vector<Action>& right, const Alphabet& al) {
  if (left.empty() || right.empty())
    throw Error("expansion-law instance needs nonempty summand lists");
  std::vector<TermId> xs, ys, lsum, rsum;
  for (std::size_t i = 0; i < left.size(); ++i) xs.push_back(ivar(a, "X", i));
  for (std::size_t j = 0; j < right.size(); ++j) ys.push_back(ivar(a, "Y", j));
  for (std::size_t i = 0; i < left.size(); ++i) lsum.push_back(a.prefix(left[i], xs[i]));
  for (std::size_t j = 0; j < right.size(); ++j) rsum.push_back(a.prefix(right[j], ys[j]));
  TermId P = a.sum_of(lsum), Q = a.sum_of(rsum);
  std::vector<TermId> out;
  for (std::size_t i = 0; i < left.size(); ++i)
    out.push_back(a.prefix(left[i], a.par(xs[i], Q)));
  for (std::size_t j = 0; j < right.size(); ++j)
    out.push_back(a.prefix(right[j], a.par(P, ys[j])));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (complementary(left[i], right[j]))
        out.push_back(a.prefix(Action::tau(), a.par(xs[i], ys[j])));
  return Equation{"EL[" + actions_str(left, al) + "|" + actions_str(right, al) + "]",
                  a.par(P, Q), a.sum_of(out)};
}

Equation make_lmel_instance(TermArena& a, const std::vector<Action>& left,
                            const Alphabet& al) {
  TermId y = a.var("Y");
  if (left.empty()) return Equation{"LMEL[]", a.lmerge(a.nil(), y), a.nil()};
  std::vector<TermId> xs, lsum, out;
  for (std::size_t i = 0; i < left.size(); ++i) xs.push_back(ivar(a, "X", i));
  for (std::size_t i = 0; i < left.size(); ++i) lsum.push_back(a.prefix(left[i], xs[i]));
  for (std::size_t i = 0; i < left.size(); ++i)
    out.push_back(a.prefix(left[i], a.par(xs[i], y)));
  return Equation{"LMEL[" + actions_str(left, al) + "]", a.lmerge(a.sum_of(lsum), y),
                  a.sum_of(out)};
}

Equation make_cmel_instance(TermArena& a, const std::vector<Action>& left,
                            const std::vector<Action>& right, const Alphabet& al) {
  std::vector<TermId> xs, ys, lsum, rsum, out;
  for (std::size_t i = 0; i < left.size(); ++i) xs.push_back(ivar(a, "X", i));
  for (std::size_t j = 0; j < right.size(); ++j) ys.push_back(ivar(a, "Y", j));
  for (std::size_t i = 0; i < left.size(); ++i) lsum.push_back(a.prefix(left[i], xs[i]));
  for (std::size_t j = 0; j < right.size(); ++j) rsum.push_back(a.prefix(right[j], ys[j]));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j)
      if (complementary(left[i], right[j]))
        out.push_back(a.prefix(Action::tau(), a.par(xs[i], ys[j])));
  return Equation{"CMEL[" + actions_str(left, al) + "|" + actions_str(right, al) + "]",
                  a.cmerge(a.sum_of(lsum), a.sum_of(rsum)), a.sum_of(out)};
}

std::vector<Equation> el1_instances(TermArena& a, const Alphabet& al) {
  std::vector<Equation> out;
  TermId x = a.var("X"), y = a.var("Y");
  for (Action mu : all_actions(al)) {
    for (Action nu : all_actions(al)) {
      TermId lhs = a.par(a.prefix(mu, x), a.prefix(nu, y));
      std::vector<TermId> rhs{a.prefix(mu, a.par(x, a.prefix(nu, y))),
                              a.prefix(nu, a.par(a.prefix(mu, x), y))};
      bool comp = complementary(mu, nu);
      if (comp) rhs.push_back(a.prefix(Action::tau(), a.par(x, y)));
      std::string name = comp ? "EL1tau" : "EL1";
      name += "[" + render_action(mu, al) + "," + render_action(nu, al) + "]";
      out.push_back(Equation{name, lhs, a.sum_of(rhs)});
    }
  }
  return out;
}

namespace {

// All nonempty subsets of A_tau in a stable order.
std::vector<std::vector<Action>> action_subsets(const Alphabet& al) {
  std::vector<Action> acts = all_actions(al);
  std::vector<std::vector<Action>> out;
  for (std::uint32_t bits = 1; bits < (1u << acts.size()); ++bits) {
    std::vector<Action> sub;
    for (std::size_t i = 0; i < acts.size(); ++i)
      if (bits & (1u << i)) sub.push_back(acts[i]);
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!(x[i] == y[i])) return x[i] < y[i];
    return false;
  });
  return out;
}

}  // namespace

std::vector<Equation> el2_instances(TermArena& a, const Alphabet& al) {
  std::vector<Equation> out;
  auto subsets = action_subsets(al);
  for (const auto& left : subsets)
    for (const auto& right : subsets) {
      Equation e = make_expansion_instance(a, left, right, al);
      e.name = "EL2[" + actions_str(left, al) + "|" + actions_str(right, al) + "]";
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<Equation> rt_instances(TermArena& a, const Alphabet& al) {
  // mu( sum_{i<=|A|} (nu_i X_i + nu_i Y_i) + Z ) =
  //   mu( sum nu_i X_i + Z ) + mu( sum nu_i Y_i + Z ),
  // one instance per mu in A_tau and per function choice of the nu_i over A.
  std::vector<Equation> out;
  const std::size_t k = al.size();
  std::vector<std::size_t> choice(k, 0);
  TermId z = a.var("Z");
  while (true) {
    std::vector<Action> nus;
    for (std::size_t i = 0; i < k; ++i)
      nus.push_back(Action::name(static_cast<std::uint32_t>(choice[i])));
    for (Action mu : all_actions(al)) {
      std::vector<TermId> both, xs, ys;
      for (std::size_t i = 0; i < k; ++i) {
        TermId xi = ivar(a, "X", i), yi = ivar(a, "Y", i);
        both.push_back(a.prefix(nus[i], xi));
        both.push_back(a.prefix(nus[i], yi));
        xs.push_back(a.prefix(nus[i], xi));
        ys.push_back(a.prefix(nus[i], yi));
      }
      both.push_back(z);
      xs.push_back(z);
      ys.push_back(z);
      Equation e;
      e.name = "RT[" + render_action(mu, al) + ";" + actions_str(nus, al) + "]";
      e.lhs = a.prefix(mu, a.sum_of(both));
      e.rhs = a.sum(a.prefix(mu, a.sum_of(xs)), a.prefix(mu, a.sum_of(ys)));
      out.push_back(std::move(e));
    }
    std::size_t i = 0;
    while (i < k && ++choice[i] == al.size()) choice[i++] = 0;
    if (i == k) break;
  }
  return out;
}

std::vector<Equation> rsp2_instances(TermArena& a, const Alphabet& al) {
  // (sum_i mu_i X_i) || (nu Y + nu Z + W) with the mu_i pairwise distinct.
  std::vector<Equation> out;
  TermId y = a.var("Y"), z = a.var("Z"), w = a.var("W");
  for (const auto& mus : action_subsets(al)) {
    std::vector<TermId> lsum;
    for (std::size_t i = 0; i < mus.size(); ++i) lsum.push_back(a.prefix(mus[i], ivar(a, "X", i)));
    TermId P = a.sum_of(lsum);
    for (Action nu : all_actions(al)) {
      TermId full = a.sum_of({a.prefix(nu, y), a.prefix(nu, z), w});
      TermId partY = a.sum_of({a.prefix(nu, y), w});
      TermId partZ = a.sum_of({a.prefix(nu, z), w});
      std::vector<TermId> rhs{a.par(P, partY), a.par(P, partZ)};
      for (std::size_t i = 0; i < mus.size(); ++i)
        rhs.push_back(a.prefix(mus[i], a.par(ivar(a, "X", i), full)));
      Equation e;
      e.name = "RSP2[" + actions_str(mus, al) + ";" + render_action(nu, al) + "]";
      e.lhs = a.par(P, full);
      e.rhs = a.sum_of(rhs);
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Equation> instantiate_schemas(TermArena& arena,
                                          const std::vector<std::string>& tags,
                                          const Alphabet& alphabet, std::size_t max_names) {
  std::vector<Equation> out;
  for (const std::string& tag : tags) {
    if (tag != "EL1" && alphabet.size() > max_names)
      throw Error("alphabet too large for schema " + tag + " (cap " +
                  std::to_string(max_names) + " names)");
    std::vector<Equation> part;
    if (tag == "EL1")
      part = el1_instances(arena, alphabet);
    else if (tag == "EL2")
      part = el2_instances(arena, alphabet);
    else if (tag == "RT")
      part = rt_instances(arena, alphabet);
    else if (tag == "RSP2")
      part = rsp2_instances(arena, alphabet);
    else
      throw Error("unknown schema tag '" + tag + "'");
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ── On-demand instances ─────────────────────────────────────────────────────

std::optional<Equation> AxiomSystem::lookup(TermArena& arena, const Alphabet& alphabet,
                                            const std::string& n) const {
  if (const Equation* e = find(n)) return *e;
  if (!el_instances) return std::nullopt;
  auto body = [&](const std::string& prefix) -> std::optional<std::string> {
    if (n.rfind(prefix + "[", 0) == 0 && n.back() == ']')
      return n.substr(prefix.size() + 1, n.size() - prefix.size() - 2);
    return std::nullopt;
  };
  auto split2 = [&](const std::string& s)
      -> std::optional<std::pair<std::vector<Action>, std::vector<Action>>> {
    std::size_t bar = s.find('|');
    if (bar == std::string::npos) return std::nullopt;
    auto l = actions_from_str(s.substr(0, bar), alphabet);
    auto r = actions_from_str(s.substr(bar + 1), alphabet);
    if (!l || !r) return std::nullopt;
    return std::make_pair(*l, *r);
  };
  if (auto b = body("EL")) {
    auto lr = split2(*b);
    if (!lr || lr->first.empty() || lr->second.empty()) return std::nullopt;
    return make_expansion_instance(arena, lr->first, lr->second, alphabet);
  }
  if (auto b = body("LMEL")) {
    auto l = actions_from_str(*b, alphabet);
    if (!l) return std::nullopt;
    return make_lmel_instance(arena, *l, alphabet);
  }
  if (auto b = body("CMEL")) {
    auto lr = split2(*b);
    if (!lr) return std::nullopt;
    return make_cmel_instance(arena, lr->first, lr->second, alphabet);
  }
  return std::nullopt;
}

// ── Axiom files ─────────────────────────────────────────────────────────────

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Ordered list of distinct ?metavariables occurring in a line.
std::vector<std::string> metavars_in(const std::string& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '?') continue;
    std::size_t j = i + 1;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
    std::string name = s.substr(i, j - i);
    if (name.size() > 1 && std::find(out.begin(), out.end(), name) == out.end())
      out.push_back(name);
    i = j - 1;
  }
  return out;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

// Expands metavariables textually.  A metavariable whose complement ~?x is
// mentioned ranges over the visible actions; the others over all of A_tau.
std::vector<std::pair<std::string, std::string>> expand_metavars(const std::string& line,
                                                                 const Alphabet& al) {
  auto vars = metavars_in(line);
  if (vars.empty()) return {{line, ""}};
  std::vector<std::vector<Action>> ranges;
  for (const auto& v : vars) {
    bool complemented = line.find("~" + v) != std::string::npos;
    ranges.push_back(complemented ? visible_actions(al) : all_actions(al));
  }
  std::vector<std::pair<std::string, std::string>> out;
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    std::string text = line;
    std::string suffix;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      Action a = ranges[i][idx[i]];
      // Complements first so "~?c" is not left with a dangling '~'.
      if (!a.is_tau())
        text = replace_all(text, "~" + vars[i], render_action(complement(a), al));
      text = replace_all(text, vars[i], render_action(a, al));
      if (!suffix.empty()) suffix += ',';
      suffix += render_action(a, al);
    }
    out.emplace_back(text, "[" + suffix + "]");
    std::size_t i = vars.size();
    while (i > 0 && ++idx[i - 1] == ranges[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace

AxiomSystem parse_axiom_system(TermArena& arena, const std::string& text,
                               const Alphabet& alphabet, const std::string& name) {
  AxiomSystem sys;
  sys.name = name;
  std::vector<std::string> tags;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    try {
      if (line[0] == '@') {
        std::istringstream ls(line);
        std::string kw, tag;
        ls >> kw >> tag;
        if (kw != "@schema" || tag.empty())
          throw Error("expected '@schema TAG'");
        tags.push_back(tag);
        continue;
      }
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) throw Error("expected 'NAME : term = term'");
      std::string eqname = strip(line.substr(0, colon));
      std::string rest = line.substr(colon + 1);
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) throw Error("expected '=' between the two sides");
      std::string lhsText = strip(rest.substr(0, eq));
      std::string rhsText = strip(rest.substr(eq + 1));
      if (eqname.empty() || lhsText.empty() || rhsText.empty())
        throw Error("expected 'NAME : term = term'");
      for (auto& [expanded, suffix] :
           expand_metavars(lhsText + " = " + rhsText, alphabet)) {
        std::size_t mid = expanded.find('=');
        Equation e;
        e.name = eqname + suffix;
        e.lhs = parse_term(arena, strip(expanded.substr(0, mid)), alphabet);
        e.rhs = parse_term(arena, strip(expanded.substr(mid + 1)), alphabet);
        sys.add(e);
      }
    } catch (const Error& err) {
      throw Error(name + ":" + std::to_string(lineno) + ": " + err.what());
    }
  }
  for (const Equation& e : instantiate_schemas(arena, tags, alphabet)) sys.add(e);
  return sys;
}

AxiomSystem load_axiom_system(TermArena& arena, const std::string& path,
                              const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open axiom file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_axiom_system(arena, buf.str(), alphabet, path);
}

std::string save_axiom_system(const TermArena& arena, const AxiomSystem& sys,
                              const Alphabet& alphabet) {
  std::string out;
  for (const Equation& e : sys.equations()) {
    out += e.name + " : " + render_term(arena, e.lhs, alphabet) + " = " +
           render_term(arena, e.rhs, alphabet) + "\n";
  }
  return out;
}

// ── Rule files ──────────────────────────────────────────────────────────────

namespace {

// Tiny parser for rule targets over the rule variables x, y, x', y'.
struct TargetParser {
  TermArena& a;
  const Alphabet& al;
  const std::string& s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& m) { throw Error("bad rule target: " + m); }

  std::string ident() {
    ws();
    std::size_t b = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
    if (i < s.size() && s[i] == '\'') ++i;  // x' / y'
    if (b == i) fail("expected identifier");
    return s.substr(b, i - b);
  }

  TermId parse() {
    TermId t = factor();
    ws();
    while (i < s.size() && (s[i] == '|' || s[i] == '+')) {
      if (s[i] == '|') {
        if (i + 1 >= s.size() || s[i + 1] != '|') fail("expected '||'");
        i += 2;
        t = a.par(t, factor());
      } else {
        ++i;
        t = a.sum(t, factor());
      }
      ws();
    }
    return t;
  }

  TermId factor() {
    ws();
    if (i >= s.size()) fail("unexpected end");
    if (s[i] == '0') {
      ++i;
      return a.nil();
    }
    if (s[i] == '(') {
      ++i;
      TermId t = parse();
      ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      return t;
    }
    std::string id = ident();
    if (id == "x" || id == "y" || id == "x'" || id == "y'") return a.var(id);
    ws();
    if (i < s.size() && s[i] == '(') {
      ++i;
      TermId l = parse();
      ws();
      if (i >= s.size() || s[i] != ',') fail("expected ','");
      ++i;
      TermId r = parse();
      ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      if (id == "lmerge") return a.lmerge(l, r);
      if (id == "cmerge") return a.cmerge(l, r);
      return a.opapp(id, l, r);
    }
    // action prefix
    std::string actName = id;
    bool co = false;
    if (!actName.empty() && actName[0] == '~') {
      co = true;
      actName = actName.substr(1);
    }
    auto act = action_from_str((co ? "~" : "") + actName, al);
    if (!act) fail("unknown action '" + id + "'");
    ws();
    if (i >= s.size() || s[i] != '.') fail("prefix needs '.'");
    ++i;
    return a.prefix(*act, factor());
  }
};

// `x -a-> x'`: returns (isY, action).
std::pair<bool, Action> parse_premise(const std::string& text, const Alphabet& al) {
  std::string t = strip(text);
  if (t.size() < 6 || (t[0] != 'x' && t[0] != 'y'))
    throw Error("bad premise '" + text + "'");
  bool isY = t[0] == 'y';
  std::size_t arrow1 = t.find('-');
  std::size_t arrow2 = t.find("->", arrow1);
  if (arrow1 == std::string::npos || arrow2 == std::string::npos)
    throw Error("bad premise '" + text + "'");
  std::string lbl = strip(t.substr(arrow1 + 1, arrow2 - arrow1 - 1));
  std::string target = strip(t.substr(arrow2 + 2));
  if ((isY && target != "y'") || (!isY && target != "x'"))
    throw Error("premise target must be " + std::string(isY ? "y'" : "x'"));
  auto act = action_from_str(lbl, al);
  if (!act) throw Error("unknown premise action '" + lbl + "'");
  return {isY, *act};
}

}  // namespace

DeSimoneRuleSet parse_rule_set(TermArena& arena, const std::string& text,
                               const Alphabet& alphabet) {
  DeSimoneRuleSet rs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool headerSeen = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    try {
      if (!headerSeen) {
        std::istringstream ls(line);
        std::string kw, name, akw;
        int arity = 0;
        ls >> kw >> name >> akw >> arity;
        if (kw != "op" || name.empty() || akw != "arity")
          throw Error("expected header 'op NAME arity 2'");
        if (arity != 2) throw Error("only arity 2 is supported");
        rs.op = name;
        rs.arity = arity;
        headerSeen = true;
        continue;
      }
      for (auto& [expanded, suffix] : expand_metavars(line, alphabet)) {
        (void)suffix;
        std::size_t sep = expanded.find("==>");
        if (sep == std::string::npos) throw Error("expected '==>'");
        std::string premText = strip(expanded.substr(0, sep));
        std::string conclText = strip(expanded.substr(sep + 3));
        DeSimoneRule rule;
        // premises, comma separated
        std::size_t start = 0;
        while (start < premText.size()) {
          std::size_t comma = premText.find(',', start);
          std::string one = premText.substr(
              start, comma == std::string::npos ? std::string::npos : comma - start);
          if (!strip(one).empty()) {
            auto [isY, act] = parse_premise(one, alphabet);
            auto& slot = isY ? rule.premise_y : rule.premise_x;
            if (slot)
              throw Error(std::string("NonDeSimone: two premises on argument ") +
                          (isY ? "y" : "x"));
            slot = act;
          }
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        // conclusion: NAME(x,y) -lbl-> target
        std::size_t open = conclText.find('(');
        std::size_t close = conclText.find(')');
        if (open == std::string::npos || close == std::string::npos)
          throw Error("bad conclusion '" + conclText + "'");
        std::string cname = strip(conclText.substr(0, open));
        std::string args = strip(conclText.substr(open + 1, close - open - 1));
        if (cname != rs.op) throw Error("conclusion operator must be '" + rs.op + "'");
        if (replace_all(args, " ", "") != "x,y")
          throw Error("conclusion arguments must be (x,y)");
        std::string rest = strip(conclText.substr(close + 1));
        std::size_t a1 = rest.find('-');
        std::size_t a2 = rest.find("->", a1);
        if (a1 == std::string::npos || a2 == std::string::npos)
          throw Error("bad conclusion label");
        std::string lbl = strip(rest.substr(a1 + 1, a2 - a1 - 1));
        auto act = action_from_str(lbl, alphabet);
        if (!act) throw Error("unknown label action '" + lbl + "'");
        rule.label = *act;
        std::string targetText = strip(rest.substr(a2 + 2));
        TargetParser tp{arena, alphabet, targetText};
        rule.target = tp.parse();
        tp.ws();
        if (tp.i != targetText.size()) throw Error("trailing input in rule target");
        rs.rules.push_back(rule);
      }
    } catch (const Error& err) {
      throw Error("rules:" + std::to_string(lineno) + ": " + err.what());
    }
  }
  if (!headerSeen) throw Error("missing 'op NAME arity 2' header");
  auto violations = validate_de_simone(arena, rs);
  if (!violations.empty()) {
    std::string msg = "NonDeSimone:";
    for (auto& v : violations)
      msg += " [rule " + std::to_string(v.rule_index) + "] " + v.what + ";";
    throw Error(msg);
  }
  return rs;
}

DeSimoneRuleSet load_rule_set(TermArena& arena, const std::string& path,
                              const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open rule file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_rule_set(arena, buf.str(), alphabet);
}

// ── Built-in systems ────────────────────────────────────────────────────────

std::string data_dir() {
  if (const char* env = std::getenv("CCSLAB_DATA")) return env;
#ifdef CCSLAB_DATA_DIR
  return CCSLAB_DATA_DIR;
#else
  return "data";
#endif
}

AxiomSystem builtin_system(TermArena& arena, const std::string& tag, const Alphabet& alphabet) {
  std::string t;
  for (char c : tag) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "b" || t == "b-via-el" || t == "bisim") {
    AxiomSystem sys = load_axiom_system(arena, data_dir() + "/e1.ax", alphabet);
    sys.name = "E_B(EL)";
    sys.el_instances = true;
    return sys;
  }
  static const std::map<std::string, std::string> files = {
      {"e0", "e0.ax"}, {"e1", "e1.ax"}, {"rs", "e_rs.ax"}, {"cs", "e_cs.ax"},
      {"s", "e_s.ax"}, {"rt", "e_rt.ax"}, {"ft", "e_ft.ax"}, {"r", "e_r.ax"},
      {"f", "e_f.ax"}, {"ct", "e_ct.ax"}, {"t", "e_t.ax"}, {"pe", "pe.ax"}};
  auto it = files.find(t);
  if (it == files.end()) throw Error("unknown axiom system '" + tag + "'");
  AxiomSystem sys = load_axiom_system(arena, data_dir() + "/" + it->second, alphabet);
  sys.name = "E_" + t;
  return sys;
}

}  // namespace ccs
