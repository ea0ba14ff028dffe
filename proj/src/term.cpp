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

#include "ccs/term.hpp"

#include <algorithm>

namespace ccs {

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9E3779B97F4A7C15ull + (h << 12) + (h >> 4);
  return h;
}

}  // namespace

TermArena::TermArena() {
  // Slot 0 is Nil.
  TermNode n{};
  n.tag = Tag::Nil;
  n.closed = true;
  n.act = Action::tau();
  n.sym = 0;
  n.kid0 = n.kid1 = kNoTerm;
  n.size = 0;
  n.prefixes = 0;
  n.hash = 0x6e696cull;
  n.canon = 0;
  nodes_.push_back(n);
}

std::uint32_t TermArena::var_sym(const std::string& name) {
  auto it = varIds_.find(name);
  if (it != varIds_.end()) return it->second;
  std::uint32_t id = static_cast<std::uint32_t>(varNames_.size());
  varNames_.push_back(name);
  varIds_.emplace(name, id);
  return id;
}

std::uint32_t TermArena::op_sym(const std::string& name) {
  auto it = opIds_.find(name);
  if (it != opIds_.end()) return it->second;
  std::uint32_t id = static_cast<std::uint32_t>(opNames_.size());
  opNames_.push_back(name);
  opIds_.emplace(name, id);
  return id;
}

TermId TermArena::var(const std::string& name) {
  return mk(Tag::Var, Action::tau(), var_sym(name), kNoTerm, kNoTerm);
}

TermId TermArena::prefix(Action a, TermId body) {
  return mk(Tag::Prefix, a, 0, body, kNoTerm);
}

TermId TermArena::sum(TermId l, TermId r) { return mk(Tag::Sum, Action::tau(), 0, l, r); }
TermId TermArena::par(TermId l, TermId r) { return mk(Tag::Par, Action::tau(), 0, l, r); }
TermId TermArena::lmerge(TermId l, TermId r) { return mk(Tag::LeftMerge, Action::tau(), 0, l, r); }
TermId TermArena::cmerge(TermId l, TermId r) { return mk(Tag::CommMerge, Action::tau(), 0, l, r); }

TermId TermArena::opapp(const std::string& op, TermId l, TermId r) {
  return mk(Tag::OpApp, Action::tau(), op_sym(op), l, r);
}
TermId TermArena::opapp(std::uint32_t opSym, TermId l, TermId r) {
  return mk(Tag::OpApp, Action::tau(), opSym, l, r);
}

TermId TermArena::sum_of(const std::vector<TermId>& summands) {
  if (summands.empty()) return nil();
  TermId acc = summands[0];
  for (std::size_t i = 1; i < summands.size(); ++i) acc = sum(acc, summands[i]);
  return acc;
}

void TermArena::flatten(TermId t, std::vector<TermId>& out) const {
  std::vector<TermId> stack{t};
  while (!stack.empty()) {
    TermId x = stack.back();
    stack.pop_back();
    if (tag(x) == Tag::Sum) {
      stack.push_back(kid1(x));
      stack.push_back(kid0(x));
    } else {
      out.push_back(x);
    }
  }
}

std::vector<TermId> TermArena::summands(TermId t) const {
  std::vector<TermId> out;
  if (tag(t) == Tag::Nil) return out;  // the empty sum represents 0
  flatten(t, out);
  return out;
}

int TermArena::compare(TermId a, TermId b) const {
  if (a == b) return 0;
  const TermNode& na = nodes_[a];
  const TermNode& nb = nodes_[b];
  if (na.tag != nb.tag) return na.tag < nb.tag ? -1 : 1;
  switch (na.tag) {
    case Tag::Nil:
      return 0;
    case Tag::Var:
      return varNames_[na.sym].compare(varNames_[nb.sym]);
    case Tag::Prefix: {
      if (na.act != nb.act) return na.act < nb.act ? -1 : 1;
      return compare(na.kid0, nb.kid0);
    }
    case Tag::Sum: {
      std::vector<TermId> sa, sb;
      flatten(a, sa);
      flatten(b, sb);
      for (std::size_t i = 0; i < sa.size() && i < sb.size(); ++i) {
        int c = compare(sa[i], sb[i]);
        if (c != 0) return c;
      }
      if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
      return 0;
    }
    case Tag::OpApp: {
      int c = opNames_[na.sym].compare(opNames_[nb.sym]);
      if (c != 0) return c;
      c = compare(na.kid0, nb.kid0);
      if (c != 0) return c;
      return compare(na.kid1, nb.kid1);
    }
    default: {
      int c = compare(na.kid0, nb.kid0);
      if (c != 0) return c;
      return compare(na.kid1, nb.kid1);
    }
  }
}

TermArena::Key TermArena::make_key(Tag tag, Action act, std::uint32_t sym, TermId k0,
                                   TermId k1) {
  return Key{(static_cast<std::uint64_t>(tag) << 56) ^
                 (static_cast<std::uint64_t>(act.code) << 20) ^
                 (k0 == kNoTerm ? 0xFFFFFFFFull : static_cast<std::uint64_t>(k0)),
             (static_cast<std::uint64_t>(k1 == kNoTerm ? 0xFFFFFFFFu : k1) << 32) ^ sym};
}

TermId TermArena::mk_canonical_sum(const std::vector<TermId>& sorted, std::size_t from) {
  // Trusted builder: `sorted` holds canonical non-Sum elements in order.
  // Builds the left-nested comb and marks every spine node canonical.
  TermId acc = sorted[from];
  for (std::size_t i = from + 1; i < sorted.size(); ++i) {
    TermId r = sorted[i];
    Key key = make_key(Tag::Sum, Action::tau(), 0, acc, r);
    auto it = intern_.find(key);
    if (it != intern_.end()) {
      acc = it->second;
      continue;
    }
    const TermNode& nl = nodes_[acc];
    const TermNode& nr = nodes_[r];
    TermNode n{};
    n.tag = Tag::Sum;
    n.closed = nl.closed && nr.closed;
    n.act = Action::tau();
    n.sym = 0;
    n.kid0 = acc;
    n.kid1 = r;
    n.size = nl.size + nr.size + 1;
    n.prefixes = nl.prefixes + nr.prefixes;
    n.hash = mix(mix(static_cast<std::uint64_t>(Tag::Sum) + 11, nl.hash), nr.hash);
    TermId id = static_cast<TermId>(nodes_.size());
    n.canon = id;
    nodes_.push_back(n);
    intern_.emplace(key, id);
    acc = id;
  }
  return acc;
}

TermId TermArena::mk(Tag tag, Action act, std::uint32_t sym, TermId k0, TermId k1) {
  Key key = make_key(tag, act, sym, k0, k1);
  auto it = intern_.find(key);
  if (it != intern_.end()) return it->second;

  TermNode n{};
  n.tag = tag;
  n.act = act;
  n.sym = sym;
  n.kid0 = k0;
  n.kid1 = k1;
  switch (tag) {
    case Tag::Nil:
      break;
    case Tag::Var:
      n.closed = false;
      n.size = 0;
      n.prefixes = 0;
      n.hash = mix(0x76617221ull, sym);
      break;
    case Tag::Prefix: {
      const TermNode& b = nodes_[k0];
      n.closed = b.closed;
      n.size = b.size + 1;
      n.prefixes = b.prefixes + 1;
      n.hash = mix(mix(static_cast<std::uint64_t>(tag) + 11, act.code), b.hash);
      break;
    }
    default: {
      const TermNode& l = nodes_[k0];
      const TermNode& r = nodes_[k1];
      n.closed = l.closed && r.closed;
      n.size = l.size + r.size + 1;
      n.prefixes = l.prefixes + r.prefixes;
      std::uint64_t h = mix(static_cast<std::uint64_t>(tag) + 11, l.hash);
      if (tag == Tag::OpApp) h = mix(h, sym);
      n.hash = mix(h, r.hash);
      break;
    }
  }

  TermId id = static_cast<TermId>(nodes_.size());
  n.canon = kNoTerm;
  nodes_.push_back(n);
  intern_.emplace(key, id);

  TermId canon;
  switch (tag) {
    case Tag::Nil:
    case Tag::Var:
      canon = id;
      break;
    case Tag::Prefix: {
      TermId cb = nodes_[k0].canon;
      canon = (cb == k0) ? id : prefix(act, cb);
      break;
    }
    case Tag::Sum: {
      std::vector<TermId> elems;
      flatten(id, elems);
      bool same = nodes_[k1].tag != Tag::Sum && nodes_[k0].canon == k0 &&
                  nodes_[k1].canon == k1;
      for (TermId& e : elems) {
        TermId c = nodes_[e].canon;
        if (c != e) same = false;
        e = c;
      }
      if (same) {
        for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
          if (compare(elems[i], elems[i + 1]) > 0) {
            same = false;
            break;
          }
        }
      }
      if (same) {
        canon = id;
      } else {
        std::stable_sort(elems.begin(), elems.end(),
                         [this](TermId x, TermId y) { return compare(x, y) < 0; });
        canon = mk_canonical_sum(elems, 0);
      }
      break;
    }
    default: {
      TermId cl = nodes_[k0].canon;
      TermId cr = nodes_[k1].canon;
      canon = (cl == k0 && cr == k1) ? id : mk(tag, act, sym, cl, cr);
      break;
    }
  }
  nodes_[id].canon = canon;
  return id;
}

TermId TermArena::substitute(const Substitution& sigma, TermId t) {
  if (sigma.empty() || nodes_[t].closed) return t;
  switch (tag(t)) {
    case Tag::Nil:
      return t;
    case Tag::Var: {
      auto it = sigma.find(nodes_[t].sym);
      return it == sigma.end() ? t : it->second;
    }
    case Tag::Prefix:
      return prefix(nodes_[t].act, substitute(sigma, kid0(t)));
    default: {
      TermId l = substitute(sigma, kid0(t));
      TermId r = substitute(sigma, kid1(t));
      return mk(tag(t), nodes_[t].act, nodes_[t].sym, l, r);
    }
  }
}

std::set<std::uint32_t> TermArena::free_vars(TermId t) const {
  std::set<std::uint32_t> out;
  std::vector<TermId> stack{t};
  std::set<TermId> seen;
  while (!stack.empty()) {
    TermId x = stack.back();
    stack.pop_back();
    if (nodes_[x].closed || !seen.insert(x).second) continue;
    switch (tag(x)) {
      case Tag::Var:
        out.insert(nodes_[x].sym);
        break;
      case Tag::Prefix:
        stack.push_back(kid0(x));
        break;
      case Tag::Nil:
        break;
      default:
        stack.push_back(kid0(x));
        stack.push_back(kid1(x));
        break;
    }
  }
  return out;
}

TermId TermArena::subterm_at(TermId t, const std::vector<int>& pos) const {
  TermId cur = t;
  for (int step : pos) {
    const TermNode& n = nodes_[cur];
    switch (n.tag) {
      case Tag::Prefix:
        if (step != 0) throw Error("invalid position: prefix has one child");
        cur = n.kid0;
        break;
      case Tag::Nil:
      case Tag::Var:
        throw Error("invalid position: leaf has no children");
      default:
        if (step != 0 && step != 1) throw Error("invalid position index");
        cur = step == 0 ? n.kid0 : n.kid1;
        break;
    }
  }
  return cur;
}

TermId TermArena::replace_at(TermId t, const std::vector<int>& pos, TermId repl) {
  if (pos.empty()) return repl;
  std::vector<int> rest(pos.begin() + 1, pos.end());
  const TermNode& n = nodes_[t];
  switch (n.tag) {
    case Tag::Prefix:
      return prefix(n.act, replace_at(n.kid0, rest, repl));
    case Tag::Nil:
    case Tag::Var:
      throw Error("invalid position: leaf has no children");
    default: {
      TermId l = n.kid0, r = n.kid1;
      if (pos[0] == 0)
        l = replace_at(l, rest, repl);
      else
        r = replace_at(r, rest, repl);
      return mk(n.tag, n.act, n.sym, l, r);
    }
  }
}

}  // namespace ccs
