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

#include "ccs/semantics.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <tuple>

namespace ccs {

// ── Semantics enumeration ───────────────────────────────────────────────────

const char* semantics_name(Semantics s) {
  switch (s) {
    case Semantics::B: return "B";
    case Semantics::S2: return "2S";
    case Semantics::RS: return "RS";
    case Semantics::CS: return "CS";
    case Semantics::S: return "S";
    case Semantics::PF: return "PF";
    case Semantics::RT: return "RT";
    case Semantics::FT: return "FT";
    case Semantics::R: return "R";
    case Semantics::F: return "F";
    case Semantics::CT: return "CT";
    case Semantics::T: return "T";
    case Semantics::WB: return "WB";
    case Semantics::RWB: return "RWB";
  }
  return "?";
}

std::optional<Semantics> semantics_from(const std::string& tag) {
  std::string t;
  for (char c : tag) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "b" || t == "bisim" || t == "bisimilarity") return Semantics::B;
  if (t == "2s" || t == "nested2" || t == "2-nested-simulation") return Semantics::S2;
  if (t == "rs" || t == "ready-simulation") return Semantics::RS;
  if (t == "cs" || t == "completed-simulation") return Semantics::CS;
  if (t == "s" || t == "sim" || t == "simulation") return Semantics::S;
  if (t == "pf" || t == "possible-futures") return Semantics::PF;
  if (t == "rt" || t == "ready-traces") return Semantics::RT;
  if (t == "ft" || t == "failure-traces") return Semantics::FT;
  if (t == "r" || t == "readies") return Semantics::R;
  if (t == "f" || t == "failures") return Semantics::F;
  if (t == "ct" || t == "completed-traces") return Semantics::CT;
  if (t == "t" || t == "traces") return Semantics::T;
  if (t == "wb" || t == "weak-bisim") return Semantics::WB;
  if (t == "rwb" || t == "rooted-weak-bisim") return Semantics::RWB;
  return std::nullopt;
}

const std::vector<Semantics>& all_semantics() {
  static const std::vector<Semantics> v = {
      Semantics::B,  Semantics::S2, Semantics::RS, Semantics::CS, Semantics::S,
      Semantics::PF, Semantics::RT, Semantics::FT, Semantics::R,  Semantics::F,
      Semantics::CT, Semantics::T,  Semantics::WB, Semantics::RWB};
  return v;
}

const std::vector<std::pair<Semantics, Semantics>>& spectrum_arrows() {
  using S = Semantics;
  static const std::vector<std::pair<S, S>> v = {
      {S::B, S::S2},  {S::S2, S::RS}, {S::S2, S::PF}, {S::RS, S::RT}, {S::RS, S::CS},
      {S::RT, S::FT}, {S::RT, S::R},  {S::PF, S::R},  {S::FT, S::F},  {S::R, S::F},
      {S::F, S::CT},  {S::CS, S::S},  {S::CS, S::CT}, {S::CT, S::T},  {S::S, S::T},
      {S::B, S::RWB}, {S::RWB, S::WB}};
  return v;
}

bool spectrum_implies(Semantics fine, Semantics coarse) {
  if (fine == coarse) return true;
  for (auto& [a, b] : spectrum_arrows()) {
    if (a == fine && spectrum_implies(b, coarse)) return true;
  }
  return false;
}

// ── Partition refinement ────────────────────────────────────────────────────

std::vector<int> bisim_partition(const Lts& lts) {
  const std::size_t n = lts.states.size();
  std::vector<int> block(n, 0);
  int count = n == 0 ? 0 : 1;
  while (true) {
    std::map<std::pair<int, std::vector<std::pair<std::uint64_t, int>>>, int> assign;
    std::vector<int> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::pair<std::uint64_t, int>> sig;
      sig.reserve(lts.succ[i].size());
      for (auto& [a, to] : lts.succ[i]) sig.emplace_back(a.order_key(), block[to]);
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      auto key = std::make_pair(block[i], std::move(sig));
      auto it = assign.find(key);
      if (it == assign.end())
        it = assign.emplace(std::move(key), static_cast<int>(assign.size())).first;
      next[i] = it->second;
    }
    int newCount = static_cast<int>(assign.size());
    block.swap(next);
    if (newCount == count) break;
    count = newCount;
  }
  return block;
}

Lts quotient_lts(const Lts& lts, const std::vector<int>& block) {
  int nb = 0;
  for (int b : block) nb = std::max(nb, b + 1);
  Lts q;
  q.states.assign(nb, kNoTerm);
  q.succ.assign(nb, {});
  std::vector<char> seen(nb, 0);
  for (std::size_t i = 0; i < lts.states.size(); ++i) {
    int b = block[i];
    if (seen[b]) continue;
    seen[b] = 1;
    q.states[b] = lts.states[i];
    auto& row = q.succ[b];
    for (auto& [a, to] : lts.succ[i]) row.emplace_back(a, block[to]);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
      if (!(x.first == y.first)) return x.first < y.first;
      return x.second < y.second;
    });
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  for (int r : lts.roots) q.roots.push_back(block[r]);
  return q;
}

bool strong_bisim(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops) {
  StepCache cache(ops);
  Lts lts = build_lts(arena, {p, q}, cache);
  auto block = bisim_partition(lts);
  return block[lts.roots[0]] == block[lts.roots[1]];
}

// ── Simulations ─────────────────────────────────────────────────────────────

namespace {

std::map<std::uint32_t, int> action_bits(const Lts& lts) {
  std::vector<Action> acts;
  for (auto& row : lts.succ)
    for (auto& [a, to] : row) {
      (void)to;
      acts.push_back(a);
    }
  std::sort(acts.begin(), acts.end());
  acts.erase(std::unique(acts.begin(), acts.end(), [](Action x, Action y) { return x == y; }),
             acts.end());
  std::map<std::uint32_t, int> bitOf;
  for (std::size_t i = 0; i < acts.size(); ++i) bitOf[acts[i].code] = static_cast<int>(i);
  return bitOf;
}

std::uint32_t init_mask(const Lts& lts, int i, const std::map<std::uint32_t, int>& bitOf) {
  std::uint32_t m = 0;
  for (auto& [a, to] : lts.succ[i]) {
    (void)to;
    m |= 1u << bitOf.at(a.code);
  }
  return m;
}

// One refinement sweep of the simulation condition over `rel`.
bool refine_sim(const Lts& lts, std::vector<char>& rel) {
  const int n = static_cast<int>(lts.states.size());
  bool changed = false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!rel[i * n + j]) continue;
      bool ok = true;
      for (auto& [a, i2] : lts.succ[i]) {
        bool found = false;
        for (auto& [b, j2] : lts.succ[j]) {
          if (a == b && rel[i2 * n + j2]) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        rel[i * n + j] = 0;
        changed = true;
      }
    }
  }
  return changed;
}

// sim[i*n+j] == 1  iff  i is simulated by j under the variant's constraint.
std::vector<char> sim_matrix(const Lts& lts, SimVariant v) {
  const int n = static_cast<int>(lts.states.size());
  auto bitOf = action_bits(lts);
  std::vector<std::uint32_t> init(n);
  for (int i = 0; i < n; ++i) init[i] = init_mask(lts, i, bitOf);
  std::vector<char> sim(static_cast<std::size_t>(n) * n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (v == SimVariant::Ready && init[i] != init[j]) sim[i * n + j] = 0;
      if (v == SimVariant::Completed && (init[i] == 0) != (init[j] == 0)) sim[i * n + j] = 0;
    }
  while (refine_sim(lts, sim)) {
  }
  return sim;
}

// Greatest simulation contained in the inverse of the plain simulation
// preorder.
std::vector<char> nested2_matrix(const Lts& lts) {
  const int n = static_cast<int>(lts.states.size());
  std::vector<char> plain = sim_matrix(lts, SimVariant::Plain);
  std::vector<char> rel(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rel[i * n + j] = plain[j * n + i];
  while (refine_sim(lts, rel)) {
  }
  return rel;
}

struct Joint {
  Lts q;       // bisimulation quotient of the joint LTS
  int rp, rq;  // root blocks
  bool bisimilar;
};

Joint make_joint(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops) {
  StepCache cache(ops);
  Lts lts = build_lts(arena, {p, q}, cache);
  auto block = bisim_partition(lts);
  Joint j;
  j.bisimilar = block[lts.roots[0]] == block[lts.roots[1]];
  j.q = quotient_lts(lts, block);
  j.rp = j.q.roots[0];
  j.rq = j.q.roots[1];
  return j;
}

}  // namespace

bool simulation_preorder(TermArena& arena, TermId p, TermId q, SimVariant v,
                         const OperatorRegistry& ops) {
  Joint j = make_joint(arena, p, q, ops);
  auto sim = sim_matrix(j.q, v);
  int n = static_cast<int>(j.q.states.size());
  return sim[j.rp * n + j.rq] != 0;
}

bool simulation_equiv(TermArena& arena, TermId p, TermId q, SimVariant v,
                      const OperatorRegistry& ops) {
  Joint j = make_joint(arena, p, q, ops);
  auto sim = sim_matrix(j.q, v);
  int n = static_cast<int>(j.q.states.size());
  return sim[j.rp * n + j.rq] && sim[j.rq * n + j.rp];
}

bool nested_simulation_2(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops) {
  Joint j = make_joint(arena, p, q, ops);
  auto rel = nested2_matrix(j.q);
  int n = static_cast<int>(j.q.states.size());
  return rel[j.rp * n + j.rq] && rel[j.rq * n + j.rp];
}

// ── Denotations ─────────────────────────────────────────────────────────────

namespace {

// Shared per-comparison context: traces and decorated-trace sequences are
// hash-consed so denotation sets are vectors of small ids.
struct Den {
  const Lts& lts;
  std::map<std::uint32_t, int> bitOf;
  std::vector<Action> bitAct;
  std::vector<std::uint32_t> init;

  // Traces: id 0 is the empty trace; cons cells (bit, tail).
  std::map<std::pair<int, int>, int> traceCons;
  std::vector<std::pair<int, int>> traceNodes;

  struct SeqNode {
    std::uint32_t mask;
    int bit;  // -1 terminates a sequence
    int tail;
  };
  std::map<std::tuple<std::uint32_t, int, int>, int> seqIntern;
  std::vector<SeqNode> seqNodes;

  std::map<std::vector<int>, int> tsIntern;
  std::vector<std::vector<int>> tsSets;

  std::vector<std::vector<int>> memoTraces, memoCompleted, memoSeqRT;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> memoPairs;
  std::vector<std::vector<std::pair<int, int>>> memoPF;
  std::vector<std::uint8_t> done;

  explicit Den(const Lts& l) : lts(l) {
    bitOf = action_bits(l);
    bitAct.resize(bitOf.size(), Action::tau());
    for (auto& [code, bit] : bitOf) bitAct[bit] = Action{code};
    init.resize(l.states.size());
    for (std::size_t i = 0; i < l.states.size(); ++i)
      init[i] = init_mask(l, static_cast<int>(i), bitOf);
    traceNodes.emplace_back(-1, -1);
    memoTraces.assign(l.states.size(), {});
    memoCompleted.assign(l.states.size(), {});
    memoSeqRT.assign(l.states.size(), {});
    memoPairs.assign(l.states.size(), {});
    memoPF.assign(l.states.size(), {});
    done.assign(l.states.size(), 0);
  }

  int cons(int bit, int tail) {
    auto key = std::make_pair(bit, tail);
    auto it = traceCons.find(key);
    if (it != traceCons.end()) return it->second;
    int id = static_cast<int>(traceNodes.size());
    traceNodes.emplace_back(bit, tail);
    traceCons.emplace(key, id);
    return id;
  }

  int seq(std::uint32_t mask, int bit, int tail) {
    auto key = std::make_tuple(mask, bit, tail);
    auto it = seqIntern.find(key);
    if (it != seqIntern.end()) return it->second;
    int id = static_cast<int>(seqNodes.size());
    seqNodes.push_back(SeqNode{mask, bit, tail});
    seqIntern.emplace(key, id);
    return id;
  }

  int ts(const std::vector<int>& set) {
    auto it = tsIntern.find(set);
    if (it != tsIntern.end()) return it->second;
    int id = static_cast<int>(tsSets.size());
    tsSets.push_back(set);
    tsIntern.emplace(set, id);
    return id;
  }

  static void sort_unique(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  const std::vector<int>& traces(int s) {
    if (done[s] & 1) return memoTraces[s];
    std::vector<int> out{0};
    for (auto& [a, to] : lts.succ[s]) {
      int bit = bitOf.at(a.code);
      for (int t : traces(to)) out.push_back(cons(bit, t));
    }
    sort_unique(out);
    memoTraces[s] = std::move(out);
    done[s] |= 1;
    return memoTraces[s];
  }

  const std::vector<int>& completed(int s) {
    if (done[s] & 2) return memoCompleted[s];
    std::vector<int> out;
    if (lts.succ[s].empty()) out.push_back(0);
    for (auto& [a, to] : lts.succ[s]) {
      int bit = bitOf.at(a.code);
      for (int t : completed(to)) out.push_back(cons(bit, t));
    }
    sort_unique(out);
    memoCompleted[s] = std::move(out);
    done[s] |= 2;
    return memoCompleted[s];
  }

  // (trace, init mask of a derivative): exactly the readies; failures are
  // these pairs modulo refusal downward closure (see failure_antichain).
  const std::vector<std::pair<int, std::uint32_t>>& pairs(int s) {
    if (done[s] & 4) return memoPairs[s];
    std::vector<std::pair<int, std::uint32_t>> out{{0, init[s]}};
    for (auto& [a, to] : lts.succ[s]) {
      int bit = bitOf.at(a.code);
      for (auto& [t, m] : pairs(to)) out.emplace_back(cons(bit, t), m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    memoPairs[s] = std::move(out);
    done[s] |= 4;
    return memoPairs[s];
  }

  const std::vector<int>& rt_seqs(int s) {
    if (done[s] & 8) return memoSeqRT[s];
    std::vector<int> out{seq(init[s], -1, -1)};
    for (auto& [a, to] : lts.succ[s]) {
      int bit = bitOf.at(a.code);
      for (int t : rt_seqs(to)) out.push_back(seq(init[s], bit, t));
    }
    sort_unique(out);
    memoSeqRT[s] = std::move(out);
    done[s] |= 8;
    return memoSeqRT[s];
  }

  const std::vector<std::pair<int, int>>& pf(int s) {
    if (done[s] & 16) return memoPF[s];
    std::vector<std::pair<int, int>> out{{0, ts(traces(s))}};
    for (auto& [a, to] : lts.succ[s]) {
      int bit = bitOf.at(a.code);
      for (auto& [t, x] : pf(to)) out.emplace_back(cons(bit, t), x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    memoPF[s] = std::move(out);
    done[s] |= 16;
    return memoPF[s];
  }

  // Per trace keep the minimal init masks: minimal init = maximal refusal,
  // and the refusal sets below a maximal one are implied.
  std::vector<std::pair<int, std::uint32_t>> failure_antichain(int s) {
    auto all = pairs(s);
    std::vector<std::pair<int, std::uint32_t>> out;
    std::size_t i = 0;
    while (i < all.size()) {
      std::size_t j = i;
      while (j < all.size() && all[j].first == all[i].first) ++j;
      for (std::size_t k = i; k < j; ++k) {
        bool minimal = true;
        for (std::size_t l = i; l < j; ++l) {
          if (l == k) continue;
          std::uint32_t mk = all[k].second, ml = all[l].second;
          if ((ml & mk) == ml && ml != mk) {
            minimal = false;
            break;
          }
        }
        if (minimal) out.push_back(all[k]);
      }
      i = j;
    }
    return out;
  }

  // a pointwise below b: same actions, mask(a) ⊆ mask(b) at every position.
  bool seq_below(int a, int b) {
    while (a != b) {
      if (a == -1 || b == -1) return false;
      const SeqNode& na = seqNodes[a];
      const SeqNode& nb = seqNodes[b];
      if (na.bit != nb.bit) return false;
      if ((na.mask & nb.mask) != na.mask) return false;
      a = na.tail;
      b = nb.tail;
    }
    return true;
  }

  // Failure-trace denotation: the ready-trace sequences pruned to the
  // antichain of pointwise-minimal init masks (a sequence with smaller init
  // sets everywhere witnesses strictly more refusal patterns).
  std::vector<int> ft_seqs(int s) {
    std::vector<int> all = rt_seqs(s);
    std::map<std::vector<int>, std::vector<int>> buckets;
    for (int id : all) {
      std::vector<int> skel;
      for (int cur = id; cur != -1; cur = seqNodes[cur].tail) skel.push_back(seqNodes[cur].bit);
      buckets[skel].push_back(id);
    }
    std::vector<int> out;
    for (auto& [skel, ids] : buckets) {
      (void)skel;
      for (int a : ids) {
        bool keep = true;
        for (int b : ids) {
          if (a == b) continue;
          if (seq_below(b, a) && !seq_below(a, b)) {
            keep = false;
            break;
          }
        }
        if (keep) out.push_back(a);
      }
    }
    sort_unique(out);
    return out;
  }

  // Rendering ----------------------------------------------------------------

  std::string render_trace(int id, const Alphabet& al) const {
    std::string out;
    while (id != 0) {
      auto [bit, tail] = traceNodes[id];
      if (!out.empty()) out += ' ';
      out += render_action(bitAct[bit], al);
      id = tail;
    }
    return out;
  }

  std::string render_mask(std::uint32_t m, const Alphabet& al) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t b = 0; b < bitAct.size(); ++b) {
      if (m & (1u << b)) {
        if (!first) out += ',';
        out += render_action(bitAct[b], al);
        first = false;
      }
    }
    return out + "}";
  }

  std::string render_refusal(std::uint32_t initm, const Alphabet& al) const {
    std::string out = "{";
    bool first = true;
    for (Action a : all_actions(al)) {
      auto it = bitOf.find(a.code);
      bool inInit = it != bitOf.end() && (initm & (1u << it->second));
      if (!inInit) {
        if (!first) out += ',';
        out += render_action(a, al);
        first = false;
      }
    }
    return out + "}";
  }

  std::string render_seq(int id, const Alphabet& al, bool refusals) const {
    std::string out;
    while (id != -1) {
      const SeqNode& n = seqNodes[id];
      if (!out.empty()) out += ' ';
      out += refusals ? render_refusal(n.mask, al) : render_mask(n.mask, al);
      if (n.bit >= 0) {
        out += ' ';
        out += render_action(bitAct[n.bit], al);
      }
      id = n.tail;
    }
    return out;
  }
};

}  // namespace

// ── Weak semantics ──────────────────────────────────────────────────────────

WeakClosure weak_saturate(const Lts& lts) {
  const int n = static_cast<int>(lts.states.size());
  WeakClosure w;
  w.eps.assign(n, {});
  std::vector<char> ready(n, 0);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    if (ready[i]) continue;
    stack.push_back(i);
    while (!stack.empty()) {
      int s = stack.back();
      bool pending = false;
      for (auto& [a, to] : lts.succ[s]) {
        if (a.is_tau() && !ready[to]) {
          stack.push_back(to);
          pending = true;
        }
      }
      if (pending) continue;
      stack.pop_back();
      if (ready[s]) continue;
      std::vector<int> cl{s};
      for (auto& [a, to] : lts.succ[s]) {
        if (a.is_tau()) cl.insert(cl.end(), w.eps[to].begin(), w.eps[to].end());
      }
      std::sort(cl.begin(), cl.end());
      cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
      w.eps[s] = std::move(cl);
      ready[s] = 1;
    }
  }
  w.wsucc.assign(n, {});
  for (int i = 0; i < n; ++i) {
    std::vector<std::pair<Action, int>> row;
    for (int k : w.eps[i]) {
      for (auto& [a, m] : lts.succ[k]) {
        for (int j : w.eps[m]) row.emplace_back(a, j);
      }
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
      if (!(x.first == y.first)) return x.first < y.first;
      return x.second < y.second;
    });
    row.erase(std::unique(row.begin(), row.end()), row.end());
    w.wsucc[i] = std::move(row);
  }
  return w;
}

namespace {

// Weak bisimilarity = strong bisimilarity over the saturated transitions
// with =tau=> taken as the full eps closure (zero or more steps).
std::vector<int> weak_blocks(const Lts& lts, const WeakClosure& w) {
  Lts sat;
  sat.states = lts.states;
  sat.roots = lts.roots;
  sat.succ.assign(lts.states.size(), {});
  for (std::size_t i = 0; i < lts.states.size(); ++i) {
    auto row = w.wsucc[i];
    for (int j : w.eps[i]) row.emplace_back(Action::tau(), j);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) {
      if (!(x.first == y.first)) return x.first < y.first;
      return x.second < y.second;
    });
    row.erase(std::unique(row.begin(), row.end()), row.end());
    sat.succ[i] = std::move(row);
  }
  return bisim_partition(sat);
}

// The root condition of rooted weak bisimilarity: initial moves must be
// matched by =mû=> (at least one tau when mu = tau), into weakly bisimilar
// states.  Checked at the two roots only.
bool rwb_roots(const Lts& lts, const WeakClosure& w, const std::vector<int>& wb, int rp,
               int rq) {
  auto check = [&](int a, int b) {
    for (auto& [act, a2] : lts.succ[a]) {
      bool matched = false;
      for (auto& [bact, b2] : w.wsucc[b]) {
        if (bact == act && wb[a2] == wb[b2]) {
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
    return true;
  };
  return check(rp, rq) && check(rq, rp);
}

}  // namespace

bool weak_bisim(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops) {
  return equiv(arena, p, q, Semantics::WB, ops);
}

bool rooted_weak_bisim(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops) {
  return equiv(arena, p, q, Semantics::RWB, ops);
}

// ── Decorated traces (rendered) ─────────────────────────────────────────────

std::vector<std::string> decorated_traces(TermArena& arena, TermId p, TraceKind kind,
                                          const OperatorRegistry& ops,
                                          const Alphabet& alphabet) {
  StepCache cache(ops);
  Lts lts = build_lts(arena, {p}, cache);
  auto block = bisim_partition(lts);
  Lts q = quotient_lts(lts, block);
  Den den(q);
  int r = q.roots[0];
  std::vector<std::string> out;
  switch (kind) {
    case TraceKind::T:
      for (int t : den.traces(r)) out.push_back(den.render_trace(t, alphabet));
      break;
    case TraceKind::CT:
      for (int t : den.completed(r)) out.push_back(den.render_trace(t, alphabet));
      break;
    case TraceKind::F:
      for (auto& [t, m] : den.failure_antichain(r))
        out.push_back(den.render_trace(t, alphabet) + " !" + den.render_refusal(m, alphabet));
      break;
    case TraceKind::R:
      for (auto& [t, m] : den.pairs(r))
        out.push_back(den.render_trace(t, alphabet) + " ?" + den.render_mask(m, alphabet));
      break;
    case TraceKind::FT:
      for (int s : den.ft_seqs(r)) out.push_back(den.render_seq(s, alphabet, true));
      break;
    case TraceKind::RT:
      for (int s : den.rt_seqs(r)) out.push_back(den.render_seq(s, alphabet, false));
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::string, std::vector<std::string>>> possible_futures_set(
    TermArena& arena, TermId p, const OperatorRegistry& ops, const Alphabet& alphabet) {
  StepCache cache(ops);
  Lts lts = build_lts(arena, {p}, cache);
  auto block = bisim_partition(lts);
  Lts q = quotient_lts(lts, block);
  Den den(q);
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  for (auto& [t, x] : den.pf(q.roots[0])) {
    std::vector<std::string> futures;
    for (int f : den.tsSets[x]) futures.push_back(den.render_trace(f, alphabet));
    std::sort(futures.begin(), futures.end());
    out.emplace_back(den.render_trace(t, alphabet), std::move(futures));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool pf_equiv(TermArena& arena, TermId p, TermId q, const OperatorRegistry& ops) {
  return equiv(arena, p, q, Semantics::PF, ops);
}

// ── Dispatcher ──────────────────────────────────────────────────────────────

namespace {

// HML-style distinguishing formula over the quotient: distinct quotient
// states are non-bisimilar, and the partition is stable, so some action
// leads from one state to a block the other cannot reach.
std::string hml_distinguish(const Lts& q, const Alphabet& al, int i, int j);

std::string hml_diamond(const Lts& q, const Alphabet& al, int i2, Action a, int j) {
  std::string conj;
  int count = 0;
  for (auto& [b, j2] : q.succ[j]) {
    if (!(b == a)) continue;
    if (count++) conj += " & ";
    conj += hml_distinguish(q, al, i2, j2);
  }
  if (count == 0) return "<" + render_action(a, al) + ">tt";
  return "<" + render_action(a, al) + ">(" + conj + ")";
}

std::string hml_distinguish(const Lts& q, const Alphabet& al, int i, int j) {
  for (auto& [a, i2] : q.succ[i]) {
    bool matched = false;
    for (auto& [b, j2] : q.succ[j])
      if (a == b && i2 == j2) matched = true;
    if (!matched) return hml_diamond(q, al, i2, a, j);
  }
  for (auto& [a, j2] : q.succ[j]) {
    bool matched = false;
    for (auto& [b, i2] : q.succ[i])
      if (a == b && j2 == i2) matched = true;
    if (!matched) return "!" + hml_diamond(q, al, j2, a, i);
  }
  return "tt";  // unreachable on a stable partition with i != j
}

template <typename T>
std::optional<std::pair<T, bool>> first_diff(const std::vector<T>& a, const std::vector<T>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && (j == b.size() || a[i] < b[j])) return std::make_pair(a[i], true);
    if (j < b.size() && (i == a.size() || b[j] < a[i])) return std::make_pair(b[j], false);
    ++i;
    ++j;
  }
  return std::nullopt;
}

}  // namespace

Verdict equiv_verdict(TermArena& arena, TermId p, TermId q, Semantics s,
                      const OperatorRegistry& ops, const Alphabet& alphabet) {
  Joint j = make_joint(arena, p, q, ops);
  const Lts& ql = j.q;
  int n = static_cast<int>(ql.states.size());
  Verdict v;
  switch (s) {
    case Semantics::B: {
      v.equal = j.bisimilar;
      if (!v.equal) {
        v.witness_kind = "formula";
        v.witness = hml_distinguish(ql, alphabet, j.rp, j.rq);
        v.witness_side = "left";
      }
      return v;
    }
    case Semantics::S:
    case Semantics::CS:
    case Semantics::RS: {
      SimVariant var = s == Semantics::S    ? SimVariant::Plain
                       : s == Semantics::CS ? SimVariant::Completed
                                            : SimVariant::Ready;
      auto sim = sim_matrix(ql, var);
      v.equal = sim[j.rp * n + j.rq] && sim[j.rq * n + j.rp];
      return v;
    }
    case Semantics::S2: {
      auto rel = nested2_matrix(ql);
      v.equal = rel[j.rp * n + j.rq] && rel[j.rq * n + j.rp];
      return v;
    }
    case Semantics::WB: {
      if (j.bisimilar) {
        v.equal = true;
        return v;
      }
      WeakClosure w = weak_saturate(ql);
      auto wb = weak_blocks(ql, w);
      v.equal = wb[j.rp] == wb[j.rq];
      return v;
    }
    case Semantics::RWB: {
      if (j.bisimilar) {
        v.equal = true;
        return v;
      }
      WeakClosure w = weak_saturate(ql);
      auto wb = weak_blocks(ql, w);
      v.equal = rwb_roots(ql, w, wb, j.rp, j.rq);
      return v;
    }
    default:
      break;
  }
  Den den(ql);
  switch (s) {
    case Semantics::T: {
      auto d = first_diff(den.traces(j.rp), den.traces(j.rq));
      v.equal = !d;
      if (d) {
        v.witness_kind = "trace";
        v.witness = den.render_trace(d->first, alphabet);
        v.witness_side = d->second ? "left" : "right";
      }
      return v;
    }
    case Semantics::CT: {
      auto d = first_diff(den.completed(j.rp), den.completed(j.rq));
      v.equal = !d;
      if (d) {
        v.witness_kind = "completed-trace";
        v.witness = den.render_trace(d->first, alphabet);
        v.witness_side = d->second ? "left" : "right";
      }
      return v;
    }
    case Semantics::R: {
      auto d = first_diff(den.pairs(j.rp), den.pairs(j.rq));
      v.equal = !d;
      if (d) {
        v.witness_kind = "ready";
        v.witness = den.render_trace(d->first.first, alphabet) + " ?" +
                    den.render_mask(d->first.second, alphabet);
        v.witness_side = d->second ? "left" : "right";
      }
      return v;
    }
    case Semantics::F: {
      auto d = first_diff(den.failure_antichain(j.rp), den.failure_antichain(j.rq));
      v.equal = !d;
      if (d) {
        v.witness_kind = "failure";
        v.witness = den.render_trace(d->first.first, alphabet) + " !" +
                    den.render_refusal(d->first.second, alphabet);
        v.witness_side = d->second ? "left" : "right";
      }
      return v;
    }
    case Semantics::RT: {
      auto d = first_diff(den.rt_seqs(j.rp), den.rt_seqs(j.rq));
      v.equal = !d;
      if (d) {
        v.witness_kind = "ready-trace";
        v.witness = den.render_seq(d->first, alphabet, false);
        v.witness_side = d->second ? "left" : "right";
      }
      return v;
    }
    case Semantics::FT: {
      auto pl = den.ft_seqs(j.rp);
      auto qr = den.ft_seqs(j.rq);
      auto d = first_diff(pl, qr);
      v.equal = !d;
      if (d) {
        v.witness_kind = "failure-trace";
        v.witness = den.render_seq(d->first, alphabet, true);
        v.witness_side = d->second ? "left" : "right";
      }
      return v;
    }
    case Semantics::PF: {
      auto d = first_diff(den.pf(j.rp), den.pf(j.rq));
      v.equal = !d;
      if (d) {
        v.witness_kind = "possible-future";
        std::string futures;
        for (int f : den.tsSets[d->first.second]) {
          if (!futures.empty()) futures += ", ";
          futures += "\"" + den.render_trace(f, alphabet) + "\"";
        }
        v.witness = "(" + den.render_trace(d->first.first, alphabet) + ", {" + futures + "})";
        v.witness_side = d->second ? "left" : "right";
      }
      return v;
    }
    default:
      throw Error("unhandled semantics");
  }
}

bool equiv(TermArena& arena, TermId p, TermId q, Semantics s, const OperatorRegistry& ops) {
  // The alphabet is only used to render witnesses, never for verdicts.
  static const Alphabet dummy = Alphabet::of({"a"});
  return equiv_verdict(arena, p, q, s, ops, dummy).equal;
}

std::map<Semantics, bool> spectrum_matrix(TermArena& arena, TermId p, TermId q,
                                          const OperatorRegistry& ops) {
  std::map<Semantics, bool> out;
  for (Semantics s : all_semantics()) out[s] = equiv(arena, p, q, s, ops);
  return out;
}

}  // namespace ccs
