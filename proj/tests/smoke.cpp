#include <cassert>
#include <iostream>
#include "ccs/syntax.hpp"
#include "ccs/sos.hpp"

int main() {
  using namespace ccs;
  TermArena a;
  Alphabet al = Alphabet::of({"a", "b"});
  TermId t = parse_term(a, "a.0 || ~a.0", al);
  std::cout << render_term(a, t, al) << "\n";
  TermId u = parse_term(a, "b.0 + a.0", al);
  std::cout << render_term(a, a.canonical(u), al) << "\n";
  OperatorRegistry ops;
  auto moves = step(a, t, ops);
  for (auto& [act, tgt] : moves)
    std::cout << render_action(act, al) << " -> " << render_term(a, tgt, al) << "\n";
  Lts l = build_lts(a, parse_term(a, "a.0 || b.0", al), ops);
  std::cout << "states=" << l.states.size() << " trans=" << l.transition_count() << "\n";
  assert(l.states.size() == 4 && l.transition_count() == 4);
  Lts l2 = build_lts(a, parse_term(a, "a.0 + a.0", al), ops);
  std::cout << "states=" << l2.states.size() << " trans=" << l2.transition_count() << "\n";
  assert(l2.states.size() == 2 && l2.transition_count() == 1);
  return 0;
}
