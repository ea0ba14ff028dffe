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

#include "ccs/action.hpp"

namespace ccs {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("alphabet must be nonempty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw Error("duplicate alphabet name: " + names_[i]);
    }
    if (names_[i] == "tau") throw Error("'tau' is reserved and cannot be an alphabet name");
  }
}

Alphabet Alphabet::of(std::initializer_list<const char*> names) {
  std::vector<std::string> v;
  for (const char* n : names) v.emplace_back(n);
  return Alphabet(std::move(v));
}

int Alphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Action complement(Action a) {
  if (a.is_tau()) throw ComplementOfTau();
  return Action{a.code ^ 1u};
}

std::string render_action(Action a, const Alphabet& alphabet) {
  if (a.is_tau()) return "tau";
  const std::string& base = alphabet.name(a.base());
  return a.is_coname() ? "~" + base : base;
}

std::vector<Action> all_actions(const Alphabet& alphabet) {
  std::vector<Action> out;
  out.push_back(Action::tau());
  for (std::uint32_t i = 0; i < alphabet.size(); ++i) {
    out.push_back(Action::name(i));
    out.push_back(Action::coname(i));
  }
  return out;
}

std::vector<Action> visible_actions(const Alphabet& alphabet) {
  std::vector<Action> out;
  for (std::uint32_t i = 0; i < alphabet.size(); ++i) {
    out.push_back(Action::name(i));
    out.push_back(Action::coname(i));
  }
  return out;
}

}  // namespace ccs
