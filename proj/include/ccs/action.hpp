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

#ifndef CCS_ACTION_HPP
#define CCS_ACTION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccs {

// ── Errors ──────────────────────────────────────────────────────────────────

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ComplementOfTau : Error {
  ComplementOfTau() : Error("tau has no complement") {}
};

// ── Alphabet ────────────────────────────────────────────────────────────────
// The finite set of action names.  Co-names are derived, never stored.

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  static Alphabet of(std::initializer_list<const char*> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  // Index of a name, or -1 when the identifier is not in the alphabet.
  int index_of(const std::string& name) const;

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

// ── Action ──────────────────────────────────────────────────────────────────
// tau, a name, or a co-name.  Packed into a single word so actions can be
// compared and hashed cheaply.

enum class ActKind : std::uint8_t { Tau = 0, Name = 1, CoName = 2 };

struct Action {
  std::uint32_t code = kTauCode;

  static constexpr std::uint32_t kTauCode = 0xFFFFFFFFu;

  static Action tau() { return Action{kTauCode}; }
  static Action name(std::uint32_t base) { return Action{base << 1}; }
  static Action coname(std::uint32_t base) { return Action{(base << 1) | 1u}; }

  bool is_tau() const { return code == kTauCode; }
  bool is_coname() const { return !is_tau() && (code & 1u); }
  ActKind kind() const {
    return is_tau() ? ActKind::Tau : (code & 1u) ? ActKind::CoName : ActKind::Name;
  }
  std::uint32_t base() const { return code >> 1; }

  bool operator==(const Action& o) const { return code == o.code; }
  bool operator!=(const Action& o) const { return code != o.code; }

  // Total order used everywhere: tau first, then names interleaved with
  // their co-names in alphabet order (a, ~a, b, ~b, ...).
  std::uint64_t order_key() const {
    return is_tau() ? 0 : 1ull + static_cast<std::uint64_t>(code);
  }
  bool operator<(const Action& o) const { return order_key() < o.order_key(); }
};

// name <-> coname with the same base; requesting the complement of tau
// is an error.
Action complement(Action a);

// True when a = complement(b); false whenever either action is tau.
inline bool complementary(Action a, Action b) {
  return !a.is_tau() && !b.is_tau() && a.base() == b.base() &&
         a.is_coname() != b.is_coname();
}

std::string render_action(Action a, const Alphabet& alphabet);

// All of A_tau = {tau} ∪ A ∪ co(A) in the canonical order.
std::vector<Action> all_actions(const Alphabet& alphabet);
// A ∪ co(A) in the canonical order (no tau).
std::vector<Action> visible_actions(const Alphabet& alphabet);

}  // namespace ccs

#endif  // CCS_ACTION_HPP
