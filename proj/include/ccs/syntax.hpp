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
// Text format for terms:
//
//   term   := sum
//   sum    := par ("+" par)*
//   par    := prefix ("||" prefix)*
//   prefix := action "." prefix | atom
//   atom   := "0" | VAR | func | "(" term ")"
//   func   := ("lmerge" | "cmerge" | OPNAME) "(" term "," term ")"
//   action := "tau" | "~"? NAME
//
// Precedence "." > "||" > "+"; "." is right-associative, "||" and "+" are
// left-associative.  Variables are uppercase identifiers, actions and
// operator names lowercase; co-names carry a leading "~"; tau is written
// "tau".  A trailing ".0" may be omitted on input ("a" parses as "a.0");
// rendering always writes it.

#ifndef CCS_SYNTAX_HPP
#define CCS_SYNTAX_HPP

#include <string>

#include "ccs/term.hpp"

namespace ccs {

struct ParseError : Error {
  int line, column;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        column(col_) {}
};

struct UnknownAction : ParseError {
  UnknownAction(const std::string& id, int line_, int col_)
      : ParseError("unknown action '" + id + "' (not in alphabet)", line_, col_) {}
};

TermId parse_term(TermArena& arena, const std::string& text, const Alphabet& alphabet);

std::string render_term(const TermArena& arena, TermId t, const Alphabet& alphabet);

}  // namespace ccs

#endif  // CCS_SYNTAX_HPP
