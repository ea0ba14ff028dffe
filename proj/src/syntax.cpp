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

#include "ccs/syntax.hpp"

#include <cctype>

namespace ccs {

namespace {

struct Parser {
  TermArena& arena;
  const std::string& text;
  const Alphabet& alphabet;
  std::size_t pos = 0;
  int line = 1, col = 1;

  Parser(TermArena& a, const std::string& s, const Alphabet& al)
      : arena(a), text(s), alphabet(al) {}

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' ||
                                 text[pos] == '\n'))
      advance();
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      advance();
      return true;
    }
    return false;
  }

  bool eat2(char a, char b) {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == a && text[pos + 1] == b) {
      advance();
      advance();
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos]))))
      fail("expected identifier");
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      advance();
    return text.substr(start, pos - start);
  }

  Action action_from(const std::string& name, bool co) {
    if (name == "tau") {
      if (co) fail("tau has no complement");
      return Action::tau();
    }
    int idx = alphabet.index_of(name);
    if (idx < 0) throw UnknownAction(name, line, col);
    return co ? Action::coname(static_cast<std::uint32_t>(idx))
              : Action::name(static_cast<std::uint32_t>(idx));
  }

  TermId parse_sum() {
    TermId t = parse_par();
    while (eat('+')) t = arena.sum(t, parse_par());
    return t;
  }

  TermId parse_par() {
    TermId t = parse_prefix();
    while (true) {
      skip_ws();
      if (pos + 1 < text.size() && text[pos] == '|' && text[pos + 1] == '|') {
        advance();
        advance();
        t = arena.par(t, parse_prefix());
      } else {
        break;
      }
    }
    return t;
  }

  TermId parse_prefix() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '~') {
      advance();
      std::string name = ident();
      Action a = action_from(name, true);
      return finish_prefix(a);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string name = ident();
      skip_ws();
      if (pos < text.size() && text[pos] == '(') {
        // function-style operator application
        advance();
        TermId l = parse_sum();
        if (!eat(',')) fail("expected ',' in operator application");
        TermId r = parse_sum();
        if (!eat(')')) fail("expected ')'");
        if (name == "lmerge") return arena.lmerge(l, r);
        if (name == "cmerge") return arena.cmerge(l, r);
        if (name == "tau") fail("'tau' is not an operator");
        return arena.opapp(name, l, r);
      }
      Action a = action_from(name, false);
      return finish_prefix(a);
    }
    return parse_atom();
  }

  TermId finish_prefix(Action a) {
    skip_ws();
    if (pos < text.size() && text[pos] == '.') {
      advance();
      return arena.prefix(a, parse_prefix());
    }
    // trailing 0 omitted: "a" is a.0
    return arena.prefix(a, arena.nil());
  }

  TermId parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '0') {
      advance();
      return arena.nil();
    }
    if (c == '(') {
      advance();
      TermId t = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      return arena.var(ident());
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

enum Level { kSum = 0, kPar = 1, kPrefix = 2 };

void render(const TermArena& a, TermId t, const Alphabet& al, Level ctx, std::string& out) {
  switch (a.tag(t)) {
    case Tag::Nil:
      out += '0';
      return;
    case Tag::Var:
      out += a.var_name_of(t);
      return;
    case Tag::Prefix: {
      out += render_action(a.action_of(t), al);
      out += '.';
      render(a, a.kid0(t), al, kPrefix, out);
      return;
    }
    case Tag::Sum: {
      bool paren = ctx > kSum;
      if (paren) out += '(';
      render(a, a.kid0(t), al, kSum, out);
      out += " + ";
      // "+" is left-associative: a right child that is itself a sum needs
      // parentheses to round-trip structurally.
      render(a, a.kid1(t), al, a.tag(a.kid1(t)) == Tag::Sum ? kPar : kSum, out);
      if (paren) out += ')';
      return;
    }
    case Tag::Par: {
      bool paren = ctx > kPar;
      if (paren) out += '(';
      render(a, a.kid0(t), al, kPar, out);
      out += " || ";
      render(a, a.kid1(t), al, a.tag(a.kid1(t)) == Tag::Par ? kPrefix : kPar, out);
      if (paren) out += ')';
      return;
    }
    case Tag::LeftMerge:
    case Tag::CommMerge:
    case Tag::OpApp: {
      if (a.tag(t) == Tag::LeftMerge)
        out += "lmerge";
      else if (a.tag(t) == Tag::CommMerge)
        out += "cmerge";
      else
        out += a.op_name_of(t);
      out += '(';
      render(a, a.kid0(t), al, kSum, out);
      out += ", ";
      render(a, a.kid1(t), al, kSum, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

TermId parse_term(TermArena& arena, const std::string& text, const Alphabet& alphabet) {
  Parser p(arena, text, alphabet);
  TermId t = p.parse_sum();
  if (!p.eof()) p.fail("trailing input");
  return t;
}

std::string render_term(const TermArena& arena, TermId t, const Alphabet& alphabet) {
  std::string out;
  render(arena, t, alphabet, kSum, out);
  return out;
}

}  // namespace ccs
