/*
 *  Copyright (C) 2026  deolog contributors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#include "deolog/asp/parser.hpp"

#include <cctype>
#include <string_view>

namespace deolog::asp {

namespace {

enum class Tok {
  Ident,     // lowercase-initial word
  Variable,  // uppercase-initial word
  Integer,
  Minus,     // '-' (strong negation or arithmetic)
  Plus,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Period,
  Colon,     // only inside [w:l]
  RuleArrow, // ":-"
  WeakArrow, // ":~"
  Or,        // '|' or unicode disjunction; "v" arrives as Ident
  CmpEq,
  CmpLe,
  CmpLt,
  CmpGe,
  CmpGt,
  Not,       // keyword "not"
  End,
};

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(const std::string& src, std::vector<Diagnostic>& diags)
      : src_(src), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= src_.size()) break;
      int line = line_, col = col_;
      char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        long long v = 0;
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          v = v * 10 + (src_[pos_] - '0');
          advance();
        }
        out.push_back({Tok::Integer, src_.substr(start, pos_ - start), v, line, col});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          advance();
        }
        std::string word = src_.substr(start, pos_ - start);
        if (word == "not") {
          out.push_back({Tok::Not, word, 0, line, col});
        } else if (std::isupper(static_cast<unsigned char>(word[0]))) {
          out.push_back({Tok::Variable, word, 0, line, col});
        } else if (word[0] == '_') {
          error(line, col, "identifiers may not start with '_'");
        } else {
          out.push_back({Tok::Ident, word, 0, line, col});
        }
        continue;
      }
      // Unicode forms found in typeset sources: ":∼", "∨", "¬", "−", "≤", "≥".
      if (try_unicode(out, line, col)) continue;
      switch (c) {
        case '-': advance(); push(out, Tok::Minus, "-", line, col); break;
        case '+': advance(); push(out, Tok::Plus, "+", line, col); break;
        case '(': advance(); push(out, Tok::LParen, "(", line, col); break;
        case ')': advance(); push(out, Tok::RParen, ")", line, col); break;
        case '[': advance(); push(out, Tok::LBracket, "[", line, col); break;
        case ']': advance(); push(out, Tok::RBracket, "]", line, col); break;
        case ',': advance(); push(out, Tok::Comma, ",", line, col); break;
        case '.': advance(); push(out, Tok::Period, ".", line, col); break;
        case '|': advance(); push(out, Tok::Or, "|", line, col); break;
        case ':':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '-') {
            advance();
            push(out, Tok::RuleArrow, ":-", line, col);
          } else if (pos_ < src_.size() && src_[pos_] == '~') {
            advance();
            push(out, Tok::WeakArrow, ":~", line, col);
          } else if (peek_unicode("∼") || peek_unicode("≈")) {
            consume_unicode();
            push(out, Tok::WeakArrow, ":~", line, col);
          } else {
            push(out, Tok::Colon, ":", line, col);
          }
          break;
        case '=':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '=') advance();
          push(out, Tok::CmpEq, "=", line, col);
          break;
        case '<':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '=') {
            advance();
            push(out, Tok::CmpLe, "<=", line, col);
          } else {
            push(out, Tok::CmpLt, "<", line, col);
          }
          break;
        case '>':
          advance();
          if (pos_ < src_.size() && src_[pos_] == '=') {
            advance();
            push(out, Tok::CmpGe, ">=", line, col);
          } else {
            push(out, Tok::CmpGt, ">", line, col);
          }
          break;
        default:
          error(line, col, std::string("unexpected character '") + c + "'");
          advance();
          break;
      }
    }
    out.push_back({Tok::End, "", 0, line_, col_});
    return out;
  }

 private:
  void push(std::vector<Token>& out, Tok k, const char* t, int line, int col) {
    out.push_back({k, t, 0, line, col});
  }

  bool peek_unicode(const char* utf8) const {
    std::string_view s(utf8);
    return src_.compare(pos_, s.size(), s) == 0;
  }

  void consume_unicode() {
    // advance over one multi-byte sequence
    ++pos_;
    ++col_;
    while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80)
      ++pos_;
  }

  bool try_unicode(std::vector<Token>& out, int line, int col) {
    struct Map {
      const char* utf8;
      Tok tok;
      const char* text;
    };
    static const Map maps[] = {
        {"∨", Tok::Or, "|"},      // ∨
        {"¬", Tok::Minus, "-"},   // ¬
        {"−", Tok::Minus, "-"},   // −
        {"≤", Tok::CmpLe, "<="},  // ≤
        {"≥", Tok::CmpGe, ">="},  // ≥
    };
    for (const auto& m : maps) {
      if (peek_unicode(m.utf8)) {
        consume_unicode();
        push(out, m.tok, m.text, line, col);
        return true;
      }
    }
    return false;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void error(int line, int col, const std::string& msg) {
    diags_.push_back({Severity::Error, msg, line, col});
  }

  const std::string& src_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags)
      : toks_(std::move(toks)), diags_(diags) {}

  Program run() {
    Program prog;
    while (cur().kind != Tok::End) {
      std::size_t diag_count = diags_.size();
      try {
        parse_statement(prog);
      } catch (const StatementError&) {
        skip_past_period();
      }
      (void)diag_count;
    }
    return prog;
  }

  Literal parse_single_literal() {
    Literal l = parse_literal_tok();
    expect(Tok::End, "end of literal");
    return l;
  }

 private:
  struct StatementError {};

  const Token& cur() const { return toks_[idx_]; }
  const Token& peek(std::size_t n = 1) const {
    return toks_[std::min(idx_ + n, toks_.size() - 1)];
  }
  void next() { if (cur().kind != Tok::End) ++idx_; }

  [[noreturn]] void fail(const std::string& msg) {
    diags_.push_back({Severity::Error, msg, cur().line, cur().column});
    throw StatementError{};
  }

  void expect(Tok k, const std::string& what) {
    if (cur().kind != k) fail("expected " + what);
    next();
  }

  void skip_past_period() {
    while (cur().kind != Tok::End) {
      bool stop = cur().kind == Tok::Period;
      next();
      if (stop) break;
    }
  }

  void parse_statement(Program& prog) {
    int line = cur().line, column = cur().column;
    if (cur().kind == Tok::WeakArrow) {
      next();
      WeakConstraint wc;
      wc.body = parse_body();
      expect(Tok::Period, "'.' after weak constraint body");
      expect(Tok::LBracket, "'[' starting [w:l] annotation");
      if (cur().kind != Tok::Integer) fail("expected weight integer");
      wc.weight = cur().value;
      next();
      expect(Tok::Colon, "':' in [w:l]");
      if (cur().kind != Tok::Integer) fail("expected level integer");
      wc.level = static_cast<int>(cur().value);
      next();
      expect(Tok::RBracket, "']' closing [w:l]");
      prog.weak_constraints.push_back(std::move(wc));
      check_safety_diag(prog.weak_constraints.back(), line, column);
      return;
    }

    Rule rule;
    if (cur().kind == Tok::RuleArrow) {
      next();
      rule.body = parse_body();
    } else {
      rule.head = parse_head();
      if (cur().kind == Tok::RuleArrow) {
        next();
        rule.body = parse_body();
      }
    }
    expect(Tok::Period, "'.' ending statement");
    prog.rules.push_back(std::move(rule));
    check_safety_diag(prog.rules.back(), line, column);
  }

  std::vector<Literal> parse_head() {
    std::vector<Literal> head;
    head.push_back(parse_literal_tok());
    while (true) {
      if (cur().kind == Tok::Or) {
        next();
        head.push_back(parse_literal_tok());
      } else if (cur().kind == Tok::Ident && cur().text == "v" &&
                 is_literal_start(peek())) {
        next();
        head.push_back(parse_literal_tok());
      } else {
        break;
      }
    }
    return head;
  }

  static bool is_literal_start(const Token& t) {
    return t.kind == Tok::Ident || t.kind == Tok::Minus;
  }

  std::vector<BodyElem> parse_body() {
    std::vector<BodyElem> body;
    body.push_back(parse_body_elem());
    while (cur().kind == Tok::Comma) {
      next();
      body.push_back(parse_body_elem());
    }
    return body;
  }

  BodyElem parse_body_elem() {
    if (cur().kind == Tok::Not) {
      next();
      return NafLiteral{parse_literal_tok()};
    }
    if (cur().kind == Tok::Variable || cur().kind == Tok::Integer)
      return parse_builtin();
    if (cur().kind == Tok::Minus) return parse_literal_tok();
    if (cur().kind == Tok::Ident) {
      // Could be a plain literal or the left side of "=": peek past the atom.
      std::size_t save = idx_;
      Literal l = parse_literal_tok();
      if (is_cmp(cur().kind) && l.atom.args.empty()) {
        idx_ = save;
        return parse_builtin();
      }
      return l;
    }
    fail("expected body literal or builtin");
  }

  static bool is_cmp(Tok k) {
    return k == Tok::CmpEq || k == Tok::CmpLe || k == Tok::CmpLt ||
           k == Tok::CmpGe || k == Tok::CmpGt;
  }

  Builtin parse_builtin() {
    Builtin b;
    b.lhs = parse_arith_expr();
    switch (cur().kind) {
      case Tok::CmpEq: b.op = CmpOp::Eq; break;
      case Tok::CmpLe: b.op = CmpOp::Le; break;
      case Tok::CmpLt: b.op = CmpOp::Lt; break;
      case Tok::CmpGe: b.op = CmpOp::Ge; break;
      case Tok::CmpGt: b.op = CmpOp::Gt; break;
      default: fail("expected comparison operator");
    }
    next();
    b.rhs = parse_arith_expr();
    return b;
  }

  ArithExpr parse_arith_expr() {
    ArithExpr e;
    e.lhs = parse_operand();
    if (cur().kind == Tok::Plus) {
      next();
      e.op = ArithOp::Add;
      e.rhs = parse_operand();
    } else if (cur().kind == Tok::Minus) {
      next();
      e.op = ArithOp::Sub;
      e.rhs = parse_operand();
    }
    return e;
  }

  Term parse_operand() {
    if (cur().kind == Tok::Variable) {
      Term t = Term::variable(cur().text);
      next();
      return t;
    }
    if (cur().kind == Tok::Integer) {
      Term t = Term::integer(cur().value);
      next();
      return t;
    }
    if (cur().kind == Tok::Ident) {
      Term t = Term::constant(cur().text);
      next();
      return t;
    }
    fail("expected builtin operand (variable, integer or constant)");
  }

  Literal parse_literal_tok() {
    bool strong = false;
    if (cur().kind == Tok::Minus) {
      strong = true;
      next();
    }
    if (cur().kind == Tok::Variable)
      fail("predicate names must start lowercase ('" + cur().text +
           "' reads as a variable)");
    if (cur().kind != Tok::Ident) fail("expected predicate name");
    Atom a;
    a.predicate = cur().text;
    next();
    if (cur().kind == Tok::LParen) {
      next();
      a.args.push_back(parse_term());
      while (cur().kind == Tok::Comma) {
        next();
        a.args.push_back(parse_term());
      }
      expect(Tok::RParen, "')' closing argument list");
    }
    return Literal{std::move(a), strong};
  }

  Term parse_term() {
    if (cur().kind == Tok::Variable) {
      Term t = Term::variable(cur().text);
      next();
      return t;
    }
    if (cur().kind == Tok::Integer) {
      Term t = Term::integer(cur().value);
      next();
      return t;
    }
    if (cur().kind != Tok::Ident) fail("expected term");
    std::string name = cur().text;
    next();
    if (cur().kind == Tok::LParen) {
      next();
      std::vector<Term> args;
      args.push_back(parse_term());
      while (cur().kind == Tok::Comma) {
        next();
        args.push_back(parse_term());
      }
      expect(Tok::RParen, "')' closing compound term");
      return Term::compound(std::move(name), std::move(args));
    }
    return Term::constant(std::move(name));
  }

  void check_safety_diag(const Rule& r, int line, int column) {
    if (auto v = find_unsafe_variable(r.head, r.body))
      diags_.push_back({Severity::Error,
                        "unsafe variable " + *v + " in: " + r.text(), line,
                        column});
  }

  void check_safety_diag(const WeakConstraint& w, int line, int column) {
    if (auto v = find_unsafe_variable({}, w.body))
      diags_.push_back({Severity::Error,
                        "unsafe variable " + *v + " in: " + w.text(), line,
                        column});
  }

  std::vector<Token> toks_;
  std::vector<Diagnostic>& diags_;
  std::size_t idx_ = 0;
};

}  // namespace

std::string Diagnostic::to_string() const {
  std::string out = severity == Severity::Error ? "error: " : "warning: ";
  if (line > 0)
    out += std::to_string(line) + ":" + std::to_string(column) + ": ";
  return out + message;
}

ParseResult parse(const SourceProgram& source) {
  ParseResult result;
  Lexer lexer(source.text, result.diagnostics);
  Parser parser(lexer.run(), result.diagnostics);
  result.program = parser.run();
  return result;
}

ParseResult parse(const std::string& text) {
  return parse(SourceProgram{text});
}

Literal parse_literal(const std::string& text) {
  std::vector<Diagnostic> diags;
  Lexer lexer(text, diags);
  Parser parser(lexer.run(), diags);
  try {
    Literal l = parser.parse_single_literal();
    if (!diags.empty()) throw Error("malformed literal: " + text);
    return l;
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw Error("malformed literal: " + text);
  }
}

std::string print(const Program& program) { return program.text(); }

}  // namespace deolog::asp
