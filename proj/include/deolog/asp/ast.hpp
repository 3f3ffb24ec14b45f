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

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace deolog::asp {

/// First-order terms: symbolic constants, non-negative integers,
/// variables (uppercase-initial by convention) and ground-able
/// compound terms such as eat(blue_ghost).
class Term {
 public:
  enum class Kind { Constant, Integer, Variable, Compound };

  Term() = default;
  static Term constant(std::string name);
  static Term integer(long long value);
  static Term variable(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  long long value() const { return value_; }
  const std::vector<Term>& args() const { return args_; }

  bool is_ground() const;
  std::string text() const;

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind_ == b.kind_ && a.name_ == b.name_ && a.value_ == b.value_ &&
           a.args_ == b.args_;
  }
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Kind kind_ = Kind::Constant;
  std::string name_;
  long long value_ = 0;
  std::vector<Term> args_;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  std::string text() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

/// A classical literal: an atom with an optional strong negation.
/// Ordering groups the two polarities of an atom next to each other,
/// positive first; answer sets are printed in this order.
struct Literal {
  Atom atom;
  bool strong_neg = false;

  Literal negated() const { return Literal{atom, !strong_neg}; }
  bool is_ground() const { return atom.is_ground(); }
  std::string text() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

enum class CmpOp { Eq, Le, Lt, Ge, Gt };
enum class ArithOp { None, Add, Sub };

/// One side of a builtin atom: a plain term or a two-operand + / -
/// expression over integers and variables.
struct ArithExpr {
  Term lhs;
  ArithOp op = ArithOp::None;
  Term rhs;

  bool is_ground() const;
  std::string text() const;
  friend bool operator==(const ArithExpr&, const ArithExpr&) = default;
  friend std::strong_ordering operator<=>(const ArithExpr&, const ArithExpr&);
};

/// Comparison atom, e.g. E = C - A or G <= 1. Builtins never appear in
/// rule heads; arithmetic is defined on integers in [0, maxint] only.
struct Builtin {
  ArithExpr lhs;
  CmpOp op = CmpOp::Eq;
  ArithExpr rhs;

  bool is_ground() const { return lhs.is_ground() && rhs.is_ground(); }
  std::string text() const;
  friend bool operator==(const Builtin&, const Builtin&) = default;
  friend std::strong_ordering operator<=>(const Builtin&, const Builtin&);
};

/// Default-negated body literal ("not l").
struct NafLiteral {
  Literal lit;
  friend bool operator==(const NafLiteral&, const NafLiteral&) = default;
  friend std::strong_ordering operator<=>(const NafLiteral&,
                                          const NafLiteral&) = default;
};

using BodyElem = std::variant<Literal, NafLiteral, Builtin>;

std::string body_elem_text(const BodyElem& e);
bool body_elem_ground(const BodyElem& e);

/// H1 v ... v Hl :- body.  An empty head makes the rule a hard
/// constraint; an empty body makes it a fact.
struct Rule {
  std::vector<Literal> head;
  std::vector<BodyElem> body;

  bool is_constraint() const { return head.empty(); }
  bool is_fact() const { return body.empty() && head.size() == 1; }
  bool is_ground() const;
  std::string text() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// :~ body. [weight:level]
struct WeakConstraint {
  std::vector<BodyElem> body;
  long long weight = 1;
  int level = 1;

  bool is_ground() const;
  std::string text() const;

  friend bool operator==(const WeakConstraint&, const WeakConstraint&) = default;
};

struct Program {
  std::vector<Rule> rules;
  std::vector<WeakConstraint> weak_constraints;

  bool is_ground() const;
  void append(const Program& other);
  std::string text() const;

  friend bool operator==(const Program&, const Program&) = default;
};

/// A consistent set of ground literals.
using Interpretation = std::set<Literal>;

bool is_consistent(const Interpretation& interp);
std::string interpretation_text(const Interpretation& interp);

/// Per-level violation weights of weak constraints. Only non-zero
/// levels are stored; comparison is lexicographic from the highest
/// occurring level down.
class CostVector {
 public:
  CostVector() = default;

  void add(int level, long long weight);
  long long at(int level) const;
  bool empty() const { return by_level_.empty(); }
  const std::map<int, long long>& levels() const { return by_level_; }

  std::string text() const;

  friend bool operator==(const CostVector&, const CostVector&) = default;
  /// Lexicographic order, higher levels more important.
  friend std::strong_ordering operator<=>(const CostVector& a,
                                          const CostVector& b);

 private:
  std::map<int, long long> by_level_;
};

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A rule variable that cannot be bound by positive body matching or
/// assignment builtins.
struct UnsafeRuleError : Error {
  UnsafeRuleError(std::string rule_text, std::string variable);
  std::string rule_text;
  std::string variable;
};

/// Ground instantiation exceeded the configured instance cap.
struct GroundingExplosionError : Error {
  explicit GroundingExplosionError(std::size_t cap);
};

/// Candidate-set enumeration exceeded the configured cap.
struct BaseTooLargeError : Error {
  explicit BaseTooLargeError(std::size_t cap);
};

/// Safety: every variable of a statement must be bound by a positive
/// non-builtin body literal or, transitively, by an assignment builtin
/// (V = expr) whose other side is already bound. Returns the name of a
/// violating variable, or nullopt when the statement is safe.
std::optional<std::string> find_unsafe_variable(
    const std::vector<Literal>& head, const std::vector<BodyElem>& body);

// Convenience constructors used across the toolkit and in tests.
Term cst(const std::string& name);
Term num(long long value);
Term var(const std::string& name);
Atom atom(const std::string& predicate, std::vector<Term> args = {});
Literal lit(const std::string& predicate, std::vector<Term> args = {},
            bool strong_neg = false);
Literal neg(const std::string& predicate, std::vector<Term> args = {});

}  // namespace deolog::asp
