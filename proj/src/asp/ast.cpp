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

#include "deolog/asp/ast.hpp"

#include <sstream>

namespace deolog::asp {

Term Term::constant(std::string name) {
  Term t;
  t.kind_ = Kind::Constant;
  t.name_ = std::move(name);
  return t;
}

Term Term::integer(long long value) {
  if (value < 0) throw Error("integer terms must be non-negative");
  Term t;
  t.kind_ = Kind::Integer;
  t.value_ = value;
  return t;
}

Term Term::variable(std::string name) {
  Term t;
  t.kind_ = Kind::Variable;
  t.name_ = std::move(name);
  return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  Term t;
  t.kind_ = Kind::Compound;
  t.name_ = std::move(functor);
  t.args_ = std::move(args);
  return t;
}

bool Term::is_ground() const {
  switch (kind_) {
    case Kind::Variable: return false;
    case Kind::Compound:
      for (const auto& a : args_)
        if (!a.is_ground()) return false;
      return true;
    default: return true;
  }
}

std::string Term::text() const {
  switch (kind_) {
    case Kind::Constant: return name_;
    case Kind::Integer: return std::to_string(value_);
    case Kind::Variable: return name_;
    case Kind::Compound: {
      std::string out = name_ + "(";
      for (std::size_t i = 0; i < args_.size(); ++i) {
        if (i) out += ",";
        out += args_[i].text();
      }
      return out + ")";
    }
  }
  return {};
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.name_ <=> b.name_; c != 0) return c;
  if (auto c = a.value_ <=> b.value_; c != 0) return c;
  return a.args_ <=> b.args_;
}

bool Atom::is_ground() const {
  for (const auto& a : args)
    if (!a.is_ground()) return false;
  return true;
}

std::string Atom::text() const {
  if (args.empty()) return predicate;
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += args[i].text();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.predicate <=> b.predicate; c != 0) return c;
  return a.args <=> b.args;
}

std::string Literal::text() const {
  return strong_neg ? "-" + atom.text() : atom.text();
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (auto c = a.atom <=> b.atom; c != 0) return c;
  return a.strong_neg <=> b.strong_neg;
}

bool ArithExpr::is_ground() const {
  if (op == ArithOp::None) return lhs.is_ground();
  return lhs.is_ground() && rhs.is_ground();
}

std::string ArithExpr::text() const {
  if (op == ArithOp::None) return lhs.text();
  return lhs.text() + (op == ArithOp::Add ? "+" : "-") + rhs.text();
}

std::strong_ordering operator<=>(const ArithExpr& a, const ArithExpr& b) {
  if (auto c = a.lhs <=> b.lhs; c != 0) return c;
  if (auto c = a.op <=> b.op; c != 0) return c;
  return a.rhs <=> b.rhs;
}

namespace {
const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Le: return "<=";
    case CmpOp::Lt: return "<";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
  }
  return "=";
}
}  // namespace

std::string Builtin::text() const {
  return lhs.text() + cmp_text(op) + rhs.text();
}

std::strong_ordering operator<=>(const Builtin& a, const Builtin& b) {
  if (auto c = a.lhs <=> b.lhs; c != 0) return c;
  if (auto c = a.op <=> b.op; c != 0) return c;
  return a.rhs <=> b.rhs;
}

std::string body_elem_text(const BodyElem& e) {
  if (const auto* l = std::get_if<Literal>(&e)) return l->text();
  if (const auto* n = std::get_if<NafLiteral>(&e)) return "not " + n->lit.text();
  return std::get<Builtin>(e).text();
}

bool body_elem_ground(const BodyElem& e) {
  if (const auto* l = std::get_if<Literal>(&e)) return l->is_ground();
  if (const auto* n = std::get_if<NafLiteral>(&e)) return n->lit.is_ground();
  return std::get<Builtin>(e).is_ground();
}

namespace {
std::string body_text(const std::vector<BodyElem>& body) {
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) out += ", ";
    out += body_elem_text(body[i]);
  }
  return out;
}
}  // namespace

bool Rule::is_ground() const {
  for (const auto& h : head)
    if (!h.is_ground()) return false;
  for (const auto& e : body)
    if (!body_elem_ground(e)) return false;
  return true;
}

std::string Rule::text() const {
  std::string out;
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (i) out += " v ";
    out += head[i].text();
  }
  if (!body.empty()) {
    if (!head.empty()) out += " ";
    out += ":- " + body_text(body);
  }
  return out + ".";
}

bool WeakConstraint::is_ground() const {
  for (const auto& e : body)
    if (!body_elem_ground(e)) return false;
  return true;
}

std::string WeakConstraint::text() const {
  return ":~ " + body_text(body) + ". [" + std::to_string(weight) + ":" +
         std::to_string(level) + "]";
}

bool Program::is_ground() const {
  for (const auto& r : rules)
    if (!r.is_ground()) return false;
  for (const auto& w : weak_constraints)
    if (!w.is_ground()) return false;
  return true;
}

void Program::append(const Program& other) {
  rules.insert(rules.end(), other.rules.begin(), other.rules.end());
  weak_constraints.insert(weak_constraints.end(),
                          other.weak_constraints.begin(),
                          other.weak_constraints.end());
}

std::string Program::text() const {
  std::string out;
  for (const auto& r : rules) out += r.text() + "\n";
  for (const auto& w : weak_constraints) out += w.text() + "\n";
  return out;
}

bool is_consistent(const Interpretation& interp) {
  for (const auto& l : interp)
    if (l.strong_neg && interp.count(Literal{l.atom, false})) return false;
  return true;
}

std::string interpretation_text(const Interpretation& interp) {
  std::string out = "{";
  bool first = true;
  for (const auto& l : interp) {
    if (!first) out += ", ";
    first = false;
    out += l.text();
  }
  return out + "}";
}

void CostVector::add(int level, long long weight) {
  if (weight == 0) return;
  auto [it, inserted] = by_level_.try_emplace(level, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0) by_level_.erase(it);
  }
}

long long CostVector::at(int level) const {
  auto it = by_level_.find(level);
  return it == by_level_.end() ? 0 : it->second;
}

std::string CostVector::text() const {
  std::string out = "<";
  bool first = true;
  for (auto it = by_level_.rbegin(); it != by_level_.rend(); ++it) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(it->second) + ":" + std::to_string(it->first);
  }
  return out + ">";
}

std::strong_ordering operator<=>(const CostVector& a, const CostVector& b) {
  auto ia = a.by_level_.rbegin();
  auto ib = b.by_level_.rbegin();
  while (ia != a.by_level_.rend() || ib != b.by_level_.rend()) {
    int la = ia == a.by_level_.rend() ? -1 : ia->first;
    int lb = ib == b.by_level_.rend() ? -1 : ib->first;
    if (la > lb) return std::strong_ordering::greater;  // a has extra weight
    if (lb > la) return std::strong_ordering::less;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

UnsafeRuleError::UnsafeRuleError(std::string rule, std::string variable_name)
    : Error("unsafe variable " + variable_name + " in: " + rule),
      rule_text(std::move(rule)),
      variable(std::move(variable_name)) {}

GroundingExplosionError::GroundingExplosionError(std::size_t cap)
    : Error("ground instance count exceeds cap of " + std::to_string(cap)) {}

BaseTooLargeError::BaseTooLargeError(std::size_t cap)
    : Error("candidate-set enumeration exceeds cap of " + std::to_string(cap)) {}

namespace {

void collect_term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Variable) out.insert(t.name());
  if (t.kind() == Term::Kind::Compound)
    for (const auto& a : t.args()) collect_term_vars(a, out);
}

void collect_atom_vars(const Atom& a, std::set<std::string>& out) {
  for (const auto& t : a.args) collect_term_vars(t, out);
}

void collect_expr_vars(const ArithExpr& e, std::set<std::string>& out) {
  collect_term_vars(e.lhs, out);
  if (e.op != ArithOp::None) collect_term_vars(e.rhs, out);
}

}  // namespace

std::optional<std::string> find_unsafe_variable(
    const std::vector<Literal>& head, const std::vector<BodyElem>& body) {
  std::set<std::string> bound;
  std::set<std::string> seen;
  for (const auto& h : head) collect_atom_vars(h.atom, seen);
  for (const auto& e : body) {
    if (const auto* l = std::get_if<Literal>(&e)) {
      collect_atom_vars(l->atom, bound);
      collect_atom_vars(l->atom, seen);
    } else if (const auto* n = std::get_if<NafLiteral>(&e)) {
      collect_atom_vars(n->lit.atom, seen);
    } else {
      const auto& b = std::get<Builtin>(e);
      collect_expr_vars(b.lhs, seen);
      collect_expr_vars(b.rhs, seen);
    }
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& e : body) {
      const auto* b = std::get_if<Builtin>(&e);
      if (!b || b->op != CmpOp::Eq) continue;
      auto side_bound = [&](const ArithExpr& x) {
        std::set<std::string> vs;
        collect_expr_vars(x, vs);
        for (const auto& v : vs)
          if (!bound.count(v)) return false;
        return true;
      };
      auto try_bind = [&](const ArithExpr& target, const ArithExpr& source) {
        if (target.op == ArithOp::None &&
            target.lhs.kind() == Term::Kind::Variable &&
            !bound.count(target.lhs.name()) && side_bound(source)) {
          bound.insert(target.lhs.name());
          progress = true;
        }
      };
      try_bind(b->lhs, b->rhs);
      try_bind(b->rhs, b->lhs);
    }
  }
  for (const auto& v : seen)
    if (!bound.count(v)) return v;
  return std::nullopt;
}

Term cst(const std::string& name) { return Term::constant(name); }
Term num(long long value) { return Term::integer(value); }
Term var(const std::string& name) { return Term::variable(name); }

Atom atom(const std::string& predicate, std::vector<Term> args) {
  return Atom{predicate, std::move(args)};
}

Literal lit(const std::string& predicate, std::vector<Term> args,
            bool strong_neg) {
  return Literal{Atom{predicate, std::move(args)}, strong_neg};
}

Literal neg(const std::string& predicate, std::vector<Term> args) {
  return lit(predicate, std::move(args), true);
}

}  // namespace deolog::asp
