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

#include "deolog/asp/ground.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace deolog::asp {

namespace {

using Bindings = std::map<std::string, Term>;

Term substitute(const Term& t, const Bindings& b) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = b.find(t.name());
      return it == b.end() ? t : it->second;
    }
    case Term::Kind::Compound: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute(a, b));
      return Term::compound(t.name(), std::move(args));
    }
    default:
      return t;
  }
}

Atom substitute(const Atom& a, const Bindings& b) {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(substitute(t, b));
  return out;
}

Literal substitute(const Literal& l, const Bindings& b) {
  return Literal{substitute(l.atom, b), l.strong_neg};
}

bool unify_term(const Term& pattern, const Term& value, Bindings& b) {
  switch (pattern.kind()) {
    case Term::Kind::Variable: {
      auto it = b.find(pattern.name());
      if (it != b.end()) return it->second == value;
      b.emplace(pattern.name(), value);
      return true;
    }
    case Term::Kind::Compound: {
      if (value.kind() != Term::Kind::Compound ||
          value.name() != pattern.name() ||
          value.args().size() != pattern.args().size())
        return false;
      for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!unify_term(pattern.args()[i], value.args()[i], b)) return false;
      return true;
    }
    default:
      return pattern == value;
  }
}

bool unify_atom(const Atom& pattern, const Atom& value, Bindings& b) {
  if (pattern.predicate != value.predicate ||
      pattern.args.size() != value.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i)
    if (!unify_term(pattern.args[i], value.args[i], b)) return false;
  return true;
}

enum class EvalState { Unbound, Failed, Ok };

struct EvalResult {
  EvalState state = EvalState::Unbound;
  Term value;
};

EvalResult eval_expr(const ArithExpr& e, const Bindings& b, long long maxint) {
  Term lhs = substitute(e.lhs, b);
  if (e.op == ArithOp::None) {
    if (!lhs.is_ground()) return {EvalState::Unbound, {}};
    return {EvalState::Ok, lhs};
  }
  Term rhs = substitute(e.rhs, b);
  if (!lhs.is_ground() || !rhs.is_ground()) return {EvalState::Unbound, {}};
  if (lhs.kind() != Term::Kind::Integer || rhs.kind() != Term::Kind::Integer)
    return {EvalState::Failed, {}};
  long long v = e.op == ArithOp::Add ? lhs.value() + rhs.value()
                                     : lhs.value() - rhs.value();
  if (v < 0 || v > maxint) return {EvalState::Failed, {}};
  return {EvalState::Ok, Term::integer(v)};
}

// Tri-state builtin evaluation under partial bindings. Assignment
// builtins (V = expr) bind V when the other side is known.
enum class BuiltinOutcome { True, False, Deferred };

BuiltinOutcome eval_builtin_partial(const Builtin& bi, Bindings& b,
                                    long long maxint) {
  EvalResult l = eval_expr(bi.lhs, b, maxint);
  EvalResult r = eval_expr(bi.rhs, b, maxint);
  if (l.state == EvalState::Failed || r.state == EvalState::Failed)
    return BuiltinOutcome::False;
  if (l.state == EvalState::Ok && r.state == EvalState::Ok) {
    if (bi.op == CmpOp::Eq)
      return l.value == r.value ? BuiltinOutcome::True : BuiltinOutcome::False;
    if (l.value.kind() != Term::Kind::Integer ||
        r.value.kind() != Term::Kind::Integer)
      return BuiltinOutcome::False;
    long long a = l.value.value(), c = r.value.value();
    bool ok = false;
    switch (bi.op) {
      case CmpOp::Eq: ok = a == c; break;
      case CmpOp::Le: ok = a <= c; break;
      case CmpOp::Lt: ok = a < c; break;
      case CmpOp::Ge: ok = a >= c; break;
      case CmpOp::Gt: ok = a > c; break;
    }
    return ok ? BuiltinOutcome::True : BuiltinOutcome::False;
  }
  if (bi.op == CmpOp::Eq) {
    auto bindable = [&](const ArithExpr& side) {
      return side.op == ArithOp::None &&
             side.lhs.kind() == Term::Kind::Variable && !b.count(side.lhs.name());
    };
    if (bindable(bi.lhs) && r.state == EvalState::Ok) {
      b.emplace(bi.lhs.lhs.name(), r.value);
      return BuiltinOutcome::True;
    }
    if (bindable(bi.rhs) && l.state == EvalState::Ok) {
      b.emplace(bi.rhs.lhs.name(), l.value);
      return BuiltinOutcome::True;
    }
  }
  return BuiltinOutcome::Deferred;
}

struct PossibleIndex {
  std::map<std::tuple<std::string, bool, std::size_t>, std::vector<Literal>>
      by_signature;
  std::set<Literal> all;

  bool insert(const Literal& l) {
    if (!all.insert(l).second) return false;
    by_signature[{l.atom.predicate, l.strong_neg, l.atom.args.size()}]
        .push_back(l);
    return true;
  }

  const std::vector<Literal>* candidates(const Literal& pattern) const {
    auto it = by_signature.find(
        {pattern.atom.predicate, pattern.strong_neg, pattern.atom.args.size()});
    return it == by_signature.end() ? nullptr : &it->second;
  }
};

class Grounder {
 public:
  Grounder(const Program& program, const GroundOptions& opt)
      : program_(program), opt_(opt) {}

  Program run() {
    check_safety();
    rule_instances_.resize(program_.rules.size());
    rule_seen_.resize(program_.rules.size());

    // Ground statements pass through; builtins are resolved in place.
    for (std::size_t i = 0; i < program_.rules.size(); ++i) {
      const Rule& r = program_.rules[i];
      if (!r.is_ground()) continue;
      Bindings none;
      if (auto inst = instantiate_rule(r, none)) {
        rule_seen_[i].insert(inst->text());
        rule_instances_[i].push_back(std::move(*inst));
        bump_instance_count();
      }
      pass_through_rule_[i] = true;
    }

    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < program_.rules.size(); ++i)
        if (join_rule(i)) changed = true;
    }

    Program out;
    for (auto& instances : rule_instances_)
      for (auto& r : instances) out.rules.push_back(std::move(r));
    ground_weak_constraints(out);
    return out;
  }

 private:
  void check_safety() {
    for (const auto& r : program_.rules)
      if (auto v = find_unsafe_variable(r.head, r.body))
        throw UnsafeRuleError(r.text(), *v);
    for (const auto& w : program_.weak_constraints)
      if (auto v = find_unsafe_variable({}, w.body))
        throw UnsafeRuleError(w.text(), *v);
  }

  void bump_instance_count() {
    if (++instance_count_ > opt_.instance_cap)
      throw GroundingExplosionError(opt_.instance_cap);
  }

  void bump_work() {
    if (++work_ > opt_.instance_cap * 64)
      throw GroundingExplosionError(opt_.instance_cap);
  }

  // One join pass for rule i against the current possible set.
  // Returns true if the possible set grew.
  bool join_rule(std::size_t i) {
    const Rule& r = program_.rules[i];
    grew_ = false;
    Bindings b;
    join(r.body, 0, b, [&](const Bindings& full) {
      if (pass_through_rule_.count(i)) {
        add_heads(r, full);
        return;
      }
      auto inst = instantiate_rule(r, full);
      if (!inst) return;
      std::string key = inst->text();
      if (rule_seen_[i].insert(key).second) {
        add_heads(r, full);
        rule_instances_[i].push_back(std::move(*inst));
        bump_instance_count();
      }
    });
    return grew_;
  }

  void add_heads(const Rule& r, const Bindings& b) {
    for (const auto& h : r.head)
      if (possible_.insert(substitute(h, b))) grew_ = true;
  }

  // Recursively match positive body literals against the possible set,
  // evaluating builtins as soon as their variables are bound.
  template <typename Emit>
  void join(const std::vector<BodyElem>& body, std::size_t from, Bindings b,
            const Emit& emit) {
    bump_work();
    // Settle any builtin that has become decidable.
    bool progress = true;
    std::vector<bool> done(body.size(), false);
    while (progress) {
      progress = false;
      for (std::size_t j = 0; j < body.size(); ++j) {
        if (done[j]) continue;
        const auto* bi = std::get_if<Builtin>(&body[j]);
        if (!bi) continue;
        switch (eval_builtin_partial(*bi, b, opt_.maxint)) {
          case BuiltinOutcome::True: done[j] = true; progress = true; break;
          case BuiltinOutcome::False: return;
          case BuiltinOutcome::Deferred: break;
        }
      }
    }
    // Find the next positive literal to match.
    for (std::size_t j = from; j < body.size(); ++j) {
      const auto* l = std::get_if<Literal>(&body[j]);
      if (!l) continue;
      Literal pattern = substitute(*l, b);
      if (pattern.is_ground()) {
        if (!possible_.all.count(pattern)) return;
        continue;
      }
      const auto* cands = possible_.candidates(pattern);
      if (!cands) return;
      // Candidate vectors grow while we iterate elsewhere; index-based
      // iteration over a copy of the current size keeps this stable.
      std::size_t n = cands->size();
      for (std::size_t k = 0; k < n; ++k) {
        Bindings next = b;
        if (unify_atom(pattern.atom, (*cands)[k].atom, next))
          join(body, j + 1, std::move(next), emit);
      }
      return;
    }
    emit(b);
  }

  // Substitute bindings; evaluate remaining builtins; drop the instance
  // if any builtin is false. Builtins true are removed from the body.
  std::optional<Rule> instantiate_rule(const Rule& r, const Bindings& b) {
    Rule out;
    Bindings scratch = b;
    for (const auto& h : r.head) out.head.push_back(substitute(h, b));
    for (const auto& e : r.body) {
      if (const auto* l = std::get_if<Literal>(&e)) {
        out.body.push_back(substitute(*l, b));
      } else if (const auto* n = std::get_if<NafLiteral>(&e)) {
        out.body.push_back(NafLiteral{substitute(n->lit, b)});
      } else {
        switch (eval_builtin_partial(std::get<Builtin>(e), scratch, opt_.maxint)) {
          case BuiltinOutcome::True: break;
          case BuiltinOutcome::False: return std::nullopt;
          case BuiltinOutcome::Deferred:
            throw UnsafeRuleError(r.text(), "<builtin>");
        }
      }
    }
    return out;
  }

  std::optional<WeakConstraint> instantiate_weak(const WeakConstraint& w,
                                                 const Bindings& b) {
    WeakConstraint out;
    out.weight = w.weight;
    out.level = w.level;
    Bindings scratch = b;
    for (const auto& e : w.body) {
      if (const auto* l = std::get_if<Literal>(&e)) {
        out.body.push_back(substitute(*l, b));
      } else if (const auto* n = std::get_if<NafLiteral>(&e)) {
        out.body.push_back(NafLiteral{substitute(n->lit, b)});
      } else {
        switch (eval_builtin_partial(std::get<Builtin>(e), scratch, opt_.maxint)) {
          case BuiltinOutcome::True: break;
          case BuiltinOutcome::False: return std::nullopt;
          case BuiltinOutcome::Deferred:
            throw UnsafeRuleError(w.text(), "<builtin>");
        }
      }
    }
    return out;
  }

  void ground_weak_constraints(Program& out) {
    // grd(P) is a set: identical instances collapse even when they come
    // from different source constraints.
    std::unordered_set<std::string> seen;
    for (const auto& w : program_.weak_constraints) {
      if (w.is_ground()) {
        if (auto inst = instantiate_weak(w, {})) {
          if (seen.insert(inst->text()).second) {
            out.weak_constraints.push_back(std::move(*inst));
            bump_instance_count();
          }
        }
        continue;
      }
      Bindings b;
      join(w.body, 0, b, [&](const Bindings& full) {
        auto inst = instantiate_weak(w, full);
        if (!inst) return;
        if (seen.insert(inst->text()).second) {
          out.weak_constraints.push_back(std::move(*inst));
          bump_instance_count();
        }
      });
    }
  }

  const Program& program_;
  GroundOptions opt_;
  PossibleIndex possible_;
  std::vector<std::vector<Rule>> rule_instances_;
  std::vector<std::unordered_set<std::string>> rule_seen_;
  std::map<std::size_t, bool> pass_through_rule_;
  std::size_t instance_count_ = 0;
  std::size_t work_ = 0;
  bool grew_ = false;
};

}  // namespace

Program ground(const Program& program, const GroundOptions& options) {
  return Grounder(program, options).run();
}

bool eval_builtin(const Builtin& builtin, long long maxint) {
  if (!builtin.is_ground()) throw Error("eval_builtin: non-ground builtin");
  Bindings none;
  return eval_builtin_partial(builtin, none, maxint) == BuiltinOutcome::True;
}

}  // namespace deolog::asp
