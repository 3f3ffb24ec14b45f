#include "support/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace deolog::test {

namespace {

using asp::ArithExpr;
using asp::ArithOp;
using asp::BodyElem;
using asp::Builtin;
using asp::CmpOp;
using asp::Interpretation;
using asp::Literal;
using asp::NafLiteral;
using asp::Program;
using asp::Rule;
using asp::Term;

// Direct evaluation of a ground builtin, written from the definition:
// arithmetic over integers in [0, maxint], = also comparing symbols.
bool direct_builtin(const Builtin& b, long long maxint) {
  auto value_of = [&](const ArithExpr& e, bool* ok, bool* is_int,
                      Term* symbolic) -> long long {
    if (e.op == ArithOp::None) {
      if (e.lhs.kind() == Term::Kind::Integer) {
        *is_int = true;
        return e.lhs.value();
      }
      *is_int = false;
      *symbolic = e.lhs;
      return 0;
    }
    if (e.lhs.kind() != Term::Kind::Integer ||
        e.rhs.kind() != Term::Kind::Integer) {
      *ok = false;
      return 0;
    }
    *is_int = true;
    long long v = e.op == ArithOp::Add ? e.lhs.value() + e.rhs.value()
                                       : e.lhs.value() - e.rhs.value();
    if (v < 0 || v > maxint) *ok = false;
    return v;
  };
  bool ok = true, li = false, ri = false;
  Term lsym, rsym;
  long long lv = value_of(b.lhs, &ok, &li, &lsym);
  long long rv = value_of(b.rhs, &ok, &ri, &rsym);
  if (!ok) return false;
  if (!li || !ri) {
    if (b.op != CmpOp::Eq) return false;
    if (li != ri) return false;
    return lsym == rsym;
  }
  switch (b.op) {
    case CmpOp::Eq: return lv == rv;
    case CmpOp::Le: return lv <= rv;
    case CmpOp::Lt: return lv < rv;
    case CmpOp::Ge: return lv >= rv;
    case CmpOp::Gt: return lv > rv;
  }
  return false;
}

bool oracle_body_holds(const Interpretation& s, const std::vector<BodyElem>& body,
                       long long maxint) {
  for (const auto& e : body) {
    if (const auto* l = std::get_if<Literal>(&e)) {
      if (!s.count(*l)) return false;
    } else if (const auto* n = std::get_if<NafLiteral>(&e)) {
      if (s.count(n->lit)) return false;
    } else if (!direct_builtin(std::get<Builtin>(e), maxint)) {
      return false;
    }
  }
  return true;
}

bool oracle_satisfies(const Interpretation& s, const Rule& r, long long maxint) {
  if (!oracle_body_holds(s, r.body, maxint)) return true;
  for (const auto& h : r.head)
    if (s.count(h)) return true;
  return false;
}

std::vector<Literal> occurring_literals(const Program& p) {
  std::set<Literal> all;
  auto add_body = [&](const std::vector<BodyElem>& body) {
    for (const auto& e : body) {
      if (const auto* l = std::get_if<Literal>(&e)) all.insert(*l);
      if (const auto* n = std::get_if<NafLiteral>(&e)) all.insert(n->lit);
    }
  };
  for (const auto& r : p.rules) {
    for (const auto& h : r.head) all.insert(h);
    add_body(r.body);
  }
  for (const auto& w : p.weak_constraints) add_body(w.body);
  return {all.begin(), all.end()};
}

bool consistent(const Interpretation& s) {
  for (const auto& l : s)
    if (l.strong_neg && s.count(Literal{l.atom, false})) return false;
  return true;
}

}  // namespace

bool oracle_is_answer_set(const Interpretation& interp, const Program& program,
                          long long maxint) {
  if (!consistent(interp)) return false;
  // P(S): rules whose body S satisfies. S must satisfy them all.
  std::vector<const Rule*> p_of_s;
  for (const auto& r : program.rules)
    if (oracle_body_holds(interp, r.body, maxint)) p_of_s.push_back(&r);
  for (const Rule* r : p_of_s) {
    bool head_in = false;
    for (const auto& h : r->head)
      if (interp.count(h)) {
        head_in = true;
        break;
      }
    if (!head_in) return false;
  }
  // No proper subset of S may satisfy P(S); enumerate all of them.
  std::vector<Literal> members(interp.begin(), interp.end());
  std::size_t n = members.size();
  if (n >= 24)
    throw asp::Error("oracle_is_answer_set: interpretation too large");
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
    Interpretation sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) sub.insert(members[i]);
    bool satisfies_all = true;
    for (const Rule* r : p_of_s)
      if (!oracle_satisfies(sub, *r, maxint)) {
        satisfies_all = false;
        break;
      }
    if (satisfies_all) return false;
  }
  return true;
}

std::vector<Interpretation> oracle_answer_sets(const Program& program,
                                               long long maxint) {
  std::vector<Literal> base = occurring_literals(program);
  std::size_t n = base.size();
  if (n >= 24)
    throw asp::Error("oracle_answer_sets: literal base too large");
  std::vector<Interpretation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Interpretation s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.insert(base[i]);
    if (!consistent(s)) continue;
    if (oracle_is_answer_set(s, program, maxint)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

asp::CostVector oracle_cost(const Interpretation& interp, const Program& program,
                            long long maxint) {
  asp::CostVector total;
  for (const auto& w : program.weak_constraints)
    if (oracle_body_holds(interp, w.body, maxint))
      total.add(w.level, w.weight);
  return total;
}

std::map<std::string, int> oracle_longest_path_levels(
    const norms::PreferenceGraph& graph) {
  // Equivalence groups collapse to their first member.
  std::map<std::string, std::string> rep;
  for (const auto& g : graph.equivalences)
    for (const auto& m : g) rep[m] = g.front();
  auto r = [&](const std::string& v) {
    auto it = rep.find(v);
    return it == rep.end() ? v : it->second;
  };
  std::set<std::string> vertices;
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& v : graph.vertices) vertices.insert(r(v));
  for (const auto& [s, w] : graph.edges) {
    vertices.insert(r(s));
    vertices.insert(r(w));
    if (r(s) != r(w)) adj[r(s)].insert(r(w));
  }
  std::map<std::string, int> longest;
  std::function<int(const std::string&)> dfs = [&](const std::string& v) -> int {
    auto it = longest.find(v);
    if (it != longest.end()) return it->second;
    int best = 0;
    for (const auto& w : adj[v]) best = std::max(best, 1 + dfs(w));
    longest[v] = best;
    return best;
  };
  std::map<std::string, int> out;
  for (const auto& v : vertices) out[v] = 2 + dfs(v);
  for (const auto& v : graph.vertices) out[v] = out.at(r(v));
  for (const auto& [m, rr] : rep)
    if (out.count(rr)) out[m] = out.at(rr);
  return out;
}

Program random_ground_program(std::mt19937_64& rng, std::size_t max_base) {
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  const char* preds[] = {"p", "q", "r", "s"};
  const char* consts[] = {"a", "b"};
  std::vector<Literal> pool;
  for (const char* pr : preds) {
    pool.push_back(asp::lit(pr));
    pool.push_back(asp::neg(pr));
    for (const char* c : consts) {
      pool.push_back(asp::lit(pr, {asp::cst(c)}));
      pool.push_back(asp::neg(pr, {asp::cst(c)}));
    }
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t base = 3 + pick(std::min(max_base, pool.size()) - 3 + 1);
  pool.resize(base);

  Program out;
  std::size_t rules = 2 + pick(6);
  for (std::size_t i = 0; i < rules; ++i) {
    Rule r;
    std::size_t heads = pick(3);  // 0 = constraint
    for (std::size_t h = 0; h < heads; ++h) r.head.push_back(pool[pick(base)]);
    std::size_t pos = pick(3), naf = pick(3);
    for (std::size_t j = 0; j < pos; ++j) r.body.push_back(pool[pick(base)]);
    for (std::size_t j = 0; j < naf; ++j)
      r.body.push_back(NafLiteral{pool[pick(base)]});
    if (r.head.empty() && r.body.empty()) r.head.push_back(pool[pick(base)]);
    out.rules.push_back(std::move(r));
  }
  std::size_t weaks = pick(3);
  for (std::size_t i = 0; i < weaks; ++i) {
    asp::WeakConstraint w;
    w.weight = static_cast<long long>(pick(3));  // weight 0 is legal
    w.level = static_cast<int>(1 + pick(2));
    std::size_t pos = 1 + pick(2), naf = pick(2);
    for (std::size_t j = 0; j < pos; ++j) w.body.push_back(pool[pick(base)]);
    for (std::size_t j = 0; j < naf; ++j)
      w.body.push_back(NafLiteral{pool[pick(base)]});
    out.weak_constraints.push_back(std::move(w));
  }
  return out;
}

Program random_syntax_program(std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  const char* preds[] = {"p", "q", "edge", "blueGhost", "o", "f"};
  const char* consts[] = {"a", "b", "mail", "eat"};
  const char* vars[] = {"X", "Y", "Z"};

  auto random_term = [&](bool allow_var, int depth) -> Term {
    std::function<Term(int)> gen = [&](int d) -> Term {
      std::size_t k = pick(allow_var ? 4 : 3);
      switch (k) {
        case 0: return asp::cst(consts[pick(4)]);
        case 1: return asp::num(static_cast<long long>(pick(20)));
        case 2:
          if (d > 0) {
            std::vector<Term> args;
            std::size_t n = 1 + pick(2);
            for (std::size_t i = 0; i < n; ++i) args.push_back(gen(d - 1));
            return Term::compound(consts[pick(4)], std::move(args));
          }
          return asp::cst(consts[pick(4)]);
        default: return asp::var(vars[pick(3)]);
      }
    };
    return gen(depth);
  };

  auto random_literal = [&](bool allow_var) {
    Literal l;
    l.atom.predicate = preds[pick(6)];
    std::size_t args = pick(3);
    for (std::size_t i = 0; i < args; ++i)
      l.atom.args.push_back(random_term(allow_var, 1));
    l.strong_neg = pick(2) == 0;
    return l;
  };

  Program out;
  std::size_t rules = 1 + pick(5);
  for (std::size_t i = 0; i < rules; ++i) {
    Rule r;
    std::size_t heads = pick(3);
    // Keep statements safe: variables only where a ground fallback
    // keeps the safety check happy — generate ground statements plus
    // one safe variable pattern.
    bool with_var = pick(3) == 0;
    if (with_var) {
      Literal bodylit = random_literal(false);
      bodylit.strong_neg = false;
      bodylit.atom.args.clear();
      bodylit.atom.args.push_back(asp::var("X"));
      Literal headlit = random_literal(false);
      headlit.atom.args.clear();
      headlit.atom.args.push_back(asp::var("X"));
      r.head.push_back(headlit);
      r.body.push_back(bodylit);
      if (pick(2)) {
        Builtin b;
        b.lhs = ArithExpr{asp::var("X"), ArithOp::None, {}};
        b.op = CmpOp::Le;
        b.rhs = ArithExpr{asp::num(static_cast<long long>(pick(10))),
                          ArithOp::None, {}};
        r.body.push_back(b);
      }
    } else {
      for (std::size_t h = 0; h < heads; ++h)
        r.head.push_back(random_literal(false));
      std::size_t pos = pick(3), naf = pick(2);
      for (std::size_t j = 0; j < pos; ++j)
        r.body.push_back(random_literal(false));
      for (std::size_t j = 0; j < naf; ++j)
        r.body.push_back(NafLiteral{random_literal(false)});
      if (r.head.empty() && r.body.empty())
        r.head.push_back(random_literal(false));
    }
    out.rules.push_back(std::move(r));
  }
  std::size_t weaks = pick(3);
  for (std::size_t i = 0; i < weaks; ++i) {
    asp::WeakConstraint w;
    w.weight = static_cast<long long>(pick(5));
    w.level = static_cast<int>(1 + pick(4));
    std::size_t pos = 1 + pick(2), naf = pick(2);
    for (std::size_t j = 0; j < pos; ++j) w.body.push_back(random_literal(false));
    for (std::size_t j = 0; j < naf; ++j)
      w.body.push_back(NafLiteral{random_literal(false)});
    out.weak_constraints.push_back(std::move(w));
  }
  return out;
}

norms::PreferenceGraph random_dag(std::mt19937_64& rng, int max_vertices) {
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  norms::PreferenceGraph g;
  int n = 2 + static_cast<int>(pick(static_cast<std::size_t>(max_vertices - 1)));
  for (int i = 0; i < n; ++i) g.vertices.push_back("n" + std::to_string(i));
  // Edges only from lower to higher index: acyclic by construction.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pick(3) == 0) g.edges.emplace_back(g.vertices[i], g.vertices[j]);
  return g;
}

std::vector<std::map<std::string, Term>> oracle_substitutions(
    const std::vector<BodyElem>& body, const std::vector<Literal>& facts,
    const std::vector<Term>& universe, long long maxint) {
  using Bindings = std::map<std::string, Term>;

  std::function<Term(const Term&, const Bindings&)> subst =
      [&](const Term& t, const Bindings& b) -> Term {
    if (t.kind() == Term::Kind::Variable) {
      auto it = b.find(t.name());
      return it == b.end() ? t : it->second;
    }
    if (t.kind() == Term::Kind::Compound) {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(subst(a, b));
      return Term::compound(t.name(), std::move(args));
    }
    return t;
  };

  std::function<bool(const Term&, const Term&, Bindings&)> match =
      [&](const Term& pat, const Term& val, Bindings& b) -> bool {
    if (pat.kind() == Term::Kind::Variable) {
      auto it = b.find(pat.name());
      if (it != b.end()) return it->second == val;
      b.emplace(pat.name(), val);
      return true;
    }
    if (pat.kind() == Term::Kind::Compound) {
      if (val.kind() != Term::Kind::Compound || val.name() != pat.name() ||
          val.args().size() != pat.args().size())
        return false;
      for (std::size_t i = 0; i < pat.args().size(); ++i)
        if (!match(pat.args()[i], val.args()[i], b)) return false;
      return true;
    }
    return pat == val;
  };

  // Phase 1: positive literals against the fact list, all combinations.
  std::vector<const Literal*> positives;
  for (const auto& e : body)
    if (const auto* l = std::get_if<Literal>(&e)) positives.push_back(l);

  std::vector<Bindings> partial{{}};
  for (const Literal* lit : positives) {
    std::vector<Bindings> next;
    for (const auto& b : partial)
      for (const auto& f : facts) {
        if (f.strong_neg != lit->strong_neg ||
            f.atom.predicate != lit->atom.predicate ||
            f.atom.args.size() != lit->atom.args.size())
          continue;
        Bindings nb = b;
        bool ok = true;
        for (std::size_t i = 0; i < lit->atom.args.size() && ok; ++i)
          ok = match(lit->atom.args[i], f.atom.args[i], nb);
        if (ok) next.push_back(std::move(nb));
      }
    partial = std::move(next);
  }

  // Phase 2: remaining variables over the whole universe.
  std::set<std::string> all_vars;
  std::function<void(const Term&)> collect = [&](const Term& t) {
    if (t.kind() == Term::Kind::Variable) all_vars.insert(t.name());
    if (t.kind() == Term::Kind::Compound)
      for (const auto& a : t.args()) collect(a);
  };
  for (const auto& e : body) {
    if (const auto* l = std::get_if<Literal>(&e))
      for (const auto& a : l->atom.args) collect(a);
    else if (const auto* n = std::get_if<NafLiteral>(&e))
      for (const auto& a : n->lit.atom.args) collect(a);
    else {
      const auto& bi = std::get<Builtin>(e);
      collect(bi.lhs.lhs);
      if (bi.lhs.op != ArithOp::None) collect(bi.lhs.rhs);
      collect(bi.rhs.lhs);
      if (bi.rhs.op != ArithOp::None) collect(bi.rhs.rhs);
    }
  }

  std::vector<Bindings> complete;
  std::function<void(Bindings, std::vector<std::string>::const_iterator,
                     const std::vector<std::string>&)>
      extend = [&](Bindings b, std::vector<std::string>::const_iterator it,
                   const std::vector<std::string>& missing) {
        if (it == missing.end()) {
          complete.push_back(std::move(b));
          return;
        }
        for (const auto& value : universe) {
          Bindings nb = b;
          nb.emplace(*it, value);
          extend(std::move(nb), std::next(it), missing);
        }
      };
  for (const auto& b : partial) {
    std::vector<std::string> missing;
    for (const auto& v : all_vars)
      if (!b.count(v)) missing.push_back(v);
    extend(b, missing.begin(), missing);
  }

  // Phase 3: builtins filter by direct evaluation.
  std::vector<Bindings> out;
  for (const auto& b : complete) {
    bool ok = true;
    for (const auto& e : body) {
      const auto* bi = std::get_if<Builtin>(&e);
      if (!bi) continue;
      Builtin g;
      g.op = bi->op;
      g.lhs = ArithExpr{subst(bi->lhs.lhs, b), bi->lhs.op,
                        bi->lhs.op == ArithOp::None ? Term{}
                                                    : subst(bi->lhs.rhs, b)};
      g.rhs = ArithExpr{subst(bi->rhs.lhs, b), bi->rhs.op,
                        bi->rhs.op == ArithOp::None ? Term{}
                                                    : subst(bi->rhs.rhs, b)};
      if (!direct_builtin(g, maxint)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(b);
  }
  return out;
}

}  // namespace deolog::test
