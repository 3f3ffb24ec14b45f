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

#include "deolog/asp/solver.hpp"

#include <algorithm>
#include <cassert>

namespace deolog::asp {

namespace {

struct SplitBody {
  std::vector<Literal> pos;
  std::vector<Literal> naf;
  std::vector<Builtin> builtins;
};

SplitBody split_body(const std::vector<BodyElem>& body) {
  SplitBody out;
  for (const auto& e : body) {
    if (const auto* l = std::get_if<Literal>(&e))
      out.pos.push_back(*l);
    else if (const auto* n = std::get_if<NafLiteral>(&e))
      out.naf.push_back(n->lit);
    else
      out.builtins.push_back(std::get<Builtin>(e));
  }
  return out;
}

bool body_holds(const Interpretation& interp, const std::vector<BodyElem>& body,
                long long maxint) {
  for (const auto& e : body) {
    if (const auto* l = std::get_if<Literal>(&e)) {
      if (!interp.count(*l)) return false;
    } else if (const auto* n = std::get_if<NafLiteral>(&e)) {
      if (interp.count(n->lit)) return false;
    } else {
      if (!eval_builtin(std::get<Builtin>(e), maxint)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------
// Proper-subset model search. Variables are the literals of S; the
// all-true assignment satisfies every clause by construction, and we ask
// whether some assignment with at least one false variable also does.
// Clause literal encoding: index*2 + 1 means "var true satisfies",
// index*2 means "var false satisfies".

class SubsetModelSearch {
 public:
  explicit SubsetModelSearch(std::size_t vars) : n_(vars) {}

  void add_clause(std::vector<uint32_t> clause) {
    clauses_.push_back(std::move(clause));
  }

  // True iff a satisfying assignment with >= 1 false variable exists.
  bool proper_submodel_exists() {
    std::vector<uint32_t> at_least_one_false;
    at_least_one_false.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v)
      at_least_one_false.push_back(static_cast<uint32_t>(v * 2));
    clauses_.push_back(std::move(at_least_one_false));
    assign_.assign(n_, -1);
    return search();
  }

 private:
  bool search() {
    // Unit propagation by full scan; instances are tiny.
    while (true) {
      int forced_var = -1, forced_val = 0;
      for (const auto& c : clauses_) {
        int undec = -1;
        int undec_count = 0;
        bool sat = false;
        for (uint32_t enc : c) {
          int v = static_cast<int>(enc >> 1);
          int want = static_cast<int>(enc & 1);
          if (assign_[v] == -1) {
            ++undec_count;
            undec = static_cast<int>(enc);
          } else if (assign_[v] == want) {
            sat = true;
            break;
          }
        }
        if (sat) continue;
        if (undec_count == 0) return false;  // conflict
        if (undec_count == 1 && forced_var == -1) {
          forced_var = undec >> 1;
          forced_val = undec & 1;
        }
      }
      if (forced_var == -1) break;
      assign_[forced_var] = static_cast<int8_t>(forced_val);
    }
    int branch = -1;
    for (std::size_t v = 0; v < n_; ++v)
      if (assign_[v] == -1) {
        branch = static_cast<int>(v);
        break;
      }
    if (branch == -1) return true;  // total assignment, no conflict
    auto saved = assign_;
    assign_[branch] = 0;
    if (search()) return true;
    assign_ = saved;
    assign_[branch] = 1;
    if (search()) return true;
    assign_ = saved;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<uint32_t>> clauses_;
  std::vector<int8_t> assign_;
};

// Minimality of S w.r.t. the rules whose body S satisfies, per the
// P(S) formulation. `use_reduct` switches to the GL variant, where every
// rule with S-disjoint default-negated body contributes.
bool is_subset_minimal(const Interpretation& interp, const Program& program,
                       long long maxint, bool use_reduct) {
  std::vector<Literal> vars(interp.begin(), interp.end());
  auto index_of = [&](const Literal& l) -> int {
    auto it = std::lower_bound(vars.begin(), vars.end(), l);
    if (it == vars.end() || !(*it == l)) return -1;
    return static_cast<int>(it - vars.begin());
  };

  SubsetModelSearch search(vars.size());
  for (const auto& r : program.rules) {
    SplitBody b = split_body(r.body);
    bool builtins_ok = true;
    for (const auto& bi : b.builtins)
      if (!eval_builtin(bi, maxint)) {
        builtins_ok = false;
        break;
      }
    if (!builtins_ok) continue;
    bool naf_clear = true;
    for (const auto& l : b.naf)
      if (interp.count(l)) {
        naf_clear = false;
        break;
      }
    if (!naf_clear) continue;
    bool pos_in = true;
    for (const auto& l : b.pos)
      if (!interp.count(l)) {
        pos_in = false;
        break;
      }
    if (use_reduct) {
      // Reduct rule; only matters for subsets when pos subset of S.
      if (!pos_in) continue;
    } else {
      // P(S) requires the whole body satisfied by S.
      if (!pos_in) continue;
    }
    std::vector<uint32_t> clause;
    for (const auto& l : b.pos) {
      int v = index_of(l);
      assert(v >= 0);
      clause.push_back(static_cast<uint32_t>(v * 2));  // false satisfies
    }
    bool head_in_s = false;
    for (const auto& h : r.head) {
      int v = index_of(h);
      if (v >= 0) {
        clause.push_back(static_cast<uint32_t>(v * 2 + 1));
        head_in_s = true;
      }
    }
    // Body satisfied but no head literal in S: S is not even a model.
    if (!head_in_s) return false;
    search.add_clause(std::move(clause));
  }
  return !search.proper_submodel_exists();
}

// ---------------------------------------------------------------------
// Compiled ground program for model enumeration.


struct CompiledWeak {
  std::vector<int> pos, naf;
  long long weight;
  int level;
};

class ModelSearch {
 public:
  ModelSearch(const Program& program, const SolveOptions& opt)
      : program_(program), opt_(opt) {
    build();
  }

  // Enumerates models; calls on_model(interpretation, cost) for each
  // model whose cost lower bound never exceeded the pruning bound.
  // prune() decides, given the current lower bound, whether the branch
  // can be abandoned.
  template <typename OnModel, typename Prune>
  void run(const OnModel& on_model, const Prune& prune) {
    if (inconsistent_root_) return;
    assign_.assign(universe_.size(), -1);
    wc_state_.assign(weaks_.size(), WcState::Open);
    lower_bound_ = base_cost_;
    nodes_ = 0;
    if (!propagate_initial()) return;
    descend(on_model, prune);
  }

  const std::vector<Literal>& universe() const { return universe_; }

 private:
  enum class WcState : int8_t { Open, Violated, Inactive };

  void build() {
    // Derivable closure over head literals, ignoring default negation.
    std::set<Literal> possible;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : program_.rules) {
        if (r.head.empty()) continue;
        SplitBody b = split_body(r.body);
        bool ok = true;
        for (const auto& bi : b.builtins)
          if (!eval_builtin(bi, opt_.ground.maxint)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (const auto& l : b.pos)
          if (!possible.count(l)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        for (const auto& h : r.head)
          if (possible.insert(h).second) changed = true;
      }
    }
    universe_.assign(possible.begin(), possible.end());
    auto id_of = [&](const Literal& l) -> int {
      auto it = std::lower_bound(universe_.begin(), universe_.end(), l);
      if (it == universe_.end() || !(*it == l)) return -1;
      return static_cast<int>(it - universe_.begin());
    };

    occ_.assign(universe_.size(), {});
    auto add_clause = [&](std::vector<uint32_t> clause) {
      uint32_t idx = static_cast<uint32_t>(clauses_.size());
      for (uint32_t enc : clause) occ_[enc >> 1].push_back(idx);
      clauses_.push_back(std::move(clause));
    };

    for (const auto& r : program_.rules) {
      SplitBody b = split_body(r.body);
      bool ok = true;
      for (const auto& bi : b.builtins)
        if (!eval_builtin(bi, opt_.ground.maxint)) {
          ok = false;
          break;
        }
      if (!ok) continue;  // body false, rule vacuous
      // Clause form: satisfied when some positive body literal is out,
      // some default-negated literal is in, or some head literal is in.
      std::vector<uint32_t> clause;
      for (const auto& l : b.pos) {
        int id = id_of(l);
        if (id < 0) {
          ok = false;  // positive literal can never hold
          break;
        }
        clause.push_back(static_cast<uint32_t>(id * 2));
      }
      if (!ok) continue;
      for (const auto& l : b.naf) {
        int id = id_of(l);
        if (id >= 0) clause.push_back(static_cast<uint32_t>(id * 2 + 1));
        // literals outside the universe are always absent: naf holds
      }
      for (const auto& h : r.head) {
        int id = id_of(h);
        if (id >= 0) clause.push_back(static_cast<uint32_t>(id * 2 + 1));
      }
      if (clause.empty()) {
        inconsistent_root_ = true;  // ":- ." style: no model at all
        return;
      }
      add_clause(std::move(clause));
    }

    // Consistency: a literal and its strong negation never co-occur.
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (universe_[i].strong_neg) continue;
      int j = id_of(universe_[i].negated());
      if (j >= 0)
        add_clause({static_cast<uint32_t>(i * 2),
                    static_cast<uint32_t>(j * 2)});
    }

    wocc_.assign(universe_.size(), {});
    for (const auto& w : program_.weak_constraints) {
      SplitBody b = split_body(w.body);
      bool ok = true;
      for (const auto& bi : b.builtins)
        if (!eval_builtin(bi, opt_.ground.maxint)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      CompiledWeak cw;
      cw.weight = w.weight;
      cw.level = w.level;
      for (const auto& l : b.pos) {
        int id = id_of(l);
        if (id < 0) {
          ok = false;  // can never be violated
          break;
        }
        cw.pos.push_back(id);
      }
      if (!ok) continue;
      for (const auto& l : b.naf) {
        int id = id_of(l);
        if (id >= 0) cw.naf.push_back(id);
      }
      if (cw.pos.empty() && cw.naf.empty()) {
        base_cost_.add(cw.level, cw.weight);
        continue;  // violated by every model
      }
      uint32_t idx = static_cast<uint32_t>(weaks_.size());
      for (int v : cw.pos) wocc_[v].push_back(idx);
      for (int v : cw.naf) wocc_[v].push_back(idx);
      weaks_.push_back(std::move(cw));
    }
  }

  // Returns: -2 satisfied, -1 conflict, -3 open (>= 2 undecided), or the
  // encoded literal of the single undecided position (unit).
  int clause_status(const std::vector<uint32_t>& c) const {
    int undec_count = 0;
    int unit = -3;
    for (uint32_t enc : c) {
      int v = static_cast<int>(enc >> 1);
      int want = static_cast<int>(enc & 1);
      if (assign_[v] == -1) {
        ++undec_count;
        unit = static_cast<int>(enc);
      } else if (assign_[v] == want) {
        return -2;
      }
    }
    if (undec_count == 0) return -1;
    if (undec_count > 1) return -3;
    return unit;
  }

  // Assign and propagate; returns false on conflict. Appends every
  // assignment made (variable index) and weak-state change to trails.
  bool assign_and_propagate(int var, int val, std::vector<int>& trail,
                            std::vector<std::pair<int, WcState>>& wc_trail) {
    std::vector<int> queue;
    assign_[var] = static_cast<int8_t>(val);
    trail.push_back(var);
    queue.push_back(var);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (uint32_t ci : occ_[v]) {
        int enc = clause_status(clauses_[ci]);
        if (enc == -1) return false;  // conflict
        if (enc >= 0) {
          int fv = enc >> 1, fval = enc & 1;
          if (assign_[fv] == -1) {
            assign_[fv] = static_cast<int8_t>(fval);
            trail.push_back(fv);
            queue.push_back(fv);
          }
        }
      }
      update_weaks(v, wc_trail);
    }
    return true;
  }

  void update_weaks(int v, std::vector<std::pair<int, WcState>>& wc_trail) {
    for (uint32_t wi : wocc_[v]) {
      if (wc_state_[wi] != WcState::Open) continue;
      const CompiledWeak& w = weaks_[wi];
      bool violated = true;
      bool inactive = false;
      for (int p : w.pos) {
        if (assign_[p] == 0) inactive = true;
        if (assign_[p] != 1) violated = false;
      }
      for (int n : w.naf) {
        if (assign_[n] == 1) inactive = true;
        if (assign_[n] != 0) violated = false;
      }
      if (inactive) {
        wc_trail.push_back({static_cast<int>(wi), WcState::Open});
        wc_state_[wi] = WcState::Inactive;
      } else if (violated) {
        wc_trail.push_back({static_cast<int>(wi), WcState::Open});
        wc_state_[wi] = WcState::Violated;
        lower_bound_.add(w.level, w.weight);
      }
    }
  }

  void undo(std::vector<int>& trail, std::size_t trail_mark,
            std::vector<std::pair<int, WcState>>& wc_trail,
            std::size_t wc_mark) {
    while (trail.size() > trail_mark) {
      assign_[trail.back()] = -1;
      trail.pop_back();
    }
    while (wc_trail.size() > wc_mark) {
      auto [wi, old] = wc_trail.back();
      wc_trail.pop_back();
      if (wc_state_[wi] == WcState::Violated)
        lower_bound_.add(weaks_[wi].level, -weaks_[wi].weight);
      wc_state_[wi] = old;
    }
  }

  bool propagate_initial() {
    // Unit clauses at the root (facts and their consequences).
    init_trail_.clear();
    init_wc_trail_.clear();
    while (true) {
      int forced = -1;
      for (const auto& c : clauses_) {
        int enc = clause_status(c);
        if (enc == -1) return false;
        if (enc >= 0) {
          forced = enc;
          break;
        }
      }
      if (forced == -1) break;
      if (!assign_and_propagate(forced >> 1, forced & 1, init_trail_,
                                init_wc_trail_))
        return false;
    }
    return true;
  }

  template <typename OnModel, typename Prune>
  void descend(const OnModel& on_model, const Prune& prune) {
    if (++nodes_ > opt_.enum_cap) throw BaseTooLargeError(opt_.enum_cap);
    if (prune(lower_bound_)) return;
    int branch = -1;
    for (std::size_t v = 0; v < universe_.size(); ++v)
      if (assign_[v] == -1) {
        branch = static_cast<int>(v);
        break;
      }
    if (branch == -1) {
      Interpretation model;
      for (std::size_t v = 0; v < universe_.size(); ++v)
        if (assign_[v] == 1) model.insert(universe_[v]);
      on_model(model, lower_bound_);
      return;
    }
    for (int val : {0, 1}) {
      std::vector<int> trail;
      std::vector<std::pair<int, WcState>> wc_trail;
      if (assign_and_propagate(branch, val, trail, wc_trail))
        descend(on_model, prune);
      undo(trail, 0, wc_trail, 0);
    }
  }

  const Program& program_;
  SolveOptions opt_;
  std::vector<Literal> universe_;
  std::vector<CompiledWeak> weaks_;
  std::vector<std::vector<uint32_t>> clauses_;
  std::vector<std::vector<uint32_t>> occ_;
  std::vector<std::vector<uint32_t>> wocc_;
  std::vector<int8_t> assign_;
  std::vector<WcState> wc_state_;
  CostVector lower_bound_;
  CostVector base_cost_;
  std::vector<int> init_trail_;
  std::vector<std::pair<int, WcState>> init_wc_trail_;
  std::size_t nodes_ = 0;
  bool inconsistent_root_ = false;
};

Program grounded_copy(const Program& program, const GroundOptions& opt) {
  if (program.is_ground()) return program;
  return ground(program, opt);
}

}  // namespace

bool satisfies(const Interpretation& interp, const Rule& rule,
               long long maxint) {
  if (!rule.is_ground()) throw Error("satisfies: rule must be ground");
  if (!body_holds(interp, rule.body, maxint)) return true;
  for (const auto& h : rule.head)
    if (interp.count(h)) return true;
  return false;
}

bool violates(const Interpretation& interp, const WeakConstraint& wc,
              long long maxint) {
  if (!wc.is_ground()) throw Error("violates: weak constraint must be ground");
  return body_holds(interp, wc.body, maxint);
}

bool is_answer_set(const Interpretation& interp, const Program& ground_program,
                   long long maxint) {
  if (!ground_program.is_ground())
    throw Error("is_answer_set: program must be ground");
  if (!is_consistent(interp)) return false;
  for (const auto& r : ground_program.rules)
    if (!satisfies(interp, r, maxint)) return false;
  return is_subset_minimal(interp, ground_program, maxint, false);
}

bool is_answer_set_gl(const Interpretation& interp,
                      const Program& ground_program, long long maxint) {
  if (!ground_program.is_ground())
    throw Error("is_answer_set_gl: program must be ground");
  if (!is_consistent(interp)) return false;
  // Model check against the reduct.
  for (const auto& r : ground_program.rules) {
    SplitBody b = split_body(r.body);
    bool keep = true;
    for (const auto& bi : b.builtins)
      if (!eval_builtin(bi, maxint)) {
        keep = false;
        break;
      }
    for (const auto& l : b.naf)
      if (interp.count(l)) {
        keep = false;
        break;
      }
    if (!keep) continue;
    bool pos_in = true;
    for (const auto& l : b.pos)
      if (!interp.count(l)) {
        pos_in = false;
        break;
      }
    if (!pos_in) continue;
    bool head_in = false;
    for (const auto& h : r.head)
      if (interp.count(h)) {
        head_in = true;
        break;
      }
    if (!head_in) return false;
  }
  return is_subset_minimal(interp, ground_program, maxint, true);
}

std::vector<Interpretation> enumerate_answer_sets(const Program& program,
                                                  const SolveOptions& options) {
  Program g = grounded_copy(program, options.ground);
  ModelSearch search(g, options);
  std::vector<Interpretation> out;
  search.run(
      [&](const Interpretation& model, const CostVector&) {
        if (is_subset_minimal(model, g, options.ground.maxint, false))
          out.push_back(model);
      },
      [](const CostVector&) { return false; });
  std::sort(out.begin(), out.end());
  return out;
}

CostVector cost(const Interpretation& interp, const Program& program,
                const GroundOptions& options) {
  Program g = grounded_copy(program, options);
  CostVector total;
  for (const auto& w : g.weak_constraints)
    if (violates(interp, w, options.maxint)) total.add(w.level, w.weight);
  return total;
}

std::vector<OptimalModel> optimal_answer_sets(const Program& program,
                                              const SolveOptions& options) {
  Program g = grounded_copy(program, options.ground);
  ModelSearch search(g, options);
  bool have_best = false;
  CostVector best;
  std::vector<OptimalModel> out;
  search.run(
      [&](const Interpretation& model, const CostVector& model_cost) {
        if (have_best && best < model_cost) return;
        if (!is_subset_minimal(model, g, options.ground.maxint, false)) return;
        if (!have_best || model_cost < best) {
          have_best = true;
          best = model_cost;
          out.clear();
        }
        out.push_back({model, model_cost});
      },
      [&](const CostVector& lower_bound) {
        return have_best && best < lower_bound;
      });
  std::sort(out.begin(), out.end(),
            [](const OptimalModel& a, const OptimalModel& b) {
              return a.interpretation < b.interpretation;
            });
  return out;
}

}  // namespace deolog::asp
