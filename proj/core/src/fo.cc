// Copyright 2026 The inlc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inlc/fo.h"

#include <algorithm>
#include <cassert>

#include "inlc/errors.h"

namespace inlc {

using K = FoFormula::Kind;

FoFormula FoFormula::make(Kind k, std::string name, std::vector<Var> vars,
                          std::vector<FoFormula> kids) {
  return FoFormula(std::make_shared<const Node>(
      Node{k, std::move(name), std::move(vars), std::move(kids)}));
}

FoFormula FoFormula::pred(std::string name, Var arg) {
  return make(K::kPred, std::move(name), {std::move(arg)}, {});
}
FoFormula FoFormula::rel_ni(Var set, Var world) {
  return make(K::kRelNi, "", {std::move(set), std::move(world)}, {});
}
FoFormula FoFormula::rel_n(Var world, Var set) {
  return make(K::kRelN, "", {std::move(world), std::move(set)}, {});
}
FoFormula FoFormula::eq(Var a, Var b) {
  return make(K::kEq, "", {std::move(a), std::move(b)}, {});
}
FoFormula FoFormula::truth() {
  static const FoFormula kTrue = make(K::kTrue, "", {}, {});
  return kTrue;
}
FoFormula FoFormula::falsity() {
  static const FoFormula kFalse = make(K::kFalse, "", {}, {});
  return kFalse;
}
FoFormula FoFormula::negation(FoFormula arg) {
  return make(K::kNot, "", {}, {std::move(arg)});
}
FoFormula FoFormula::conj(std::vector<FoFormula> args) {
  return make(K::kAnd, "", {}, std::move(args));
}
FoFormula FoFormula::disj(std::vector<FoFormula> args) {
  return make(K::kOr, "", {}, std::move(args));
}
FoFormula FoFormula::conj(FoFormula a, FoFormula b) {
  return conj(std::vector<FoFormula>{std::move(a), std::move(b)});
}
FoFormula FoFormula::disj(FoFormula a, FoFormula b) {
  return disj(std::vector<FoFormula>{std::move(a), std::move(b)});
}
FoFormula FoFormula::implies(FoFormula lhs, FoFormula rhs) {
  return make(K::kImplies, "", {}, {std::move(lhs), std::move(rhs)});
}
FoFormula FoFormula::forall(Var v, FoFormula body) {
  Kind k = v.sort == Sort::kWorld ? K::kForallWorld : K::kForallSubset;
  return make(k, "", {std::move(v)}, {std::move(body)});
}
FoFormula FoFormula::exists(Var v, FoFormula body) {
  Kind k = v.sort == Sort::kWorld ? K::kExistsWorld : K::kExistsSubset;
  return make(k, "", {std::move(v)}, {std::move(body)});
}

bool FoFormula::is_quantifier() const { return is_universal() || is_existential(); }

std::size_t FoFormula::size() const {
  std::size_t n = 1;
  for (const auto& k : children()) n += k.size();
  return n;
}

bool operator==(const FoFormula& a, const FoFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->name == b.node_->name &&
         a.node_->vars == b.node_->vars && a.node_->kids == b.node_->kids;
}

namespace {

// Rebuilds `f` with new children (same kind, name and variables).
FoFormula rebuild(const FoFormula& f, std::vector<FoFormula> kids) {
  switch (f.kind()) {
    case K::kNot: return FoFormula::negation(std::move(kids[0]));
    case K::kAnd: return FoFormula::conj(std::move(kids));
    case K::kOr: return FoFormula::disj(std::move(kids));
    case K::kImplies:
      return FoFormula::implies(std::move(kids[0]), std::move(kids[1]));
    case K::kForallWorld:
    case K::kForallSubset:
      return FoFormula::forall(f.bound(), std::move(kids[0]));
    case K::kExistsWorld:
    case K::kExistsSubset:
      return FoFormula::exists(f.bound(), std::move(kids[0]));
    default:
      return f;
  }
}

void collect_free(const FoFormula& f, std::set<std::string>& bound,
                  std::set<Var>& out) {
  if (f.is_quantifier()) {
    const std::string& name = f.bound().name;
    bool fresh = bound.insert(name).second;
    collect_free(f.body(), bound, out);
    if (fresh) bound.erase(name);
    return;
  }
  for (const Var& v : f.vars()) {
    if (!bound.count(v.name)) out.insert(v);
  }
  for (const auto& k : f.children()) collect_free(k, bound, out);
}

bool occurs_free(const FoFormula& f, const std::string& name) {
  if (f.is_quantifier()) {
    return f.bound().name != name && occurs_free(f.body(), name);
  }
  for (const Var& v : f.vars()) {
    if (v.name == name) return true;
  }
  for (const auto& k : f.children()) {
    if (occurs_free(k, name)) return true;
  }
  return false;
}

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& taken) {
  std::string name = base + "'";
  while (taken.count(name)) name += "'";
  return name;
}

}  // namespace

std::set<Var> free_vars(const FoFormula& f) {
  std::set<std::string> bound;
  std::set<Var> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_var_names(const FoFormula& f) {
  std::set<std::string> out;
  for (const Var& v : f.vars()) out.insert(v.name);
  for (const auto& k : f.children()) {
    auto sub = all_var_names(k);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::set<std::string> predicates(const FoFormula& f) {
  std::set<std::string> out;
  if (f.is(K::kPred)) out.insert(f.name());
  for (const auto& k : f.children()) {
    auto sub = predicates(k);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

namespace {
bool well_sorted_in(const FoFormula& f, std::map<std::string, Sort>& scope) {
  auto check = [&](const Var& v, Sort expected) {
    if (v.sort != expected) return false;
    auto it = scope.find(v.name);
    return it == scope.end() || it->second == expected;
  };
  switch (f.kind()) {
    case K::kPred:
      return check(f.vars()[0], Sort::kWorld);
    case K::kRelNi:
      return check(f.vars()[0], Sort::kSubset) && check(f.vars()[1], Sort::kWorld);
    case K::kRelN:
      return check(f.vars()[0], Sort::kWorld) && check(f.vars()[1], Sort::kSubset);
    case K::kEq:
      return check(f.vars()[0], Sort::kWorld) && check(f.vars()[1], Sort::kWorld);
    default:
      break;
  }
  if (f.is_quantifier()) {
    const Var& v = f.bound();
    Sort expected = (f.is(K::kForallWorld) || f.is(K::kExistsWorld))
                        ? Sort::kWorld : Sort::kSubset;
    if (v.sort != expected) return false;
    auto saved = scope.find(v.name) == scope.end()
                     ? std::nullopt : std::optional<Sort>(scope[v.name]);
    scope[v.name] = v.sort;
    bool ok = well_sorted_in(f.body(), scope);
    if (saved) scope[v.name] = *saved; else scope.erase(v.name);
    return ok;
  }
  for (const auto& k : f.children()) {
    if (!well_sorted_in(k, scope)) return false;
  }
  return true;
}
}  // namespace

bool is_well_sorted(const FoFormula& f) {
  std::map<std::string, Sort> scope;
  return well_sorted_in(f, scope);
}

// ---------------------------------------------------------------------------
// Evaluation

struct FoEvaluator::Impl {
  struct CNode {
    K kind;
    int a = -1;
    int b = -1;
    int pred = -1;
    std::vector<int> kids;
    std::vector<int> free_slots;
    std::vector<std::size_t> strides;
    bool memoized = false;
    mutable std::vector<std::uint32_t> stamp;
    mutable std::vector<std::uint8_t> value;
  };

  static constexpr std::size_t kMaxMemo = std::size_t{1} << 16;

  const NeighbourhoodFrame* frame;
  std::vector<CNode> nodes;
  std::vector<Sort> slot_sort;
  std::vector<std::pair<std::string, int>> free_inputs;
  std::vector<std::string> pred_names;
  int root = -1;

  mutable std::vector<std::uint32_t> env;
  mutable std::vector<WorldSet> pred_values;
  mutable std::uint32_t generation = 0;
  mutable bool primed = false;

  std::size_t domain(int slot) const {
    return slot_sort[slot] == Sort::kWorld ? frame->size()
                                           : frame->subset_count();
  }

  int slot_for(const Var& v, std::map<std::string, int>& scope) {
    auto it = scope.find(v.name);
    if (it != scope.end()) {
      if (slot_sort[it->second] != v.sort) {
        throw EvalError("variable " + v.name + " used at two sorts");
      }
      return it->second;
    }
    int slot = static_cast<int>(slot_sort.size());
    slot_sort.push_back(v.sort);
    scope[v.name] = slot;
    free_inputs.emplace_back(v.name, slot);
    return slot;
  }

  int pred_index(const std::string& name) {
    auto it = std::find(pred_names.begin(), pred_names.end(), name);
    if (it != pred_names.end()) return static_cast<int>(it - pred_names.begin());
    pred_names.push_back(name);
    return static_cast<int>(pred_names.size() - 1);
  }

  // Returns the node id and accumulates the set of slots used freely.
  int compile(const FoFormula& f, std::map<std::string, int>& scope,
              std::set<int>& used) {
    CNode n;
    n.kind = f.kind();
    auto expect = [&](const Var& v, Sort s) {
      if (v.sort != s) throw EvalError("ill-sorted use of variable " + v.name);
      int slot = slot_for(v, scope);
      used.insert(slot);
      return slot;
    };
    switch (f.kind()) {
      case K::kPred:
        n.a = expect(f.vars()[0], Sort::kWorld);
        n.pred = pred_index(f.name());
        break;
      case K::kRelNi:
        n.a = expect(f.vars()[0], Sort::kSubset);
        n.b = expect(f.vars()[1], Sort::kWorld);
        break;
      case K::kRelN:
        n.a = expect(f.vars()[0], Sort::kWorld);
        n.b = expect(f.vars()[1], Sort::kSubset);
        break;
      case K::kEq:
        n.a = expect(f.vars()[0], Sort::kWorld);
        n.b = expect(f.vars()[1], Sort::kWorld);
        break;
      case K::kTrue:
      case K::kFalse:
        break;
      default:
        if (f.is_quantifier()) {
          const Var& v = f.bound();
          int slot = static_cast<int>(slot_sort.size());
          slot_sort.push_back(v.sort);
          auto saved = scope.find(v.name);
          std::optional<int> previous;
          if (saved != scope.end()) previous = saved->second;
          scope[v.name] = slot;
          std::set<int> inner;
          n.kids.push_back(compile(f.body(), scope, inner));
          if (previous) scope[v.name] = *previous; else scope.erase(v.name);
          inner.erase(slot);
          n.a = slot;
          n.free_slots.assign(inner.begin(), inner.end());
          used.insert(inner.begin(), inner.end());
          std::size_t size = 1;
          for (int s : n.free_slots) {
            n.strides.push_back(size);
            size *= domain(s);
            if (size > kMaxMemo) break;
          }
          if (size <= kMaxMemo) {
            n.memoized = true;
            n.stamp.assign(size, 0);
            n.value.assign(size, 0);
          }
        } else {
          for (const auto& k : f.children()) {
            n.kids.push_back(compile(k, scope, used));
          }
        }
    }
    nodes.push_back(std::move(n));
    return static_cast<int>(nodes.size() - 1);
  }

  bool eval(int id) const {
    const CNode& n = nodes[id];
    switch (n.kind) {
      case K::kPred:
        return pred_values[n.pred].contains(env[n.a]);
      case K::kRelNi:
        return WorldSet(env[n.a]).contains(env[n.b]);
      case K::kRelN:
        return frame->has_neighbourhood(env[n.a], WorldSet(env[n.b]));
      case K::kEq:
        return env[n.a] == env[n.b];
      case K::kTrue:
        return true;
      case K::kFalse:
        return false;
      case K::kNot:
        return !eval(n.kids[0]);
      case K::kAnd:
        for (int k : n.kids) {
          if (!eval(k)) return false;
        }
        return true;
      case K::kOr:
        for (int k : n.kids) {
          if (eval(k)) return true;
        }
        return false;
      case K::kImplies:
        return !eval(n.kids[0]) || eval(n.kids[1]);
      default:
        break;
    }
    std::size_t index = 0;
    if (n.memoized) {
      for (std::size_t i = 0; i < n.free_slots.size(); ++i) {
        index += env[n.free_slots[i]] * n.strides[i];
      }
      if (n.stamp[index] == generation) return n.value[index];
    }
    const bool universal = n.kind == K::kForallWorld || n.kind == K::kForallSubset;
    const std::uint32_t dom = static_cast<std::uint32_t>(domain(n.a));
    const std::uint32_t saved = env[n.a];
    bool result = universal;
    for (std::uint32_t v = 0; v < dom; ++v) {
      env[n.a] = v;
      if (eval(n.kids[0]) != universal) {
        result = !universal;
        break;
      }
    }
    env[n.a] = saved;
    if (n.memoized) {
      n.stamp[index] = generation;
      n.value[index] = result;
    }
    return result;
  }
};

FoEvaluator::FoEvaluator(const NeighbourhoodFrame& frame, const FoFormula& alpha)
    : impl_(std::make_unique<Impl>()) {
  impl_->frame = &frame;
  std::map<std::string, int> scope;
  std::set<int> used;
  impl_->root = impl_->compile(alpha, scope, used);
  impl_->env.assign(impl_->slot_sort.size(), 0);
  impl_->pred_values.assign(impl_->pred_names.size(), WorldSet());
}

FoEvaluator::~FoEvaluator() = default;
FoEvaluator::FoEvaluator(FoEvaluator&&) noexcept = default;
FoEvaluator& FoEvaluator::operator=(FoEvaluator&&) noexcept = default;

bool FoEvaluator::operator()(const Valuation& predicates,
                             const Assignment& assignment) const {
  Impl& m = *impl_;
  bool changed = !m.primed;
  for (std::size_t i = 0; i < m.pred_names.size(); ++i) {
    auto it = predicates.find(m.pred_names[i]);
    if (it == predicates.end()) {
      throw EvalError("no interpretation for predicate " + m.pred_names[i]);
    }
    WorldSet value = it->second & m.frame->worlds();
    if (value != m.pred_values[i]) changed = true;
    m.pred_values[i] = value;
  }
  if (changed) {
    ++m.generation;
    m.primed = true;
  }
  for (const auto& [name, slot] : m.free_inputs) {
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      throw EvalError("free variable " + name + " is unassigned");
    }
    if (m.slot_sort[slot] == Sort::kWorld) {
      const World* w = std::get_if<World>(&it->second);
      if (!w) throw EvalError("variable " + name + " needs a world");
      if (*w >= m.frame->size()) throw UnknownWorld("world " + std::to_string(*w));
      m.env[slot] = *w;
    } else {
      const WorldSet* s = std::get_if<WorldSet>(&it->second);
      if (!s) throw EvalError("variable " + name + " needs a subset");
      if (!s->subset_of(m.frame->worlds())) {
        throw EvalError("subset value of " + name + " is outside the frame");
      }
      m.env[slot] = s->bits();
    }
  }
  return m.eval(m.root);
}

bool eval_fo(const NeighbourhoodFrame& frame, const Valuation& predicates,
             const Assignment& assignment, const FoFormula& alpha) {
  return FoEvaluator(frame, alpha)(predicates, assignment);
}

// ---------------------------------------------------------------------------
// Substitution

FoFormula substitute_var(const FoFormula& f, const Var& from, const Var& to) {
  if (from.name == to.name) return f;
  switch (f.kind()) {
    case K::kPred:
    case K::kRelNi:
    case K::kRelN:
    case K::kEq: {
      std::vector<Var> vars(f.vars().begin(), f.vars().end());
      for (Var& v : vars) {
        if (v.name == from.name) v = to;
      }
      switch (f.kind()) {
        case K::kPred: return FoFormula::pred(f.name(), vars[0]);
        case K::kRelNi: return FoFormula::rel_ni(vars[0], vars[1]);
        case K::kRelN: return FoFormula::rel_n(vars[0], vars[1]);
        default: return FoFormula::eq(vars[0], vars[1]);
      }
    }
    case K::kTrue:
    case K::kFalse:
      return f;
    default:
      break;
  }
  if (f.is_quantifier()) {
    const Var& bound = f.bound();
    if (bound.name == from.name || !occurs_free(f.body(), from.name)) return f;
    FoFormula body = f.body();
    Var binder = bound;
    if (bound.name == to.name) {
      auto taken = all_var_names(body);
      taken.insert(to.name);
      taken.insert(from.name);
      binder.name = fresh_name(bound.name, taken);
      body = substitute_var(body, bound, binder);
    }
    body = substitute_var(body, from, to);
    return f.is_universal() ? FoFormula::forall(binder, body)
                            : FoFormula::exists(binder, body);
  }
  std::vector<FoFormula> kids;
  for (const auto& k : f.children()) kids.push_back(substitute_var(k, from, to));
  return rebuild(f, std::move(kids));
}

namespace {

FoFormula rename_clashing_binders(const FoFormula& f,
                                  const std::set<std::string>& clash,
                                  std::set<std::string>& taken) {
  if (f.is_quantifier()) {
    Var binder = f.bound();
    FoFormula body = f.body();
    if (clash.count(binder.name)) {
      Var renamed = binder;
      renamed.name = fresh_name(binder.name, taken);
      taken.insert(renamed.name);
      body = substitute_var(body, binder, renamed);
      binder = renamed;
    }
    body = rename_clashing_binders(body, clash, taken);
    return f.is_universal() ? FoFormula::forall(binder, body)
                            : FoFormula::exists(binder, body);
  }
  if (f.children().empty()) return f;
  std::vector<FoFormula> kids;
  for (const auto& k : f.children()) {
    kids.push_back(rename_clashing_binders(k, clash, taken));
  }
  return rebuild(f, std::move(kids));
}

FoFormula replace_pred(const FoFormula& f, const std::string& name,
                       const PredicateDescriptor& sigma) {
  if (f.is(K::kPred)) {
    if (f.name() != name) return f;
    return substitute_var(sigma.body, sigma.hole, f.vars()[0]);
  }
  if (f.children().empty()) return f;
  std::vector<FoFormula> kids;
  for (const auto& k : f.children()) kids.push_back(replace_pred(k, name, sigma));
  return rebuild(f, std::move(kids));
}

}  // namespace

FoFormula substitute_predicate(const FoFormula& alpha, const std::string& name,
                               const PredicateDescriptor& sigma) {
  std::set<std::string> clash;
  for (const Var& v : free_vars(sigma.body)) {
    if (v.name != sigma.hole.name) clash.insert(v.name);
  }
  std::set<std::string> taken = all_var_names(alpha);
  auto sigma_names = all_var_names(sigma.body);
  taken.insert(sigma_names.begin(), sigma_names.end());
  FoFormula renamed = rename_clashing_binders(alpha, clash, taken);
  return replace_pred(renamed, name, sigma);
}

// ---------------------------------------------------------------------------
// Simplification

namespace {

std::vector<FoFormula> conjuncts_of(const FoFormula& f) {
  if (f.is(K::kAnd)) return {f.children().begin(), f.children().end()};
  return {f};
}

FoFormula make_and(std::vector<FoFormula> args) {
  if (args.empty()) return FoFormula::truth();
  if (args.size() == 1) return args[0];
  return FoFormula::conj(std::move(args));
}

// If `conjuncts` contains an equation between `v` and another world
// variable, removes it and returns that variable.
std::optional<Var> take_equation(std::vector<FoFormula>& conjuncts,
                                 const Var& v) {
  for (auto it = conjuncts.begin(); it != conjuncts.end(); ++it) {
    if (!it->is(K::kEq)) continue;
    const Var& a = it->vars()[0];
    const Var& b = it->vars()[1];
    std::optional<Var> other;
    if (a.name == v.name && b.name != v.name) other = b;
    if (b.name == v.name && a.name != v.name) other = a;
    if (other) {
      conjuncts.erase(it);
      return other;
    }
  }
  return std::nullopt;
}

FoFormula simp(const FoFormula& f);

FoFormula simp_and(const FoFormula& f) {
  std::vector<FoFormula> args;
  for (const auto& k : f.children()) {
    FoFormula s = simp(k);
    if (s.is(K::kFalse)) return s;
    if (s.is(K::kTrue)) continue;
    for (const auto& c : conjuncts_of(s)) {
      if (std::find(args.begin(), args.end(), c) == args.end()) args.push_back(c);
    }
  }
  if (args.size() <= 1) return make_and(std::move(args));
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!args[i].is_existential()) continue;
    const Var v = args[i].bound();
    bool clash = false;
    for (std::size_t j = 0; j < args.size() && !clash; ++j) {
      if (j != i) clash = occurs_free(args[j], v.name);
    }
    if (clash) continue;
    std::vector<FoFormula> inner = args;
    inner[i] = args[i].body();
    return FoFormula::exists(v, simp(FoFormula::conj(std::move(inner))));
  }
  return FoFormula::conj(std::move(args));
}

FoFormula simp_or(const FoFormula& f) {
  std::vector<FoFormula> args;
  for (const auto& k : f.children()) {
    FoFormula s = simp(k);
    if (s.is(K::kTrue)) return s;
    if (s.is(K::kFalse)) continue;
    std::vector<FoFormula> parts =
        s.is(K::kOr) ? std::vector<FoFormula>(s.children().begin(), s.children().end())
                     : std::vector<FoFormula>{s};
    for (const auto& d : parts) {
      if (std::find(args.begin(), args.end(), d) == args.end()) args.push_back(d);
    }
  }
  if (args.empty()) return FoFormula::falsity();
  if (args.size() == 1) return args[0];
  return FoFormula::disj(std::move(args));
}

FoFormula simp_implies(const FoFormula& f) {
  FoFormula a = simp(f.lhs());
  FoFormula b = simp(f.rhs());
  if (a.is(K::kTrue)) return b;
  if (a.is(K::kFalse) || b.is(K::kTrue) || a == b) return FoFormula::truth();
  if (b.is(K::kFalse)) return simp(FoFormula::negation(a));
  if (a.is_existential() && !occurs_free(b, a.bound().name)) {
    return FoFormula::forall(a.bound(),
                             simp(FoFormula::implies(a.body(), b)));
  }
  if (b.is_universal() && !occurs_free(a, b.bound().name)) {
    return FoFormula::forall(b.bound(),
                             simp(FoFormula::implies(a, b.body())));
  }
  if (b.is(K::kImplies)) {
    return simp(FoFormula::implies(FoFormula::conj(a, b.lhs()), b.rhs()));
  }
  return FoFormula::implies(a, b);
}

FoFormula simp_quantifier(const FoFormula& f) {
  const Var v = f.bound();
  FoFormula body = simp(f.body());
  if (body.is(K::kTrue) || body.is(K::kFalse)) return body;
  if (!occurs_free(body, v.name)) return body;
  if (v.sort == Sort::kWorld) {
    if (f.is_existential()) {
      auto conj = conjuncts_of(body);
      if (auto t = take_equation(conj, v)) {
        return simp(substitute_var(make_and(std::move(conj)), v, *t));
      }
    } else if (body.is(K::kImplies)) {
      auto conj = conjuncts_of(body.lhs());
      if (auto t = take_equation(conj, v)) {
        return simp(substitute_var(
            FoFormula::implies(make_and(std::move(conj)), body.rhs()), v, *t));
      }
    }
  }
  return f.is_universal() ? FoFormula::forall(v, body) : FoFormula::exists(v, body);
}

FoFormula simp(const FoFormula& f) {
  switch (f.kind()) {
    case K::kEq:
      if (f.vars()[0].name == f.vars()[1].name) return FoFormula::truth();
      return f;
    case K::kPred:
    case K::kRelNi:
    case K::kRelN:
    case K::kTrue:
    case K::kFalse:
      return f;
    case K::kNot: {
      FoFormula a = simp(f.arg());
      if (a.is(K::kTrue)) return FoFormula::falsity();
      if (a.is(K::kFalse)) return FoFormula::truth();
      if (a.is(K::kNot)) return a.arg();
      return FoFormula::negation(a);
    }
    case K::kAnd:
      return simp_and(f);
    case K::kOr:
      return simp_or(f);
    case K::kImplies:
      return simp_implies(f);
    default:
      return simp_quantifier(f);
  }
}

// Gives every binder a name not bound or free anywhere above or before it.
FoFormula rename_apart(const FoFormula& f, std::set<std::string>& used) {
  if (f.is_quantifier()) {
    Var binder = f.bound();
    FoFormula body = f.body();
    if (used.count(binder.name)) {
      std::set<std::string> taken = used;
      for (const auto& n : all_var_names(body)) taken.insert(n);
      Var renamed = binder;
      renamed.name = fresh_name(binder.name, taken);
      body = substitute_var(body, binder, renamed);
      binder = renamed;
    }
    used.insert(binder.name);
    body = rename_apart(body, used);
    return f.is_universal() ? FoFormula::forall(binder, body)
                            : FoFormula::exists(binder, body);
  }
  if (f.children().empty()) return f;
  std::vector<FoFormula> kids;
  for (const auto& k : f.children()) kids.push_back(rename_apart(k, used));
  return rebuild(f, std::move(kids));
}

}  // namespace

FoFormula simplify_fo(const FoFormula& alpha) {
  FoFormula current = alpha;
  for (int round = 0; round < 32; ++round) {
    FoFormula next = simp(current);
    if (next == current) break;
    current = next;
  }
  std::set<std::string> used;
  for (const auto& v : free_vars(current)) used.insert(v.name);
  return rename_apart(current, used);
}

}  // namespace inlc
