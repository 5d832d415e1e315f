// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pnet/proofnet.hpp"
#include "pnet/rewrite.hpp"

namespace pnet {

// ---------------------------------------------------------------------------
// Lambda terms

enum class TKind : std::uint8_t { Var, Abs, App };

struct Term;
using TPtr = std::shared_ptr<const Term>;

struct Term {
  TKind kind;
  std::string var;  // Var / Abs
  TPtr a, b;        // Abs: a = body; App: a = function, b = argument
};

inline TPtr t_var(std::string x) {
  auto t = std::make_shared<Term>();
  t->kind = TKind::Var;
  t->var = std::move(x);
  return t;
}
inline TPtr t_abs(std::string x, TPtr body) {
  auto t = std::make_shared<Term>();
  t->kind = TKind::Abs;
  t->var = std::move(x);
  t->a = std::move(body);
  return t;
}
inline TPtr t_app(TPtr f, TPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = TKind::App;
  t->a = std::move(f);
  t->b = std::move(a);
  return t;
}

inline bool teq(const TPtr& a, const TPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TKind::Var: return a->var == b->var;
    case TKind::Abs: {
      if (a->var == b->var) return teq(a->a, b->a);
      return false;  // terms in derivations are compared literally
    }
    case TKind::App: return teq(a->a, b->a) && teq(a->b, b->b);
  }
  return false;
}

inline std::string to_string(const TPtr& t) {
  switch (t->kind) {
    case TKind::Var: return t->var;
    case TKind::Abs: return "\\" + t->var + "." + to_string(t->a);
    case TKind::App: return "(" + to_string(t->a) + ")" +
                            (t->b->kind == TKind::Var ? to_string(t->b)
                                                      : "(" + to_string(t->b) + ")");
  }
  return "?";
}

inline std::size_t count_occ(const TPtr& t, const std::string& x) {
  switch (t->kind) {
    case TKind::Var: return t->var == x ? 1 : 0;
    case TKind::Abs: return t->var == x ? 0 : count_occ(t->a, x);
    case TKind::App: return count_occ(t->a, x) + count_occ(t->b, x);
  }
  return 0;
}

inline TPtr rename_free(const TPtr& t, const std::string& from, const std::string& to) {
  switch (t->kind) {
    case TKind::Var: return t->var == from ? t_var(to) : t;
    case TKind::Abs:
      if (t->var == from) return t;
      return t_abs(t->var, rename_free(t->a, from, to));
    case TKind::App: return t_app(rename_free(t->a, from, to), rename_free(t->b, from, to));
  }
  return t;
}

inline void term_free_vars(const TPtr& t, std::set<std::string>& bound,
                           std::set<std::string>& out) {
  switch (t->kind) {
    case TKind::Var:
      if (!bound.count(t->var)) out.insert(t->var);
      return;
    case TKind::Abs: {
      bool fresh = bound.insert(t->var).second;
      term_free_vars(t->a, bound, out);
      if (fresh) bound.erase(t->var);
      return;
    }
    case TKind::App:
      term_free_vars(t->a, bound, out);
      term_free_vars(t->b, bound, out);
      return;
  }
}
inline std::set<std::string> term_free_vars(const TPtr& t) {
  std::set<std::string> b, o;
  term_free_vars(t, b, o);
  return o;
}

inline TPtr term_subst(const TPtr& t, const std::string& x, const TPtr& u) {
  switch (t->kind) {
    case TKind::Var: return t->var == x ? u : t;
    case TKind::Abs: {
      if (t->var == x) return t;
      if (term_free_vars(u).count(t->var)) {
        std::set<std::string> used = term_free_vars(u);
        used.insert(x);
        std::set<std::string> bnd, fv;
        term_free_vars(t->a, bnd, fv);
        used.insert(fv.begin(), fv.end());
        std::string nv = fresh_name(t->var, used);
        return t_abs(nv, term_subst(rename_free(t->a, t->var, nv), x, u));
      }
      return t_abs(t->var, term_subst(t->a, x, u));
    }
    case TKind::App: return t_app(term_subst(t->a, x, u), term_subst(t->b, x, u));
  }
  return t;
}

// leftmost-outermost beta step
inline std::optional<TPtr> beta_step(const TPtr& t) {
  if (t->kind == TKind::App && t->a->kind == TKind::Abs)
    return term_subst(t->a->a, t->a->var, t->b);
  switch (t->kind) {
    case TKind::Abs:
      if (auto r = beta_step(t->a)) return t_abs(t->var, *r);
      return {};
    case TKind::App:
      if (auto r = beta_step(t->a)) return t_app(*r, t->b);
      if (auto r = beta_step(t->b)) return t_app(t->a, *r);
      return {};
    default: return {};
  }
}

// ---------------------------------------------------------------------------
// Formulas of the lambda type system

// F^lambda_s: X_t | F -o F | !_{t,d,n}F^lambda_{t+1} -o F | all X_t. F  (t >= s)
inline bool is_lambda_formula(const FPtr& f, std::uint32_t s) {
  switch (f->kind) {
    case FKind::Atom: return f->positive && f->level && *f->level >= s;
    case FKind::Forall: return f->level && *f->level >= s && is_lambda_formula(f->left, s);
    case FKind::Par: {
      const FPtr& l = f->left;
      if (l->kind == FKind::Quest) {
        if (!l->idx || l->idx->s < s) return false;
        return is_lambda_formula(dual(l->left), l->idx->s + 1) && is_lambda_formula(f->right, s);
      }
      return is_lambda_formula(dual(l), s) && is_lambda_formula(f->right, s);
    }
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Typing contexts and derivations

struct CtxEntry {
  FPtr type;
  std::optional<ExpIndex> label;  // nullopt = linear
};
using TypingCtx = std::map<std::string, CtxEntry>;

enum class DRule : std::uint8_t {
  Ax, ForallI, ForallE, Der, Weak, Cont, ImpI, BangI, ImpE, BangE
};

inline const char* drule_name(DRule r) {
  switch (r) {
    case DRule::Ax: return "ax";
    case DRule::ForallI: return "forall_i";
    case DRule::ForallE: return "forall_e";
    case DRule::Der: return "der";
    case DRule::Weak: return "weak";
    case DRule::Cont: return "cont";
    case DRule::ImpI: return "imp_i";
    case DRule::BangI: return "bang_i";
    case DRule::ImpE: return "imp_e";
    case DRule::BangE: return "bang_e";
  }
  return "?";
}

struct Derivation;
using DPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  DRule rule;
  std::vector<DPtr> premises;
  std::string x, y, z;                    // rule variables
  FPtr formula;                           // ax type / weak type / forall_e witness
  std::string var;                        // forall_i binder
  std::optional<std::uint32_t> var_level; // forall_i binder level
  std::optional<ExpIndex> idx;            // der/weak label
  std::vector<std::pair<std::string, ExpIndex>> sigma;  // bang_e promoted variables
};

inline DPtr d_ax(std::string x, FPtr a) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::Ax;
  d->x = std::move(x);
  d->formula = std::move(a);
  return d;
}
inline DPtr d_forall_i(std::string var, std::uint32_t lvl, DPtr p) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::ForallI;
  d->var = std::move(var);
  d->var_level = lvl;
  d->premises = {std::move(p)};
  return d;
}
inline DPtr d_forall_e(FPtr witness, DPtr p) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::ForallE;
  d->formula = std::move(witness);
  d->premises = {std::move(p)};
  return d;
}
inline DPtr d_der(std::string x, ExpIndex ix, DPtr p) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::Der;
  d->x = std::move(x);
  d->idx = ix;
  d->premises = {std::move(p)};
  return d;
}
inline DPtr d_weak(std::string x, FPtr a, ExpIndex ix, DPtr p) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::Weak;
  d->x = std::move(x);
  d->formula = std::move(a);
  d->idx = ix;
  d->premises = {std::move(p)};
  return d;
}
inline DPtr d_cont(std::string x, std::string y, std::string z, DPtr p) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::Cont;
  d->x = std::move(x);
  d->y = std::move(y);
  d->z = std::move(z);
  d->premises = {std::move(p)};
  return d;
}
inline DPtr d_imp_i(std::string x, DPtr p) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::ImpI;
  d->x = std::move(x);
  d->premises = {std::move(p)};
  return d;
}
inline DPtr d_bang_i(std::string x, DPtr p) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::BangI;
  d->x = std::move(x);
  d->premises = {std::move(p)};
  return d;
}
inline DPtr d_imp_e(DPtr f, DPtr a) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::ImpE;
  d->premises = {std::move(f), std::move(a)};
  return d;
}
inline DPtr d_bang_e(DPtr f, DPtr a, std::vector<std::pair<std::string, ExpIndex>> sigma) {
  auto d = std::make_shared<Derivation>();
  d->rule = DRule::BangE;
  d->premises = {std::move(f), std::move(a)};
  d->sigma = std::move(sigma);
  return d;
}

// ---------------------------------------------------------------------------
// Derivation checking (judgements are recomputed, never trusted)

struct Judgement {
  TypingCtx ctx;
  TPtr term;
  FPtr type;
};

struct CheckResult {
  std::vector<Violation> violations;
  std::optional<Judgement> judgement;
  bool ok() const { return violations.empty(); }
};

namespace detail {

inline void check_d(const DPtr& d, const std::string& path, CheckResult& res,
                    std::optional<Judgement>& out);

inline std::optional<Judgement> check_child(const DPtr& d, std::size_t i,
                                            const std::string& path, CheckResult& res) {
  std::optional<Judgement> j;
  check_d(d->premises[i], path + "." + std::to_string(i), res, j);
  return j;
}

inline std::string idx_str(const ExpIndex& ix) { return ix.to_string(); }

inline void check_d(const DPtr& d, const std::string& path, CheckResult& res,
                    std::optional<Judgement>& out) {
  auto bad = [&](const std::string& detail) {
    res.violations.push_back({drule_name(d->rule), path, detail});
  };
  switch (d->rule) {
    case DRule::Ax: {
      if (!d->formula || !is_lambda_formula(d->formula, 0)) {
        bad("ax type is not a lambda-system formula");
        return;
      }
      Judgement j;
      j.ctx[d->x] = {d->formula, std::nullopt};
      j.term = t_var(d->x);
      j.type = d->formula;
      out = j;
      return;
    }
    case DRule::ForallI: {
      auto p = check_child(d, 0, path, res);
      if (!p) return;
      for (auto& [v, e] : p->ctx)
        if (free_vars(e.type).count(d->var)) {
          bad("variable " + d->var + " free in the context at " + v);
          return;
        }
      Judgement j = *p;
      j.type = f_forall(d->var, d->var_level, p->type);
      out = j;
      return;
    }
    case DRule::ForallE: {
      auto p = check_child(d, 0, path, res);
      if (!p) return;
      if (p->type->kind != FKind::Forall || !p->type->level) {
        bad("premise type is not universally quantified");
        return;
      }
      auto sm = d->formula ? s_min(d->formula) : std::nullopt;
      if (d->formula && sm && *sm < *p->type->level) {
        bad("witness s_min " + std::to_string(*sm) + " below " +
            std::to_string(*p->type->level));
        return;
      }
      Judgement j = *p;
      j.type = substitute(p->type->left, p->type->name, d->formula);
      if (!is_lambda_formula(j.type, 0)) {
        bad("instantiated type leaves the lambda-system grammar");
        return;
      }
      out = j;
      return;
    }
    case DRule::Der: {
      auto p = check_child(d, 0, path, res);
      if (!p) return;
      auto it = p->ctx.find(d->x);
      if (it == p->ctx.end() || it->second.label) {
        bad("dereliction needs a linear occurrence of " + d->x);
        return;
      }
      if (!is_lambda_formula(it->second.type, d->idx->s + 1)) {
        bad("type of " + d->x + " is not in F_{s+1} for s=" + std::to_string(d->idx->s));
        return;
      }
      Judgement j = *p;
      j.ctx[d->x].label = d->idx;
      out = j;
      return;
    }
    case DRule::Weak: {
      auto p = check_child(d, 0, path, res);
      if (!p) return;
      if (p->ctx.count(d->x)) {
        bad("weakened variable already in the context");
        return;
      }
      if (!is_lambda_formula(d->formula, d->idx->s + 1)) {
        bad("weakened type not in F_{s+1}");
        return;
      }
      Judgement j = *p;
      j.ctx[d->x] = {d->formula, d->idx};
      out = j;
      return;
    }
    case DRule::Cont: {
      auto p = check_child(d, 0, path, res);
      if (!p) return;
      auto iy = p->ctx.find(d->y), iz = p->ctx.find(d->z);
      if (iy == p->ctx.end() || iz == p->ctx.end() || !iy->second.label || !iz->second.label ||
          !(*iy->second.label == *iz->second.label) || !feq(iy->second.type, iz->second.type)) {
        bad("contracted variables must share a banged type");
        return;
      }
      if (count_occ(p->term, d->y) == 0 || count_occ(p->term, d->z) == 0) {
        bad("contracted variables must both occur (use weak otherwise)");
        return;
      }
      Judgement j;
      j.ctx = p->ctx;
      CtxEntry entry = iy->second;
      j.ctx.erase(d->y);
      j.ctx.erase(d->z);
      if (j.ctx.count(d->x)) {
        bad("contraction target variable already in the context");
        return;
      }
      j.ctx[d->x] = entry;
      j.term = rename_free(rename_free(p->term, d->y, d->x), d->z, d->x);
      j.type = p->type;
      out = j;
      return;
    }
    case DRule::ImpI:
    case DRule::BangI: {
      auto p = check_child(d, 0, path, res);
      if (!p) return;
      auto it = p->ctx.find(d->x);
      if (it == p->ctx.end()) {
        bad("abstracted variable " + d->x + " not in the context");
        return;
      }
      bool banged = it->second.label.has_value();
      if (d->rule == DRule::ImpI && banged) {
        bad("imp_i discharges a linear variable, " + d->x + " is banged");
        return;
      }
      if (d->rule == DRule::BangI && !banged) {
        bad("bang_i discharges a banged variable, " + d->x + " is linear");
        return;
      }
      Judgement j;
      j.ctx = p->ctx;
      j.ctx.erase(d->x);
      j.term = t_abs(d->x, p->term);
      FPtr arg = banged ? f_bang(*it->second.label, it->second.type) : it->second.type;
      j.type = f_imp(arg, p->type);
      out = j;
      return;
    }
    case DRule::ImpE: {
      auto f = check_child(d, 0, path, res);
      auto a = check_child(d, 1, path, res);
      if (!f || !a) return;
      if (f->type->kind != FKind::Par || f->type->left->kind == FKind::Quest) {
        bad("function type is not linear implication");
        return;
      }
      if (!feq(a->type, dual(f->type->left))) {
        bad("argument type " + to_string(a->type) + " does not match " +
            to_string(dual(f->type->left)));
        return;
      }
      Judgement j;
      j.ctx = f->ctx;
      for (auto& [v, e] : a->ctx) {
        if (j.ctx.count(v)) {
          bad("contexts share variable " + v);
          return;
        }
        j.ctx[v] = e;
      }
      j.term = t_app(f->term, a->term);
      j.type = f->type->right;
      out = j;
      return;
    }
    case DRule::BangE: {
      auto f = check_child(d, 0, path, res);
      auto a = check_child(d, 1, path, res);
      if (!f || !a) return;
      if (f->type->kind != FKind::Par || f->type->left->kind != FKind::Quest ||
          !f->type->left->idx) {
        bad("function type is not a banged implication");
        return;
      }
      ExpIndex ix = *f->type->left->idx;
      if (!feq(a->type, dual(f->type->left->left))) {
        bad("argument type does not match the banged premise");
        return;
      }
      // split the argument context: sigma variables are linear in the premise
      std::map<std::string, ExpIndex> sig;
      for (auto& [v, e] : d->sigma) sig[v] = e;
      std::vector<std::uint32_t> d_all, n_sigma, n_delta;
      Judgement j;
      j.ctx = f->ctx;
      for (auto& [v, e] : a->ctx) {
        if (j.ctx.count(v)) {
          bad("contexts share variable " + v);
          return;
        }
        auto si = sig.find(v);
        if (si != sig.end()) {
          if (e.label) {
            bad("sigma variable " + v + " is banged in the premise");
            return;
          }
          if (!is_lambda_formula(e.type, si->second.s + 1)) {
            bad("sigma label for " + v + " leaves its type outside F_{s+1}");
            return;
          }
          d_all.push_back(si->second.d);
          n_sigma.push_back(si->second.n);
          j.ctx[v] = {e.type, si->second};
        } else {
          if (!e.label) {
            bad("argument context variable " + v + " is linear but not in sigma");
            return;
          }
          d_all.push_back(e.label->d);
          n_delta.push_back(e.label->n);
          j.ctx[v] = e;
        }
      }
      for (auto& [v, e] : sig)
        if (!a->ctx.count(v)) {
          bad("sigma variable " + v + " not in the argument context");
          return;
        }
      std::size_t at_d = 0;
      for (std::uint32_t dv : d_all) {
        if (dv < ix.d) {
          bad("d(Delta u Sigma) not >= " + std::to_string(ix.d));
          return;
        }
        if (dv == ix.d) ++at_d;
      }
      if (at_d > 1) {
        bad("d(Delta u Sigma) has multiplicity > 1 at d=" + std::to_string(ix.d));
        return;
      }
      for (std::uint32_t nv : n_sigma)
        if (nv < ix.n) {
          bad("n(Sigma) not >= " + std::to_string(ix.n));
          return;
        }
      for (std::uint32_t nv : n_delta)
        if (nv <= ix.n) {
          bad("n(Delta) not > " + std::to_string(ix.n));
          return;
        }
      j.term = t_app(f->term, a->term);
      j.type = f->type->right;
      out = j;
      return;
    }
  }
}

}  // namespace detail

inline CheckResult check_derivation(const DPtr& d) {
  CheckResult res;
  std::optional<Judgement> j;
  detail::check_d(d, "root", res, j);
  if (res.violations.empty() && j) {
    // linear variables occur exactly once, at every judgement the invariant
    // was maintained by the rules; verify at the root
    for (auto& [v, e] : j->ctx)
      if (!e.label && count_occ(j->term, v) != 1)
        res.violations.push_back(
            {"linearity", "root", "linear variable " + v + " does not occur exactly once"});
    res.judgement = j;
  }
  return res;
}

}  // namespace pnet

#include "pnet/lambda_net.hpp"
