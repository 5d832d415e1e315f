// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Translation of SDNLL_lambda derivations into proof-nets, the substitution
// lemmas as derivation transformers, and the subject-reduction harness.
// Included at the end of lambda.hpp.

#include <deque>

namespace pnet {

struct ReductionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Derivation -> proof-net

namespace detail {

struct TransNet {
  ProofNet g;
  std::map<std::string, int> var_edge;  // context variable -> open edge
  int type_edge = -1;
  int counter = 0;

  std::string fresh(const std::string& base) { return base + std::to_string(counter++); }

  int add_node(NodeKind k, const std::string& base, int box = -1) {
    Node n;
    n.id = fresh(base);
    n.kind = k;
    n.box = box;
    g.nodes.push_back(std::move(n));
    return static_cast<int>(g.nodes.size() - 1);
  }
  int add_edge(int tail, int tport, int head, int hport, FPtr label) {
    Edge e;
    e.id = fresh("e");
    e.tail = tail;
    e.tail_port = tport;
    e.head = head;
    e.head_port = hport;
    e.label = std::move(label);
    g.edges.push_back(std::move(e));
    return static_cast<int>(g.edges.size() - 1);
  }
  int add_out(int tail, int tport, FPtr label) {
    int e = add_edge(tail, tport, -1, 0, std::move(label));
    g.conclusions.push_back(e);
    return e;
  }
  void retarget(int edge, int head, int hport) {
    g.edges[edge].head = head;
    g.edges[edge].head_port = hport;
    for (std::size_t i = 0; i < g.conclusions.size(); ++i)
      if (g.conclusions[i] == edge) {
        g.conclusions.erase(g.conclusions.begin() + static_cast<long>(i));
        break;
      }
  }
};

// appends `other` into `dst`, returning offsets
inline std::pair<int, int> merge_nets(TransNet& dst, const TransNet& other) {
  int noff = static_cast<int>(dst.g.nodes.size());
  int eoff = static_cast<int>(dst.g.edges.size());
  int boff = static_cast<int>(dst.g.boxes.size());
  for (Node n : other.g.nodes) {
    n.id = "m" + std::to_string(noff) + "_" + n.id;
    if (n.box >= 0) n.box += boff;
    dst.g.nodes.push_back(std::move(n));
  }
  for (Edge e : other.g.edges) {
    e.id = "m" + std::to_string(eoff) + "_" + e.id;
    e.tail += noff;
    if (e.head >= 0) e.head += noff;
    dst.g.edges.push_back(std::move(e));
  }
  for (BoxInfo b : other.g.boxes) {
    b.id = "m" + std::to_string(boff) + "_" + b.id;
    b.principal += noff;
    for (int& a : b.aux) a += noff;
    if (b.parent >= 0) b.parent += boff;
    dst.g.boxes.push_back(std::move(b));
  }
  for (int c : other.g.conclusions) dst.g.conclusions.push_back(c + eoff);
  return {noff, eoff};
}

inline TransNet translate(const DPtr& d, Judgement& out_j);

inline Judgement must_check(const DPtr& d) {
  CheckResult r = check_derivation(d);
  if (!r.ok() || !r.judgement)
    throw std::runtime_error("derivation does not check: " +
                             (r.violations.empty() ? "?" : r.violations[0].to_string()));
  return *r.judgement;
}

inline TransNet translate(const DPtr& d, Judgement& out_j) {
  switch (d->rule) {
    case DRule::Ax: {
      TransNet t;
      out_j = must_check(d);
      int ax = t.add_node(NodeKind::Ax, "ax");
      t.var_edge[d->x] = t.add_out(ax, 0, dual(d->formula));
      t.type_edge = t.add_out(ax, 1, d->formula);
      return t;
    }
    case DRule::ForallI: {
      Judgement pj;
      TransNet t = translate(d->premises[0], pj);
      out_j = must_check(d);
      int fa = t.add_node(NodeKind::Forall, "fa");
      t.g.nodes[fa].var = d->var;
      t.g.nodes[fa].var_level = d->var_level;
      t.retarget(t.type_edge, fa, 0);
      t.type_edge = t.add_out(fa, 0, out_j.type);
      return t;
    }
    case DRule::ForallE: {
      Judgement pj;
      TransNet t = translate(d->premises[0], pj);
      out_j = must_check(d);
      int cut = t.add_node(NodeKind::Cut, "cut");
      int ex = t.add_node(NodeKind::Exists, "ex");
      t.g.nodes[ex].var = pj.type->name;
      t.g.nodes[ex].var_level = pj.type->level;
      t.g.nodes[ex].witness = d->formula;
      int ax = t.add_node(NodeKind::Ax, "ax");
      t.retarget(t.type_edge, cut, 0);
      t.add_edge(ax, 0, ex, 0, dual(out_j.type));
      t.add_edge(ex, 0, cut, 1, dual(pj.type));
      t.type_edge = t.add_out(ax, 1, out_j.type);
      return t;
    }
    case DRule::Der: {
      Judgement pj;
      TransNet t = translate(d->premises[0], pj);
      out_j = must_check(d);
      int der = t.add_node(NodeKind::Der, "d");
      int ve = t.var_edge.at(d->x);
      FPtr lab = f_quest(*d->idx, t.g.edges[ve].label);
      t.retarget(ve, der, 0);
      t.var_edge[d->x] = t.add_out(der, 0, lab);
      return t;
    }
    case DRule::Weak: {
      Judgement pj;
      TransNet t = translate(d->premises[0], pj);
      out_j = must_check(d);
      int wk = t.add_node(NodeKind::Weak, "w");
      t.var_edge[d->x] = t.add_out(wk, 0, f_quest(*d->idx, dual(d->formula)));
      return t;
    }
    case DRule::Cont: {
      Judgement pj;
      TransNet t = translate(d->premises[0], pj);
      out_j = must_check(d);
      int ct = t.add_node(NodeKind::Cont, "c");
      int ye = t.var_edge.at(d->y), ze = t.var_edge.at(d->z);
      FPtr lab = t.g.edges[ye].label;
      t.retarget(ye, ct, 0);
      t.retarget(ze, ct, 1);
      t.var_edge.erase(d->y);
      t.var_edge.erase(d->z);
      t.var_edge[d->x] = t.add_out(ct, 0, lab);
      return t;
    }
    case DRule::ImpI:
    case DRule::BangI: {
      Judgement pj;
      TransNet t = translate(d->premises[0], pj);
      out_j = must_check(d);
      int par = t.add_node(NodeKind::Par, "p");
      int xe = t.var_edge.at(d->x);
      FPtr lab = f_par(t.g.edges[xe].label, t.g.edges[t.type_edge].label);
      t.retarget(xe, par, 0);
      t.retarget(t.type_edge, par, 1);
      t.var_edge.erase(d->x);
      t.type_edge = t.add_out(par, 0, lab);
      return t;
    }
    case DRule::ImpE: {
      Judgement fj, aj;
      TransNet tf = translate(d->premises[0], fj);
      TransNet ta = translate(d->premises[1], aj);
      out_j = must_check(d);
      auto [noff, eoff] = merge_nets(tf, ta);
      (void)noff;
      for (auto& [v, e] : ta.var_edge) tf.var_edge[v] = e + eoff;
      int a_type = ta.type_edge + eoff;
      int tens = tf.add_node(NodeKind::Tensor, "t");
      int ax = tf.add_node(NodeKind::Ax, "ax");
      int cut = tf.add_node(NodeKind::Cut, "cut");
      FPtr B = fj.type->right;
      tf.retarget(a_type, tens, 0);
      tf.add_edge(ax, 0, tens, 1, dual(B));
      tf.add_edge(tens, 0, cut, 1, dual(fj.type));
      tf.retarget(tf.type_edge, cut, 0);
      tf.type_edge = tf.add_out(ax, 1, B);
      tf.counter += ta.counter;
      return tf;
    }
    case DRule::BangE: {
      Judgement fj, aj;
      TransNet tf = translate(d->premises[0], fj);
      TransNet ta = translate(d->premises[1], aj);
      out_j = must_check(d);
      ExpIndex ix = *fj.type->left->idx;
      // box the argument net
      int box = static_cast<int>(ta.g.boxes.size());
      BoxInfo bi;
      bi.id = "bx";
      for (Node& n : ta.g.nodes)
        if (n.box < 0) n.box = box;
      for (BoxInfo& b : ta.g.boxes)
        if (b.parent < 0) b.parent = box;
      int pd = static_cast<int>(ta.g.nodes.size());
      {
        Node n;
        n.id = ta.fresh("pd");
        n.kind = NodeKind::BoxPrincipal;
        n.box = box;
        ta.g.nodes.push_back(std::move(n));
      }
      bi.principal = pd;
      std::map<std::string, ExpIndex> sig;
      for (auto& [v, e] : d->sigma) sig[v] = e;
      FPtr A = aj.type;
      ta.retarget(ta.type_edge, pd, 0);
      std::vector<int> auxes;
      std::map<std::string, int> new_var_edge;
      int principal_out = -1;
      {
        ta.g.boxes.push_back(bi);  // placeholder, aux filled below
        principal_out = ta.add_out(pd, 0, f_bang(ix, A));
      }
      for (auto& [v, ve] : ta.var_edge) {
        int ad = ta.add_node(NodeKind::BoxAux, "ad", box);
        auxes.push_back(ad);
        FPtr vl = ta.g.edges[ve].label;
        ta.retarget(ve, ad, 0);
        auto si = sig.find(v);
        if (si != sig.end()) {
          new_var_edge[v] = ta.add_out(ad, 0, f_quest(si->second, vl));
        } else {
          // a Delta door: double question mark, then digging
          ExpIndex outer = *vl->idx;
          outer.n = outer.n == 0 ? 0 : outer.n - 1;
          int dg = ta.add_node(NodeKind::Dig, "dg");
          ta.add_edge(ad, 0, dg, 0, f_quest(outer, vl));
          new_var_edge[v] = ta.add_out(dg, 0, vl);
        }
      }
      ta.g.boxes[box].aux = auxes;
      ta.var_edge = new_var_edge;
      ta.type_edge = principal_out;

      auto [noff, eoff] = merge_nets(tf, ta);
      (void)noff;
      for (auto& [v, e] : ta.var_edge) tf.var_edge[v] = e + eoff;
      int a_type = ta.type_edge + eoff;
      int tens = tf.add_node(NodeKind::Tensor, "t");
      int ax = tf.add_node(NodeKind::Ax, "ax");
      int cut = tf.add_node(NodeKind::Cut, "cut");
      FPtr B = fj.type->right;
      tf.retarget(a_type, tens, 0);
      tf.add_edge(ax, 0, tens, 1, dual(B));
      tf.add_edge(tens, 0, cut, 1, dual(fj.type));
      tf.retarget(tf.type_edge, cut, 0);
      tf.type_edge = tf.add_out(ax, 1, B);
      tf.counter += ta.counter;
      return tf;
    }
  }
  throw std::logic_error("bad derivation");
}

}  // namespace detail

// Net with one conclusion per context variable (its dual type) plus the
// subject type, built per the figure; the output is an SDNLL proof-net.
inline ProofNet derivation_to_net(const DPtr& d) {
  Judgement j;
  detail::TransNet t = detail::translate(d, j);
  // conclusions: context variables in context order, then the type
  std::vector<int> ordered;
  for (auto& [v, e] : t.var_edge) ordered.push_back(e);
  ordered.push_back(t.type_edge);
  t.g.conclusions = ordered;
  t.g.refresh();
  return t.g;
}

// ---------------------------------------------------------------------------
// Derivation surgery for subject reduction

namespace detail {

inline FPtr subst_opt(const FPtr& f, const std::string& var, const FPtr& b) {
  return f ? substitute(f, var, b) : f;
}

inline DPtr substitute_derivation(const DPtr& d, const std::string& var, const FPtr& b) {
  auto nd = std::make_shared<Derivation>(*d);
  if (nd->rule == DRule::ForallI && nd->var == var) return d;  // shadowed
  nd->formula = subst_opt(nd->formula, var, b);
  nd->premises.clear();
  for (const DPtr& p : d->premises) nd->premises.push_back(substitute_derivation(p, var, b));
  return nd;
}

inline std::string apply_map(const std::map<std::string, std::string>& m, const std::string& s) {
  auto it = m.find(s);
  return it == m.end() ? s : it->second;
}

inline DPtr rename_derivation_vars(const DPtr& d, const std::map<std::string, std::string>& m) {
  auto nd = std::make_shared<Derivation>(*d);
  nd->x = apply_map(m, nd->x);
  nd->y = apply_map(m, nd->y);
  nd->z = apply_map(m, nd->z);
  for (auto& [v, ix] : nd->sigma) v = apply_map(m, v);
  nd->premises.clear();
  for (const DPtr& p : d->premises) nd->premises.push_back(rename_derivation_vars(p, m));
  return nd;
}

// Rewrites d so that its last rule introduces the top connective of its type.
inline DPtr expose_top(const DPtr& d) {
  switch (d->rule) {
    case DRule::ImpI:
    case DRule::BangI:
    case DRule::ForallI: return d;
    case DRule::Der:
    case DRule::Weak:
    case DRule::Cont: {
      DPtr e = expose_top(d->premises[0]);
      DPtr inner = e->premises[0];
      if (e->rule == DRule::ForallI && d->formula && free_vars(d->formula).count(e->var)) {
        std::set<std::string> used = free_vars(d->formula);
        std::string nv = fresh_name(e->var, used);
        inner = substitute_derivation(inner, e->var, f_atom(nv, true, e->var_level));
        auto fa = std::make_shared<Derivation>(*e);
        fa->var = nv;
        fa->premises = {inner};
        e = fa;
      }
      auto moved = std::make_shared<Derivation>(*d);
      moved->premises = {inner};
      auto intro = std::make_shared<Derivation>(*e);
      intro->premises = {moved};
      return intro;
    }
    case DRule::ForallE: {
      DPtr e = expose_top(d->premises[0]);
      if (e->rule != DRule::ForallI)
        throw ReductionMismatch("forall elimination over a non-universal derivation");
      return expose_top(substitute_derivation(e->premises[0], e->var, d->formula));
    }
    default: throw ReductionMismatch("cannot expose the introduction of the subject type");
  }
}

inline bool ctx_has(const DPtr& d, const std::string& x) {
  return must_check(d).ctx.count(x) > 0;
}

inline DPtr linear_subst_d(const DPtr& arg, const DPtr& body, const std::string& x) {
  if (body->rule == DRule::Ax) {
    if (body->x == x) return arg;
    throw ReductionMismatch("linear substitution missed its axiom");
  }
  auto nd = std::make_shared<Derivation>(*body);
  nd->premises.clear();
  if (body->premises.size() == 1) {
    nd->premises = {linear_subst_d(arg, body->premises[0], x)};
    return nd;
  }
  if (ctx_has(body->premises[0], x)) {
    nd->premises = {linear_subst_d(arg, body->premises[0], x), body->premises[1]};
  } else {
    nd->premises = {body->premises[0], linear_subst_d(arg, body->premises[1], x)};
  }
  return nd;
}

inline DPtr exp_subst_d(const DPtr& arg, const std::vector<std::pair<std::string, ExpIndex>>& sigma,
                        const DPtr& body, const std::string& x, int& fresh_counter) {
  std::map<std::string, ExpIndex> sig(sigma.begin(), sigma.end());
  if ((body->rule == DRule::Der || body->rule == DRule::Weak || body->rule == DRule::Cont) &&
      body->x == x) {
    if (body->rule == DRule::Der) {
      DPtr f = linear_subst_d(arg, body->premises[0], x);
      for (auto& [v, ix] : sigma) f = d_der(v, ix, f);
      return f;
    }
    if (body->rule == DRule::Weak) {
      Judgement aj = must_check(arg);
      DPtr f = body->premises[0];
      for (auto& [v, e] : aj.ctx) {
        auto si = sig.find(v);
        if (si != sig.end())
          f = d_weak(v, e.type, si->second, f);
        else
          f = d_weak(v, e.type, *e.label, f);
      }
      return f;
    }
    // contraction: substitute both copies with renamed argument derivations
    Judgement aj = must_check(arg);
    std::map<std::string, std::string> ml, mr;
    std::vector<std::string> ctx_vars;
    for (auto& [v, e] : aj.ctx) {
      (void)e;
      ctx_vars.push_back(v);
      ml[v] = v + "_l" + std::to_string(fresh_counter);
      mr[v] = v + "_r" + std::to_string(fresh_counter);
    }
    ++fresh_counter;
    DPtr arg_l = rename_derivation_vars(arg, ml);
    DPtr arg_r = rename_derivation_vars(arg, mr);
    std::vector<std::pair<std::string, ExpIndex>> sig_l, sig_r;
    for (auto& [v, ix] : sigma) {
      sig_l.push_back({ml.at(v), ix});
      sig_r.push_back({mr.at(v), ix});
    }
    DPtr f = exp_subst_d(arg_r, sig_r, body->premises[0], body->z, fresh_counter);
    f = exp_subst_d(arg_l, sig_l, f, body->y, fresh_counter);
    for (const std::string& v : ctx_vars) f = d_cont(v, ml.at(v), mr.at(v), f);
    return f;
  }
  auto nd = std::make_shared<Derivation>(*body);
  nd->premises.clear();
  if (body->premises.size() == 1) {
    nd->premises = {exp_subst_d(arg, sigma, body->premises[0], x, fresh_counter)};
    return nd;
  }
  if (body->premises.empty()) throw ReductionMismatch("exponential substitution missed its target");
  if (ctx_has(body->premises[0], x)) {
    nd->premises = {exp_subst_d(arg, sigma, body->premises[0], x, fresh_counter),
                    body->premises[1]};
  } else {
    nd->premises = {body->premises[0],
                    exp_subst_d(arg, sigma, body->premises[1], x, fresh_counter)};
  }
  return nd;
}

}  // namespace detail

// One derivation-level beta step (leftmost application whose function part is
// an abstraction), built from the substitution lemmas.
inline std::optional<DPtr> derivation_beta_step(const DPtr& d) {
  if (d->rule == DRule::ImpE || d->rule == DRule::BangE) {
    Judgement fj = detail::must_check(d->premises[0]);
    if (fj.term->kind == TKind::Abs) {
      DPtr intro = detail::expose_top(d->premises[0]);
      if (d->rule == DRule::ImpE) {
        if (intro->rule != DRule::ImpI)
          throw ReductionMismatch("imp_e against a non-imp_i introduction");
        return detail::linear_subst_d(d->premises[1], intro->premises[0], intro->x);
      }
      if (intro->rule != DRule::BangI)
        throw ReductionMismatch("bang_e against a non-bang_i introduction");
      int ctr = 0;
      return detail::exp_subst_d(d->premises[1], d->sigma, intro->premises[0], intro->x, ctr);
    }
  }
  for (std::size_t i = 0; i < d->premises.size(); ++i) {
    if (auto r = derivation_beta_step(d->premises[i])) {
      auto nd = std::make_shared<Derivation>(*d);
      nd->premises[i] = *r;
      return DPtr(nd);
    }
  }
  return {};
}

// Breadth-first search for a reduction sequence from `from` to a net
// isomorphic to `to`; returns the number of cut steps, or nullopt.
inline std::optional<std::size_t> find_reduction_path(const ProofNet& from, const ProofNet& to,
                                                      std::size_t max_depth = 48,
                                                      std::size_t max_states = 40000) {
  std::set<std::uint64_t> seen;
  std::deque<std::pair<ProofNet, std::size_t>> frontier;
  frontier.push_back({from, 0});
  seen.insert(iso_hash(from));
  std::size_t expanded = 0;
  while (!frontier.empty()) {
    auto [g, depth] = std::move(frontier.front());
    frontier.pop_front();
    if (depth >= max_depth) continue;
    for (const CutRedex& rx : find_redexes(g)) {
      ProofNet h = reduce(g, rx);
      if (h.nodes.size() == to.nodes.size() && h.edges.size() == to.edges.size() &&
          iso_equal(h, to))
        return depth + 1;
      std::uint64_t hh = iso_hash(h);
      if (seen.insert(hh).second) frontier.push_back({std::move(h), depth + 1});
      if (++expanded > max_states) return {};
    }
  }
  return {};
}

struct SRStep {
  TPtr from, to;
  bool type_preserved = false;
  bool net_simulated = false;
  std::size_t cut_steps = 0;
};

struct SRReport {
  bool ok = false;
  std::string error;
  std::vector<SRStep> steps;
  TPtr normal_form;
  FPtr type;
};

// Normalizes the derivation's subject step by step, rebuilding a derivation
// after each beta step and checking the net-level simulation.
inline SRReport subject_reduction_check(const DPtr& d0, bool net_sim = true,
                                        std::size_t max_steps = 200) {
  SRReport rep;
  DPtr d = d0;
  CheckResult c = check_derivation(d);
  if (!c.ok()) {
    rep.error = "initial derivation does not check: " + c.violations[0].to_string();
    return rep;
  }
  FPtr ty = c.judgement->type;
  rep.type = ty;
  for (std::size_t i = 0; i < max_steps; ++i) {
    std::optional<DPtr> nxt;
    try {
      nxt = derivation_beta_step(d);
    } catch (const ReductionMismatch& e) {
      rep.error = e.what();
      return rep;
    }
    if (!nxt) {
      rep.normal_form = check_derivation(d).judgement->term;
      rep.ok = true;
      return rep;
    }
    CheckResult c2 = check_derivation(*nxt);
    if (!c2.ok()) {
      rep.error = "reduct does not check: " + c2.violations[0].to_string();
      return rep;
    }
    SRStep step;
    step.from = check_derivation(d).judgement->term;
    step.to = c2.judgement->term;
    step.type_preserved = feq(c2.judgement->type, ty);
    if (!step.type_preserved) {
      rep.error = "type not preserved";
      rep.steps.push_back(step);
      return rep;
    }
    if (net_sim) {
      ProofNet from = derivation_to_net(d);
      ProofNet to = derivation_to_net(*nxt);
      auto steps = find_reduction_path(from, to);
      if (!steps) {
        rep.error = "net-level simulation not found";
        rep.steps.push_back(step);
        return rep;
      }
      step.net_simulated = true;
      step.cut_steps = *steps;
    }
    rep.steps.push_back(step);
    d = *nxt;
  }
  rep.error = "beta step budget exhausted";
  return rep;
}

// ---------------------------------------------------------------------------
// Church-family builders

// all X_s. !_{s-1,d,n}(X_s -o X_s) -o X_s -o X_s, for s >= 1
inline FPtr nat_type_lambda(std::uint32_t s, std::uint32_t d, std::uint32_t n) {
  FPtr X = f_atom("X", true, s);
  FPtr fun = f_imp(X, X);
  return f_forall("X", s, f_imp(f_bang(ExpIndex{s - 1, d, n}, fun), f_imp(X, X)));
}

inline DPtr nat_derivation(std::uint32_t k, std::uint32_t s, std::uint32_t d, std::uint32_t n,
                           const std::string& prefix = "") {
  if (s == 0) throw std::runtime_error("nat_derivation needs s >= 1");
  FPtr X = f_atom("X", true, s);
  FPtr fun = f_imp(X, X);
  ExpIndex ix{s - 1, d, n};
  std::string a = prefix + "a";
  DPtr der;
  if (k == 0) {
    der = d_weak(prefix + "f", fun, ix, d_ax(a, X));
    der = d_imp_i(a, der);
    der = d_bang_i(prefix + "f", der);
    return d_forall_i("X", s, der);
  }
  // ((f1)(f2)...(fk)) a
  DPtr app = d_ax(a, X);
  for (std::uint32_t i = k; i >= 1; --i)
    app = d_imp_e(d_ax(prefix + "f" + std::to_string(i), fun), app);
  for (std::uint32_t i = 1; i <= k; ++i) app = d_der(prefix + "f" + std::to_string(i), ix, app);
  std::string cur = prefix + "f1";
  for (std::uint32_t i = 2; i <= k; ++i) {
    std::string nxt = i == k ? prefix + "f" : prefix + "g" + std::to_string(i);
    app = d_cont(nxt, cur, prefix + "f" + std::to_string(i), app);
    cur = nxt;
  }
  std::string top = k == 1 ? prefix + "f1" : prefix + "f";
  app = d_imp_i(a, app);
  app = d_bang_i(top, app);
  return d_forall_i("X", s, app);
}

// add : N -o N -o N as in the paper's derivation figure
inline DPtr add_derivation(std::uint32_t s, std::uint32_t d, std::uint32_t n) {
  if (s == 0) throw std::runtime_error("add_derivation needs s >= 1");
  FPtr N = nat_type_lambda(s, d, n);
  FPtr X = f_atom("X", true, s);
  FPtr fun = f_imp(X, X);
  ExpIndex ix{s - 1, d, n};
  // (m)g : F
  DPtr mg = d_bang_e(d_forall_e(X, d_ax("m", N)), d_ax("g", fun), {{"g", ix}});
  // ((n)h)x : X
  DPtr nh = d_bang_e(d_forall_e(X, d_ax("n", N)), d_ax("h", fun), {{"h", ix}});
  DPtr nhx = d_imp_e(nh, d_ax("x", X));
  DPtr body = d_imp_e(mg, nhx);
  body = d_cont("f", "g", "h", body);
  body = d_imp_i("x", body);
  body = d_bang_i("f", body);
  body = d_forall_i("X", s, body);
  body = d_imp_i("n", body);
  return d_imp_i("m", body);
}

// <t,u> = \f.((f)t)u : all X_l. (A -o B -o X_l) -o X_l
inline DPtr pair_derivation(const DPtr& t, const DPtr& u, std::uint32_t xlevel = 0,
                            const std::string& f = "fp") {
  Judgement jt = detail::must_check(t), ju = detail::must_check(u);
  FPtr X = f_atom("Xp", true, xlevel);
  FPtr fty = f_imp(jt.type, f_imp(ju.type, X));
  DPtr app = d_imp_e(d_imp_e(d_ax(f, fty), t), u);
  return d_forall_i("Xp", xlevel, d_imp_i(f, app));
}

// ---------------------------------------------------------------------------
// Derivation scripts (s-expressions)

namespace detail {

struct SExp {
  std::string atom;  // empty when this is a list
  std::vector<SExp> items;
  bool is_list = false;
};

inline SExp parse_sexp(const std::string& s, std::size_t& pos) {
  auto skip = [&] {
    while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ';')) {
      if (s[pos] == ';')
        while (pos < s.size() && s[pos] != '\n') ++pos;
      else
        ++pos;
    }
  };
  skip();
  if (pos >= s.size()) throw ParseError("derivation: unexpected end of input");
  if (s[pos] == '(') {
    ++pos;
    SExp e;
    e.is_list = true;
    while (true) {
      skip();
      if (pos >= s.size()) throw ParseError("derivation: missing ')'");
      if (s[pos] == ')') {
        ++pos;
        return e;
      }
      e.items.push_back(parse_sexp(s, pos));
    }
  }
  if (s[pos] == '"') {
    std::size_t end = s.find('"', pos + 1);
    if (end == std::string::npos) throw ParseError("derivation: unterminated string");
    SExp e;
    e.atom = s.substr(pos, end - pos + 1);
    pos = end + 1;
    return e;
  }
  std::size_t start = pos;
  int depth = 0;
  while (pos < s.size()) {
    char c = s[pos];
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (depth == 0 && (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')')) break;
    ++pos;
  }
  SExp e;
  e.atom = s.substr(start, pos - start);
  return e;
}

inline std::string unquote_str(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
  return s;
}

inline ExpIndex parse_idx_atom(const std::string& s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("derivation: expected {s,d,n}, got " + s);
  ExpIndex ix;
  if (std::sscanf(s.c_str(), "{%u,%u,%u}", &ix.s, &ix.d, &ix.n) != 3)
    throw ParseError("derivation: bad index " + s);
  return ix;
}

inline DPtr sexp_to_derivation(const SExp& e) {
  if (!e.is_list || e.items.empty() || e.items[0].is_list)
    throw ParseError("derivation: expected (rule ...)");
  const std::string& op = e.items[0].atom;
  auto arg = [&](std::size_t i) -> const SExp& {
    if (i >= e.items.size()) throw ParseError("derivation: missing argument of " + op);
    return e.items[i];
  };
  if (op == "ax") return d_ax(arg(1).atom, parse_formula(unquote_str(arg(2).atom)));
  if (op == "forall_i") {
    std::string v = arg(1).atom;
    auto us = v.rfind('_');
    if (us == std::string::npos) throw ParseError("forall_i expects X_level");
    return d_forall_i(v.substr(0, us),
                      static_cast<std::uint32_t>(std::stoul(v.substr(us + 1))),
                      sexp_to_derivation(arg(2)));
  }
  if (op == "forall_e")
    return d_forall_e(parse_formula(unquote_str(arg(1).atom)), sexp_to_derivation(arg(2)));
  if (op == "der")
    return d_der(arg(1).atom, parse_idx_atom(arg(2).atom), sexp_to_derivation(arg(3)));
  if (op == "weak")
    return d_weak(arg(1).atom, parse_formula(unquote_str(arg(2).atom)),
                  parse_idx_atom(arg(3).atom), sexp_to_derivation(arg(4)));
  if (op == "cont")
    return d_cont(arg(1).atom, arg(2).atom, arg(3).atom, sexp_to_derivation(arg(4)));
  if (op == "imp_i") return d_imp_i(arg(1).atom, sexp_to_derivation(arg(2)));
  if (op == "bang_i") return d_bang_i(arg(1).atom, sexp_to_derivation(arg(2)));
  if (op == "imp_e") return d_imp_e(sexp_to_derivation(arg(1)), sexp_to_derivation(arg(2)));
  if (op == "bang_e") {
    const SExp& sg = arg(1);
    if (!sg.is_list || sg.items.empty() || sg.items[0].atom != "sigma")
      throw ParseError("bang_e expects a (sigma ...) list");
    std::vector<std::pair<std::string, ExpIndex>> sigma;
    for (std::size_t i = 1; i < sg.items.size(); ++i) {
      const SExp& ent = sg.items[i];
      if (!ent.is_list || ent.items.size() != 2)
        throw ParseError("sigma entries look like (x {s,d,n})");
      sigma.push_back({ent.items[0].atom, parse_idx_atom(ent.items[1].atom)});
    }
    return d_bang_e(sexp_to_derivation(arg(2)), sexp_to_derivation(arg(3)), std::move(sigma));
  }
  throw ParseError("derivation: unknown rule '" + op + "'");
}

}  // namespace detail

inline DPtr parse_derivation(const std::string& text) {
  std::size_t pos = 0;
  detail::SExp e = detail::parse_sexp(text, pos);
  return detail::sexp_to_derivation(e);
}

inline std::string derivation_to_script(const DPtr& d, int indent = 0) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  auto sub = [&](std::size_t i) { return derivation_to_script(d->premises[i], indent + 2); };
  switch (d->rule) {
    case DRule::Ax: return pad + "(ax " + d->x + " \"" + to_string(d->formula) + "\")";
    case DRule::ForallI:
      return pad + "(forall_i " + d->var + "_" + std::to_string(*d->var_level) + "\n" + sub(0) +
             ")";
    case DRule::ForallE:
      return pad + "(forall_e \"" + to_string(d->formula) + "\"\n" + sub(0) + ")";
    case DRule::Der:
      return pad + "(der " + d->x + " " + d->idx->to_string() + "\n" + sub(0) + ")";
    case DRule::Weak:
      return pad + "(weak " + d->x + " \"" + to_string(d->formula) + "\" " +
             d->idx->to_string() + "\n" + sub(0) + ")";
    case DRule::Cont:
      return pad + "(cont " + d->x + " " + d->y + " " + d->z + "\n" + sub(0) + ")";
    case DRule::ImpI: return pad + "(imp_i " + d->x + "\n" + sub(0) + ")";
    case DRule::BangI: return pad + "(bang_i " + d->x + "\n" + sub(0) + ")";
    case DRule::ImpE: return pad + "(imp_e\n" + sub(0) + "\n" + sub(1) + ")";
    case DRule::BangE: {
      std::string sg = "(sigma";
      for (auto& [v, ix] : d->sigma) sg += " (" + v + " " + ix.to_string() + ")";
      sg += ")";
      return pad + "(bang_e " + sg + "\n" + sub(0) + "\n" + sub(1) + ")";
    }
  }
  return pad + "?";
}

}  // namespace pnet
