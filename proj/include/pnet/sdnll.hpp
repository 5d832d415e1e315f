// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pnet/proofnet.hpp"

namespace pnet {

// ---------------------------------------------------------------------------
// SDNLL well-formedness helpers

// largest s with f in F_s, together with the recursive body constraints;
// returns nullopt when some body constraint fails outright
inline std::optional<std::uint32_t> sdnll_spine_min(const FPtr& f) {
  switch (f->kind) {
    case FKind::Atom:
      if (!f->level) return {};
      return *f->level;
    case FKind::Tensor:
    case FKind::Par: {
      auto a = sdnll_spine_min(f->left), b = sdnll_spine_min(f->right);
      if (!a || !b) return {};
      return std::min(*a, *b);
    }
    case FKind::Forall:
    case FKind::Exists: {
      if (!f->level) return {};
      auto a = sdnll_spine_min(f->left);
      if (!a) return {};
      return std::min(*f->level, *a);
    }
    case FKind::Bang:
    case FKind::Quest: {
      if (!f->idx) return {};
      auto a = sdnll_spine_min(f->left);
      if (!a || *a < f->idx->s + 1) return {};
      return f->idx->s;
    }
    case FKind::Sect: return {};
  }
  return {};
}

// ---------------------------------------------------------------------------
// SDNLL proof-net checking (constraints modulo subtyping on conclusions)

namespace detail {

// Does an instance premise A with A[B/X] = D and A <= body exist?
// Positions of X in `body` must carry copies of the witness in D exactly;
// elsewhere D plays the role of A.
inline bool exists_instance_matches(const FPtr& D, const FPtr& body, const std::string& var,
                                    const FPtr& witness) {
  if (body->kind == FKind::Atom && body->name == var) {
    if (!witness) return false;
    return feq(D, body->positive ? witness : dual(witness));
  }
  if (D->kind != body->kind) return false;
  switch (body->kind) {
    case FKind::Atom: return D->name == body->name && D->positive == body->positive &&
                             D->level == body->level;
    case FKind::Tensor:
    case FKind::Par:
      return exists_instance_matches(D->left, body->left, var, witness) &&
             exists_instance_matches(D->right, body->right, var, witness);
    case FKind::Forall:
    case FKind::Exists:
      if (D->level != body->level) return false;
      if (body->name == var) return feq(D, body);  // shadowed, no substitution below
      return D->name == body->name &&
             exists_instance_matches(D->left, body->left, var, witness);
    case FKind::Bang:
      if (!D->idx || !body->idx || !(*body->idx <= *D->idx)) return false;
      return exists_instance_matches(D->left, body->left, var, witness);
    case FKind::Quest:
      if (!D->idx || !body->idx || !(*D->idx <= *body->idx)) return false;
      return exists_instance_matches(D->left, body->left, var, witness);
    case FKind::Sect: return false;
  }
  return false;
}

inline bool contains_var(const FPtr& f, const std::string& var) {
  return free_vars(f).count(var) > 0;
}

// derive the witness from the premise at the first occurrence of var
inline FPtr derive_witness(const FPtr& D, const FPtr& body, const std::string& var) {
  if (body->kind == FKind::Atom && body->name == var)
    return body->positive ? D : dual(D);
  if (D->kind != body->kind) return nullptr;
  switch (body->kind) {
    case FKind::Tensor:
    case FKind::Par: {
      FPtr w = derive_witness(D->left, body->left, var);
      return w ? w : derive_witness(D->right, body->right, var);
    }
    case FKind::Forall:
    case FKind::Exists:
      if (body->name == var) return nullptr;
      return derive_witness(D->left, body->left, var);
    case FKind::Bang:
    case FKind::Quest: return derive_witness(D->left, body->left, var);
    default: return nullptr;
  }
}

}  // namespace detail

inline std::vector<Violation> check_sdnll(const ProofNet& g) {
  std::vector<Violation> out;
  auto bad = [&out](std::string where, std::string rule, std::string detail) {
    out.push_back({std::move(rule), std::move(where), std::move(detail)});
  };
  for (const Edge& e : g.edges) {
    if (!e.label) {
      bad(e.id, "sdnll-label", "missing label");
      return out;
    }
    try {
      if (classify(e.label) != FormulaClass::SDNLL && e.label->kind != FKind::Atom)
        bad(e.id, "sdnll-label", "label is not an indexed formula");
      else if (e.label->kind == FKind::Atom && !e.label->level)
        bad(e.id, "sdnll-label", "atom label lacks a level");
    } catch (const MixedIndexing& mi) {
      bad(e.id, "sdnll-label", mi.what());
    }
  }
  if (!out.empty()) return out;

  auto lab = [&](int e) { return g.edges[e].label; };
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Node& n = g.nodes[i];
    auto P = [&](int k) { return lab(g.premise_of[i][k]); };
    auto C = [&](int k) { return lab(g.conclusion_of[i][k]); };
    switch (n.kind) {
      case NodeKind::Ax:
        if (!subtype_leq(dual(C(1)), C(0)))
          bad(n.id, "sdnll-ax", "no instance: " + to_string(C(0)) + " vs " + to_string(C(1)));
        break;
      case NodeKind::Cut:
        if (!feq(P(1), dual(P(0))))
          bad(n.id, "sdnll-cut", "premises not dual: " + to_string(P(0)) + " vs " + to_string(P(1)));
        break;
      case NodeKind::Tensor:
        if (C(0)->kind != FKind::Tensor || !subtype_leq(P(0), C(0)->left) ||
            !subtype_leq(P(1), C(0)->right))
          bad(n.id, "sdnll-tensor", "expected " + to_string(f_tensor(P(0), P(1))) + " <= " +
                                        to_string(C(0)));
        break;
      case NodeKind::Par:
        if (C(0)->kind != FKind::Par || !subtype_leq(P(0), C(0)->left) ||
            !subtype_leq(P(1), C(0)->right))
          bad(n.id, "sdnll-par", "expected " + to_string(f_par(P(0), P(1))) + " <= " +
                                     to_string(C(0)));
        break;
      case NodeKind::Forall:
        if (C(0)->kind != FKind::Forall || !subtype_leq(P(0), C(0)->left))
          bad(n.id, "sdnll-forall", "conclusion does not generalize the premise");
        break;
      case NodeKind::Exists: {
        FPtr c = C(0);
        if (c->kind != FKind::Exists || !c->level) {
          bad(n.id, "sdnll-exists", "conclusion is not an indexed existential");
          break;
        }
        FPtr witness = n.witness;
        if (!witness && detail::contains_var(c->left, c->name))
          witness = detail::derive_witness(P(0), c->left, c->name);
        if (detail::contains_var(c->left, c->name) && !witness) {
          bad(n.id, "sdnll-exists", "cannot determine a witness");
          break;
        }
        if (!detail::exists_instance_matches(P(0), c->left, c->name, witness) &&
            detail::contains_var(c->left, c->name)) {
          bad(n.id, "sdnll-exists", "premise does not match body[witness/var]");
          break;
        }
        if (!detail::contains_var(c->left, c->name) && !subtype_leq(P(0), c->left)) {
          bad(n.id, "sdnll-exists", "premise does not match the (variable-free) body");
          break;
        }
        if (witness) {
          auto sm = s_min(witness);
          if (sm && *sm < *c->level)
            bad(n.id, "sdnll-exists",
                "witness s_min " + std::to_string(*sm) + " < " + std::to_string(*c->level));
        }
        break;
      }
      case NodeKind::Der:
        if (C(0)->kind != FKind::Quest || !subtype_leq(P(0), C(0)->left))
          bad(n.id, "sdnll-der", "dereliction instance missing");
        break;
      case NodeKind::Weak:
        if (C(0)->kind != FKind::Quest) bad(n.id, "sdnll-weak", "conclusion is not ?-headed");
        break;
      case NodeKind::Cont:
        if (!feq(P(0), P(1)) || P(0)->kind != FKind::Quest || !subtype_leq(P(0), C(0)))
          bad(n.id, "sdnll-cont", "contraction instance missing");
        break;
      case NodeKind::Dig: {
        FPtr p = P(0);
        bool shape = p->kind == FKind::Quest && p->left->kind == FKind::Quest && p->idx &&
                     p->left->idx && p->idx->s == p->left->idx->s &&
                     p->idx->d == p->left->idx->d && p->left->idx->n == p->idx->n + 1;
        if (!shape || !subtype_leq(p->left, C(0)))
          bad(n.id, "sdnll-dig", "premise is not ?_{s,d,n}?_{s,d,n+1}A below the conclusion");
        break;
      }
      case NodeKind::BoxAux:
      case NodeKind::BoxPrincipal: break;  // handled per box below
      case NodeKind::Sec: bad(n.id, "sdnll-node", "paragraph node in an SDNLL net"); break;
    }
  }

  for (std::size_t b = 0; b < g.boxes.size(); ++b) {
    const BoxInfo& box = g.boxes[b];
    std::string where = box.id;
    FPtr L = lab(g.principal_edge(static_cast<int>(b)));
    FPtr Cin = lab(g.premise_of[box.principal][0]);
    if (L->kind != FKind::Bang || !L->idx) {
      bad(where, "sdnll-box", "principal conclusion is not !-headed");
      continue;
    }
    if (!subtype_leq(Cin, L->left)) {
      bad(where, "sdnll-box", "principal premise is not below the conclusion body");
      continue;
    }
    std::uint32_t S = L->idx->s, D = L->idx->d, N = L->idx->n;
    auto spine = sdnll_spine_min(Cin);
    if (!spine || *spine < S + 1) {
      bad(where, "sdnll-box",
          "no s >= " + std::to_string(S) + " with the principal premise in F_{s+1}");
      continue;
    }
    std::vector<std::uint32_t> Ds, Ns;
    bool doors_ok = true;
    for (std::size_t i = 0; i < box.aux.size(); ++i) {
      FPtr M = lab(g.aux_edge(static_cast<int>(b), static_cast<int>(i)));
      FPtr A = lab(g.premise_of[box.aux[i]][0]);
      if (M->kind != FKind::Quest || !M->idx || !subtype_leq(A, M->left)) {
        bad(g.nodes[box.aux[i]].id, "sdnll-box", "aux conclusion is not ? of its premise");
        doors_ok = false;
        continue;
      }
      auto aspine = sdnll_spine_min(A);
      if (!aspine || *aspine < 1) {
        bad(g.nodes[box.aux[i]].id, "sdnll-box", "door premise not in any F_{s+1}");
        doors_ok = false;
        continue;
      }
      Ds.push_back(M->idx->d);
      Ns.push_back(M->idx->n);
    }
    if (!doors_ok) continue;
    for (std::uint32_t nn : Ns)
      if (nn < N) {
        bad(where, "sdnll-box", "a door's third index is below the principal's");
        doors_ok = false;
      }
    if (!doors_ok || box.aux.empty()) continue;
    // pick a privileged door j and d with D <= d <= Ds[j], Ds[i] >= d+1 otherwise
    bool feasible = false;
    for (std::size_t j = 0; j < Ds.size() && !feasible; ++j) {
      std::uint32_t hi = Ds[j];
      bool ok = true;
      for (std::size_t i = 0; i < Ds.size(); ++i)
        if (i != j) {
          if (Ds[i] == 0) {
            ok = false;
            break;
          }
          hi = std::min(hi, Ds[i] - 1);
        }
      feasible = ok && hi >= D;
    }
    if (!feasible)
      bad(where, "sdnll-box", "no admissible privileged door for the second indices");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Data encodings

inline FPtr nat_formula(std::uint32_t s, std::uint32_t d, std::uint32_t n) {
  FPtr X = f_atom("X", true, s + 1);
  FPtr Xn = f_atom("X", false, s + 1);
  FPtr fun = f_par(Xn, X);  // X -o X
  return f_forall("X", s + 1,
                  f_par(f_quest(ExpIndex{s, d + 1, n}, f_tensor(X, Xn)),
                        f_bang(ExpIndex{s, d, n}, fun)));
}

inline FPtr binlist_formula(std::uint32_t s, std::uint32_t d, std::uint32_t n) {
  FPtr X = f_atom("X", true, s + 1);
  FPtr Xn = f_atom("X", false, s + 1);
  FPtr fun = f_par(Xn, X);
  FPtr arg = f_quest(ExpIndex{s, d + 1, n}, f_tensor(X, Xn));
  return f_forall("X", s + 1, f_par(arg, f_par(arg, f_bang(ExpIndex{s, d, n}, fun))));
}

namespace detail {

struct EncBuilder {
  ProofNet g;
  std::map<std::string, int> boxes;

  int node(const std::string& id, NodeKind k, int box = -1, const std::string& var = "",
           std::optional<std::uint32_t> lvl = {}) {
    Node n;
    n.id = id;
    n.kind = k;
    n.box = box;
    n.var = var;
    n.var_level = lvl;
    g.nodes.push_back(std::move(n));
    return static_cast<int>(g.nodes.size() - 1);
  }
  int box(const std::string& id, int principal, std::vector<int> aux, int parent = -1) {
    BoxInfo b;
    b.id = id;
    b.principal = principal;
    b.aux = std::move(aux);
    b.parent = parent;
    g.boxes.push_back(std::move(b));
    return static_cast<int>(g.boxes.size() - 1);
  }
  int edge(const std::string& id, int tail, int tport, int head, int hport, FPtr label) {
    Edge e;
    e.id = id;
    e.tail = tail;
    e.tail_port = tport;
    e.head = head;
    e.head_port = hport;
    e.label = std::move(label);
    g.edges.push_back(std::move(e));
    return static_cast<int>(g.edges.size() - 1);
  }
  int out(const std::string& id, int tail, int tport, FPtr label) {
    int e = edge(id, tail, tport, -1, 0, std::move(label));
    g.conclusions.push_back(e);
    return e;
  }
  ProofNet finish() {
    g.refresh();
    return g;
  }
};

// contraction chain over equally labelled edges; returns the resulting edge
// producer (node,port) or a weakening when the group is empty
inline std::pair<int, int> contract_group(EncBuilder& nb, const std::string& prefix,
                                          std::vector<std::pair<int, int>> producers,
                                          const FPtr& label) {
  if (producers.empty()) {
    int w = nb.node(prefix + "w", NodeKind::Weak);
    return {w, 0};
  }
  while (producers.size() > 1) {
    int c = nb.node(prefix + "c" + std::to_string(producers.size()), NodeKind::Cont);
    auto [t0, p0] = producers[producers.size() - 2];
    auto [t1, p1] = producers[producers.size() - 1];
    nb.edge(prefix + "e" + std::to_string(producers.size()) + "a", t0, p0, c, 0, label);
    nb.edge(prefix + "e" + std::to_string(producers.size()) + "b", t1, p1, c, 1, label);
    producers.pop_back();
    producers.pop_back();
    producers.push_back({c, 0});
  }
  return producers[0];
}

// the shared chain-in-a-box part: k tensors exiting through aux doors
struct ChainParts {
  int box = -1;
  int principal = -1;                         // principal door node
  std::vector<std::pair<int, int>> doors;     // (aux node, 0) producers
};

inline ChainParts build_chain_box(EncBuilder& nb, std::uint32_t k, std::uint32_t s) {
  FPtr X = f_atom("X", true, s + 1);
  FPtr Xn = f_atom("X", false, s + 1);
  FPtr tenslab = f_tensor(X, Xn);
  FPtr parlab = f_par(Xn, X);

  ChainParts parts;
  std::vector<int> axs, tens, doors;
  for (std::uint32_t i = 0; i <= k; ++i) axs.push_back(nb.node("ax" + std::to_string(i), NodeKind::Ax));
  for (std::uint32_t i = 1; i <= k; ++i) {
    tens.push_back(nb.node("t" + std::to_string(i), NodeKind::Tensor));
    doors.push_back(nb.node("da" + std::to_string(i), NodeKind::BoxAux));
  }
  int px = nb.node("px", NodeKind::Par);
  int pd = nb.node("pd", NodeKind::BoxPrincipal);
  int box = nb.box("b", pd, doors);
  parts.box = box;
  parts.principal = pd;
  for (int a : axs) nb.g.nodes[a].box = box;
  for (int t : tens) nb.g.nodes[t].box = box;
  for (int dd : doors) nb.g.nodes[dd].box = box;
  nb.g.nodes[px].box = box;
  nb.g.nodes[pd].box = box;

  nb.edge("a0l", axs[0], 0, px, 0, Xn);
  if (k == 0) {
    nb.edge("a0r", axs[0], 1, px, 1, X);
  } else {
    nb.edge("a0r", axs[0], 1, tens[0], 0, X);
    for (std::uint32_t i = 1; i <= k; ++i) {
      nb.edge("a" + std::to_string(i) + "l", axs[i], 0, tens[i - 1], 1, Xn);
      if (i < k)
        nb.edge("a" + std::to_string(i) + "r", axs[i], 1, tens[i], 0, X);
      else
        nb.edge("a" + std::to_string(i) + "r", axs[i], 1, px, 1, X);
    }
    for (std::uint32_t i = 0; i < k; ++i) {
      nb.edge("ti" + std::to_string(i + 1), tens[i], 0, doors[i], 0, tenslab);
      parts.doors.push_back({doors[i], 0});
    }
  }
  nb.edge("pi", px, 0, pd, 0, parlab);
  return parts;
}

}  // namespace detail

// Church numeral net with one conclusion N_{s,d,n} and exactly one box.
inline ProofNet encode_nat(std::uint32_t k, std::uint32_t s, std::uint32_t d, std::uint32_t n) {
  detail::EncBuilder nb;
  FPtr X = f_atom("X", true, s + 1);
  FPtr Xn = f_atom("X", false, s + 1);
  FPtr door_label = f_quest(ExpIndex{s, d + 1, n}, f_tensor(X, Xn));
  FPtr bang_label = f_bang(ExpIndex{s, d, n}, f_par(Xn, X));

  detail::ChainParts parts = detail::build_chain_box(nb, k, s);
  auto group = detail::contract_group(nb, "g", parts.doors, door_label);
  int pg = nb.node("pg", NodeKind::Par);
  nb.edge("gl", group.first, group.second, pg, 0, door_label);
  nb.edge("sig", parts.principal, 0, pg, 1, bang_label);
  int fa = nb.node("fa", NodeKind::Forall, -1, "X", s + 1);
  nb.edge("pf", pg, 0, fa, 0, f_par(door_label, bang_label));
  nb.out("nat", fa, 0, nat_formula(s, d, n));
  return nb.finish();
}

// Binary list net with one conclusion B_{s,d,n} and exactly one box. Doors of
// 0-bits feed the first argument, doors of 1-bits the second.
inline ProofNet encode_binlist(const std::vector<int>& bits, std::uint32_t s, std::uint32_t d,
                               std::uint32_t n) {
  detail::EncBuilder nb;
  FPtr X = f_atom("X", true, s + 1);
  FPtr Xn = f_atom("X", false, s + 1);
  FPtr door_label = f_quest(ExpIndex{s, d + 1, n}, f_tensor(X, Xn));
  FPtr bang_label = f_bang(ExpIndex{s, d, n}, f_par(Xn, X));

  detail::ChainParts parts =
      detail::build_chain_box(nb, static_cast<std::uint32_t>(bits.size()), s);
  std::vector<std::pair<int, int>> zeros, ones;
  for (std::size_t i = 0; i < bits.size(); ++i)
    (bits[i] ? ones : zeros).push_back(parts.doors[i]);
  auto g0 = detail::contract_group(nb, "z", zeros, door_label);
  auto g1 = detail::contract_group(nb, "o", ones, door_label);
  int pg2 = nb.node("pg2", NodeKind::Par);
  nb.edge("g1", g1.first, g1.second, pg2, 0, door_label);
  nb.edge("sig", parts.principal, 0, pg2, 1, bang_label);
  int pg1 = nb.node("pg1", NodeKind::Par);
  nb.edge("g0", g0.first, g0.second, pg1, 0, door_label);
  nb.edge("p2", pg2, 0, pg1, 1, f_par(door_label, bang_label));
  int fa = nb.node("fa", NodeKind::Forall, -1, "X", s + 1);
  nb.edge("pf", pg1, 0, fa, 0, f_par(door_label, f_par(door_label, bang_label)));
  nb.out("blist", fa, 0, binlist_formula(s, d, n));
  return nb.finish();
}

// ---------------------------------------------------------------------------
// mL4 nets

inline std::vector<Violation> ml4_check(const ProofNet& g) {
  std::vector<Violation> out;
  auto bad = [&out](std::string where, std::string detail) {
    out.push_back({"ml4", std::move(where), std::move(detail)});
  };
  for (const Edge& e : g.edges) {
    if (!e.label) {
      bad(e.id, "missing label");
      return out;
    }
    if (!e.ml4_level) {
      bad(e.id, "missing level");
      return out;
    }
    try {
      FormulaClass c = classify(e.label);
      if (c == FormulaClass::SDNLL) bad(e.id, "indexed formula in an mL4 net");
    } catch (const MixedIndexing& mi) {
      bad(e.id, mi.what());
    }
  }
  if (!out.empty()) return out;

  auto lv = [&](int e) { return *g.edges[e].ml4_level; };
  auto lab = [&](int e) { return g.edges[e].label; };
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Node& n = g.nodes[i];
    auto P = [&](int k) { return g.premise_of[i][k]; };
    auto C = [&](int k) { return g.conclusion_of[i][k]; };
    switch (n.kind) {
      case NodeKind::Ax:
        if (!feq(lab(C(1)), dual(lab(C(0)))) || lv(C(0)) != lv(C(1)))
          bad(n.id, "ax conclusions must be dual at one level");
        break;
      case NodeKind::Cut:
        if (!feq(lab(P(1)), dual(lab(P(0)))) || lv(P(0)) != lv(P(1)))
          bad(n.id, "cut premises must be dual at one level");
        break;
      case NodeKind::Tensor:
        if (!feq(lab(C(0)), f_tensor(lab(P(0)), lab(P(1)))) || lv(P(0)) != lv(C(0)) ||
            lv(P(1)) != lv(C(0)))
          bad(n.id, "tensor levels/labels mismatch");
        break;
      case NodeKind::Par:
        if (!feq(lab(C(0)), f_par(lab(P(0)), lab(P(1)))) || lv(P(0)) != lv(C(0)) ||
            lv(P(1)) != lv(C(0)))
          bad(n.id, "par levels/labels mismatch");
        break;
      case NodeKind::Forall:
        if (lab(C(0))->kind != FKind::Forall || !feq(lab(C(0))->left, lab(P(0))) ||
            lv(P(0)) != lv(C(0)))
          bad(n.id, "forall levels/labels mismatch");
        break;
      case NodeKind::Exists: {
        FPtr c = lab(C(0));
        if (c->kind != FKind::Exists || lv(P(0)) != lv(C(0))) {
          bad(n.id, "exists levels/labels mismatch");
          break;
        }
        if (n.witness) {
          if (!feq(lab(P(0)), substitute(c->left, c->name, n.witness)))
            bad(n.id, "exists premise is not body[witness/var]");
        }
        break;
      }
      case NodeKind::Der:
        if (lab(C(0))->kind != FKind::Quest || !feq(lab(C(0))->left, lab(P(0))) ||
            lv(P(0)) != lv(C(0)) + 1)
          bad(n.id, "dereliction must drop one level");
        break;
      case NodeKind::Weak:
        if (lab(C(0))->kind != FKind::Quest) bad(n.id, "weakening conclusion not ?-headed");
        break;
      case NodeKind::Cont:
        if (!feq(lab(P(0)), lab(P(1))) || !feq(lab(C(0)), lab(P(0))) ||
            lv(P(0)) != lv(C(0)) || lv(P(1)) != lv(C(0)) || lab(C(0))->kind != FKind::Quest)
          bad(n.id, "contraction levels/labels mismatch");
        break;
      case NodeKind::Dig: bad(n.id, "digging node in an mL4 net"); break;
      case NodeKind::Sec:
        if (lab(C(0))->kind != FKind::Sect || !feq(lab(C(0))->left, lab(P(0))) ||
            lv(P(0)) != lv(C(0)) + 1)
          bad(n.id, "paragraph node must drop one level");
        break;
      case NodeKind::BoxPrincipal:
        if (lab(C(0))->kind != FKind::Bang || !feq(lab(C(0))->left, lab(P(0))) ||
            lv(P(0)) != lv(C(0)) + 1)
          bad(n.id, "principal door must drop one level");
        break;
      case NodeKind::BoxAux:
        if (lab(C(0))->kind != FKind::Quest || !feq(lab(C(0))->left, lab(P(0))) ||
            lv(P(0)) != lv(C(0)) + 1)
          bad(n.id, "aux door must drop one level");
        break;
    }
  }
  for (const BoxInfo& b : g.boxes)
    if (b.aux.size() > 1) bad(b.id, "mL4 boxes have at most one auxiliary door");
  return out;
}

namespace detail {

inline void scan_var_levels(const FPtr& f, std::uint32_t base, std::uint32_t h,
                            std::map<std::string, std::uint32_t>& mx) {
  switch (f->kind) {
    case FKind::Atom: {
      auto it = mx.find(f->name);
      std::uint32_t v = base + h;
      if (it == mx.end() || it->second < v) mx[f->name] = v;
      return;
    }
    case FKind::Tensor:
    case FKind::Par:
      scan_var_levels(f->left, base, h, mx);
      scan_var_levels(f->right, base, h, mx);
      return;
    case FKind::Forall:
    case FKind::Exists: scan_var_levels(f->left, base, h, mx); return;
    case FKind::Bang:
    case FKind::Quest:
    case FKind::Sect: scan_var_levels(f->left, base, h + 1, mx); return;
  }
}

inline FPtr ml4_transform(const FPtr& f, std::uint32_t base, std::uint32_t h,
                          const std::map<std::string, std::uint32_t>& mx) {
  switch (f->kind) {
    case FKind::Atom: {
      auto it = mx.find(f->name);
      return f_atom(f->name, f->positive, it != mx.end() ? it->second : base + h);
    }
    case FKind::Tensor:
    case FKind::Par:
      return f_bin(f->kind, ml4_transform(f->left, base, h, mx),
                   ml4_transform(f->right, base, h, mx));
    case FKind::Forall:
    case FKind::Exists: {
      auto it = mx.find(f->name);
      std::uint32_t lvl = it != mx.end() ? it->second : base + h;
      return f_quant(f->kind, f->name, lvl, ml4_transform(f->left, base, h, mx));
    }
    case FKind::Bang:
    case FKind::Quest:
      return f_exp(f->kind, ExpIndex{base + h, 1, 0}, ml4_transform(f->left, base, h + 1, mx));
    case FKind::Sect: return ml4_transform(f->left, base, h + 1, mx);
  }
  throw std::logic_error("bad formula");
}

}  // namespace detail

// Translation of an mL4 net into an SDNLL net: variables get their maximal
// level, modalities get index (level + exponential depth, 1, 0), paragraph
// nodes vanish.
inline ProofNet ml4_to_sdnll(const ProofNet& g0) {
  std::vector<Violation> v = ml4_check(g0);
  if (!v.empty()) throw std::runtime_error("ml4_to_sdnll: input fails ml4_check: " + v[0].to_string());
  std::map<std::string, std::uint32_t> mx;
  for (const Edge& e : g0.edges) detail::scan_var_levels(e.label, *e.ml4_level, 0, mx);

  ProofNet g = g0;
  for (Edge& e : g.edges) {
    e.label = detail::ml4_transform(e.label, *e.ml4_level, 0, mx);
    e.ml4_level.reset();
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    Node& n = g.nodes[i];
    if ((n.kind == NodeKind::Forall || n.kind == NodeKind::Exists) && !n.var.empty()) {
      auto it = mx.find(n.var);
      if (it != mx.end()) n.var_level = it->second;
    }
    if (n.witness) {
      std::uint32_t base = *g0.edges[g0.premise_of[i][0]].ml4_level;
      n.witness = detail::ml4_transform(n.witness, base, 0, mx);
    }
  }
  // remove paragraph nodes
  while (true) {
    int sec = -1;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      if (g.nodes[i].kind == NodeKind::Sec) {
        sec = static_cast<int>(i);
        break;
      }
    if (sec < 0) break;
    g.refresh();
    int p = g.premise_of[sec][0], c = g.conclusion_of[sec][0];
    g.edges[p].head = g.edges[c].head;
    g.edges[p].head_port = g.edges[c].head_port;
    // rebuild without the sec node and its conclusion edge
    ProofNet out;
    std::map<int, int> nmap, emap;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      if (static_cast<int>(i) != sec) {
        nmap[static_cast<int>(i)] = static_cast<int>(out.nodes.size());
        out.nodes.push_back(g.nodes[i]);
      }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (static_cast<int>(e) != c) {
        emap[static_cast<int>(e)] = static_cast<int>(out.edges.size());
        out.edges.push_back(g.edges[e]);
      }
    for (Edge& e : out.edges) {
      e.tail = nmap.at(e.tail);
      if (e.head >= 0) e.head = nmap.at(e.head);
    }
    out.boxes = g.boxes;
    for (BoxInfo& b : out.boxes) {
      b.principal = nmap.at(b.principal);
      for (int& a : b.aux) a = nmap.at(a);
    }
    for (int cc : g.conclusions)
      out.conclusions.push_back(emap.at(cc == c ? p : cc));
    out.refresh();
    g = std::move(out);
  }
  g.refresh();
  return g;
}

}  // namespace pnet
