// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pnet/bignat.hpp"
#include "pnet/ctxsem.hpp"

namespace pnet {

enum class RelationKind : std::uint8_t { Strat, DC, Nest };

inline const char* relation_name(RelationKind k) {
  switch (k) {
    case RelationKind::Strat: return "strat";
    case RelationKind::DC: return "dc";
    case RelationKind::Nest: return "nest";
  }
  return "?";
}

struct BoxRelation {
  RelationKind kind;
  std::set<std::pair<int, int>> edges;  // (B, C) with B -> C
  bool acyclic = true;
  std::map<int, std::optional<int>> stratum;  // box -> stratum, nullopt when infinite
  int depth = 0;                              // |R| = max stratum over boxes (acyclic case)
  std::vector<int> cycle_witness;             // boxes forming a cycle, when cyclic
};

// Enumerate all signatures of depth <= d (for the exhaustive-potential fallback).
inline std::vector<SigPtr> enumerate_signatures(std::uint32_t d) {
  std::vector<SigPtr> cur{sig_e()};
  for (std::uint32_t i = 0; i < d; ++i) {
    std::vector<SigPtr> next{sig_e()};
    for (const SigPtr& a : cur) {
      next.push_back(sig_l(a));
      next.push_back(sig_r(a));
      next.push_back(sig_p(a));
      for (const SigPtr& b : cur) next.push_back(sig_n(a, b));
    }
    std::set<SigPtr, SigLess> dedup(next.begin(), next.end());
    cur.assign(dedup.begin(), dedup.end());
  }
  return cur;
}

namespace detail {

inline void relation_strata(BoxRelation& rel, std::size_t nboxes) {
  // longest chain (counted in boxes) starting at each box; cycles give infinity
  std::vector<std::vector<int>> succ(nboxes);
  for (auto [b, c] : rel.edges) succ[b].push_back(c);
  std::vector<int> state(nboxes, 0), depth(nboxes, 0);
  std::vector<bool> infinite(nboxes, false);
  std::vector<int> stack;
  std::function<void(int)> dfs = [&](int v) {
    state[v] = 1;
    stack.push_back(v);
    int best = 1;
    for (int w : succ[v]) {
      if (state[w] == 0) dfs(w);
      if (state[w] == 1) {  // back edge: cycle
        infinite[v] = true;
        if (rel.cycle_witness.empty()) {
          auto it = std::find(stack.begin(), stack.end(), w);
          rel.cycle_witness.assign(it, stack.end());
        }
      } else {
        if (infinite[w]) infinite[v] = true;
        best = std::max(best, 1 + depth[w]);
      }
    }
    depth[v] = best;
    state[v] = 2;
    stack.pop_back();
  };
  for (std::size_t v = 0; v < nboxes; ++v)
    if (state[v] == 0) dfs(static_cast<int>(v));
  rel.acyclic = true;
  rel.depth = 0;
  for (std::size_t v = 0; v < nboxes; ++v) {
    if (infinite[v]) {
      rel.acyclic = false;
      rel.stratum[static_cast<int>(v)] = std::nullopt;
    } else {
      rel.stratum[static_cast<int>(v)] = depth[v];
      rel.depth = std::max(rel.depth, depth[v]);
    }
  }
}

}  // namespace detail

// Builds one of the three relations by harvesting the copy explorations of
// every potential box. Potentials range over canonical potentials, or over
// all potentials with signatures of depth <= *all_pot_depth when given.
inline BoxRelation build_relation(Explorer& ex, RelationKind kind,
                                  std::optional<std::uint32_t> all_pot_depth = {}) {
  const ProofNet& g = ex.net();
  BoxRelation rel;
  rel.kind = kind;
  for (std::size_t b = 0; b < g.boxes.size(); ++b) {
    std::vector<Potential> pots;
    if (all_pot_depth) {
      std::vector<SigPtr> sigs = enumerate_signatures(*all_pot_depth);
      int depth = 0;
      for (int p = g.boxes[b].parent; p != -1; p = g.boxes[p].parent) ++depth;
      pots.push_back({});
      for (int i = 0; i < depth; ++i) {
        std::vector<Potential> next;
        for (const Potential& p : pots)
          for (const SigPtr& t : sigs) {
            Potential q = p;
            q.push_back(t);
            next.push_back(std::move(q));
          }
        pots = std::move(next);
      }
    } else {
      pots = ex.canonical_potentials_box(static_cast<int>(b));
    }
    for (const Potential& p : pots) {
      const CopySetEntry& entry = ex.copies(static_cast<int>(b), p);
      switch (kind) {
        case RelationKind::Strat:
          for (int c : entry.events.strat_targets)
            rel.edges.insert({static_cast<int>(b), c});
          break;
        case RelationKind::DC: {
          std::map<int, std::set<int>> doors;
          for (auto [c, i] : entry.events.full_aux) doors[c].insert(i);
          for (auto& [c, is] : doors)
            if (is.size() >= 2) rel.edges.insert({static_cast<int>(b), c});
          break;
        }
        case RelationKind::Nest:
          for (int c : entry.events.full_princ)
            rel.edges.insert({static_cast<int>(b), c});
          break;
      }
    }
  }
  detail::relation_strata(rel, g.boxes.size());
  return rel;
}

// Coarser variant of stratification: B enters C anywhere (used as a test
// oracle for strat ⊆ enters).
inline std::set<std::pair<int, int>> enters_relation(Explorer& ex) {
  const ProofNet& g = ex.net();
  std::set<std::pair<int, int>> out;
  for (std::size_t b = 0; b < g.boxes.size(); ++b) {
    for (const Potential& p : ex.canonical_potentials_box(static_cast<int>(b))) {
      const CopySetEntry& entry = ex.copies(static_cast<int>(b), p);
      DirEdge sigma{g.principal_edge(static_cast<int>(b)), false};
      for (const SigPtr& t : entry.tested) {
        Context c;
        c.e = sigma;
        c.pot = p;
        c.trace.push_back(te_bang(t));
        std::unordered_set<Context, ContextHash, ContextEq> visited;
        Context cur = c;
        std::size_t guard = 0;
        while (visited.insert(cur).second && guard++ < default_step_budget()) {
          int box = g.edge_box(cur.e.edge);
          for (int bb = box; bb != -1; bb = g.boxes[bb].parent)
            out.insert({static_cast<int>(b), bb});
          auto nxt = step(g, cur);
          if (!nxt) break;
          cur = nxt->first;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bound formulas

// 2^x_0 = x and 2^x_{n+1} = 2^{2^x}_n: iterate v := 2^v, n times.
inline Bound tower(std::uint64_t x, std::uint64_t n) {
  Bound b;
  b.exact = true;
  b.value = BigNat(x);
  b.expression = std::to_string(x);
  const std::size_t max_bits = 1u << 22;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (b.exact && b.value.bit_length() <= 40) {
      BigNat next;
      if (BigNat::pow(BigNat(2), b.value.to_u64_saturating(), max_bits, next)) {
        b.value = next;
        b.expression = b.value.to_string();
        continue;
      }
    }
    b.exact = false;
    b.expression = "2^(" + b.expression + ")";
  }
  return b;
}

// longest reduction bounded by 2^x_{3*strata}
inline Bound elem_bound(std::uint64_t x, std::uint64_t strata) { return tower(x, 3 * strata); }

inline Bound pow_bound(std::uint64_t x, const Bound& exponent) {
  Bound b;
  const std::size_t max_bits = 1u << 22;
  if (exponent.exact && exponent.value.bit_length() <= 40 &&
      BigNat::pow(BigNat(x), exponent.value.to_u64_saturating(), max_bits, b.value)) {
    b.exact = true;
    b.expression = b.value.to_string();
    return b;
  }
  b.exact = false;
  b.expression = std::to_string(x) + "^(" + exponent.to_string() + ")";
  return b;
}

inline Bound exact_bound(std::uint64_t v) {
  Bound b;
  b.exact = true;
  b.value = BigNat(v);
  b.expression = b.value.to_string();
  return b;
}

inline Bound mul_bound(const Bound& a, const Bound& b) {
  Bound r;
  const std::size_t max_bits = 1u << 22;
  if (a.exact && b.exact && a.value.bit_length() + b.value.bit_length() <= max_bits) {
    r.exact = true;
    r.value = a.value * b.value;
    r.expression = r.value.to_string();
    return r;
  }
  r.exact = false;
  r.expression = a.to_string() + "*" + b.to_string();
  return r;
}

inline Bound pow_bound_big(const Bound& base, std::uint64_t e) {
  Bound out = exact_bound(1);
  Bound acc = base;
  while (e) {
    if (e & 1) out = mul_bound(out, acc);
    e >>= 1;
    if (e) acc = mul_bound(acc, acc);
  }
  return out;
}

// W_G <= x^(D^S * partial^((N+1)(S+1)))
inline Bound poly_bound(std::uint64_t x, std::uint64_t S, std::uint64_t D, std::uint64_t N,
                        std::uint64_t partial) {
  Bound ds = pow_bound_big(exact_bound(D), S);
  Bound pe = pow_bound_big(exact_bound(partial), (N + 1) * (S + 1));
  Bound expo = mul_bound(ds, pe);
  return pow_bound(x, expo);
}

// per-box copy count bound x^(D^S * partial^(N*S+N+S) - 1)
inline Bound copies_bound(std::uint64_t x, std::uint64_t S, std::uint64_t D, std::uint64_t N,
                          std::uint64_t partial) {
  Bound ds = pow_bound_big(exact_bound(D), S);
  Bound pe = pow_bound_big(exact_bound(partial), N * S + N + S);
  Bound expo = mul_bound(ds, pe);
  if (expo.exact && !expo.value.is_zero()) {
    // subtract one
    std::uint64_t v = expo.value.to_u64_saturating();
    if (v != UINT64_MAX) return pow_bound(x, exact_bound(v - 1));
  }
  Bound b;
  b.exact = false;
  b.expression = std::to_string(x) + "^(" + expo.to_string() + "-1)";
  return b;
}

// SDNLL reduction bound x^(1 + D^S * partial^(N*S)) with indices-derived
// parameters; lambda=true selects the beta-step variant with partial^(1+N*S).
inline Bound sdnll_bound(std::uint64_t x, std::uint64_t S, std::uint64_t D, std::uint64_t N,
                         std::uint64_t partial, bool lambda = false) {
  Bound ds = pow_bound_big(exact_bound(D), S);
  Bound pe = pow_bound_big(exact_bound(partial), lambda ? 1 + N * S : N * S);
  Bound expo = mul_bound(ds, pe);
  if (expo.exact) {
    std::uint64_t v = expo.value.to_u64_saturating();
    if (v != UINT64_MAX) return pow_bound(x, exact_bound(v + 1));
  }
  Bound b;
  b.exact = false;
  b.expression = std::to_string(x) + "^(1+" + expo.to_string() + ")";
  return b;
}

// ---------------------------------------------------------------------------
// Full report

struct AnalysisReport {
  std::uint64_t x = 0;        // |dirEdges|
  std::uint64_t partial = 1;  // 1 + max edge depth
  BoxRelation strat, dc, nest;
  bool relations_ok = true;   // exploration terminated without cycle
  std::string error;
  Bound elementary;           // when strat acyclic
  Bound polynomial;           // when all three acyclic
  bool weight_known = false;
  std::uint64_t weight = 0;
};

inline AnalysisReport analyze(const ProofNet& g,
                              std::optional<std::uint32_t> all_pot_depth = {}) {
  AnalysisReport r;
  r.x = g.edges.size();
  int maxd = 0;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    maxd = std::max(maxd, g.depth_of_edge(static_cast<int>(e)));
  r.partial = 1 + static_cast<std::uint64_t>(maxd);
  Explorer ex(g);
  try {
    r.strat = build_relation(ex, RelationKind::Strat, all_pot_depth);
    r.dc = build_relation(ex, RelationKind::DC, all_pot_depth);
    r.nest = build_relation(ex, RelationKind::Nest, all_pot_depth);
    r.weight = ex.weight();
    r.weight_known = true;
  } catch (const CycleDetected& e) {
    r.relations_ok = false;
    r.error = e.what();
    return r;
  } catch (const ExplorationBudget& e) {
    r.relations_ok = false;
    r.error = e.what();
    return r;
  }
  if (r.strat.acyclic)
    r.elementary = elem_bound(r.x, static_cast<std::uint64_t>(r.strat.depth));
  if (r.strat.acyclic && r.dc.acyclic && r.nest.acyclic)
    r.polynomial = poly_bound(r.x, static_cast<std::uint64_t>(r.strat.depth),
                              static_cast<std::uint64_t>(r.dc.depth),
                              static_cast<std::uint64_t>(r.nest.depth), r.partial);
  return r;
}

}  // namespace pnet
