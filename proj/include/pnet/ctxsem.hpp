// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "pnet/proofnet.hpp"

namespace pnet {

struct IllFormedContext : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CycleDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExplorationBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DirEdge {
  int edge = -1;
  bool rev = false;
  friend bool operator==(const DirEdge& a, const DirEdge& b) {
    return a.edge == b.edge && a.rev == b.rev;
  }
  friend bool operator<(const DirEdge& a, const DirEdge& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.rev < b.rev;
  }
};

struct Context {
  DirEdge e;
  std::vector<SigPtr> pot;
  std::vector<TraceElem> trace;

  friend bool operator==(const Context& a, const Context& b) {
    if (!(a.e == b.e) || a.pot.size() != b.pot.size() || a.trace.size() != b.trace.size())
      return false;
    for (std::size_t i = 0; i < a.pot.size(); ++i)
      if (!sig_eq(a.pot[i], b.pot[i])) return false;
    for (std::size_t i = 0; i < a.trace.size(); ++i)
      if (!(a.trace[i] == b.trace[i])) return false;
    return true;
  }
};

struct ContextHash {
  std::size_t operator()(const Context& c) const {
    std::size_t h = static_cast<std::size_t>(c.e.edge) * 2654435761u + (c.e.rev ? 17 : 3);
    for (const SigPtr& p : c.pot) h = h * 1099511628211ull ^ p->hash;
    for (const TraceElem& t : c.trace) {
      h = h * 1000003 ^ (static_cast<std::size_t>(t.kind) + 11);
      if (t.sig) h = h * 31 ^ t.sig->hash;
    }
    return h;
  }
};
struct ContextEq {
  bool operator()(const Context& a, const Context& b) const { return a == b; }
};

inline std::string to_string(const ProofNet& g, const Context& c) {
  std::string s = "((" + std::string(c.e.rev ? "~" : "") + g.edges[c.e.edge].id + ",[";
  for (std::size_t i = 0; i < c.pot.size(); ++i) s += (i ? ";" : "") + sig_to_string(c.pot[i]);
  s += "]),[";
  for (std::size_t i = 0; i < c.trace.size(); ++i) s += (i ? ";" : "") + te_to_string(c.trace[i]);
  return s + "])";
}

enum class StepKind : std::uint8_t { Plain, Jump };

// ---------------------------------------------------------------------------
// The machine

namespace detail {

inline bool top_is(const Context& c, TraceKind k) {
  return !c.trace.empty() && c.trace.back().kind == k;
}

}  // namespace detail

// Bottom trace element is !_e: the signature has been fully consumed.
inline bool is_success(const Context& c) {
  return !c.trace.empty() && c.trace.front().kind == TraceKind::Bang &&
         c.trace.front().sig->kind == SigKind::E;
}

// The unique successor context under the context-semantics rules, or nullopt
// when no rule applies. The potential-length/depth invariant is assumed.
inline std::optional<std::pair<Context, StepKind>> step(const ProofNet& g, const Context& c) {
  const Edge& ed = g.edges[c.e.edge];

  if (!c.e.rev) {
    // moving with the edge: entering the head node at a premise port
    if (ed.head < 0) return {};
    int n = ed.head, port = ed.head_port;
    const Node& nd = g.nodes[n];
    auto to_conclusion = [&](int cport, Context nc) {
      nc.e = {g.conclusion_of[n][cport], false};
      return nc;
    };
    switch (nd.kind) {
      case NodeKind::Cut: {
        Context nc = c;
        nc.e = {g.premise_of[n][1 - port], true};
        return {{nc, StepKind::Plain}};
      }
      case NodeKind::Tensor: {
        Context nc = c;
        nc.trace.push_back(te(port == 0 ? TraceKind::TensL : TraceKind::TensR));
        return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
      }
      case NodeKind::Par: {
        Context nc = c;
        nc.trace.push_back(te(port == 0 ? TraceKind::ParL : TraceKind::ParR));
        return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
      }
      case NodeKind::Forall: {
        Context nc = c;
        nc.trace.push_back(te(TraceKind::Forall));
        return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
      }
      case NodeKind::Exists: {
        Context nc = c;
        nc.trace.push_back(te(TraceKind::Exists));
        return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
      }
      case NodeKind::Der: {
        Context nc = c;
        nc.trace.push_back(te_quest(sig_e()));
        return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
      }
      case NodeKind::Cont: {
        if (!detail::top_is(c, TraceKind::Quest)) return {};
        Context nc = c;
        SigPtr t = nc.trace.back().sig;
        nc.trace.back() = te_quest(port == 0 ? sig_l(t) : sig_r(t));
        return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
      }
      case NodeKind::Dig: {
        std::size_t k = c.trace.size();
        if (k >= 2 && c.trace[k - 1].kind == TraceKind::Quest &&
            c.trace[k - 2].kind == TraceKind::Quest) {
          Context nc = c;
          SigPtr t2 = nc.trace[k - 1].sig, t1 = nc.trace[k - 2].sig;
          nc.trace.pop_back();
          nc.trace.back() = te_quest(sig_n(t1, t2));
          return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
        }
        if (k == 1 && c.trace[0].kind == TraceKind::Quest) {
          Context nc = c;
          nc.trace[0] = te_quest(sig_p(nc.trace[0].sig));
          return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
        }
        return {};
      }
      case NodeKind::BoxAux: {
        if (c.pot.empty()) return {};
        Context nc = c;
        SigPtr t = nc.pot.back();
        nc.pot.pop_back();
        nc.trace.push_back(te_quest(t));
        return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
      }
      case NodeKind::BoxPrincipal: {
        if (c.pot.empty()) return {};
        Context nc = c;
        SigPtr t = nc.pot.back();
        nc.pot.pop_back();
        nc.trace.push_back(te_bang(t));
        return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
      }
      case NodeKind::Sec: {  // mL4 paragraph node is neutral
        Context nc = c;
        return {{to_conclusion(0, std::move(nc)), StepKind::Plain}};
      }
      case NodeKind::Ax:
      case NodeKind::Weak: return {};
    }
    return {};
  }

  // moving against the edge: entering the tail node at a conclusion port
  int n = ed.tail, port = ed.tail_port;
  const Node& nd = g.nodes[n];
  auto to_premise_rev = [&](int pport, Context nc) {
    nc.e = {g.premise_of[n][pport], true};
    return nc;
  };
  switch (nd.kind) {
    case NodeKind::Ax: {
      Context nc = c;
      nc.e = {g.conclusion_of[n][1 - port], false};
      return {{nc, StepKind::Plain}};
    }
    case NodeKind::Tensor: {
      if (c.trace.empty()) return {};
      TraceKind k = c.trace.back().kind;
      if (k != TraceKind::ParL && k != TraceKind::ParR) return {};
      Context nc = c;
      nc.trace.pop_back();
      return {{to_premise_rev(k == TraceKind::ParL ? 0 : 1, std::move(nc)), StepKind::Plain}};
    }
    case NodeKind::Par: {
      if (c.trace.empty()) return {};
      TraceKind k = c.trace.back().kind;
      if (k != TraceKind::TensL && k != TraceKind::TensR) return {};
      Context nc = c;
      nc.trace.pop_back();
      return {{to_premise_rev(k == TraceKind::TensL ? 0 : 1, std::move(nc)), StepKind::Plain}};
    }
    case NodeKind::Forall: {
      if (!detail::top_is(c, TraceKind::Exists)) return {};
      Context nc = c;
      nc.trace.pop_back();
      return {{to_premise_rev(0, std::move(nc)), StepKind::Plain}};
    }
    case NodeKind::Exists: {
      if (!detail::top_is(c, TraceKind::Forall)) return {};
      Context nc = c;
      nc.trace.pop_back();
      return {{to_premise_rev(0, std::move(nc)), StepKind::Plain}};
    }
    case NodeKind::Der: {
      // dual dereliction requires a nonempty remainder
      if (c.trace.size() < 2 || c.trace.back().kind != TraceKind::Bang ||
          c.trace.back().sig->kind != SigKind::E)
        return {};
      Context nc = c;
      nc.trace.pop_back();
      return {{to_premise_rev(0, std::move(nc)), StepKind::Plain}};
    }
    case NodeKind::Cont: {
      if (!detail::top_is(c, TraceKind::Bang)) return {};
      SigPtr t = c.trace.back().sig;
      if (t->kind != SigKind::L && t->kind != SigKind::R) return {};
      Context nc = c;
      nc.trace.back() = te_bang(t->a);
      return {{to_premise_rev(t->kind == SigKind::L ? 0 : 1, std::move(nc)), StepKind::Plain}};
    }
    case NodeKind::Dig: {
      if (!detail::top_is(c, TraceKind::Bang)) return {};
      SigPtr t = c.trace.back().sig;
      if (t->kind == SigKind::N) {
        Context nc = c;
        nc.trace.back() = te_bang(t->a);
        nc.trace.push_back(te_bang(t->b));
        return {{to_premise_rev(0, std::move(nc)), StepKind::Plain}};
      }
      if (t->kind == SigKind::P && c.trace.size() == 1) {
        Context nc = c;
        nc.trace.back() = te_bang(t->a);
        return {{to_premise_rev(0, std::move(nc)), StepKind::Plain}};
      }
      return {};
    }
    case NodeKind::Weak: return {};
    case NodeKind::BoxAux: {
      if (c.trace.size() >= 2 && c.trace.back().kind == TraceKind::Bang) {
        Context nc = c;
        SigPtr t = nc.trace.back().sig;
        nc.trace.pop_back();
        nc.pot.push_back(t);
        return {{to_premise_rev(0, std::move(nc)), StepKind::Plain}};
      }
      if (c.trace.size() == 1 && c.trace[0].kind == TraceKind::Bang) {
        // jump to the principal edge of the same box
        int box = nd.box;
        Context nc = c;
        nc.e = {g.principal_edge(box), false};
        return {{nc, StepKind::Jump}};
      }
      return {};
    }
    case NodeKind::BoxPrincipal: {
      if (c.trace.size() < 2 || c.trace.back().kind != TraceKind::Quest) return {};
      Context nc = c;
      SigPtr t = nc.trace.back().sig;
      nc.trace.pop_back();
      nc.pot.push_back(t);
      return {{to_premise_rev(0, std::move(nc)), StepKind::Plain}};
    }
    case NodeKind::Sec: {
      Context nc = c;
      return {{to_premise_rev(0, std::move(nc)), StepKind::Plain}};
    }
    case NodeKind::Cut: return {};  // cuts have no conclusions
  }
  return {};
}

// Is c a context sitting on the principal edge of some box, with a singleton
// bang trace (the launch pad of a copy path)?
inline int principal_launch_box(const ProofNet& g, const Context& c) {
  if (c.e.rev || c.trace.size() != 1 || c.trace[0].kind != TraceKind::Bang) return -1;
  const Edge& ed = g.edges[c.e.edge];
  const Node& t = g.nodes[ed.tail];
  if (t.kind != NodeKind::BoxPrincipal) return -1;
  return t.box;
}

// ~>_S: like step, but a jump over box B requires B in S, and no step leaves
// ((sigma(B),P),[!_t]) when B is outside S.
inline std::optional<std::pair<Context, StepKind>> step_restricted(
    const ProofNet& g, const Context& c, const std::set<int>& boxes) {
  int launch = principal_launch_box(g, c);
  if (launch >= 0 && !boxes.count(launch)) return {};
  auto r = step(g, c);
  if (!r) return {};
  if (r->second == StepKind::Jump) {
    int box = g.nodes[g.edges[c.e.edge].tail].box;
    if (!boxes.count(box)) return {};
  }
  return r;
}

// |->_S: plain steps only (no jumps); arriving at the reversed principal edge
// of a box outside S with a ?-topped trace is blocked.
inline std::optional<Context> step_nojump(const ProofNet& g, const Context& c,
                                          const std::set<int>* boxes = nullptr) {
  auto r = step(g, c);
  if (!r || r->second == StepKind::Jump) return {};
  if (boxes) {
    const Context& d = r->first;
    if (d.e.rev && !d.trace.empty() && d.trace.back().kind == TraceKind::Quest) {
      const Node& t = g.nodes[g.edges[d.e.edge].tail];
      if (t.kind == NodeKind::BoxPrincipal && !boxes->count(t.box)) return {};
    }
  }
  return r->first;
}

// ---------------------------------------------------------------------------
// Runs and exploration

struct RunEvents {
  // boxes whose reversed principal edge the run visits before any jump
  std::set<int> strat_targets;
  // (box, aux door index) visited with trace exactly [!_e]
  std::set<std::pair<int, int>> full_aux;
  // boxes whose forward principal edge is visited with [!_e] after >= 1 step
  std::set<int> full_princ;
};

struct RunResult {
  bool success = false;
  bool cycled = false;
  std::vector<std::pair<std::int32_t, SigKind>> frontiers;  // consumed tagged leaves
  std::size_t steps = 0;
};

struct RunBudget {
  std::size_t remaining;
  explicit RunBudget(std::size_t b) : remaining(b) {}
  void tick() {
    if (remaining == 0) throw ExplorationBudget("context exploration budget exhausted");
    --remaining;
  }
};

inline std::size_t default_step_budget() {
  if (const char* env = std::getenv("PNET_STEP_BUDGET")) {
    std::size_t v = std::strtoull(env, nullptr, 10);
    if (v > 0) return v;
  }
  return 1000000;
}

// Runs the deterministic machine from `start` to exhaustion, recording
// successes, harvest events, and the tagged leaves whose shape blocked a rule.
inline RunResult run_machine(const ProofNet& g, Context start,
                             const std::set<int>* restriction, RunBudget& budget,
                             RunEvents* events) {
  RunResult res;
  std::unordered_set<Context, ContextHash, ContextEq> visited;
  Context c = std::move(start);
  bool jumped = false;
  while (true) {
    budget.tick();
    if (!visited.insert(c).second) {
      res.cycled = true;
      return res;
    }
    if (is_success(c)) res.success = true;
    if (events) {
      if (c.e.rev) {
        const Node& t = g.nodes[g.edges[c.e.edge].tail];
        if (t.kind == NodeKind::BoxPrincipal && !jumped) events->strat_targets.insert(t.box);
        if (t.kind == NodeKind::BoxAux && c.trace.size() == 1 &&
            c.trace[0].kind == TraceKind::Bang && c.trace[0].sig->kind == SigKind::E) {
          int box = t.box;
          const auto& aux = g.boxes[box].aux;
          for (std::size_t i = 0; i < aux.size(); ++i)
            if (aux[i] == g.edges[c.e.edge].tail)
              events->full_aux.insert({box, static_cast<int>(i) + 1});
        }
      } else if (res.steps >= 1) {
        int box = principal_launch_box(g, c);
        if (box >= 0 && c.trace[0].sig->kind == SigKind::E) events->full_princ.insert(box);
      }
    }

    std::optional<std::pair<Context, StepKind>> nxt =
        restriction ? step_restricted(g, c, *restriction) : step(g, c);
    if (!nxt) {
      // identify a blocking tagged leaf, if any
      if (!c.trace.empty() && c.trace.back().kind == TraceKind::Bang &&
          c.trace.back().sig->kind == SigKind::E && c.trace.back().sig->tag >= 0 && c.e.rev) {
        NodeKind k = g.nodes[g.edges[c.e.edge].tail].kind;
        if (k == NodeKind::Cont || k == NodeKind::Dig)
          res.frontiers.push_back({c.trace.back().sig->tag, SigKind::E});
      }
      return res;
    }
    if (nxt->second == StepKind::Jump) jumped = true;
    c = std::move(nxt->first);
    ++res.steps;
  }
}

// ---------------------------------------------------------------------------
// Copies, canonical potentials, weight

using Potential = std::vector<SigPtr>;

struct PotentialLess {
  bool operator()(const Potential& a, const Potential& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (int c = sig_cmp(a[i], b[i])) return c < 0;
    return false;
  }
};

struct CopySetEntry {
  std::vector<SigPtr> copies;  // sorted standard signatures
  RunEvents events;            // union over all runs from this potential box
  std::set<SigPtr, SigLess> tested;  // untagged signatures whose run succeeded
};

class Explorer {
 public:
  explicit Explorer(const ProofNet& g, std::optional<std::set<int>> restriction = {},
                    std::size_t budget = default_step_budget())
      : g_(g), restriction_(std::move(restriction)), budget_(budget) {}

  const ProofNet& net() const { return g_; }

  const CopySetEntry& copies(int box, const Potential& pot) {
    auto key = std::make_pair(box, pot);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    CopySetEntry entry = compute(box, pot);
    return cache_.emplace(std::move(key), std::move(entry)).first->second;
  }

  // all canonical potentials for the given enclosing-box chain (outermost first)
  std::vector<Potential> canonical_potentials_for_chain(const std::vector<int>& chain) {
    std::vector<Potential> pots{{}};
    for (int b : chain) {
      std::vector<Potential> next;
      for (const Potential& p : pots)
        for (const SigPtr& t : copies(b, p).copies) {
          Potential q = p;
          q.push_back(t);
          next.push_back(std::move(q));
        }
      pots = std::move(next);
    }
    return pots;
  }

  std::vector<Potential> canonical_potentials_edge(int edge) {
    return canonical_potentials_for_chain(g_.box_chain_of_edge(edge));
  }
  std::vector<Potential> canonical_potentials_box(int box) {
    std::vector<int> chain;
    for (int b = g_.boxes[box].parent; b != -1; b = g_.boxes[b].parent) chain.push_back(b);
    std::reverse(chain.begin(), chain.end());
    return canonical_potentials_for_chain(chain);
  }

  std::uint64_t weight() {
    std::map<std::vector<int>, std::uint64_t> per_chain;
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < g_.edges.size(); ++e) {
      std::vector<int> chain = g_.box_chain_of_edge(static_cast<int>(e));
      auto it = per_chain.find(chain);
      std::uint64_t k;
      if (it != per_chain.end()) {
        k = it->second;
      } else {
        k = canonical_potentials_for_chain(chain).size();
        per_chain[chain] = k;
      }
      total += 2 * k;
    }
    return total;
  }

  // Success of the deterministic run from ((e,P),[!_u]@T).
  bool run_succeeds(DirEdge e, const Potential& pot, const SigPtr& u,
                    const std::vector<TraceElem>& tail) {
    Context c;
    c.e = e;
    c.pot = pot;
    c.trace.push_back(te_bang(u));
    c.trace.insert(c.trace.end(), tail.begin(), tail.end());
    RunBudget budget(budget_);
    RunResult r = run_machine(g_, std::move(c), restriction_ ? &*restriction_ : nullptr, budget,
                              nullptr);
    if (r.cycled) throw CycleDetected("context repeated; net does not normalize");
    return r.success;
  }

  // for every u ]= t, the run from ((e,P),[!_u]@T) succeeds
  bool is_copy_context(DirEdge e, const Potential& pot, const SigPtr& t,
                       const std::vector<TraceElem>& tail) {
    for (const SigPtr& u : simplifications(t))
      if (!run_succeeds(e, pot, u, tail)) return false;
    return true;
  }

 private:
  CopySetEntry compute(int box, const Potential& pot) {
    CopySetEntry entry;
    DirEdge sigma{g_.principal_edge(box), false};

    struct Cand {
      SigPtr tagged;
      std::int32_t next_tag;
    };
    std::vector<Cand> work{{sig_e(0), 1}};
    std::set<SigPtr, SigLess> seen{sig_e()};
    RunBudget budget(budget_);

    while (!work.empty()) {
      Cand cand = std::move(work.back());
      work.pop_back();
      SigPtr plain = sig_untag(cand.tagged);

      bool all_success = true;
      std::set<std::int32_t> frontier_tags;
      std::vector<SigPtr> to_run{cand.tagged};
      for (const SigPtr& u : simplifications(cand.tagged)) to_run.push_back(u);
      for (const SigPtr& u : to_run) {
        Context c;
        c.e = sigma;
        c.pot = pot;
        c.trace.push_back(te_bang(u));
        RunEvents ev;
        RunResult r = run_machine(g_, std::move(c), restriction_ ? &*restriction_ : nullptr,
                                  budget, &ev);
        entry.events.strat_targets.insert(ev.strat_targets.begin(), ev.strat_targets.end());
        entry.events.full_aux.insert(ev.full_aux.begin(), ev.full_aux.end());
        // the nesting relation only collects paths launched by a
        // non-standard signature
        if (!sig_standard(u))
          entry.events.full_princ.insert(ev.full_princ.begin(), ev.full_princ.end());
        if (r.cycled) throw CycleDetected("context repeated; net does not normalize");
        if (r.success) entry.tested.insert(sig_untag(u));
        all_success = all_success && r.success;
        for (auto [tag, k] : r.frontiers) {
          (void)k;
          frontier_tags.insert(tag);
        }
      }
      if (all_success && sig_standard(plain)) entry.copies.push_back(plain);

      for (std::int32_t tag : frontier_tags) {
        auto enqueue = [&](SigPtr sub, std::int32_t next) {
          SigPtr t2 = sig_plug(cand.tagged, tag, std::move(sub));
          SigPtr key = sig_untag(t2);
          if (seen.insert(key).second) {
            if (seen.size() > max_candidates_)
              throw ExplorationBudget("candidate signature budget exhausted");
            work.push_back({t2, next});
          }
        };
        enqueue(sig_l(sig_e(cand.next_tag)), cand.next_tag + 1);
        enqueue(sig_r(sig_e(cand.next_tag)), cand.next_tag + 1);
        enqueue(sig_n(sig_e(cand.next_tag), sig_e(cand.next_tag + 1)), cand.next_tag + 2);
      }
    }
    std::sort(entry.copies.begin(), entry.copies.end(),
              [](const SigPtr& a, const SigPtr& b) { return sig_cmp(a, b) < 0; });
    return entry;
  }

  const ProofNet& g_;
  std::optional<std::set<int>> restriction_;
  std::size_t budget_;
  std::size_t max_candidates_ = 20000;
  std::map<std::pair<int, Potential>, CopySetEntry,
           bool (*)(const std::pair<int, Potential>&, const std::pair<int, Potential>&)>
      cache_{&cache_less};

  static bool cache_less(const std::pair<int, Potential>& a, const std::pair<int, Potential>& b) {
    if (a.first != b.first) return a.first < b.first;
    return PotentialLess{}(a.second, b.second);
  }
};

// ---------------------------------------------------------------------------
// Restriction operators

// maximum (for the rightmost-first order) truncation u of t such that
// ((e,P),[!_u]@T) is a copy context under the explorer's relation
inline SigPtr restr_sig(Explorer& ex, DirEdge e, const Potential& pot, const SigPtr& t,
                        const std::vector<TraceElem>& tail = {}) {
  SigPtr best;
  for (const SigPtr& u : truncations(t)) {
    if (!ex.is_copy_context(e, pot, u, tail)) continue;
    if (!best || prunec_lt(best, u)) best = u;
  }
  if (!best) throw IllFormedContext("no truncation is a copy context");
  return best;
}

inline Potential restr_pot(Explorer& ex, int edge, const Potential& pot) {
  const ProofNet& g = ex.net();
  std::vector<int> chain = g.box_chain_of_edge(edge);
  if (chain.size() != pot.size())
    throw IllFormedContext("potential length does not match edge depth");
  Potential out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    DirEdge sigma{g.principal_edge(chain[i]), false};
    out.push_back(restr_sig(ex, sigma, out, pot[i]));
  }
  return out;
}

inline Context restr_cont(Explorer& ex, const Context& c) {
  const ProofNet& g = ex.net();
  Context out;
  out.e = c.e;
  out.pot = restr_pot(ex, c.e.edge, c.pot);
  out.trace.assign(c.trace.size(), te(TraceKind::ParL));
  // rightmost (most recent) elements first
  for (std::size_t j = c.trace.size(); j-- > 0;) {
    const TraceElem& el = c.trace[j];
    if (el.kind == TraceKind::Bang) {
      std::vector<TraceElem> tail(out.trace.begin() + j + 1, out.trace.end());
      out.trace[j] = te_bang(restr_sig(ex, c.e, out.pot, el.sig, tail));
    } else if (el.kind == TraceKind::Quest) {
      std::vector<TraceElem> tail;
      for (std::size_t k = j + 1; k < out.trace.size(); ++k)
        tail.push_back(te_dual(out.trace[k]));
      DirEdge rev{c.e.edge, !c.e.rev};
      out.trace[j] = te_quest(restr_sig(ex, rev, out.pot, el.sig, tail));
    } else {
      out.trace[j] = el;
    }
  }
  return out;
}

}  // namespace pnet
