// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pnet/proofnet.hpp"

namespace pnet {

struct UnclassifiableCut : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StepBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CutRule : std::uint8_t {
  AxCut, TensPar, ForallExists, BangDer, BangBang, BangWeak, BangDig, BangCont
};

inline const char* rule_name(CutRule r) {
  switch (r) {
    case CutRule::AxCut: return "ax";
    case CutRule::TensPar: return "tens-par";
    case CutRule::ForallExists: return "forall-exists";
    case CutRule::BangDer: return "bang-der";
    case CutRule::BangBang: return "bang-bang";
    case CutRule::BangWeak: return "bang-weak";
    case CutRule::BangDig: return "bang-dig";
    case CutRule::BangCont: return "bang-cont";
  }
  return "?";
}

struct CutRedex {
  int cut = -1;  // node index
  CutRule rule;
};

inline std::optional<CutRule> classify_cut(const ProofNet& g, int cut) {
  int e0 = g.premise_of[cut][0], e1 = g.premise_of[cut][1];
  if (e0 < 0 || e1 < 0) return {};
  NodeKind k0 = g.nodes[g.edges[e0].tail].kind;
  NodeKind k1 = g.nodes[g.edges[e1].tail].kind;
  if (k0 == NodeKind::Ax || k1 == NodeKind::Ax) return CutRule::AxCut;
  auto pair_of = [&](NodeKind a, NodeKind b) { return (k0 == a && k1 == b) || (k0 == b && k1 == a); };
  if (pair_of(NodeKind::Tensor, NodeKind::Par)) return CutRule::TensPar;
  if (pair_of(NodeKind::Forall, NodeKind::Exists)) return CutRule::ForallExists;
  if (pair_of(NodeKind::BoxPrincipal, NodeKind::Der)) return CutRule::BangDer;
  if (pair_of(NodeKind::BoxPrincipal, NodeKind::Weak)) return CutRule::BangWeak;
  if (pair_of(NodeKind::BoxPrincipal, NodeKind::Cont)) return CutRule::BangCont;
  if (pair_of(NodeKind::BoxPrincipal, NodeKind::Dig)) return CutRule::BangDig;
  if (pair_of(NodeKind::BoxPrincipal, NodeKind::BoxAux)) return CutRule::BangBang;
  return {};
}

// A cut the figures cover. Cuts matching no figure (e.g. two principal
// doors head-on) raise UnclassifiableCut.
inline std::vector<CutRedex> find_redexes(const ProofNet& g) {
  std::vector<CutRedex> out;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    if (g.nodes[n].kind != NodeKind::Cut) continue;
    auto r = classify_cut(g, static_cast<int>(n));
    if (!r)
      throw UnclassifiableCut("cut " + g.nodes[n].id + " matches no reduction rule");
    out.push_back({static_cast<int>(n), *r});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Surgery helpers

namespace detail {

struct Surgeon {
  ProofNet g;
  std::set<int> dead_nodes, dead_edges, dead_boxes;

  explicit Surgeon(const ProofNet& net) : g(net) {}

  std::set<std::string> used_node_ids() const {
    std::set<std::string> s;
    for (const Node& n : g.nodes) s.insert(n.id);
    return s;
  }

  std::string fresh_id(std::string base, std::set<std::string>& used) {
    if (!used.count(base)) {
      used.insert(base);
      return base;
    }
    for (int i = 2;; ++i) {
      std::string cand = base + "_" + std::to_string(i);
      if (!used.count(cand)) {
        used.insert(cand);
        return cand;
      }
    }
  }

  int add_node(Node n) {
    g.nodes.push_back(std::move(n));
    return static_cast<int>(g.nodes.size() - 1);
  }
  int add_edge(Edge e) {
    g.edges.push_back(std::move(e));
    return static_cast<int>(g.edges.size() - 1);
  }
  int add_box(BoxInfo b) {
    g.boxes.push_back(std::move(b));
    return static_cast<int>(g.boxes.size() - 1);
  }

  // nodes of box subtree (doors included), boxes of subtree
  void collect_subtree(int box, std::vector<int>& nodes_out, std::vector<int>& boxes_out) const {
    std::set<int> boxes{box};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t b = 0; b < g.boxes.size(); ++b)
        if (!boxes.count(static_cast<int>(b)) && g.boxes[b].parent >= 0 &&
            boxes.count(g.boxes[b].parent)) {
          boxes.insert(static_cast<int>(b));
          grew = true;
        }
    }
    boxes_out.assign(boxes.begin(), boxes.end());
    for (std::size_t n = 0; n < g.nodes.size(); ++n)
      if (g.nodes[n].box >= 0 && boxes.count(g.nodes[n].box))
        nodes_out.push_back(static_cast<int>(n));
  }

  struct CloneMap {
    std::map<int, int> node, box;
  };

  // Clones the content of `box` (doors included). Interior edges are cloned;
  // conclusions of `box`'s own doors are not (the caller wires those).
  CloneMap clone_box(int box, const std::string& suffix, std::set<std::string>& used) {
    CloneMap m;
    std::vector<int> nodes, boxes;
    collect_subtree(box, nodes, boxes);
    for (int b : boxes) {
      BoxInfo nb = g.boxes[b];
      nb.id = fresh_id(nb.id + suffix, used);
      m.box[b] = add_box(std::move(nb));
    }
    for (int n : nodes) {
      Node nn = g.nodes[n];
      nn.id = fresh_id(nn.id + suffix, used);
      m.node[n] = add_node(std::move(nn));
    }
    // fix references inside clones
    for (auto& [orig, cl] : m.box) {
      BoxInfo& nb = g.boxes[cl];
      nb.principal = m.node.at(nb.principal);
      for (int& a : nb.aux) a = m.node.at(a);
      if (orig != box) nb.parent = m.box.at(nb.parent);
    }
    for (auto& [orig, cl] : m.node) {
      (void)orig;
      g.nodes[cl].box = m.box.at(g.nodes[cl].box);
    }
    // clone edges with both endpoints in the subtree
    std::set<int> nodeset(nodes.begin(), nodes.end());
    std::size_t ecount = g.edges.size();
    for (std::size_t e = 0; e < ecount; ++e) {
      const Edge& old = g.edges[e];
      if (!nodeset.count(old.tail)) continue;
      if (old.head < 0 || !nodeset.count(old.head)) continue;  // door conclusion
      Edge ne = old;
      ne.id = fresh_id(ne.id + suffix, used);
      ne.tail = m.node.at(old.tail);
      ne.head = m.node.at(old.head);
      add_edge(std::move(ne));
    }
    return m;
  }

  void kill_subtree(int box) {
    std::vector<int> nodes, boxes;
    collect_subtree(box, nodes, boxes);
    std::set<int> nodeset(nodes.begin(), nodes.end());
    for (int n : nodes) dead_nodes.insert(n);
    for (int b : boxes) dead_boxes.insert(b);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (nodeset.count(g.edges[e].tail) &&
          (g.edges[e].head < 0 || nodeset.count(g.edges[e].head)))
        dead_edges.insert(static_cast<int>(e));
  }

  ProofNet finish() {
    ProofNet out;
    std::map<int, int> nmap, emap, bmap;
    for (std::size_t b = 0; b < g.boxes.size(); ++b)
      if (!dead_boxes.count(static_cast<int>(b))) {
        bmap[static_cast<int>(b)] = static_cast<int>(out.boxes.size());
        out.boxes.push_back(g.boxes[b]);
      }
    for (std::size_t n = 0; n < g.nodes.size(); ++n)
      if (!dead_nodes.count(static_cast<int>(n))) {
        nmap[static_cast<int>(n)] = static_cast<int>(out.nodes.size());
        out.nodes.push_back(g.nodes[n]);
      }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      if (!dead_edges.count(static_cast<int>(e))) {
        emap[static_cast<int>(e)] = static_cast<int>(out.edges.size());
        out.edges.push_back(g.edges[e]);
      }
    for (Node& n : out.nodes) n.box = n.box < 0 ? -1 : bmap.at(n.box);
    for (BoxInfo& b : out.boxes) {
      b.principal = nmap.at(b.principal);
      for (int& a : b.aux) a = nmap.at(a);
      b.parent = b.parent < 0 ? -1 : bmap.at(b.parent);
    }
    for (Edge& e : out.edges) {
      e.tail = nmap.at(e.tail);
      if (e.head >= 0) e.head = nmap.at(e.head);
    }
    // open conclusions keep their old order, retargeted edges keep position
    for (int c : g.conclusions) {
      int cur = c;
      if (dead_edges.count(cur)) continue;  // replaced explicitly by caller
      out.conclusions.push_back(emap.at(cur));
    }
    // any newly open edge not yet listed goes to the end
    std::set<int> listed(out.conclusions.begin(), out.conclusions.end());
    for (std::size_t e = 0; e < out.edges.size(); ++e)
      if (out.edges[e].head < 0 && !listed.count(static_cast<int>(e)))
        out.conclusions.push_back(static_cast<int>(e));
    out.refresh();
    return out;
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// One reduction step

inline ProofNet reduce(const ProofNet& g0, const CutRedex& rx) {
  detail::Surgeon s(g0);
  ProofNet& g = s.g;
  std::set<std::string> used = s.used_node_ids();
  for (const Edge& e : g.edges) used.insert(e.id);
  for (const BoxInfo& b : g.boxes) used.insert(b.id);

  int cut = rx.cut;
  int ep0 = g.premise_of[cut][0], ep1 = g.premise_of[cut][1];
  auto src_kind = [&](int e) { return g.nodes[g.edges[e].tail].kind; };
  auto orient = [&](NodeKind left) {
    // returns (edge whose source has kind `left`, the other premise)
    if (src_kind(ep0) == left) return std::make_pair(ep0, ep1);
    return std::make_pair(ep1, ep0);
  };
  bool typed = g.edges[ep0].label != nullptr;

  switch (rx.rule) {
    case CutRule::AxCut: {
      auto [eax, m] = orient(NodeKind::Ax);
      int ax = g.edges[eax].tail;
      int other_port = 1 - g.edges[eax].tail_port;
      int gedge = g.conclusion_of[ax][other_port];
      if (gedge == m)
        throw UnclassifiableCut("ax-cut loop at " + g.nodes[cut].id);
      // m takes over g's head (or its open-conclusion slot)
      if (g.edges[gedge].head >= 0) {
        g.edges[m].head = g.edges[gedge].head;
        g.edges[m].head_port = g.edges[gedge].head_port;
      } else {
        g.edges[m].head = -1;
        for (int& c : g.conclusions)
          if (c == gedge) c = m;
      }
      if (typed) g.edges[m].label = g.edges[gedge].label;
      g.edges[m].ml4_level = g.edges[gedge].ml4_level;
      s.dead_nodes.insert(ax);
      s.dead_nodes.insert(cut);
      s.dead_edges.insert(eax);
      s.dead_edges.insert(gedge);
      break;
    }
    case CutRule::TensPar: {
      auto [epar, etens] = orient(NodeKind::Par);
      int par = g.edges[epar].tail, tens = g.edges[etens].tail;
      int a = g.premise_of[par][0], b = g.premise_of[par][1];
      int e = g.premise_of[tens][0], f = g.premise_of[tens][1];
      // cut a|e reuses the old cut, cut b|f is new
      g.edges[a].head = cut;
      g.edges[a].head_port = 0;
      g.edges[e].head = cut;
      g.edges[e].head_port = 1;
      Node c2;
      c2.id = s.fresh_id(g.nodes[cut].id + "b", used);
      c2.kind = NodeKind::Cut;
      c2.box = g.nodes[cut].box;
      int cut2 = s.add_node(std::move(c2));
      g.edges[b].head = cut2;
      g.edges[b].head_port = 0;
      g.edges[f].head = cut2;
      g.edges[f].head_port = 1;
      if (typed) {
        g.edges[e].label = dual(g.edges[a].label);
        g.edges[f].label = dual(g.edges[b].label);
      }
      s.dead_nodes.insert(par);
      s.dead_nodes.insert(tens);
      s.dead_edges.insert(epar);
      s.dead_edges.insert(etens);
      break;
    }
    case CutRule::ForallExists: {
      auto [efa, eex] = orient(NodeKind::Forall);
      int fa = g.edges[efa].tail, ex = g.edges[eex].tail;
      int pa = g.premise_of[fa][0], pe = g.premise_of[ex][0];
      std::string var;
      FPtr witness = g.nodes[ex].witness;
      if (g.edges[efa].label && g.edges[efa].label->kind == FKind::Forall)
        var = g.edges[efa].label->name;
      else if (!g.nodes[fa].var.empty())
        var = g.nodes[fa].var;
      else if (g.edges[eex].label && g.edges[eex].label->kind == FKind::Exists)
        var = g.edges[eex].label->name;
      else
        var = g.nodes[ex].var;
      g.edges[pa].head = cut;
      g.edges[pa].head_port = 0;
      g.edges[pe].head = cut;
      g.edges[pe].head_port = 1;
      s.dead_nodes.insert(fa);
      s.dead_nodes.insert(ex);
      s.dead_edges.insert(efa);
      s.dead_edges.insert(eex);
      if (witness && !var.empty()) {
        for (Edge& ed : g.edges)
          if (ed.label) ed.label = substitute(ed.label, var, witness);
        for (Node& nd : g.nodes)
          if (nd.witness) nd.witness = substitute(nd.witness, var, witness);
      }
      if (typed) g.edges[pe].label = dual(g.edges[pa].label);
      break;
    }
    case CutRule::BangDer: {
      auto [eprin, eder] = orient(NodeKind::BoxPrincipal);
      int pd = g.edges[eprin].tail, der = g.edges[eder].tail;
      int box = g.nodes[pd].box;
      int a = g.premise_of[pd][0], b = g.premise_of[der][0];
      int parent = g.boxes[box].parent;
      for (Node& n : g.nodes)
        if (n.box == box) n.box = parent;
      for (BoxInfo& bi : g.boxes)
        if (bi.parent == box) bi.parent = parent;
      for (int d : g.boxes[box].aux) g.nodes[d].kind = NodeKind::Der;
      g.edges[a].head = cut;
      g.edges[a].head_port = 0;
      g.edges[b].head = cut;
      g.edges[b].head_port = 1;
      if (typed) g.edges[b].label = dual(g.edges[a].label);
      s.dead_nodes.insert(pd);
      s.dead_nodes.insert(der);
      s.dead_edges.insert(eprin);
      s.dead_edges.insert(eder);
      s.dead_boxes.insert(box);
      break;
    }
    case CutRule::BangWeak: {
      auto [eprin, eweak] = orient(NodeKind::BoxPrincipal);
      int pd = g.edges[eprin].tail, wk = g.edges[eweak].tail;
      int box = g.nodes[pd].box;
      int parent = g.boxes[box].parent;
      for (int i = 0; i < static_cast<int>(g.boxes[box].aux.size()); ++i) {
        int door = g.boxes[box].aux[i];
        int ci = g.conclusion_of[door][0];
        Node w;
        w.id = s.fresh_id(g.nodes[door].id + "w", used);
        w.kind = NodeKind::Weak;
        w.box = parent;
        int wn = s.add_node(std::move(w));
        g.edges[ci].tail = wn;
        g.edges[ci].tail_port = 0;
      }
      s.kill_subtree(box);
      s.dead_nodes.insert(wk);
      s.dead_nodes.insert(cut);
      s.dead_edges.insert(eweak);
      // eprin dies with the subtree's door, but its head is outside
      s.dead_edges.insert(eprin);
      break;
    }
    case CutRule::BangCont: {
      auto [eprin, econt] = orient(NodeKind::BoxPrincipal);
      int pd = g.edges[eprin].tail, ct = g.edges[econt].tail;
      int box = g.nodes[pd].box;
      int parent = g.boxes[box].parent;
      int f = g.premise_of[ct][0], gg = g.premise_of[ct][1];
      detail::Surgeon::CloneMap ml = s.clone_box(box, "l", used);
      detail::Surgeon::CloneMap mr = s.clone_box(box, "r", used);
      int bl = ml.box.at(box), br = mr.box.at(box);
      // principal cuts: reuse the original cut for the left copy
      int pl = g.boxes[bl].principal, pr = g.boxes[br].principal;
      Edge sl;
      sl.id = s.fresh_id(g.edges[eprin].id + "l", used);
      sl.tail = pl;
      sl.tail_port = 0;
      sl.head = cut;
      sl.head_port = 0;
      if (typed) sl.label = dual(g.edges[f].label);
      s.add_edge(std::move(sl));
      g.edges[f].head = cut;
      g.edges[f].head_port = 1;
      Node c2;
      c2.id = s.fresh_id(g.nodes[cut].id + "r", used);
      c2.kind = NodeKind::Cut;
      c2.box = g.nodes[cut].box;
      int cut2 = s.add_node(std::move(c2));
      Edge sr;
      sr.id = s.fresh_id(g.edges[eprin].id + "r", used);
      sr.tail = pr;
      sr.tail_port = 0;
      sr.head = cut2;
      sr.head_port = 0;
      if (typed) sr.label = dual(g.edges[gg].label);
      s.add_edge(std::move(sr));
      g.edges[gg].head = cut2;
      g.edges[gg].head_port = 1;
      // aux doors: contract the two copies
      for (int i = 0; i < static_cast<int>(g.boxes[box].aux.size()); ++i) {
        int door = g.boxes[box].aux[i];
        int ci = g.conclusion_of[door][0];
        Node cn;
        cn.id = s.fresh_id(g.nodes[door].id + "c", used);
        cn.kind = NodeKind::Cont;
        cn.box = parent;
        int cnode = s.add_node(std::move(cn));
        Edge el;
        el.id = s.fresh_id(g.edges[ci].id + "l", used);
        el.tail = ml.node.at(door);
        el.tail_port = 0;
        el.head = cnode;
        el.head_port = 0;
        el.label = g.edges[ci].label;
        s.add_edge(std::move(el));
        Edge er;
        er.id = s.fresh_id(g.edges[ci].id + "r", used);
        er.tail = mr.node.at(door);
        er.tail_port = 0;
        er.head = cnode;
        er.head_port = 1;
        er.label = g.edges[ci].label;
        s.add_edge(std::move(er));
        g.edges[ci].tail = cnode;
        g.edges[ci].tail_port = 0;
      }
      s.kill_subtree(box);
      s.dead_nodes.insert(ct);
      s.dead_edges.insert(econt);
      s.dead_edges.insert(eprin);
      break;
    }
    case CutRule::BangBang: {
      auto [eprin, eaux] = orient(NodeKind::BoxPrincipal);
      int pd = g.edges[eprin].tail, ad = g.edges[eaux].tail;
      int box = g.nodes[pd].box;       // entering box
      int host = g.nodes[ad].box;      // receiving box
      int a = g.premise_of[pd][0], b1 = g.premise_of[ad][0];
      // dissolve the entering box into the host
      for (Node& n : g.nodes)
        if (n.box == box && n.kind != NodeKind::BoxAux) n.box = host;
      for (BoxInfo& bi : g.boxes)
        if (bi.parent == box) bi.parent = host;
      std::vector<int> newaux;
      for (int d : g.boxes[host].aux)
        if (d != ad) newaux.push_back(d);
      for (int d : g.boxes[box].aux) {
        g.nodes[d].box = host;
        newaux.push_back(d);
      }
      g.boxes[host].aux = newaux;
      g.nodes[pd].box = host;  // about to die, keep consistent
      g.edges[a].head = cut;
      g.edges[a].head_port = 0;
      g.edges[b1].head = cut;
      g.edges[b1].head_port = 1;
      g.nodes[cut].box = host;
      if (typed) g.edges[b1].label = dual(g.edges[a].label);
      s.dead_nodes.insert(pd);
      s.dead_nodes.insert(ad);
      s.dead_edges.insert(eprin);
      s.dead_edges.insert(eaux);
      s.dead_boxes.insert(box);
      break;
    }
    case CutRule::BangDig: {
      auto [eprin, edig] = orient(NodeKind::BoxPrincipal);
      int pd = g.edges[eprin].tail, dg = g.edges[edig].tail;
      int box = g.nodes[pd].box;
      int parent = g.boxes[box].parent;
      int f = g.premise_of[dg][0];
      // the original box becomes the inner one
      std::string base = g.boxes[box].id;
      g.boxes[box].id = s.fresh_id(base + "i", used);
      BoxInfo be;
      be.id = s.fresh_id(base + "e", used);
      be.parent = parent;
      int ebox = s.add_box(std::move(be));
      g.boxes[box].parent = ebox;
      // outer principal door
      Node pe;
      pe.id = s.fresh_id(g.nodes[pd].id + "e", used);
      pe.kind = NodeKind::BoxPrincipal;
      pe.box = ebox;
      int pen = s.add_node(std::move(pe));
      g.boxes[ebox].principal = pen;
      FPtr flab = g.edges[f].label;
      // inner principal edge: old sigma edge is retargeted into the new door
      g.edges[eprin].head = pen;
      g.edges[eprin].head_port = 0;
      if (typed && flab && flab->kind == FKind::Quest)
        g.edges[eprin].label = dual(flab->left);
      Edge se;
      se.id = s.fresh_id(g.edges[eprin].id + "e", used);
      se.tail = pen;
      se.tail_port = 0;
      se.head = cut;
      se.head_port = 0;
      if (typed) se.label = dual(flab);
      s.add_edge(std::move(se));
      g.edges[f].head = cut;
      g.edges[f].head_port = 1;
      // aux chains: inner door conclusion -> outer door -> dig -> old edge
      for (int i = 0; i < static_cast<int>(g.boxes[box].aux.size()); ++i) {
        int door = g.boxes[box].aux[i];
        int ci = g.conclusion_of[door][0];
        FPtr clab = g.edges[ci].label;
        Node ae;
        ae.id = s.fresh_id(g.nodes[door].id + "e", used);
        ae.kind = NodeKind::BoxAux;
        ae.box = ebox;
        int aen = s.add_node(std::move(ae));
        g.boxes[ebox].aux.push_back(aen);
        Node dn;
        dn.id = s.fresh_id(g.nodes[door].id + "d", used);
        dn.kind = NodeKind::Dig;
        dn.box = parent;
        int dnn = s.add_node(std::move(dn));
        Edge bi_e;
        bi_e.id = s.fresh_id(g.edges[ci].id + "i", used);
        bi_e.tail = door;
        bi_e.tail_port = 0;
        bi_e.head = aen;
        bi_e.head_port = 0;
        bi_e.label = clab;
        s.add_edge(std::move(bi_e));
        Edge ei_e;
        ei_e.id = s.fresh_id(g.edges[ci].id + "e", used);
        ei_e.tail = aen;
        ei_e.tail_port = 0;
        ei_e.head = dnn;
        ei_e.head_port = 0;
        if (clab) {
          std::optional<ExpIndex> oidx;
          if (clab->kind == FKind::Quest && clab->idx) {
            ExpIndex outer = *clab->idx;
            if (outer.n > 0) outer.n -= 1;
            oidx = outer;
          }
          ei_e.label = f_quest(oidx, clab);
        }
        s.add_edge(std::move(ei_e));
        g.edges[ci].tail = dnn;
        g.edges[ci].tail_port = 0;
      }
      s.dead_nodes.insert(dg);
      s.dead_edges.insert(edig);
      break;
    }
  }
  return s.finish();
}

// ---------------------------------------------------------------------------
// Normalization

enum class Strategy { LeftmostInnermost, LeftmostOutermost, Random };

struct ReductionStep {
  CutRule rule;
  std::string cut_id;
  std::size_t size_after;  // |E_G| counting both orientations
};

struct ReductionLog {
  std::vector<ReductionStep> steps;
  ProofNet final_net;
  std::size_t initial_size = 0;
  bool budget_exceeded = false;
};

inline std::size_t net_size(const ProofNet& g) { return 2 * g.edges.size(); }

inline int pick_redex(const ProofNet& g, const std::vector<CutRedex>& rxs, Strategy strat,
                      std::mt19937_64& rng) {
  if (strat == Strategy::Random) {
    std::uniform_int_distribution<std::size_t> d(0, rxs.size() - 1);
    return static_cast<int>(d(rng));
  }
  int best = 0;
  for (std::size_t i = 1; i < rxs.size(); ++i) {
    int di = g.depth_of_node(rxs[i].cut), db = g.depth_of_node(rxs[best].cut);
    bool better;
    if (strat == Strategy::LeftmostInnermost)
      better = di > db || (di == db && rxs[i].cut < rxs[best].cut);
    else
      better = di < db || (di == db && rxs[i].cut < rxs[best].cut);
    if (better) best = static_cast<int>(i);
  }
  return best;
}

inline ReductionLog normalize(const ProofNet& g0, Strategy strat = Strategy::LeftmostInnermost,
                              std::size_t max_steps = 100000, std::uint64_t seed = 0) {
  ReductionLog log;
  log.initial_size = net_size(g0);
  ProofNet g = g0;
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<CutRedex> rxs = find_redexes(g);
    if (rxs.empty()) break;
    if (log.steps.size() >= max_steps) {
      log.budget_exceeded = true;
      break;
    }
    const CutRedex rx = rxs[pick_redex(g, rxs, strat, rng)];
    std::string cut_id = g.nodes[rx.cut].id;
    g = reduce(g, rx);
    log.steps.push_back({rx.rule, cut_id, net_size(g)});
  }
  log.final_net = std::move(g);
  return log;
}

// ---------------------------------------------------------------------------
// Isomorphism (kinds, wiring, box structure; labels ignored)

namespace detail {

struct IsoGraph {
  // vertices: nodes then boxes then one virtual root
  std::vector<std::uint64_t> color;
  std::vector<std::vector<std::pair<int, int>>> out;  // (edge tag, target)

  static IsoGraph build(const ProofNet& g) {
    IsoGraph ig;
    std::size_t nn = g.nodes.size(), nb = g.boxes.size();
    ig.color.resize(nn + nb + 1);
    ig.out.resize(nn + nb + 1);
    for (std::size_t i = 0; i < nn; ++i)
      ig.color[i] = 1 + static_cast<std::uint64_t>(g.nodes[i].kind);
    for (std::size_t b = 0; b < nb; ++b) ig.color[nn + b] = 100;
    ig.color[nn + nb] = 200;
    auto link = [&ig](int from, int tag, int to) { ig.out[from].push_back({tag, to}); };
    for (const Edge& e : g.edges) {
      if (e.head >= 0)
        link(e.tail, 10 + e.tail_port * 4 + e.head_port, e.head);
    }
    for (std::size_t i = 0; i < g.conclusions.size(); ++i) {
      const Edge& e = g.edges[g.conclusions[i]];
      link(static_cast<int>(nn + nb), 1000 + static_cast<int>(i), e.tail);
    }
    for (std::size_t n = 0; n < nn; ++n)
      if (g.nodes[n].box >= 0) link(static_cast<int>(n), 30, static_cast<int>(nn) + g.nodes[n].box);
    for (std::size_t b = 0; b < nb; ++b) {
      link(static_cast<int>(nn + b), 40, g.boxes[b].principal);
      for (std::size_t i = 0; i < g.boxes[b].aux.size(); ++i)
        link(static_cast<int>(nn + b), 50 + static_cast<int>(i), g.boxes[b].aux[i]);
      if (g.boxes[b].parent >= 0)
        link(static_cast<int>(nn + b), 41, static_cast<int>(nn) + g.boxes[b].parent);
      else
        link(static_cast<int>(nn + b), 42, static_cast<int>(nn + nb));
    }
    return ig;
  }

  void refine() {
    std::vector<std::vector<int>> in(out.size());
    for (std::size_t v = 0; v < out.size(); ++v)
      for (auto [tag, w] : out[v]) in[w].push_back(static_cast<int>(v));
    for (int round = 0; round < 64; ++round) {
      std::vector<std::uint64_t> next(color.size());
      for (std::size_t v = 0; v < color.size(); ++v) {
        std::uint64_t h = color[v] * 0x9e3779b97f4a7c15ull + 0x7f4a7c15;
        std::vector<std::uint64_t> sigs;
        for (auto [tag, w] : out[v])
          sigs.push_back(static_cast<std::uint64_t>(tag) * 1000003 ^ (color[w] * 2654435761u));
        for (int w : in[v]) sigs.push_back(0xabcdef ^ (color[w] * 40503));
        std::sort(sigs.begin(), sigs.end());
        for (std::uint64_t x : sigs) h = h * 1099511628211ull ^ x;
        next[v] = h;
      }
      if (next == color) break;
      color = std::move(next);
    }
  }
};

inline bool iso_backtrack(const IsoGraph& a, const IsoGraph& b, std::vector<int>& map,
                          std::vector<int>& rmap, std::size_t v) {
  std::size_t n = a.color.size();
  if (v == n) {
    // verify all edges
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::pair<int, int>> ea = a.out[x], eb;
      for (auto [tag, w] : ea) eb.push_back({tag, map[w]});
      std::vector<std::pair<int, int>> bb = b.out[map[x]];
      std::sort(eb.begin(), eb.end());
      std::sort(bb.begin(), bb.end());
      if (eb != bb) return false;
    }
    return true;
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (rmap[w] != -1 || a.color[v] != b.color[w]) continue;
    map[v] = static_cast<int>(w);
    rmap[w] = static_cast<int>(v);
    bool ok = true;
    for (auto [tag, t] : a.out[v])
      if (map[t] != -1) {
        bool found = false;
        for (auto [tag2, t2] : b.out[w])
          if (tag2 == tag && t2 == map[t]) found = true;
        if (!found) {
          ok = false;
          break;
        }
      }
    if (ok && iso_backtrack(a, b, map, rmap, v + 1)) return true;
    map[v] = -1;
    rmap[w] = -1;
  }
  return false;
}

}  // namespace detail

inline bool iso_equal(const ProofNet& a, const ProofNet& b, std::size_t node_cap = 200) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size() ||
      a.boxes.size() != b.boxes.size() || a.conclusions.size() != b.conclusions.size())
    return false;
  if (a.nodes.size() > node_cap)
    throw SizeLimit("iso check beyond desk-scale cap");
  detail::IsoGraph ia = detail::IsoGraph::build(a), ib = detail::IsoGraph::build(b);
  ia.refine();
  ib.refine();
  std::vector<std::uint64_t> ca = ia.color, cb = ib.color;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;
  std::vector<int> map(ia.color.size(), -1), rmap(ia.color.size(), -1);
  return detail::iso_backtrack(ia, ib, map, rmap, 0);
}

// hash of the refined color multiset, for visited sets in searches
inline std::uint64_t iso_hash(const ProofNet& g) {
  detail::IsoGraph ig = detail::IsoGraph::build(g);
  ig.refine();
  std::vector<std::uint64_t> c = ig.color;
  std::sort(c.begin(), c.end());
  std::uint64_t h = 14695981039346656037ull;
  for (std::uint64_t x : c) h = (h ^ x) * 1099511628211ull;
  return h;
}

}  // namespace pnet
