// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pnet/formula.hpp"

namespace pnet {

struct UnknownElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NodeKind : std::uint8_t {
  Ax, Cut, Tensor, Par, Forall, Exists, Der, Weak, Cont, Dig, BoxPrincipal, BoxAux, Sec
};

inline int premise_arity(NodeKind k) {
  switch (k) {
    case NodeKind::Ax: return 0;
    case NodeKind::Cut: return 2;
    case NodeKind::Tensor: return 2;
    case NodeKind::Par: return 2;
    case NodeKind::Forall: return 1;
    case NodeKind::Exists: return 1;
    case NodeKind::Der: return 1;
    case NodeKind::Weak: return 0;
    case NodeKind::Cont: return 2;
    case NodeKind::Dig: return 1;
    case NodeKind::BoxPrincipal: return 1;
    case NodeKind::BoxAux: return 1;
    case NodeKind::Sec: return 1;
  }
  return 0;
}
inline int conclusion_arity(NodeKind k) {
  switch (k) {
    case NodeKind::Ax: return 2;
    case NodeKind::Cut: return 0;
    default: return 1;
  }
}

inline const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Ax: return "ax";
    case NodeKind::Cut: return "cut";
    case NodeKind::Tensor: return "tensor";
    case NodeKind::Par: return "par";
    case NodeKind::Forall: return "forall";
    case NodeKind::Exists: return "exists";
    case NodeKind::Der: return "der";
    case NodeKind::Weak: return "weak";
    case NodeKind::Cont: return "cont";
    case NodeKind::Dig: return "dig";
    case NodeKind::BoxPrincipal: return "boxp";
    case NodeKind::BoxAux: return "boxa";
    case NodeKind::Sec: return "sec";
  }
  return "?";
}

inline std::optional<NodeKind> kind_from_name(const std::string& s) {
  static const std::map<std::string, NodeKind> m = {
      {"ax", NodeKind::Ax},         {"cut", NodeKind::Cut},    {"tensor", NodeKind::Tensor},
      {"par", NodeKind::Par},       {"forall", NodeKind::Forall}, {"exists", NodeKind::Exists},
      {"der", NodeKind::Der},       {"weak", NodeKind::Weak},  {"cont", NodeKind::Cont},
      {"dig", NodeKind::Dig},       {"boxp", NodeKind::BoxPrincipal}, {"boxa", NodeKind::BoxAux},
      {"sec", NodeKind::Sec}};
  auto it = m.find(s);
  if (it == m.end()) return {};
  return it->second;
}

struct Node {
  std::string id;
  NodeKind kind;
  int box = -1;  // box a door belongs to / innermost box of an interior node
  std::string var;                      // Forall/Exists
  std::optional<std::uint32_t> var_level;
  FPtr witness;                         // Exists
};

struct Edge {
  std::string id;
  int tail = -1;       // node index, always present
  int tail_port = 0;   // conclusion port of tail
  int head = -1;       // node index, -1 = open conclusion
  int head_port = 0;   // premise port of head
  FPtr label;                            // optional type
  std::optional<std::uint32_t> ml4_level;
};

struct BoxInfo {
  std::string id;
  int principal = -1;       // node index
  std::vector<int> aux;     // node indices, door order is significant
  int parent = -1;          // box index
};

struct Violation {
  std::string rule;
  std::string where;  // node/edge/box id
  std::string detail;
  std::string to_string() const { return rule + " at " + where + ": " + detail; }
};

struct ProofNet {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<BoxInfo> boxes;
  std::vector<int> conclusions;  // ordered open edges

  // derived lookups, rebuilt by refresh()
  std::vector<std::vector<int>> premise_of;     // node -> premise edge per port
  std::vector<std::vector<int>> conclusion_of;  // node -> conclusion edge per port
  std::vector<int> box_depth;                   // box -> nesting depth

  int node_index(const std::string& id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].id == id) return static_cast<int>(i);
    throw UnknownElement("unknown node '" + id + "'");
  }
  int edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].id == id) return static_cast<int>(i);
    throw UnknownElement("unknown edge '" + id + "'");
  }
  int box_index(const std::string& id) const {
    for (std::size_t i = 0; i < boxes.size(); ++i)
      if (boxes[i].id == id) return static_cast<int>(i);
    throw UnknownElement("unknown box '" + id + "'");
  }

  void refresh() {
    premise_of.assign(nodes.size(), {});
    conclusion_of.assign(nodes.size(), {});
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      premise_of[i].assign(premise_arity(nodes[i].kind), -1);
      conclusion_of[i].assign(conclusion_arity(nodes[i].kind), -1);
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (e.tail >= 0 && e.tail_port < static_cast<int>(conclusion_of[e.tail].size()))
        conclusion_of[e.tail][e.tail_port] = static_cast<int>(i);
      if (e.head >= 0 && e.head_port < static_cast<int>(premise_of[e.head].size()))
        premise_of[e.head][e.head_port] = static_cast<int>(i);
    }
    box_depth.assign(boxes.size(), 0);
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      int d = 0;
      for (int p = boxes[b].parent; p != -1; p = boxes[p].parent) {
        ++d;
        if (d > static_cast<int>(boxes.size())) break;  // cycle, caught by validate
      }
      box_depth[b] = d;
    }
  }

  bool is_door(int n) const {
    return nodes[n].kind == NodeKind::BoxPrincipal || nodes[n].kind == NodeKind::BoxAux;
  }
  // box whose body directly hosts the node's conclusions
  int out_box(int n) const {
    if (is_door(n) && nodes[n].box >= 0) return boxes[nodes[n].box].parent;
    return nodes[n].box;
  }
  int node_box(int n) const { return nodes[n].box; }
  // box of an edge: the head side's box, or where the tail's conclusion lives
  int edge_box(int e) const {
    return edges[e].head >= 0 ? node_box(edges[e].head) : out_box(edges[e].tail);
  }

  int depth_of_box(int b) const { return b < 0 ? 0 : box_depth[b] + 1; }
  int depth_of_edge(int e) const { return depth_of_box(edge_box(e)); }
  int depth_of_node(int n) const { return depth_of_box(nodes[n].box); }

  // enclosing box chain of an edge, outermost first
  std::vector<int> box_chain_of_edge(int e) const {
    std::vector<int> chain;
    for (int b = edge_box(e); b != -1; b = boxes[b].parent) chain.push_back(b);
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  int principal_edge(int b) const { return conclusion_of[boxes[b].principal][0]; }
  int aux_edge(int b, int i) const { return conclusion_of[boxes[b].aux[i]][0]; }

  std::size_t count_nodes() const { return nodes.size(); }
};

// ---------------------------------------------------------------------------
// Validation

enum class ValidateMode { Untyped, LLTyped };

namespace detail {

inline void check_labels(const ProofNet& g, std::vector<Violation>& out);

}  // namespace detail

inline std::vector<Violation> validate(const ProofNet& g, ValidateMode mode = ValidateMode::Untyped) {
  std::vector<Violation> out;
  auto bad = [&out](std::string rule, std::string where, std::string detail) {
    out.push_back({std::move(rule), std::move(where), std::move(detail)});
  };

  // ports bound exactly once
  std::vector<std::vector<int>> pseen(g.nodes.size()), cseen(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    pseen[i].assign(premise_arity(g.nodes[i].kind), 0);
    cseen[i].assign(conclusion_arity(g.nodes[i].kind), 0);
  }
  for (const Edge& e : g.edges) {
    if (e.tail < 0 || e.tail >= static_cast<int>(g.nodes.size())) {
      bad("edge-endpoint", e.id, "missing tail node");
      continue;
    }
    if (e.tail_port < 0 || e.tail_port >= static_cast<int>(cseen[e.tail].size()))
      bad("arity", e.id, "tail port c" + std::to_string(e.tail_port) + " out of range for " +
                             kind_name(g.nodes[e.tail].kind));
    else
      ++cseen[e.tail][e.tail_port];
    if (e.head >= 0) {
      if (e.head >= static_cast<int>(g.nodes.size())) {
        bad("edge-endpoint", e.id, "missing head node");
        continue;
      }
      if (e.head_port < 0 || e.head_port >= static_cast<int>(pseen[e.head].size()))
        bad("arity", e.id, "head port p" + std::to_string(e.head_port) + " out of range for " +
                               kind_name(g.nodes[e.head].kind));
      else
        ++pseen[e.head][e.head_port];
    }
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (std::size_t p = 0; p < pseen[i].size(); ++p)
      if (pseen[i][p] != 1)
        bad("arity", g.nodes[i].id,
            "premise p" + std::to_string(p) + " bound " + std::to_string(pseen[i][p]) + " times");
    for (std::size_t c = 0; c < cseen[i].size(); ++c)
      if (cseen[i][c] != 1)
        bad("arity", g.nodes[i].id,
            "conclusion c" + std::to_string(c) + " bound " + std::to_string(cseen[i][c]) + " times");
  }

  // box forest
  for (std::size_t b = 0; b < g.boxes.size(); ++b) {
    int steps = 0;
    for (int p = g.boxes[b].parent; p != -1; p = g.boxes[p].parent)
      if (++steps > static_cast<int>(g.boxes.size())) {
        bad("box-forest", g.boxes[b].id, "parent chain is cyclic");
        break;
      }
  }

  // door placement
  std::vector<int> door_of(g.nodes.size(), -1);
  for (std::size_t b = 0; b < g.boxes.size(); ++b) {
    const BoxInfo& box = g.boxes[b];
    auto check_door = [&](int n, NodeKind want, const char* role) {
      if (n < 0 || n >= static_cast<int>(g.nodes.size())) {
        bad("box-door", box.id, std::string("missing ") + role + " node");
        return;
      }
      if (g.nodes[n].kind != want)
        bad("box-door", g.nodes[n].id, std::string(role) + " node has kind " +
                                           kind_name(g.nodes[n].kind));
      if (g.nodes[n].box != static_cast<int>(b))
        bad("box-door", g.nodes[n].id, "door is not attributed to its own box");
      if (door_of[n] != -1)
        bad("box-door", g.nodes[n].id, "node is a door of two boxes");
      door_of[n] = static_cast<int>(b);
    };
    check_door(box.principal, NodeKind::BoxPrincipal, "principal");
    for (int a : box.aux) check_door(a, NodeKind::BoxAux, "aux");
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if ((g.nodes[i].kind == NodeKind::BoxPrincipal || g.nodes[i].kind == NodeKind::BoxAux) &&
        door_of[i] == -1)
      bad("box-door", g.nodes[i].id, "door node not listed in any box");

  // edges respect the nesting: the tail's out-box must host the head
  for (const Edge& e : g.edges) {
    if (e.tail < 0 || e.tail >= static_cast<int>(g.nodes.size())) continue;
    int from = g.out_box(e.tail);
    int to = e.head >= 0 ? g.node_box(e.head) : -1;
    if (from != to)
      bad("box-nesting", e.id, "edge crosses a box boundary without a door");
  }

  // conclusions list = exactly the open edges, in order, once each
  std::vector<int> open;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (g.edges[i].head < 0) open.push_back(static_cast<int>(i));
  std::vector<int> listed = g.conclusions;
  std::vector<int> sorted_open = open, sorted_listed = listed;
  std::sort(sorted_open.begin(), sorted_open.end());
  std::sort(sorted_listed.begin(), sorted_listed.end());
  if (sorted_open != sorted_listed)
    bad("conclusions", "net", "conclusions list does not match the open edges");

  if (mode == ValidateMode::LLTyped && out.empty()) detail::check_labels(g, out);
  return out;
}

namespace detail {

inline FPtr lab(const ProofNet& g, int e) { return e >= 0 ? g.edges[e].label : nullptr; }

inline void check_labels(const ProofNet& g, std::vector<Violation>& out) {
  auto bad = [&out](std::string where, std::string detail) {
    out.push_back({"label", std::move(where), std::move(detail)});
  };
  for (const Edge& e : g.edges)
    if (!e.label) {
      bad(e.id, "missing type label");
      return;
    }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Node& n = g.nodes[i];
    auto P = [&](int k) { return lab(g, g.premise_of[i][k]); };
    auto C = [&](int k) { return lab(g, g.conclusion_of[i][k]); };
    switch (n.kind) {
      case NodeKind::Ax:
        if (!feq(C(1), dual(C(0)))) bad(n.id, "ax conclusions are not dual");
        break;
      case NodeKind::Cut:
        if (!feq(P(1), dual(P(0)))) bad(n.id, "cut premises are not dual");
        break;
      case NodeKind::Tensor:
        if (!feq(C(0), f_tensor(P(0), P(1)))) bad(n.id, "tensor conclusion mismatch");
        break;
      case NodeKind::Par:
        if (!feq(C(0), f_par(P(0), P(1)))) bad(n.id, "par conclusion mismatch");
        break;
      case NodeKind::Forall: {
        FPtr c = C(0);
        if (c->kind != FKind::Forall || !feq(c->left, P(0)) ||
            (!n.var.empty() && c->name != n.var))
          bad(n.id, "forall conclusion mismatch");
        break;
      }
      case NodeKind::Exists: {
        FPtr c = C(0);
        if (c->kind != FKind::Exists) {
          bad(n.id, "exists conclusion is not existential");
          break;
        }
        FPtr body = c->left;
        FPtr wit = n.witness;
        if (wit) {
          if (!feq(P(0), substitute(body, c->name, wit)))
            bad(n.id, "exists premise does not match body[witness/var]");
        } else if (!feq(P(0), body) && free_vars(body).count(c->name)) {
          bad(n.id, "exists node without witness and premise != body");
        }
        break;
      }
      case NodeKind::Der: {
        FPtr c = C(0);
        if (c->kind != FKind::Quest || !feq(c->left, P(0))) bad(n.id, "dereliction mismatch");
        break;
      }
      case NodeKind::Weak:
        if (C(0)->kind != FKind::Quest) bad(n.id, "weakening conclusion is not ?-headed");
        break;
      case NodeKind::Cont:
        if (!feq(P(0), P(1)) || !feq(C(0), P(0)) || C(0)->kind != FKind::Quest)
          bad(n.id, "contraction mismatch");
        break;
      case NodeKind::Dig: {
        FPtr p = P(0), c = C(0);
        if (p->kind != FKind::Quest || p->left->kind != FKind::Quest || c->kind != FKind::Quest ||
            !feq(c, p->left))
          bad(n.id, "digging premise is not ??A with conclusion ?A");
        break;
      }
      case NodeKind::BoxAux: {
        FPtr c = C(0);
        if (c->kind != FKind::Quest || !feq(c->left, P(0))) bad(n.id, "aux door mismatch");
        break;
      }
      case NodeKind::BoxPrincipal: {
        FPtr c = C(0);
        if (c->kind != FKind::Bang || !feq(c->left, P(0))) bad(n.id, "principal door mismatch");
        break;
      }
      case NodeKind::Sec: {
        FPtr c = C(0);
        if (c->kind != FKind::Sect || !feq(c->left, P(0))) bad(n.id, "paragraph node mismatch");
        break;
      }
    }
  }
  // eigenvariable condition: the variable of a forall node must not occur
  // free at the boundary of its enclosing box (or the net's conclusions)
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const Node& n = g.nodes[i];
    if (n.kind != NodeKind::Forall) continue;
    FPtr c = lab(g, g.conclusion_of[i][0]);
    std::string var = c && c->kind == FKind::Forall ? c->name : n.var;
    if (var.empty()) continue;
    int b = n.box;
    std::vector<int> boundary;
    if (b == -1) {
      boundary = g.conclusions;
    } else {
      for (int a : g.boxes[b].aux) boundary.push_back(g.premise_of[a][0]);
      boundary.push_back(g.premise_of[g.boxes[b].principal][0]);
    }
    int concl = g.conclusion_of[i][0];
    for (int e : boundary) {
      if (e == concl) continue;
      FPtr l = lab(g, e);
      if (l && free_vars(l).count(var))
        out.push_back({"forall-freshness", n.id,
                       "variable " + var + " free in boundary edge " + g.edges[e].id});
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// File format

inline std::vector<std::string> tokenize_line(const std::string& line) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::string tok;
    bool quoted = false;
    while (i < line.size() && (quoted || !std::isspace(static_cast<unsigned char>(line[i])))) {
      if (line[i] == '"')
        quoted = !quoted;
      tok += line[i++];
    }
    toks.push_back(tok);
  }
  return toks;
}

inline ProofNet parse_net(const std::string& text) {
  ProofNet g;
  std::map<std::string, int> node_ix, box_ix;
  struct PendingBox {
    std::string id, principal, parent;
    std::vector<std::string> aux;
  };
  std::vector<PendingBox> pboxes;
  struct PendingNodeBox {
    int node;
    std::string box;
  };
  std::vector<PendingNodeBox> pnodes;
  std::vector<std::string> pconc;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&lineno](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  auto unquote = [](const std::string& s) {
    std::string r;
    for (char c : s)
      if (c != '"') r += c;
    return r;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> t = tokenize_line(line);
    if (t.empty()) continue;
    if (t[0] == "node") {
      if (t.size() < 3) fail("node needs id and kind");
      Node n;
      n.id = t[1];
      auto k = kind_from_name(t[2]);
      if (!k) fail("unknown node kind '" + t[2] + "'");
      n.kind = *k;
      std::string boxname;
      for (std::size_t i = 3; i < t.size(); ++i) {
        auto eq = t[i].find('=');
        if (eq == std::string::npos) fail("expected key=value, got '" + t[i] + "'");
        std::string key = t[i].substr(0, eq), val = t[i].substr(eq + 1);
        if (key == "var") {
          auto us = val.rfind('_');
          if (us != std::string::npos &&
              us + 1 < val.size() && std::isdigit(static_cast<unsigned char>(val[us + 1]))) {
            n.var = val.substr(0, us);
            n.var_level = static_cast<std::uint32_t>(std::stoul(val.substr(us + 1)));
          } else {
            n.var = val;
          }
        } else if (key == "witness") {
          n.witness = parse_formula(unquote(val));
        } else if (key == "box") {
          boxname = val;
        } else {
          fail("unknown node attribute '" + key + "'");
        }
      }
      if (node_ix.count(n.id)) fail("duplicate node id '" + n.id + "'");
      node_ix[n.id] = static_cast<int>(g.nodes.size());
      if (!boxname.empty()) pnodes.push_back({static_cast<int>(g.nodes.size()), boxname});
      g.nodes.push_back(std::move(n));
    } else if (t[0] == "box") {
      if (t.size() < 2) fail("box needs an id");
      PendingBox pb;
      pb.id = t[1];
      for (std::size_t i = 2; i < t.size(); ++i) {
        auto eq = t[i].find('=');
        if (eq == std::string::npos) fail("expected key=value in box line");
        std::string key = t[i].substr(0, eq), val = t[i].substr(eq + 1);
        if (key == "principal") {
          pb.principal = val;
        } else if (key == "aux") {
          if (val.size() < 2 || val.front() != '[' || val.back() != ']')
            fail("aux expects [a,b,...]");
          std::string inner = val.substr(1, val.size() - 2);
          std::string cur;
          for (char c : inner) {
            if (c == ',') {
              if (!cur.empty()) pb.aux.push_back(cur);
              cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
              cur += c;
            }
          }
          if (!cur.empty()) pb.aux.push_back(cur);
        } else if (key == "parent") {
          pb.parent = val;
        } else {
          fail("unknown box attribute '" + key + "'");
        }
      }
      if (box_ix.count(pb.id)) fail("duplicate box id '" + pb.id + "'");
      box_ix[pb.id] = static_cast<int>(pboxes.size());
      pboxes.push_back(std::move(pb));
    } else if (t[0] == "edge") {
      // edge <id> <tail>.<cport> -> <head>.<pport>|OUT [type="..."] [level=n]
      if (t.size() < 5 || t[3] != "->") fail("edge syntax: edge id n.c0 -> n.p0|OUT");
      Edge e;
      e.id = t[1];
      auto parse_end = [&](const std::string& s, bool tail) {
        auto dot = s.rfind('.');
        if (dot == std::string::npos) fail("expected node.port in '" + s + "'");
        std::string node = s.substr(0, dot), port = s.substr(dot + 1);
        if (port.size() < 2 || (port[0] != 'c' && port[0] != 'p'))
          fail("port must be cN or pN in '" + s + "'");
        if (tail && port[0] != 'c') fail("edge tail must use a conclusion port");
        if (!tail && port[0] != 'p') fail("edge head must use a premise port");
        auto it = node_ix.find(node);
        if (it == node_ix.end()) fail("unknown node '" + node + "'");
        return std::make_pair(it->second, std::stoi(port.substr(1)));
      };
      std::tie(e.tail, e.tail_port) = parse_end(t[2], true);
      if (t[4] == "OUT") {
        e.head = -1;
      } else {
        std::tie(e.head, e.head_port) = parse_end(t[4], false);
      }
      for (std::size_t i = 5; i < t.size(); ++i) {
        auto eq = t[i].find('=');
        if (eq == std::string::npos) fail("expected key=value in edge line");
        std::string key = t[i].substr(0, eq), val = t[i].substr(eq + 1);
        if (key == "type") {
          e.label = parse_formula(unquote(val));
        } else if (key == "level") {
          e.ml4_level = static_cast<std::uint32_t>(std::stoul(val));
        } else {
          fail("unknown edge attribute '" + key + "'");
        }
      }
      for (const Edge& other : g.edges)
        if (other.id == e.id) fail("duplicate edge id '" + e.id + "'");
      g.edges.push_back(std::move(e));
    } else if (t[0] == "conclusions") {
      for (std::size_t i = 1; i < t.size(); ++i) pconc.push_back(t[i]);
    } else {
      fail("unknown directive '" + t[0] + "'");
    }
  }

  for (const PendingBox& pb : pboxes) {
    BoxInfo b;
    b.id = pb.id;
    auto nit = node_ix.find(pb.principal);
    if (nit == node_ix.end())
      throw ParseError("box " + pb.id + ": unknown principal node '" + pb.principal + "'");
    b.principal = nit->second;
    for (const std::string& a : pb.aux) {
      auto ait = node_ix.find(a);
      if (ait == node_ix.end()) throw ParseError("box " + pb.id + ": unknown aux node '" + a + "'");
      b.aux.push_back(ait->second);
    }
    if (!pb.parent.empty()) {
      auto bit = box_ix.find(pb.parent);
      if (bit == box_ix.end()) throw ParseError("box " + pb.id + ": unknown parent '" + pb.parent + "'");
      b.parent = bit->second;
    }
    g.boxes.push_back(std::move(b));
  }
  for (const PendingNodeBox& pn : pnodes) {
    auto bit = box_ix.find(pn.box);
    if (bit == box_ix.end())
      throw ParseError("node " + g.nodes[pn.node].id + ": unknown box '" + pn.box + "'");
    g.nodes[pn.node].box = bit->second;
  }
  for (const std::string& c : pconc) g.conclusions.push_back(g.edge_index(c));

  g.refresh();
  return g;
}

inline std::string serialize(const ProofNet& g) {
  std::ostringstream out;
  for (const Node& n : g.nodes) {
    out << "node " << n.id << " " << kind_name(n.kind);
    if (!n.var.empty()) {
      out << " var=" << n.var;
      if (n.var_level) out << "_" << *n.var_level;
    }
    if (n.witness) out << " witness=\"" << to_string(n.witness) << "\"";
    if (n.box >= 0) out << " box=" << g.boxes[n.box].id;
    out << "\n";
  }
  for (const BoxInfo& b : g.boxes) {
    out << "box " << b.id << " principal=" << g.nodes[b.principal].id << " aux=[";
    for (std::size_t i = 0; i < b.aux.size(); ++i)
      out << (i ? "," : "") << g.nodes[b.aux[i]].id;
    out << "]";
    if (b.parent >= 0) out << " parent=" << g.boxes[b.parent].id;
    out << "\n";
  }
  for (const Edge& e : g.edges) {
    out << "edge " << e.id << " " << g.nodes[e.tail].id << ".c" << e.tail_port << " -> ";
    if (e.head < 0)
      out << "OUT";
    else
      out << g.nodes[e.head].id << ".p" << e.head_port;
    if (e.label) out << " type=\"" << to_string(e.label) << "\"";
    if (e.ml4_level) out << " level=" << *e.ml4_level;
    out << "\n";
  }
  if (!g.conclusions.empty()) {
    out << "conclusions";
    for (int c : g.conclusions) out << " " << g.edges[c].id;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// DOT export

inline std::string to_dot(const ProofNet& g) {
  std::ostringstream out;
  out << "digraph pnet {\n  rankdir=TB;\n  node [shape=circle fontsize=10];\n";
  std::vector<std::vector<int>> children(g.boxes.size());
  std::vector<int> roots;
  for (std::size_t b = 0; b < g.boxes.size(); ++b) {
    if (g.boxes[b].parent >= 0)
      children[g.boxes[b].parent].push_back(static_cast<int>(b));
    else
      roots.push_back(static_cast<int>(b));
  }
  std::vector<std::vector<int>> members(g.boxes.size());
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (g.nodes[n].box >= 0) members[g.nodes[n].box].push_back(static_cast<int>(n));

  std::function<void(int, int)> emit_box = [&](int b, int indent) {
    std::string pad(indent, ' ');
    out << pad << "subgraph cluster_" << g.boxes[b].id << " {\n";
    out << pad << "  label=\"" << g.boxes[b].id << "\";\n";
    for (int n : members[b])
      out << pad << "  \"" << g.nodes[n].id << "\" [label=\"" << kind_name(g.nodes[n].kind)
          << "\\n" << g.nodes[n].id << "\"];\n";
    for (int c : children[b]) emit_box(c, indent + 2);
    out << pad << "}\n";
  };
  for (std::size_t n = 0; n < g.nodes.size(); ++n)
    if (g.nodes[n].box < 0)
      out << "  \"" << g.nodes[n].id << "\" [label=\"" << kind_name(g.nodes[n].kind) << "\\n"
          << g.nodes[n].id << "\"];\n";
  for (int b : roots) emit_box(b, 2);
  int ghost = 0;
  for (const Edge& e : g.edges) {
    std::string head;
    if (e.head >= 0) {
      head = "\"" + g.nodes[e.head].id + "\"";
    } else {
      head = "out" + std::to_string(ghost++);
      out << "  " << head << " [shape=plaintext label=\"\"];\n";
    }
    out << "  \"" << g.nodes[e.tail].id << "\" -> " << head << " [label=\"" << e.id;
    if (e.label) out << " : " << to_string(e.label);
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pnet
