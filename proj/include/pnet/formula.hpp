// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnet/signature.hpp"

namespace pnet {

struct MixedIndexing : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TraceMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExpIndex {
  std::uint32_t s = 0, d = 0, n = 0;
  friend bool operator==(const ExpIndex& a, const ExpIndex& b) {
    return a.s == b.s && a.d == b.d && a.n == b.n;
  }
  // componentwise
  friend bool operator<=(const ExpIndex& a, const ExpIndex& b) {
    return a.s <= b.s && a.d <= b.d && a.n <= b.n;
  }
  std::string to_string() const {
    return "{" + std::to_string(s) + "," + std::to_string(d) + "," + std::to_string(n) + "}";
  }
};

// LL / SDNLL / mL4 formula tree. Quantifiers keep the variable in
// `name`/`level`; bodies are in `left`. Sect is the mL4 paragraph modality.
enum class FKind : std::uint8_t { Atom, Tensor, Par, Forall, Exists, Bang, Quest, Sect };

struct Formula;
using FPtr = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind;
  std::string name;     // Atom / quantifier variable
  bool positive = true; // Atom polarity
  std::optional<std::uint32_t> level;  // Atom / quantifier variable level
  std::optional<ExpIndex> idx;         // Bang / Quest
  FPtr left, right;
};

inline FPtr f_atom(std::string n, bool pos = true, std::optional<std::uint32_t> lvl = {}) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Atom;
  f->name = std::move(n);
  f->positive = pos;
  f->level = lvl;
  return f;
}
inline FPtr f_bin(FKind k, FPtr a, FPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}
inline FPtr f_tensor(FPtr a, FPtr b) { return f_bin(FKind::Tensor, std::move(a), std::move(b)); }
inline FPtr f_par(FPtr a, FPtr b) { return f_bin(FKind::Par, std::move(a), std::move(b)); }
inline FPtr f_quant(FKind k, std::string var, std::optional<std::uint32_t> lvl, FPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->name = std::move(var);
  f->level = lvl;
  f->left = std::move(body);
  return f;
}
inline FPtr f_forall(std::string v, std::optional<std::uint32_t> lvl, FPtr body) {
  return f_quant(FKind::Forall, std::move(v), lvl, std::move(body));
}
inline FPtr f_exists(std::string v, std::optional<std::uint32_t> lvl, FPtr body) {
  return f_quant(FKind::Exists, std::move(v), lvl, std::move(body));
}
inline FPtr f_exp(FKind k, std::optional<ExpIndex> idx, FPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->idx = idx;
  f->left = std::move(body);
  return f;
}
inline FPtr f_bang(std::optional<ExpIndex> idx, FPtr body) {
  return f_exp(FKind::Bang, idx, std::move(body));
}
inline FPtr f_quest(std::optional<ExpIndex> idx, FPtr body) {
  return f_exp(FKind::Quest, idx, std::move(body));
}
inline FPtr f_sect(FPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Sect;
  f->left = std::move(body);
  return f;
}
// A -o B desugars to A^ | B.
inline FPtr dual(const FPtr& f);
inline FPtr f_imp(FPtr a, FPtr b) { return f_par(dual(a), std::move(b)); }

inline FPtr dual(const FPtr& f) {
  switch (f->kind) {
    case FKind::Atom: return f_atom(f->name, !f->positive, f->level);
    case FKind::Tensor: return f_par(dual(f->left), dual(f->right));
    case FKind::Par: return f_tensor(dual(f->left), dual(f->right));
    case FKind::Forall: return f_exists(f->name, f->level, dual(f->left));
    case FKind::Exists: return f_forall(f->name, f->level, dual(f->left));
    case FKind::Bang: return f_quest(f->idx, dual(f->left));
    case FKind::Quest: return f_bang(f->idx, dual(f->left));
    case FKind::Sect: return f_sect(dual(f->left));
  }
  throw std::logic_error("bad formula");
}

// Alpha-aware structural equality.
namespace detail {
inline bool alpha_eq(const FPtr& a, const FPtr& b,
                     std::vector<std::pair<std::string, std::string>>& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Atom: {
      if (a->positive != b->positive || a->level != b->level) return false;
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == a->name || it->second == b->name)
          return it->first == a->name && it->second == b->name;
      }
      return a->name == b->name;
    }
    case FKind::Tensor:
    case FKind::Par:
      return alpha_eq(a->left, b->left, env) && alpha_eq(a->right, b->right, env);
    case FKind::Forall:
    case FKind::Exists: {
      if (a->level != b->level) return false;
      env.emplace_back(a->name, b->name);
      bool r = alpha_eq(a->left, b->left, env);
      env.pop_back();
      return r;
    }
    case FKind::Bang:
    case FKind::Quest:
      if (a->idx != b->idx) return false;
      return alpha_eq(a->left, b->left, env);
    case FKind::Sect: return alpha_eq(a->left, b->left, env);
  }
  return false;
}
}  // namespace detail

inline bool feq(const FPtr& a, const FPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  std::vector<std::pair<std::string, std::string>> env;
  return detail::alpha_eq(a, b, env);
}

inline void free_vars(const FPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f->kind) {
    case FKind::Atom:
      if (!bound.count(f->name)) out.insert(f->name);
      return;
    case FKind::Tensor:
    case FKind::Par:
      free_vars(f->left, bound, out);
      free_vars(f->right, bound, out);
      return;
    case FKind::Forall:
    case FKind::Exists: {
      bool fresh = bound.insert(f->name).second;
      free_vars(f->left, bound, out);
      if (fresh) bound.erase(f->name);
      return;
    }
    case FKind::Bang:
    case FKind::Quest:
    case FKind::Sect: free_vars(f->left, bound, out); return;
  }
}
inline std::set<std::string> free_vars(const FPtr& f) {
  std::set<std::string> bound, out;
  free_vars(f, bound, out);
  return out;
}

inline void all_names(const FPtr& f, std::set<std::string>& out) {
  if (f->kind == FKind::Atom || f->kind == FKind::Forall || f->kind == FKind::Exists)
    out.insert(f->name);
  if (f->left) all_names(f->left, out);
  if (f->right) all_names(f->right, out);
}

inline std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

// Renames the binder of a quantifier node f to `nv` (body occurrences follow).
inline FPtr substitute(const FPtr& f, const std::string& var, const FPtr& repl);

inline FPtr rename_binder(const FPtr& f, const std::string& nv) {
  return f_quant(f->kind, nv, f->level, substitute(f->left, f->name, f_atom(nv, true, f->level)));
}

// Capture-avoiding substitution of the positive atom `var`; negative
// occurrences receive the dual of `repl`.
inline FPtr substitute(const FPtr& f, const std::string& var, const FPtr& repl) {
  switch (f->kind) {
    case FKind::Atom:
      if (f->name != var) return f;
      return f->positive ? repl : dual(repl);
    case FKind::Tensor:
    case FKind::Par:
      return f_bin(f->kind, substitute(f->left, var, repl), substitute(f->right, var, repl));
    case FKind::Forall:
    case FKind::Exists: {
      if (f->name == var) return f;
      if (free_vars(repl).count(f->name)) {
        std::set<std::string> used = free_vars(repl);
        used.insert(var);
        all_names(f->left, used);
        FPtr renamed = rename_binder(f, fresh_name(f->name, used));
        return f_quant(renamed->kind, renamed->name, renamed->level,
                       substitute(renamed->left, var, repl));
      }
      return f_quant(f->kind, f->name, f->level, substitute(f->left, var, repl));
    }
    case FKind::Bang:
    case FKind::Quest: return f_exp(f->kind, f->idx, substitute(f->left, var, repl));
    case FKind::Sect: return f_sect(substitute(f->left, var, repl));
  }
  throw std::logic_error("bad formula");
}

// ---------------------------------------------------------------------------
// Indexing discipline

enum class FormulaClass { LL, SDNLL, ML4 };

namespace detail {
inline void scan_class(const FPtr& f, bool& has_idx, bool& no_idx, bool& has_sect) {
  switch (f->kind) {
    case FKind::Atom: (f->level ? has_idx : no_idx) = true; return;
    case FKind::Forall:
    case FKind::Exists:
      (f->level ? has_idx : no_idx) = true;
      scan_class(f->left, has_idx, no_idx, has_sect);
      return;
    case FKind::Bang:
    case FKind::Quest:
      (f->idx ? has_idx : no_idx) = true;
      scan_class(f->left, has_idx, no_idx, has_sect);
      return;
    case FKind::Sect:
      has_sect = true;
      scan_class(f->left, has_idx, no_idx, has_sect);
      return;
    case FKind::Tensor:
    case FKind::Par:
      scan_class(f->left, has_idx, no_idx, has_sect);
      scan_class(f->right, has_idx, no_idx, has_sect);
      return;
  }
}
}  // namespace detail

// LL: no indices anywhere. SDNLL: indices everywhere, no Sect.
// ML4: no indices, Sect allowed. Mixed formulas throw.
inline FormulaClass classify(const FPtr& f) {
  bool has_idx = false, no_idx = false, has_sect = false;
  detail::scan_class(f, has_idx, no_idx, has_sect);
  if (has_idx && no_idx) throw MixedIndexing("formula mixes indexed and unindexed connectives");
  if (has_sect) {
    if (has_idx) throw MixedIndexing("paragraph modality in an indexed formula");
    return FormulaClass::ML4;
  }
  return has_idx ? FormulaClass::SDNLL : FormulaClass::LL;
}

inline bool is_sdnll(const FPtr& f) { return classify(f) == FormulaClass::SDNLL; }

// f in F_s: variable levels >= s, exponentials !_{t,d,n}A need t >= s and
// A in F_{t+1}.
inline bool in_Fs(const FPtr& f, std::uint32_t s) {
  switch (f->kind) {
    case FKind::Atom:
      if (!f->level) throw MixedIndexing("in_Fs needs an indexed formula");
      return *f->level >= s;
    case FKind::Tensor:
    case FKind::Par: return in_Fs(f->left, s) && in_Fs(f->right, s);
    case FKind::Forall:
    case FKind::Exists:
      if (!f->level) throw MixedIndexing("in_Fs needs an indexed formula");
      return *f->level >= s && in_Fs(f->left, s);
    case FKind::Bang:
    case FKind::Quest:
      if (!f->idx) throw MixedIndexing("in_Fs needs an indexed formula");
      return f->idx->s >= s && in_Fs(f->left, f->idx->s + 1);
    case FKind::Sect: return false;
  }
  return false;
}

// Minimum first index over ! subformulas; nullopt when f has no bang.
inline std::optional<std::uint32_t> s_min(const FPtr& f) {
  std::optional<std::uint32_t> m;
  auto merge = [&m](std::optional<std::uint32_t> v) {
    if (v && (!m || *v < *m)) m = v;
  };
  switch (f->kind) {
    case FKind::Atom: return {};
    case FKind::Tensor:
    case FKind::Par:
      merge(s_min(f->left));
      merge(s_min(f->right));
      return m;
    case FKind::Bang:
      if (!f->idx) throw MixedIndexing("s_min needs an indexed formula");
      m = f->idx->s;
      merge(s_min(f->left));
      return m;
    case FKind::Quest:
      if (!f->idx) throw MixedIndexing("s_min needs an indexed formula");
      [[fallthrough]];
    case FKind::Forall:
    case FKind::Exists:
    case FKind::Sect: return s_min(f->left);
  }
  return {};
}

// Positional subtyping: identical skeletons, at every ! the indices of a
// dominate b componentwise, at every ? the other way around.
namespace detail {
inline bool subtype_walk(const FPtr& a, const FPtr& b,
                         std::vector<std::pair<std::string, std::string>>& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Atom: {
      if (a->positive != b->positive || a->level != b->level) return false;
      for (auto it = env.rbegin(); it != env.rend(); ++it)
        if (it->first == a->name || it->second == b->name)
          return it->first == a->name && it->second == b->name;
      return a->name == b->name;
    }
    case FKind::Tensor:
    case FKind::Par:
      return subtype_walk(a->left, b->left, env) && subtype_walk(a->right, b->right, env);
    case FKind::Forall:
    case FKind::Exists: {
      if (a->level != b->level) return false;
      env.emplace_back(a->name, b->name);
      bool r = subtype_walk(a->left, b->left, env);
      env.pop_back();
      return r;
    }
    case FKind::Bang:
    case FKind::Quest:
      if (!a->idx || !b->idx) throw MixedIndexing("subtyping needs indexed formulas");
      if (a->kind == FKind::Bang ? !(*b->idx <= *a->idx) : !(*a->idx <= *b->idx)) return false;
      return subtype_walk(a->left, b->left, env);
    case FKind::Sect: return subtype_walk(a->left, b->left, env);
  }
  return false;
}
}  // namespace detail

inline bool subtype_leq(const FPtr& a, const FPtr& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return detail::subtype_walk(a, b, env);
}

// ---------------------------------------------------------------------------
// Trace elements

enum class TraceKind : std::uint8_t { ParL, ParR, TensL, TensR, Forall, Exists, Bang, Quest };

struct TraceElem {
  TraceKind kind;
  SigPtr sig;  // Bang/Quest only

  friend bool operator==(const TraceElem& a, const TraceElem& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == TraceKind::Bang || a.kind == TraceKind::Quest) return sig_eq(a.sig, b.sig);
    return true;
  }
};

inline TraceElem te(TraceKind k) { return TraceElem{k, nullptr}; }
inline TraceElem te_bang(SigPtr t) { return TraceElem{TraceKind::Bang, std::move(t)}; }
inline TraceElem te_quest(SigPtr t) { return TraceElem{TraceKind::Quest, std::move(t)}; }

inline TraceElem te_dual(const TraceElem& e) {
  switch (e.kind) {
    case TraceKind::ParL: return te(TraceKind::TensL);
    case TraceKind::ParR: return te(TraceKind::TensR);
    case TraceKind::TensL: return te(TraceKind::ParL);
    case TraceKind::TensR: return te(TraceKind::ParR);
    case TraceKind::Forall: return te(TraceKind::Exists);
    case TraceKind::Exists: return te(TraceKind::Forall);
    case TraceKind::Bang: return te_quest(e.sig);
    case TraceKind::Quest: return te_bang(e.sig);
  }
  throw std::logic_error("bad trace element");
}

inline std::string te_to_string(const TraceElem& e) {
  switch (e.kind) {
    case TraceKind::ParL: return "|l";
    case TraceKind::ParR: return "|r";
    case TraceKind::TensL: return "*l";
    case TraceKind::TensR: return "*r";
    case TraceKind::Forall: return "all";
    case TraceKind::Exists: return "ex";
    case TraceKind::Bang: return "!_" + sig_to_string(e.sig);
    case TraceKind::Quest: return "?_" + sig_to_string(e.sig);
  }
  return "?";
}

// The subformula addressed by a trace: elements are consumed from the right,
// each matching the head connective (the last pushed element is outermost).
inline FPtr restrict_by_trace(const FPtr& f, const std::vector<TraceElem>& trace) {
  FPtr cur = f;
  for (std::size_t i = trace.size(); i-- > 0;) {
    const TraceElem& e = trace[i];
    auto fail = [&]() -> FPtr {
      throw TraceMismatch("trace element " + te_to_string(e) + " does not match connective");
    };
    switch (e.kind) {
      case TraceKind::TensL:
        cur = cur->kind == FKind::Tensor ? cur->left : fail();
        break;
      case TraceKind::TensR:
        cur = cur->kind == FKind::Tensor ? cur->right : fail();
        break;
      case TraceKind::ParL:
        cur = cur->kind == FKind::Par ? cur->left : fail();
        break;
      case TraceKind::ParR:
        cur = cur->kind == FKind::Par ? cur->right : fail();
        break;
      case TraceKind::Forall:
        cur = cur->kind == FKind::Forall ? cur->left : fail();
        break;
      case TraceKind::Exists:
        cur = cur->kind == FKind::Exists ? cur->left : fail();
        break;
      case TraceKind::Bang:
        cur = cur->kind == FKind::Bang ? cur->left : fail();
        break;
      case TraceKind::Quest:
        cur = cur->kind == FKind::Quest ? cur->left : fail();
        break;
    }
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Parsing and printing

namespace detail {

struct FParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit FParser(const std::string& str) : s(str) {}

  void skip() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip();
    if (s.compare(pos, w.size(), w) == 0) {
      std::size_t end = pos + w.size();
      if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_'))
        return false;
      pos = end;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("formula: " + msg + " at offset " + std::to_string(pos) + " in '" +
                             s + "'");
  }
  std::uint32_t number() {
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected number");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return static_cast<std::uint32_t>(v);
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '\''))
      ++pos;
    if (pos == start) fail("expected identifier");
    return s.substr(start, pos - start);
  }
  // IDENT ['_' level]
  std::pair<std::string, std::optional<std::uint32_t>> var() {
    std::string n = ident();
    std::optional<std::uint32_t> lvl;
    if (pos < s.size() && s[pos] == '_') {
      ++pos;
      lvl = number();
    }
    return {n, lvl};
  }
  std::optional<ExpIndex> exp_index() {
    if (!eat('{')) return {};
    ExpIndex ix;
    ix.s = number();
    if (!eat(',')) fail("expected ','");
    ix.d = number();
    if (!eat(',')) fail("expected ','");
    ix.n = number();
    if (!eat('}')) fail("expected '}'");
    return ix;
  }

  FPtr formula() {
    FPtr a = par();
    skip();
    if (pos + 1 < s.size() && s[pos] == '-' && s[pos + 1] == 'o') {
      pos += 2;
      return f_imp(a, formula());
    }
    return a;
  }
  FPtr par() {
    FPtr a = tens();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == '|') {
        ++pos;
        a = f_par(a, tens());
      } else {
        return a;
      }
    }
  }
  FPtr tens() {
    FPtr a = unary();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        a = f_tensor(a, unary());
      } else {
        return a;
      }
    }
  }
  FPtr unary() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (s[pos] == '!') {
      ++pos;
      auto ix = exp_index();
      return f_bang(ix, unary());
    }
    if (s[pos] == '?') {
      ++pos;
      auto ix = exp_index();
      return f_quest(ix, unary());
    }
    if (s[pos] == '$') {
      ++pos;
      return f_sect(unary());
    }
    if (eat_word("all")) {
      auto [n, lvl] = var();
      if (!eat('.')) fail("expected '.'");
      return f_forall(n, lvl, formula());
    }
    if (eat_word("ex")) {
      auto [n, lvl] = var();
      if (!eat('.')) fail("expected '.'");
      return f_exists(n, lvl, formula());
    }
    if (eat('(')) {
      FPtr a = formula();
      if (!eat(')')) fail("expected ')'");
      return a;
    }
    auto [n, lvl] = var();
    bool pos_pol = true;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      pos_pol = false;
    }
    return f_atom(n, pos_pol, lvl);
  }
};

// Renames binders that collide with free variables or with other binders.
inline FPtr freshen_binders(const FPtr& f, std::set<std::string>& used) {
  switch (f->kind) {
    case FKind::Atom: return f;
    case FKind::Tensor:
    case FKind::Par: {
      FPtr l = freshen_binders(f->left, used);
      FPtr r = freshen_binders(f->right, used);
      return l == f->left && r == f->right ? f : f_bin(f->kind, l, r);
    }
    case FKind::Forall:
    case FKind::Exists: {
      FPtr node = f;
      if (used.count(f->name)) {
        node = rename_binder(f, fresh_name(f->name, used));
      }
      used.insert(node->name);
      FPtr body = freshen_binders(node->left, used);
      return f_quant(node->kind, node->name, node->level, body);
    }
    case FKind::Bang:
    case FKind::Quest: {
      FPtr body = freshen_binders(f->left, used);
      return body == f->left ? f : f_exp(f->kind, f->idx, body);
    }
    case FKind::Sect: {
      FPtr body = freshen_binders(f->left, used);
      return body == f->left ? f : f_sect(body);
    }
  }
  throw std::logic_error("bad formula");
}

}  // namespace detail

inline FPtr parse_formula(const std::string& text) {
  detail::FParser p(text);
  FPtr f = p.formula();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  classify(f);  // reject mixed indexing
  std::set<std::string> used = free_vars(f);
  return detail::freshen_binders(f, used);
}

namespace detail {
// precedence: 0 formula, 1 par operand, 2 tensor operand
inline void print_formula(const FPtr& f, int prec, std::string& out) {
  switch (f->kind) {
    case FKind::Atom:
      out += f->name;
      if (f->level) out += "_" + std::to_string(*f->level);
      if (!f->positive) out += "^";
      return;
    case FKind::Tensor: {
      bool paren = prec > 2;
      if (paren) out += "(";
      print_formula(f->left, 2, out);
      out += " * ";
      print_formula(f->right, 3, out);
      if (paren) out += ")";
      return;
    }
    case FKind::Par: {
      bool paren = prec > 1;
      if (paren) out += "(";
      print_formula(f->left, 1, out);
      out += " | ";
      print_formula(f->right, 2, out);
      if (paren) out += ")";
      return;
    }
    case FKind::Forall:
    case FKind::Exists: {
      bool paren = prec > 0;
      if (paren) out += "(";
      out += f->kind == FKind::Forall ? "all " : "ex ";
      out += f->name;
      if (f->level) out += "_" + std::to_string(*f->level);
      out += ". ";
      print_formula(f->left, 0, out);
      if (paren) out += ")";
      return;
    }
    case FKind::Bang:
    case FKind::Quest:
      out += f->kind == FKind::Bang ? "!" : "?";
      if (f->idx) out += f->idx->to_string();
      out += " ";
      print_formula(f->left, 3, out);
      return;
    case FKind::Sect:
      out += "$ ";
      print_formula(f->left, 3, out);
      return;
  }
}
}  // namespace detail

inline std::string to_string(const FPtr& f) {
  std::string out;
  detail::print_formula(f, 0, out);
  return out;
}

}  // namespace pnet
