// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnet {

// Signatures record duplication choices: e, l(t), r(t), p(t), n(t,u).
// E-leaves may carry a tag; tags identify leaves of a candidate signature
// during copy exploration and never appear in reported results.
enum class SigKind : std::uint8_t { E, L, R, P, N };

struct Sig;
using SigPtr = std::shared_ptr<const Sig>;

struct Sig {
  SigKind kind;
  SigPtr a, b;       // L/R/P use a; N uses a,b
  std::int32_t tag;  // only meaningful on E nodes, -1 = untagged
  std::size_t hash;
  std::uint32_t size;  // node count

  Sig(SigKind k, SigPtr a_, SigPtr b_, std::int32_t t) : kind(k), a(a_), b(b_), tag(t) {
    std::size_t h = static_cast<std::size_t>(kind) * 0x9e3779b97f4a7c15ull + 1;
    std::uint32_t s = 1;
    if (a) {
      h = h * 1000003 ^ a->hash;
      s += a->size;
    }
    if (b) {
      h = h * 1000003 ^ b->hash;
      s += b->size;
    }
    if (kind == SigKind::E) h ^= static_cast<std::size_t>(tag + 2) * 0x100000001b3ull;
    hash = h;
    size = s;
  }
};

inline SigPtr sig_e(std::int32_t tag = -1) {
  static const SigPtr plain = std::make_shared<Sig>(SigKind::E, nullptr, nullptr, -1);
  if (tag == -1) return plain;
  return std::make_shared<Sig>(SigKind::E, nullptr, nullptr, tag);
}
inline SigPtr sig_l(SigPtr t) { return std::make_shared<Sig>(SigKind::L, std::move(t), nullptr, -1); }
inline SigPtr sig_r(SigPtr t) { return std::make_shared<Sig>(SigKind::R, std::move(t), nullptr, -1); }
inline SigPtr sig_p(SigPtr t) { return std::make_shared<Sig>(SigKind::P, std::move(t), nullptr, -1); }
inline SigPtr sig_n(SigPtr t, SigPtr u) { return std::make_shared<Sig>(SigKind::N, std::move(t), std::move(u), -1); }

inline bool sig_eq(const SigPtr& x, const SigPtr& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  if (x->hash != y->hash || x->kind != y->kind) return false;
  if (x->kind == SigKind::E) return x->tag == y->tag;
  if (!sig_eq(x->a, y->a)) return false;
  return x->kind != SigKind::N || sig_eq(x->b, y->b);
}

// Total order used for canonical printing and set keys only.
inline int sig_cmp(const SigPtr& x, const SigPtr& y) {
  if (x == y) return 0;
  if (x->size != y->size) return x->size < y->size ? -1 : 1;
  if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
  if (x->kind == SigKind::E) return x->tag < y->tag ? -1 : (x->tag == y->tag ? 0 : 1);
  if (int c = sig_cmp(x->a, y->a)) return c;
  return x->kind == SigKind::N ? sig_cmp(x->b, y->b) : 0;
}

struct SigLess {
  bool operator()(const SigPtr& x, const SigPtr& y) const { return sig_cmp(x, y) < 0; }
};
struct SigHash {
  std::size_t operator()(const SigPtr& x) const { return x ? x->hash : 0; }
};
struct SigEq {
  bool operator()(const SigPtr& x, const SigPtr& y) const { return sig_eq(x, y); }
};

inline SigPtr sig_untag(const SigPtr& t) {
  switch (t->kind) {
    case SigKind::E: return t->tag == -1 ? t : sig_e();
    case SigKind::L: return sig_l(sig_untag(t->a));
    case SigKind::R: return sig_r(sig_untag(t->a));
    case SigKind::P: return sig_p(sig_untag(t->a));
    case SigKind::N: return sig_n(sig_untag(t->a), sig_untag(t->b));
  }
  throw std::logic_error("bad sig");
}

// Replaces the E-leaf carrying `tag` by `sub`.
inline SigPtr sig_plug(const SigPtr& t, std::int32_t tag, const SigPtr& sub) {
  switch (t->kind) {
    case SigKind::E: return t->tag == tag ? sub : t;
    case SigKind::L: return sig_l(sig_plug(t->a, tag, sub));
    case SigKind::R: return sig_r(sig_plug(t->a, tag, sub));
    case SigKind::P: return sig_p(sig_plug(t->a, tag, sub));
    case SigKind::N: return sig_n(sig_plug(t->a, tag, sub), sig_plug(t->b, tag, sub));
  }
  throw std::logic_error("bad sig");
}

inline bool sig_standard(const SigPtr& t) {
  switch (t->kind) {
    case SigKind::E: return true;
    case SigKind::P: return false;
    case SigKind::L:
    case SigKind::R: return sig_standard(t->a);
    case SigKind::N: return sig_standard(t->a) && sig_standard(t->b);
  }
  return false;
}

// Quasi-standard: the second argument of every n(_,_) subtree is standard.
inline bool sig_quasi_standard(const SigPtr& t) {
  switch (t->kind) {
    case SigKind::E: return true;
    case SigKind::L:
    case SigKind::R:
    case SigKind::P: return sig_quasi_standard(t->a);
    case SigKind::N: return sig_quasi_standard(t->a) && sig_standard(t->b);
  }
  return false;
}

inline std::uint32_t sig_depth(const SigPtr& t) {
  switch (t->kind) {
    case SigKind::E: return 0;
    case SigKind::L:
    case SigKind::R:
    case SigKind::P: return 1 + sig_depth(t->a);
    case SigKind::N: return 1 + std::max(sig_depth(t->a), sig_depth(t->b));
  }
  return 0;
}

// t [= u, "u is a simplification of t".
inline bool simpl_leq(const SigPtr& t, const SigPtr& u) {
  if (t->kind == SigKind::E) return u->kind == SigKind::E && t->tag == u->tag;
  if (t->kind == SigKind::N) {
    if (u->kind == SigKind::N) return sig_eq(t->b, u->b) && simpl_leq(t->a, u->a);
    if (u->kind == SigKind::P) return simpl_leq(t->b, u->a);
    return false;
  }
  if (t->kind != u->kind) return false;
  return simpl_leq(t->a, u->a);
}

// All u with t [= u.
inline std::vector<SigPtr> simplifications(const SigPtr& t) {
  std::vector<SigPtr> out;
  switch (t->kind) {
    case SigKind::E: out.push_back(t); break;
    case SigKind::L:
      for (auto& u : simplifications(t->a)) out.push_back(sig_l(u));
      break;
    case SigKind::R:
      for (auto& u : simplifications(t->a)) out.push_back(sig_r(u));
      break;
    case SigKind::P:
      for (auto& u : simplifications(t->a)) out.push_back(sig_p(u));
      break;
    case SigKind::N:
      for (auto& u : simplifications(t->a)) out.push_back(sig_n(u, t->b));
      for (auto& u : simplifications(t->b)) out.push_back(sig_p(u));
      break;
  }
  return out;
}

// u =< t, "u is a truncation of t" (prefix subtrees, e anywhere).
inline bool prune_leq(const SigPtr& u, const SigPtr& t) {
  if (u->kind == SigKind::E && u->tag == -1) return true;
  if (u->kind != t->kind) return false;
  switch (u->kind) {
    case SigKind::E: return u->tag == t->tag;
    case SigKind::L:
    case SigKind::R:
    case SigKind::P: return prune_leq(u->a, t->a);
    case SigKind::N: return prune_leq(u->a, t->a) && prune_leq(u->b, t->b);
  }
  return false;
}

// All u with u =< t.
inline std::vector<SigPtr> truncations(const SigPtr& t) {
  std::vector<SigPtr> out{sig_e()};
  switch (t->kind) {
    case SigKind::E:
      if (t->tag != -1) out.push_back(t);
      break;
    case SigKind::L:
      for (auto& u : truncations(t->a)) out.push_back(sig_l(u));
      break;
    case SigKind::R:
      for (auto& u : truncations(t->a)) out.push_back(sig_r(u));
      break;
    case SigKind::P:
      for (auto& u : truncations(t->a)) out.push_back(sig_p(u));
      break;
    case SigKind::N:
      for (auto& u : truncations(t->a))
        for (auto& v : truncations(t->b)) out.push_back(sig_n(u, v));
      break;
  }
  return out;
}

// Strict order -< used to pick maximal truncations: the rightmost branch is
// compared first; for n(u,t) -< n(v,t') with t -< t' the left parts are
// unconstrained.
inline bool prunec_lt(const SigPtr& t, const SigPtr& u) {
  if (t->kind == SigKind::E) return u->kind != SigKind::E;
  if (t->kind == SigKind::N && u->kind == SigKind::N) {
    if (prunec_lt(t->b, u->b)) return true;
    return sig_eq(t->b, u->b) && prunec_lt(t->a, u->a);
  }
  if (t->kind != u->kind) return false;
  return prunec_lt(t->a, u->a);
}

inline bool prunec_leq(const SigPtr& t, const SigPtr& u) { return sig_eq(t, u) || prunec_lt(t, u); }

inline std::string sig_to_string(const SigPtr& t) {
  switch (t->kind) {
    case SigKind::E: return t->tag == -1 ? "e" : "e#" + std::to_string(t->tag);
    case SigKind::L: return "l(" + sig_to_string(t->a) + ")";
    case SigKind::R: return "r(" + sig_to_string(t->a) + ")";
    case SigKind::P: return "p(" + sig_to_string(t->a) + ")";
    case SigKind::N: return "n(" + sig_to_string(t->a) + "," + sig_to_string(t->b) + ")";
  }
  return "?";
}

inline SigPtr parse_sig(const std::string& s, std::size_t& pos);

inline SigPtr parse_sig_args(const std::string& s, std::size_t& pos, int arity, SigPtr& second) {
  if (pos >= s.size() || s[pos] != '(') throw std::runtime_error("signature: expected '('");
  ++pos;
  SigPtr first = parse_sig(s, pos);
  if (arity == 2) {
    if (pos >= s.size() || s[pos] != ',') throw std::runtime_error("signature: expected ','");
    ++pos;
    second = parse_sig(s, pos);
  }
  if (pos >= s.size() || s[pos] != ')') throw std::runtime_error("signature: expected ')'");
  ++pos;
  return first;
}

inline SigPtr parse_sig(const std::string& s, std::size_t& pos) {
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos >= s.size()) throw std::runtime_error("signature: unexpected end");
  char c = s[pos++];
  SigPtr second;
  switch (c) {
    case 'e': return sig_e();
    case 'l': return sig_l(parse_sig_args(s, pos, 1, second));
    case 'r': return sig_r(parse_sig_args(s, pos, 1, second));
    case 'p': return sig_p(parse_sig_args(s, pos, 1, second));
    case 'n': {
      SigPtr first = parse_sig_args(s, pos, 2, second);
      return sig_n(first, second);
    }
    default: throw std::runtime_error(std::string("signature: unexpected '") + c + "'");
  }
}

inline SigPtr parse_sig(const std::string& s) {
  std::size_t pos = 0;
  SigPtr t = parse_sig(s, pos);
  while (pos < s.size() && s[pos] == ' ') ++pos;
  if (pos != s.size()) throw std::runtime_error("signature: trailing input");
  return t;
}

}  // namespace pnet
