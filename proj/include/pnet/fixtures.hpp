// Copyright 2026 The pnet Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Builders for the worked nets the test suite measures. Each returns a net
// equal (up to ids) to the corresponding .pn file under fixtures/.

#include "pnet/proofnet.hpp"
#include "pnet/sdnll.hpp"

namespace pnet {
namespace fixtures {

using detail::EncBuilder;

// The duplication net: box B (containing box C) cut against a contraction of
// a weakening and an auxiliary door of box K.
inline ProofNet fig5() {
  EncBuilder nb;
  int a_ax = nb.node("a_ax", NodeKind::Ax);
  int p = nb.node("p", NodeKind::Par);
  int bi = nb.node("bi", NodeKind::BoxPrincipal);
  int bd = nb.node("b_door", NodeKind::BoxPrincipal);
  int boxC = nb.box("C", bi, {});
  int boxB = nb.box("B", bd, {});
  nb.g.boxes[boxC].parent = boxB;
  nb.g.nodes[a_ax].box = boxC;
  nb.g.nodes[p].box = boxC;
  nb.g.nodes[bi].box = boxC;
  nb.g.nodes[bd].box = boxB;

  int w = nb.node("w", NodeKind::Weak);
  int c = nb.node("c", NodeKind::Cont);
  int cut = nb.node("cut", NodeKind::Cut);

  int ab = nb.node("ab", NodeKind::Ax);
  int ah = nb.node("ah", NodeKind::Ax);
  int ci = nb.node("ci", NodeKind::Cont);
  int t = nb.node("t", NodeKind::Tensor);
  int dd = nb.node("d_door", NodeKind::BoxAux);
  int pri = nb.node("pri", NodeKind::BoxPrincipal);
  int boxK = nb.box("K", pri, {dd});
  for (int n : {ab, ah, ci, t, dd, pri}) nb.g.nodes[n].box = boxK;

  nb.edge("ax_l", a_ax, 0, p, 0, nullptr);
  nb.edge("ax_r", a_ax, 1, p, 1, nullptr);
  nb.edge("e", p, 0, bi, 0, nullptr);
  nb.edge("a", bi, 0, bd, 0, nullptr);
  nb.edge("b", bd, 0, cut, 0, nullptr);
  nb.edge("j", w, 0, c, 0, nullptr);
  nb.edge("d", dd, 0, c, 1, nullptr);
  nb.edge("c_e", c, 0, cut, 1, nullptr);
  nb.edge("g", ah, 0, ci, 0, nullptr);
  nb.edge("ci_r", ab, 0, ci, 1, nullptr);
  nb.edge("t_l", ab, 1, t, 0, nullptr);
  nb.edge("h", ah, 1, t, 1, nullptr);
  nb.edge("f", ci, 0, dd, 0, nullptr);
  nb.edge("i", t, 0, pri, 0, nullptr);
  nb.out("k", pri, 0, nullptr);
  return nb.finish();
}

// Chain of two-door boxes where each door pair is contracted against the
// next principal door: |cop(B_n)| = 2^{n+1}-1.
inline ProofNet exp_chain(int n) {
  EncBuilder nb;
  std::vector<int> princ(n + 1);
  std::vector<std::pair<int, int>> doors(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::string s = std::to_string(i);
    int axh = nb.node("axh" + s, NodeKind::Ax);
    int axb = nb.node("axb" + s, NodeKind::Ax);
    int tens = nb.node("tens" + s, NodeKind::Tensor);
    int dl = nb.node("dl" + s, NodeKind::BoxAux);
    int dr = nb.node("dr" + s, NodeKind::BoxAux);
    int pd = nb.node("pd" + s, NodeKind::BoxPrincipal);
    int box = nb.box("b" + s, pd, {dl, dr});
    for (int nd : {axh, axb, tens, dl, dr, pd}) nb.g.nodes[nd].box = box;
    nb.edge("th" + s, axh, 0, tens, 1, nullptr);
    nb.edge("tb" + s, axb, 0, tens, 0, nullptr);
    nb.edge("al" + s, axh, 1, dl, 0, nullptr);
    nb.edge("ar" + s, axb, 1, dr, 0, nullptr);
    nb.edge("tp" + s, tens, 0, pd, 0, nullptr);
    princ[i] = pd;
    doors[i] = {dl, dr};
  }
  for (int i = 1; i <= n; ++i) {
    std::string s = std::to_string(i);
    int ct = nb.node("ct" + s, NodeKind::Cont);
    int cut = nb.node("cut" + s, NodeKind::Cut);
    nb.edge("cl" + s, doors[i - 1].first, 0, ct, 0, nullptr);
    nb.edge("cr" + s, doors[i - 1].second, 0, ct, 1, nullptr);
    nb.edge("sg" + s, princ[i], 0, cut, 0, nullptr);
    nb.edge("cc" + s, ct, 0, cut, 1, nullptr);
  }
  int ct_top = nb.node("ct_top", NodeKind::Cont);
  nb.edge("cl_top", doors[n].first, 0, ct_top, 0, nullptr);
  nb.edge("cr_top", doors[n].second, 0, ct_top, 1, nullptr);
  nb.out("top", ct_top, 0, nullptr);
  nb.out("sg0", princ[0], 0, nullptr);
  return nb.finish();
}

// Variant where only one door of each box is contracted (with a weakening):
// linear reduction length.
inline ProofNet expb_chain(int n) {
  EncBuilder nb;
  std::vector<int> princ(n + 1);
  std::vector<std::pair<int, int>> doors(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::string s = std::to_string(i);
    int axh = nb.node("axh" + s, NodeKind::Ax);
    int axb = nb.node("axb" + s, NodeKind::Ax);
    int tens = nb.node("tens" + s, NodeKind::Tensor);
    int dl = nb.node("dl" + s, NodeKind::BoxAux);
    int dr = nb.node("dr" + s, NodeKind::BoxAux);
    int pd = nb.node("pd" + s, NodeKind::BoxPrincipal);
    int box = nb.box("b" + s, pd, {dl, dr});
    for (int nd : {axh, axb, tens, dl, dr, pd}) nb.g.nodes[nd].box = box;
    nb.edge("th" + s, axh, 0, tens, 1, nullptr);
    nb.edge("tb" + s, axb, 0, tens, 0, nullptr);
    nb.edge("al" + s, axh, 1, dl, 0, nullptr);
    nb.edge("ar" + s, axb, 1, dr, 0, nullptr);
    nb.edge("tp" + s, tens, 0, pd, 0, nullptr);
    princ[i] = pd;
    doors[i] = {dl, dr};
  }
  for (int i = 1; i <= n; ++i) {
    std::string s = std::to_string(i);
    int wk = nb.node("wk" + s, NodeKind::Weak);
    int ct = nb.node("ct" + s, NodeKind::Cont);
    int cut = nb.node("cut" + s, NodeKind::Cut);
    nb.edge("cl" + s, doors[i - 1].first, 0, ct, 0, nullptr);
    nb.edge("cw" + s, wk, 0, ct, 1, nullptr);
    nb.out("od" + s, doors[i - 1].second, 0, nullptr);
    nb.edge("sg" + s, princ[i], 0, cut, 0, nullptr);
    nb.edge("cc" + s, ct, 0, cut, 1, nullptr);
  }
  int wk_top = nb.node("wk_top", NodeKind::Weak);
  int ct_top = nb.node("ct_top", NodeKind::Cont);
  nb.edge("cl_top", doors[n].first, 0, ct_top, 0, nullptr);
  nb.edge("cw_top", wk_top, 0, ct_top, 1, nullptr);
  nb.out("top", ct_top, 0, nullptr);
  nb.out("odt", doors[n].second, 0, nullptr);
  nb.out("sg0", princ[0], 0, nullptr);
  return nb.finish();
}

// Digging chain: each box hides a contraction behind one door whose
// conclusion passes a digging node before meeting the next principal door.
inline ProofNet dig_chain(int n) {
  EncBuilder nb;
  std::vector<int> princ(n + 1), digs(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::string s = std::to_string(i);
    int axh = nb.node("axh" + s, NodeKind::Ax);
    int axb = nb.node("axb" + s, NodeKind::Ax);
    int tens = nb.node("tens" + s, NodeKind::Tensor);
    int ct = nb.node("ct" + s, NodeKind::Cont);
    int da = nb.node("da" + s, NodeKind::BoxAux);
    int pd = nb.node("pd" + s, NodeKind::BoxPrincipal);
    int box = nb.box("b" + s, pd, {da});
    for (int nd : {axh, axb, tens, ct, da, pd}) nb.g.nodes[nd].box = box;
    int dg = nb.node("dig" + s, NodeKind::Dig);
    nb.edge("th" + s, axh, 0, tens, 1, nullptr);
    nb.edge("tb" + s, axb, 0, tens, 0, nullptr);
    nb.edge("chl" + s, axh, 1, ct, 0, nullptr);
    nb.edge("chr" + s, axb, 1, ct, 1, nullptr);
    nb.edge("cd" + s, ct, 0, da, 0, nullptr);
    nb.edge("dd" + s, da, 0, dg, 0, nullptr);
    nb.edge("tp" + s, tens, 0, pd, 0, nullptr);
    princ[i] = pd;
    digs[i] = dg;
  }
  for (int i = 1; i <= n; ++i) {
    std::string s = std::to_string(i);
    int cut = nb.node("cut" + s, NodeKind::Cut);
    nb.edge("sg" + s, princ[i], 0, cut, 0, nullptr);
    nb.edge("dc" + s, digs[i - 1], 0, cut, 1, nullptr);
  }
  nb.out("dtop", digs[n], 0, nullptr);
  nb.out("sg0", princ[0], 0, nullptr);
  return nb.finish();
}

// The principal-door example: D |>> B and B |>> C are the only
// stratification pairs; boxes A and B nest inside A's level.
inline ProofNet principal_net() {
  EncBuilder nb;
  // box D inside box C
  int dax = nb.node("dax", NodeKind::Ax);
  int dpar = nb.node("dpar", NodeKind::Par);
  int dpri = nb.node("dpri", NodeKind::BoxPrincipal);
  int boxD = nb.box("D", dpri, {});
  for (int nd : {dax, dpar, dpri}) nb.g.nodes[nd].box = boxD;
  int cder = nb.node("cder", NodeKind::Der);
  int cpri = nb.node("cpri", NodeKind::BoxPrincipal);
  int boxC = nb.box("C", cpri, {});
  nb.g.boxes[boxD].parent = boxC;
  nb.g.nodes[cder].box = boxC;
  nb.g.nodes[cpri].box = boxC;
  // box B inside box A
  int bweak = nb.node("bweak", NodeKind::Weak);
  int bweak2 = nb.node("bweak2", NodeKind::Weak);
  int bpri = nb.node("bpri", NodeKind::BoxPrincipal);
  int baux = nb.node("baux", NodeKind::BoxAux);
  int boxB = nb.box("B", bpri, {baux});
  for (int nd : {bweak, bweak2, bpri, baux}) nb.g.nodes[nd].box = boxB;
  int bcont = nb.node("bcont", NodeKind::Cont);
  int bcut = nb.node("bcut", NodeKind::Cut);
  int bax1 = nb.node("bax1", NodeKind::Ax);
  int bax2 = nb.node("bax2", NodeKind::Ax);
  int apri = nb.node("apri", NodeKind::BoxPrincipal);
  int aaux1 = nb.node("aaux1", NodeKind::BoxAux);
  int aaux2 = nb.node("aaux2", NodeKind::BoxAux);
  int boxA = nb.box("A", apri, {aaux1, aaux2});
  nb.g.boxes[boxB].parent = boxA;
  for (int nd : {bcont, bcut, bax1, bax2, apri, aaux1, aaux2}) nb.g.nodes[nd].box = boxA;
  // root
  int ccont = nb.node("ccont", NodeKind::Cont);
  int ccut = nb.node("ccut", NodeKind::Cut);
  int extax = nb.node("extax", NodeKind::Ax);
  int extder = nb.node("extder", NodeKind::Der);
  int extweak = nb.node("extweak", NodeKind::Weak);
  int extcont = nb.node("extcont", NodeKind::Cont);
  int extcut = nb.node("extcut", NodeKind::Cut);

  nb.edge("dx1", dax, 0, dpar, 0, nullptr);
  nb.edge("dx2", dax, 1, dpar, 1, nullptr);
  nb.edge("dp", dpar, 0, dpri, 0, nullptr);
  nb.edge("sd", dpri, 0, cder, 0, nullptr);
  nb.edge("d", cder, 0, cpri, 0, nullptr);
  nb.edge("sc", cpri, 0, ccut, 0, nullptr);

  nb.edge("w", bweak, 0, bpri, 0, nullptr);
  nb.edge("w2", bweak2, 0, baux, 0, nullptr);
  nb.edge("sb", bpri, 0, bcut, 0, nullptr);
  nb.edge("s1b", baux, 0, apri, 0, nullptr);
  nb.edge("f2", bax2, 0, bcont, 0, nullptr);
  nb.edge("f1", bax1, 0, bcont, 1, nullptr);
  nb.edge("cb", bcont, 0, bcut, 1, nullptr);
  nb.edge("h1", bax1, 1, aaux1, 0, nullptr);
  nb.edge("h2", bax2, 1, aaux2, 0, nullptr);

  nb.edge("g", aaux1, 0, ccont, 0, nullptr);
  nb.edge("h", aaux2, 0, ccont, 1, nullptr);
  nb.edge("fc", ccont, 0, ccut, 1, nullptr);

  nb.edge("sa", apri, 0, extcut, 0, nullptr);
  nb.edge("xd", extax, 0, extder, 0, nullptr);
  nb.edge("xl", extder, 0, extcont, 0, nullptr);
  nb.edge("xw", extweak, 0, extcont, 1, nullptr);
  nb.edge("xc", extcont, 0, extcut, 1, nullptr);
  nb.out("xo", extax, 1, nullptr);
  return nb.finish();
}

// (G)3: the box B of G is duplicated by the iterator, B |X B.
inline ProofNet really_exp() {
  EncBuilder nb;
  // G: box B with two doors
  int axh = nb.node("axh", NodeKind::Ax);
  int axb = nb.node("axb", NodeKind::Ax);
  int btens = nb.node("btens", NodeKind::Tensor);
  int baux1 = nb.node("baux1", NodeKind::BoxAux);
  int baux2 = nb.node("baux2", NodeKind::BoxAux);
  int bpri = nb.node("bpri", NodeKind::BoxPrincipal);
  int boxB = nb.box("B", bpri, {baux1, baux2});
  for (int nd : {axh, axb, btens, baux1, baux2, bpri}) nb.g.nodes[nd].box = boxB;
  int bcont = nb.node("bcont", NodeKind::Cont);
  int gfa = nb.node("gfa", NodeKind::Forall);
  int gex = nb.node("gex", NodeKind::Exists);
  int gpar = nb.node("gpar", NodeKind::Par);
  int fpri = nb.node("fpri", NodeKind::BoxPrincipal);
  int boxF = nb.box("F", fpri, {});
  nb.g.boxes[boxB].parent = boxF;
  for (int nd : {bcont, gfa, gex, gpar, fpri}) nb.g.nodes[nd].box = boxF;

  int axx = nb.node("axx", NodeKind::Ax);
  int parx2 = nb.node("parx2", NodeKind::Par);
  int exx = nb.node("exx", NodeKind::Exists);
  int tensfx = nb.node("tensfx", NodeKind::Tensor);
  int derf = nb.node("derf", NodeKind::Der);
  int tensf = nb.node("tensf", NodeKind::Tensor);
  int exf = nb.node("exf", NodeKind::Exists);
  int axfx = nb.node("axfx", NodeKind::Ax);
  int parf = nb.node("parf", NodeKind::Par);
  int gcut = nb.node("gcut", NodeKind::Cut);

  nb.edge("bh", axh, 0, btens, 1, nullptr);
  nb.edge("bb", axb, 0, btens, 0, nullptr);
  nb.edge("bd1", axh, 1, baux1, 0, nullptr);
  nb.edge("bd2", axb, 1, baux2, 0, nullptr);
  nb.edge("bt", btens, 0, bpri, 0, nullptr);
  nb.edge("k1", baux1, 0, bcont, 0, nullptr);
  nb.edge("k2", baux2, 0, bcont, 1, nullptr);
  nb.edge("kc", bcont, 0, gfa, 0, nullptr);
  nb.edge("kf", gfa, 0, gpar, 0, nullptr);
  nb.edge("sB", bpri, 0, gex, 0, nullptr);
  nb.edge("se", gex, 0, gpar, 1, nullptr);
  nb.edge("gp", gpar, 0, fpri, 0, nullptr);
  nb.edge("sF", fpri, 0, tensf, 0, nullptr);
  nb.edge("xx1", axx, 0, parx2, 0, nullptr);
  nb.edge("xx2", axx, 1, parx2, 1, nullptr);
  nb.edge("px", parx2, 0, exx, 0, nullptr);
  nb.edge("ex", exx, 0, tensfx, 0, nullptr);
  nb.edge("fx1", axfx, 0, tensfx, 1, nullptr);
  nb.edge("tfx", tensfx, 0, derf, 0, nullptr);
  nb.edge("df", derf, 0, tensf, 1, nullptr);
  nb.edge("tf", tensf, 0, exf, 0, nullptr);
  nb.edge("ef", exf, 0, parf, 0, nullptr);
  nb.edge("fx2", axfx, 1, parf, 1, nullptr);
  nb.edge("pf", parf, 0, gcut, 0, nullptr);

  // H: the Church numeral 3 (untyped shape)
  std::vector<int> ag, tg;
  for (int i = 0; i <= 3; ++i) ag.push_back(nb.node("ag" + std::to_string(i), NodeKind::Ax));
  for (int i = 1; i <= 3; ++i) tg.push_back(nb.node("tg" + std::to_string(i), NodeKind::Tensor));
  int parx = nb.node("parx", NodeKind::Par);
  int cpri = nb.node("cpri", NodeKind::BoxPrincipal);
  std::vector<int> caux;
  for (int i = 1; i <= 3; ++i) caux.push_back(nb.node("caux" + std::to_string(i), NodeKind::BoxAux));
  int boxC = nb.box("C", cpri, caux);
  for (int nd : ag) nb.g.nodes[nd].box = boxC;
  for (int nd : tg) nb.g.nodes[nd].box = boxC;
  for (int nd : caux) nb.g.nodes[nd].box = boxC;
  nb.g.nodes[parx].box = boxC;
  nb.g.nodes[cpri].box = boxC;
  int gcont1 = nb.node("gcont1", NodeKind::Cont);
  int gcont2 = nb.node("gcont2", NodeKind::Cont);
  int parg = nb.node("parg", NodeKind::Par);
  int hfa = nb.node("hfa", NodeKind::Forall);
  int app = nb.node("app", NodeKind::Tensor);
  int finax = nb.node("finax", NodeKind::Ax);

  nb.edge("hx0l", ag[0], 0, parx, 0, nullptr);
  nb.edge("hx0r", ag[0], 1, tg[0], 0, nullptr);
  for (int i = 1; i <= 3; ++i) {
    nb.edge("hxl" + std::to_string(i), ag[i], 0, tg[i - 1], 1, nullptr);
    if (i < 3)
      nb.edge("hxr" + std::to_string(i), ag[i], 1, tg[i], 0, nullptr);
    else
      nb.edge("hxr" + std::to_string(i), ag[i], 1, parx, 1, nullptr);
    nb.edge("hd" + std::to_string(i), tg[i - 1], 0, caux[i - 1], 0, nullptr);
  }
  nb.edge("hp", parx, 0, cpri, 0, nullptr);
  nb.edge("q1", caux[0], 0, gcont1, 0, nullptr);
  nb.edge("q2", caux[1], 0, gcont1, 1, nullptr);
  nb.edge("q12", gcont1, 0, gcont2, 0, nullptr);
  nb.edge("q3", caux[2], 0, gcont2, 1, nullptr);
  nb.edge("qc", gcont2, 0, parg, 0, nullptr);
  nb.edge("sC", cpri, 0, parg, 1, nullptr);
  nb.edge("ph", parg, 0, hfa, 0, nullptr);
  nb.edge("fh", hfa, 0, app, 0, nullptr);
  nb.edge("fa1", finax, 0, app, 1, nullptr);
  nb.edge("ap", app, 0, gcut, 1, nullptr);
  nb.out("res", finax, 1, nullptr);
  return nb.finish();
}

// mL4 Church numeral 1 typed with a single one-door box:
// !(X -o X) -o !(X -o X).
inline ProofNet ml4_church1() {
  EncBuilder nb;
  FPtr X = f_atom("X");
  FPtr Xn = f_atom("X", false);
  FPtr tenslab = f_tensor(X, Xn);
  FPtr parlab = f_par(Xn, X);
  int axa = nb.node("axa", NodeKind::Ax);
  int axb = nb.node("axb", NodeKind::Ax);
  int tens = nb.node("tens", NodeKind::Tensor);
  int par = nb.node("par", NodeKind::Par);
  int ad = nb.node("ad", NodeKind::BoxAux);
  int pd = nb.node("pd", NodeKind::BoxPrincipal);
  int box = nb.box("b", pd, {ad});
  for (int nd : {axa, axb, tens, par, ad, pd}) nb.g.nodes[nd].box = box;
  int pg = nb.node("pg", NodeKind::Par);

  auto L = [&](int e, std::uint32_t lvl) { nb.g.edges[e].ml4_level = lvl; };
  L(nb.edge("a1", axa, 0, tens, 0, X), 1);
  L(nb.edge("a2", axa, 1, par, 0, Xn), 1);
  L(nb.edge("b1", axb, 0, tens, 1, Xn), 1);
  L(nb.edge("b2", axb, 1, par, 1, X), 1);
  L(nb.edge("td", tens, 0, ad, 0, tenslab), 1);
  L(nb.edge("pp", par, 0, pd, 0, parlab), 1);
  L(nb.edge("qa", ad, 0, pg, 0, f_quest({}, tenslab)), 0);
  L(nb.edge("sg", pd, 0, pg, 1, f_bang({}, parlab)), 0);
  L(nb.out("one", pg, 0, f_par(f_quest({}, tenslab), f_bang({}, parlab))), 0);
  return nb.finish();
}

// mL4 Church numeral 3 typed without boxes, using derelictions, contractions
// and a paragraph node: !(X -o X) -o $(X -o X).
inline ProofNet ml4_church3() {
  EncBuilder nb;
  FPtr X = f_atom("X");
  FPtr Xn = f_atom("X", false);
  FPtr tenslab = f_tensor(X, Xn);
  FPtr parlab = f_par(Xn, X);
  FPtr qlab = f_quest({}, tenslab);
  std::vector<int> ax, tens, der;
  for (int i = 0; i <= 3; ++i) ax.push_back(nb.node("ax" + std::to_string(i), NodeKind::Ax));
  for (int i = 1; i <= 3; ++i) {
    tens.push_back(nb.node("t" + std::to_string(i), NodeKind::Tensor));
    der.push_back(nb.node("d" + std::to_string(i), NodeKind::Der));
  }
  int par = nb.node("par", NodeKind::Par);
  int sec = nb.node("sec", NodeKind::Sec);
  int c1 = nb.node("c1", NodeKind::Cont);
  int c2 = nb.node("c2", NodeKind::Cont);
  int pg = nb.node("pg", NodeKind::Par);

  auto L = [&](int e, std::uint32_t lvl) { nb.g.edges[e].ml4_level = lvl; };
  L(nb.edge("a0l", ax[0], 0, par, 0, Xn), 1);
  L(nb.edge("a0r", ax[0], 1, tens[0], 0, X), 1);
  for (int i = 1; i <= 3; ++i) {
    L(nb.edge("al" + std::to_string(i), ax[i], 0, tens[i - 1], 1, Xn), 1);
    if (i < 3)
      L(nb.edge("ar" + std::to_string(i), ax[i], 1, tens[i], 0, X), 1);
    else
      L(nb.edge("ar" + std::to_string(i), ax[i], 1, par, 1, X), 1);
    L(nb.edge("td" + std::to_string(i), tens[i - 1], 0, der[i - 1], 0, tenslab), 1);
  }
  L(nb.edge("q1", der[0], 0, c1, 0, qlab), 0);
  L(nb.edge("q2", der[1], 0, c1, 1, qlab), 0);
  L(nb.edge("q12", c1, 0, c2, 0, qlab), 0);
  L(nb.edge("q3", der[2], 0, c2, 1, qlab), 0);
  L(nb.edge("qc", c2, 0, pg, 0, qlab), 0);
  L(nb.edge("pp", par, 0, sec, 0, parlab), 1);
  L(nb.edge("sp", sec, 0, pg, 1, f_sect(parlab)), 0);
  L(nb.out("three", pg, 0, f_par(qlab, f_sect(parlab))), 0);
  return nb.finish();
}

}  // namespace fixtures
}  // namespace pnet
