// Shared generators and oracles for the test suites. Test-only code:
// nothing here is part of the library surface.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "nucleus/adjunction.hpp"
#include "nucleus/fincat.hpp"

namespace testsup {

using fincat::CatPtr;

struct Poset {
  int n = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
    return out;
  }
};

inline bool is_partial_order(const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(leq.size());
  for (int i = 0; i < n; ++i)
    if (!leq[i][i]) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) return false;
      if (!leq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k]) return false;
    }
  return true;
}

// all posets on n labeled points, deduplicated up to isomorphism
inline std::vector<Poset> enumerate_posets(int n) {
  std::vector<Poset> out;
  if (n == 0) { out.push_back({0, {}}); return out; }
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.push_back({i, j});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::vector<bool>>> seen;
  for (long long mask = 0; mask < (1LL << offdiag.size()); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) leq[i][i] = true;
    for (size_t b = 0; b < offdiag.size(); ++b)
      if (mask >> b & 1) leq[offdiag[b].first][offdiag[b].second] = true;
    if (!is_partial_order(leq)) continue;
    // canonical form: lexicographically least relation over all permutations
    std::vector<std::vector<bool>> best = leq;
    std::vector<int> p = perm;
    do {
      std::vector<std::vector<bool>> cand(n, std::vector<bool>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cand[p[i]][p[j]] = leq[i][j];
      if (cand < best) best = cand;
    } while (std::next_permutation(p.begin(), p.end()));
    if (std::find(seen.begin(), seen.end(), best) == seen.end()) {
      seen.push_back(best);
      out.push_back({n, best});
    }
  }
  return out;
}

inline CatPtr poset_cat(const Poset& p, const std::string& name = "") {
  return fincat::poset_category(p.labels(), p.leq, name);
}

// Galois connections P -> Q: monotone f with a right adjoint g.
// f ⊣ g iff  f(x) ≤ y  <=>  x ≤ g(y).
struct PosetAdjunction {
  Poset P, Q;
  std::vector<int> f, g;
};

inline std::vector<PosetAdjunction> poset_adjunctions(const Poset& P, const Poset& Q) {
  std::vector<PosetAdjunction> out;
  if (P.n == 0) {
    // empty source: the unique f is monotone; g must satisfy vacuous adjointness;
    // any monotone g : Q -> empty exists only when Q is empty too.
    if (Q.n == 0) out.push_back({P, Q, {}, {}});
    return out;
  }
  if (Q.n == 0) return out;
  std::vector<int> f(P.n, 0);
  while (true) {
    bool monotone = true;
    for (int i = 0; i < P.n && monotone; ++i)
      for (int j = 0; j < P.n && monotone; ++j)
        if (P.leq[i][j] && !Q.leq[f[i]][f[j]]) monotone = false;
    if (monotone) {
      // right adjoint g(y) = max { x | f(x) ≤ y } when the max exists
      std::vector<int> g(Q.n, -1);
      bool ok = true;
      for (int y = 0; y < Q.n && ok; ++y) {
        std::vector<int> below;
        for (int x = 0; x < P.n; ++x)
          if (Q.leq[f[x]][y]) below.push_back(x);
        int top = -1;
        for (int c : below) {
          bool is_top = true;
          for (int d : below)
            if (!P.leq[d][c]) { is_top = false; break; }
          if (is_top) { top = c; break; }
        }
        if (below.empty() || top < 0) { ok = false; break; }
        g[y] = top;
      }
      if (ok) {
        // verify the biconditional exactly
        for (int x = 0; x < P.n && ok; ++x)
          for (int y = 0; y < Q.n && ok; ++y)
            if (Q.leq[f[x]][y] != P.leq[x][g[y]]) ok = false;
        if (ok) out.push_back({P, Q, f, g});
      }
    }
    int k = P.n - 1;
    while (k >= 0 && f[k] == Q.n - 1) f[k--] = 0;
    if (k < 0) break;
    ++f[k];
  }
  return out;
}

inline nuc::Adjunction to_adjunction(const PosetAdjunction& pa) {
  CatPtr A = poset_cat(pa.P, "A");
  CatPtr Q = poset_cat(pa.Q, "B");
  nuc::Adjunction adj;
  adj.left.source = A;
  adj.left.target = Q;
  adj.left.object_map = pa.f;
  adj.left.morphism_map.resize(A->n_mor());
  for (int m = 0; m < A->n_mor(); ++m) {
    int x = A->dom(m), y = A->cod(m);
    adj.left.morphism_map[m] = *Q->hom(pa.f[x], pa.f[y]).begin();
  }
  adj.right.source = Q;
  adj.right.target = A;
  adj.right.object_map = pa.g;
  adj.right.morphism_map.resize(Q->n_mor());
  for (int m = 0; m < Q->n_mor(); ++m) {
    int x = Q->dom(m), y = Q->cod(m);
    adj.right.morphism_map[m] = *A->hom(pa.g[x], pa.g[y]).begin();
  }
  adj.unit.source = fincat::identity_functor(A);
  adj.unit.target = fincat::compose_functors(adj.left, adj.right);
  adj.unit.component.resize(A->n_obj());
  for (int x = 0; x < A->n_obj(); ++x) adj.unit.component[x] = *A->hom(x, pa.g[pa.f[x]]).begin();
  adj.counit.source = fincat::compose_functors(adj.right, adj.left);
  adj.counit.target = fincat::identity_functor(Q);
  adj.counit.component.resize(Q->n_obj());
  for (int y = 0; y < Q->n_obj(); ++y) adj.counit.component[y] = *Q->hom(pa.f[pa.g[y]], y).begin();
  return adj;
}

// chain 0 < 1 < ... < n-1
inline Poset chain(int n) {
  Poset p;
  p.n = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.leq[i][j] = true;
  return p;
}

// the 2 -> 1 Galois connection: F constant, G picks the top of the chain
inline nuc::Adjunction two_one_adjunction() {
  PosetAdjunction pa;
  pa.P = chain(2);
  pa.Q = chain(1);
  pa.f = {0, 0};
  pa.g = {1};
  return to_adjunction(pa);
}

// ---- hand-built non-posetal adjunctions ----

// identity adjunction on the one-object group Z/2 ({1, s}, s∘s = 1)
inline nuc::Adjunction z2_identity_adjunction() {
  CatPtr c = fincat::monoid_category({"1", "s"}, {{0, 1}, {1, 0}}, "z2");
  return nuc::identity_adjunction(c);
}

// identity adjunction on the parallel pair (a ⇉ b)
inline nuc::Adjunction parallel_pair_identity_adjunction() {
  fincat::CategoryBuilder bld("parallel");
  int a = bld.add_object("a"), b = bld.add_object("b");
  bld.add_morphism("f", a, b);
  bld.add_morphism("g", a, b);
  return nuc::identity_adjunction(bld.finish());
}

// adjoint equivalence between the "sign groupoid" (two objects, all
// hom-sets {+,-}) and the one-object group Z/2.
inline nuc::Adjunction sign_groupoid_equivalence() {
  fincat::CategoryBuilder bg("signs");
  int x = bg.add_object("x"), y = bg.add_object("y");
  std::vector<std::vector<std::vector<int>>> m(2, std::vector<std::vector<int>>(2, std::vector<int>(2)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int s = 0; s < 2; ++s) {
        std::string nm = (s ? "-" : "+") + std::string(":") + (i ? "y" : "x") + ">" + (j ? "y" : "x");
        m[i][j][s] = bg.add_morphism(nm, i, j);
      }
  bg.set_identity(x, m[0][0][0]);
  bg.set_identity(y, m[1][1][0]);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t)
            bg.set_then(m[i][j][s], m[j][k][t], m[i][k][s ^ t]);
  CatPtr G = bg.finish();
  CatPtr Z = fincat::monoid_category({"1", "s"}, {{0, 1}, {1, 0}}, "z2");

  nuc::Adjunction adj;
  adj.left.source = G;  // collapse
  adj.left.target = Z;
  adj.left.object_map = {0, 0};
  adj.left.morphism_map.resize(G->n_mor());
  for (int f = 0; f < G->n_mor(); ++f)
    adj.left.morphism_map[f] = (G->mor_name(f)[0] == '-') ? 1 : 0;
  adj.right.source = Z;  // pick x
  adj.right.target = G;
  adj.right.object_map = {0};
  adj.right.morphism_map.resize(Z->n_mor());
  adj.right.morphism_map[0] = m[0][0][0];
  adj.right.morphism_map[1] = m[0][0][1];
  adj.unit.source = fincat::identity_functor(G);
  adj.unit.target = fincat::compose_functors(adj.left, adj.right);
  adj.unit.component = {m[0][0][0], m[1][0][0]};  // +
  adj.counit.source = fincat::compose_functors(adj.right, adj.left);
  adj.counit.target = fincat::identity_functor(Z);
  adj.counit.component = {0};  // 1
  return adj;
}

// retract adjunction out of the Karoubi envelope of M = {1, e | e∘e = e}:
// A is the full subcategory of the envelope on the split object of e
// (a terminal-like one-object category), B the whole envelope.
inline nuc::Adjunction karoubi_retract_adjunction() {
  CatPtr M = fincat::monoid_category({"1", "e"}, {{0, 1}, {1, 1}}, "M");
  auto [env, emb] = fincat::karoubi_envelope(M);
  fincat::CategoryBuilder ba("r");
  int r = ba.add_object("r");
  (void)r;
  CatPtr A = ba.finish();
  int obj1 = env->object_index("e:1");
  int obje = env->object_index("e:e");
  auto env_mor = [&](const std::string& phi, const std::string& f, const std::string& psi) {
    return env->morphism_index("[" + phi + ">" + f + ">" + psi + "]");
  };
  nuc::Adjunction adj;
  adj.left.source = A;
  adj.left.target = env;
  adj.left.object_map = {obje};
  adj.left.morphism_map = {env->identity[obje]};
  adj.right.source = env;
  adj.right.target = A;
  adj.right.object_map.assign(env->n_obj(), 0);
  adj.right.morphism_map.assign(env->n_mor(), A->identity[0]);
  adj.unit.source = fincat::identity_functor(A);
  adj.unit.target = fincat::compose_functors(adj.left, adj.right);
  adj.unit.component = {A->identity[0]};
  adj.counit.source = fincat::compose_functors(adj.right, adj.left);
  adj.counit.target = fincat::identity_functor(env);
  adj.counit.component.resize(env->n_obj());
  adj.counit.component[obj1] = env_mor("e", "e", "1");
  adj.counit.component[obje] = env_mor("e", "e", "e");
  return adj;
}

inline std::vector<nuc::Adjunction> handbuilt_adjunctions() {
  return {z2_identity_adjunction(), parallel_pair_identity_adjunction(),
          sign_groupoid_equivalence(), karoubi_retract_adjunction()};
}

// the enumerated family used by the law suites: all Galois connections
// between posets with at most max_n elements (up to iso of the posets)
inline std::vector<nuc::Adjunction> poset_adjunction_family(int max_n) {
  std::vector<Poset> posets;
  for (int n = 1; n <= max_n; ++n) {
    auto ps = enumerate_posets(n);
    posets.insert(posets.end(), ps.begin(), ps.end());
  }
  std::vector<nuc::Adjunction> out;
  for (const auto& P : posets)
    for (const auto& Q : posets)
      for (const auto& pa : poset_adjunctions(P, Q)) out.push_back(to_adjunction(pa));
  return out;
}

}  // namespace testsup
