#include "nucleus/adjunction.hpp"

#include <algorithm>
#include <stdexcept>

namespace nuc {

using fincat::CategoryBuilder;
using fincat::Category;
using fincat::compose_functors;
using fincat::identity_functor;
using fincat::validate_functor;
using fincat::validate_nat_trans;

std::string pair_object_name(const std::string& carrier, const std::string& structure) {
  return "(" + carrier + "," + structure + ")";
}

std::string derived_morphism_name(const std::string& underlying, const std::string& src, const std::string& dst) {
  return underlying + "@" + src + ">" + dst;
}

Adjunction identity_adjunction(const CatPtr& c) {
  Adjunction a;
  a.left = identity_functor(c);
  a.right = identity_functor(c);
  a.unit.source = identity_functor(c);
  a.unit.target = identity_functor(c);
  a.counit = a.unit;
  a.unit.component.resize(c->n_obj());
  a.counit.component.resize(c->n_obj());
  for (int x = 0; x < c->n_obj(); ++x) a.unit.component[x] = a.counit.component[x] = c->identity[x];
  return a;
}

// ---- law checks --------------------------------------------------------

Report check_adjunction(const Adjunction& a) {
  Report rep;
  const Category& A = *a.A();
  const Category& B = *a.B();
  auto merge = [&rep](Report r, const std::string& tag) {
    for (auto& v : r) rep.push_back({tag + "/" + v.law, v.location});
  };
  merge(validate_functor(a.left), "left");
  merge(validate_functor(a.right), "right");
  if (!rep.empty()) return rep;
  merge(validate_nat_trans(a.unit), "unit");
  merge(validate_nat_trans(a.counit), "counit");
  if (!rep.empty()) return rep;
  for (int x = 0; x < A.n_obj(); ++x) {
    // εF ∘ Fη = id_F at x
    int fx = a.left.on_obj(x);
    int lhs = B.then(a.left.on_mor(a.unit.component[x]), a.counit.component[fx]);
    if (lhs != B.identity[fx]) rep.push_back({"triangle-left (εF∘Fη = F)", A.obj_name(x)});
  }
  for (int u = 0; u < B.n_obj(); ++u) {
    // Gε ∘ ηG = id_G at u
    int gu = a.right.on_obj(u);
    int lhs = A.then(a.unit.component[gu], a.right.on_mor(a.counit.component[u]));
    if (lhs != A.identity[gu]) rep.push_back({"triangle-right (Gε∘ηG = G)", B.obj_name(u)});
  }
  return rep;
}

Report check_monad(const Monad& m) {
  Report rep;
  const Category& A = *m.carrier;
  auto merge = [&rep](Report r, const std::string& tag) {
    for (auto& v : r) rep.push_back({tag + "/" + v.law, v.location});
  };
  merge(validate_functor(m.endo), "endofunctor");
  merge(validate_nat_trans(m.eta), "eta");
  merge(validate_nat_trans(m.mu), "mu");
  if (!rep.empty()) return rep;
  for (int x = 0; x < A.n_obj(); ++x) {
    int tx = m.endo.on_obj(x);
    int mu_x = m.mu.component[x];
    // μ∘Tμ = μ∘μT
    if (A.then(m.endo.on_mor(mu_x), mu_x) != A.then(m.mu.component[tx], mu_x))
      rep.push_back({"monad-assoc (μ∘Tμ = μ∘μT)", A.obj_name(x)});
    // μ∘Tη = id = μ∘ηT
    if (A.then(m.endo.on_mor(m.eta.component[x]), mu_x) != A.identity[tx])
      rep.push_back({"monad-unit-left (μ∘Tη = id)", A.obj_name(x)});
    if (A.then(m.eta.component[tx], mu_x) != A.identity[tx])
      rep.push_back({"monad-unit-right (μ∘ηT = id)", A.obj_name(x)});
  }
  return rep;
}

Report check_comonad(const Comonad& s) {
  Report rep;
  const Category& B = *s.carrier;
  auto merge = [&rep](Report r, const std::string& tag) {
    for (auto& v : r) rep.push_back({tag + "/" + v.law, v.location});
  };
  merge(validate_functor(s.endo), "endofunctor");
  merge(validate_nat_trans(s.counit), "epsilon");
  merge(validate_nat_trans(s.comult), "nu");
  if (!rep.empty()) return rep;
  for (int y = 0; y < B.n_obj(); ++y) {
    int sy = s.endo.on_obj(y);
    int nu_y = s.comult.component[y];
    // Sν∘ν = νS∘ν
    if (B.then(nu_y, s.endo.on_mor(nu_y)) != B.then(nu_y, s.comult.component[sy]))
      rep.push_back({"comonad-coassoc (Sν∘ν = νS∘ν)", B.obj_name(y)});
    // Sε∘ν = id = εS∘ν
    if (B.then(nu_y, s.endo.on_mor(s.counit.component[y])) != B.identity[sy])
      rep.push_back({"comonad-counit-left (Sε∘ν = id)", B.obj_name(y)});
    if (B.then(nu_y, s.counit.component[sy]) != B.identity[sy])
      rep.push_back({"comonad-counit-right (εS∘ν = id)", B.obj_name(y)});
  }
  return rep;
}

Report check_monad_morphism(const MonadMorphism& mm) {
  Report rep;
  const Category& A = *mm.source.carrier;
  const Category& C = *mm.target.carrier;
  auto merge = [&rep](Report r, const std::string& tag) {
    for (auto& v : r) rep.push_back({tag + "/" + v.law, v.location});
  };
  merge(validate_functor(mm.H), "H");
  merge(validate_nat_trans(mm.chi), "chi");
  if (!rep.empty()) return rep;
  for (int x = 0; x < A.n_obj(); ++x)
    if (!C.is_iso(mm.chi.component[x])) rep.push_back({"chi-invertible", A.obj_name(x)});
  const Functor& T = mm.source.endo;
  const Functor& S = mm.target.endo;
  for (int x = 0; x < A.n_obj(); ++x) {
    int hx = mm.H.on_obj(x);
    // χ∘Hη^T = η^S H
    if (C.then(mm.H.on_mor(mm.source.eta.component[x]), mm.chi.component[x]) != mm.target.eta.component[hx])
      rep.push_back({"monad-1cell-unit (χ∘Hη = ηH)", A.obj_name(x)});
    // χ∘Hμ^T = μ^S H ∘ Sχ ∘ χT
    int tx = T.on_obj(x);
    int lhs = C.then(mm.H.on_mor(mm.source.mu.component[x]), mm.chi.component[x]);
    int rhs = C.then(mm.chi.component[tx], C.then(S.on_mor(mm.chi.component[x]), mm.target.mu.component[hx]));
    if (lhs != rhs) rep.push_back({"monad-1cell-mult (χ∘Hμ = μH∘Sχ∘χT)", A.obj_name(x)});
  }
  return rep;
}

Report check_comonad_morphism(const ComonadMorphism& cm) {
  Report rep;
  const Category& B = *cm.source.carrier;
  const Category& D = *cm.target.carrier;
  auto merge = [&rep](Report r, const std::string& tag) {
    for (auto& v : r) rep.push_back({tag + "/" + v.law, v.location});
  };
  merge(validate_functor(cm.K), "K");
  merge(validate_nat_trans(cm.kappa), "kappa");
  if (!rep.empty()) return rep;
  for (int u = 0; u < B.n_obj(); ++u)
    if (!D.is_iso(cm.kappa.component[u])) rep.push_back({"kappa-invertible", B.obj_name(u)});
  const Functor& S = cm.source.endo;
  const Functor& T = cm.target.endo;
  for (int u = 0; u < B.n_obj(); ++u) {
    int ku = cm.K.on_obj(u);
    // ε^T K ∘ κ = K ε^S
    if (D.then(cm.kappa.component[u], cm.target.counit.component[ku]) != cm.K.on_mor(cm.source.counit.component[u]))
      rep.push_back({"comonad-1cell-counit (εK∘κ = Kε)", B.obj_name(u)});
    // Tκ ∘ κS ∘ Kν^S = ν^T K ∘ κ
    int su = S.on_obj(u);
    int lhs = D.then(cm.K.on_mor(cm.source.comult.component[u]),
                     D.then(cm.kappa.component[su], T.on_mor(cm.kappa.component[u])));
    int rhs = D.then(cm.kappa.component[u], cm.target.comult.component[ku]);
    if (lhs != rhs) rep.push_back({"comonad-1cell-comult (Tκ∘κS∘Kν = νK∘κ)", B.obj_name(u)});
  }
  return rep;
}

Report check_adjunction_morphism(const AdjunctionMorphism& am) {
  Report rep;
  const Category& A = *am.source.A();
  const Category& B = *am.source.B();
  const Category& C = *am.target.A();
  const Category& D = *am.target.B();
  auto merge = [&rep](Report r, const std::string& tag) {
    for (auto& v : r) rep.push_back({tag + "/" + v.law, v.location});
  };
  merge(validate_functor(am.H), "H");
  merge(validate_functor(am.K), "K");
  merge(validate_nat_trans(am.upsilon_left), "upsilon-left");
  merge(validate_nat_trans(am.upsilon_right), "upsilon-right");
  if (!rep.empty()) return rep;
  for (int x = 0; x < A.n_obj(); ++x)
    if (!D.is_iso(am.upsilon_left.component[x])) rep.push_back({"upsilon-left-invertible", A.obj_name(x)});
  for (int u = 0; u < B.n_obj(); ++u)
    if (!C.is_iso(am.upsilon_right.component[u])) rep.push_back({"upsilon-right-invertible", B.obj_name(u)});
  // ε^G K ∘ Ĝυ̌ ∘ υ̂Ǧ = Kε^F  (at u in B)
  for (int u = 0; u < B.n_obj(); ++u) {
    int gu = am.source.right.on_obj(u);
    int lhs = D.then(am.upsilon_left.component[gu],
                     D.then(am.target.left.on_mor(am.upsilon_right.component[u]),
                            am.target.counit.component[am.K.on_obj(u)]));
    if (lhs != am.K.on_mor(am.source.counit.component[u]))
      rep.push_back({"adjunction-1cell-counit (εK∘Gυ̌∘υ̂G = Kε)", B.obj_name(u)});
  }
  // η^G H = Ǧυ̂ ∘ υ̌F̂ ∘ Hη^F  (at x in A)
  for (int x = 0; x < A.n_obj(); ++x) {
    int fx = am.source.left.on_obj(x);
    int rhs = C.then(am.H.on_mor(am.source.unit.component[x]),
                     C.then(am.upsilon_right.component[fx],
                            am.target.right.on_mor(am.upsilon_left.component[x])));
    if (rhs != am.target.unit.component[am.H.on_obj(x)])
      rep.push_back({"adjunction-1cell-unit (ηH = Gυ̂∘υ̌F∘Hη)", A.obj_name(x)});
  }
  return rep;
}

Report check_hom_bijection(const Adjunction& a) {
  Report rep;
  const Category& A = *a.A();
  const Category& B = *a.B();
  for (int x = 0; x < A.n_obj(); ++x)
    for (int u = 0; u < B.n_obj(); ++u) {
      auto up = B.hom(a.left.on_obj(x), u);      // B(Fx, u)
      auto down = A.hom(x, a.right.on_obj(u));   // A(x, Gu)
      if (up.size() != down.size()) {
        rep.push_back({"hom-bijection-cardinality", "(" + A.obj_name(x) + "," + B.obj_name(u) + ")"});
        continue;
      }
      for (int f : up) {
        int phi = A.then(a.unit.component[x], a.right.on_mor(f));  // Gf∘η
        if (A.dom(phi) != x || A.cod(phi) != a.right.on_obj(u)) {
          rep.push_back({"hom-bijection-typing", B.mor_name(f)});
          continue;
        }
        int back = B.then(a.left.on_mor(phi), a.counit.component[u]);  // ε∘Fφ
        if (back != f) rep.push_back({"hom-bijection-roundtrip-up", B.mor_name(f)});
      }
      for (int g : down) {
        int psi = B.then(a.left.on_mor(g), a.counit.component[u]);
        int back = A.then(a.unit.component[x], a.right.on_mor(psi));
        if (back != g) rep.push_back({"hom-bijection-roundtrip-down", A.mor_name(g)});
      }
    }
  return rep;
}

// ---- induced (co)monads --------------------------------------------------

Monad monad_of(const Adjunction& a) {
  Monad m;
  m.carrier = a.A();
  m.endo = compose_functors(a.left, a.right);  // T = G∘F
  m.eta = a.unit;
  m.eta.target = m.endo;
  m.mu.source = compose_functors(m.endo, m.endo);
  m.mu.target = m.endo;
  m.mu.component.resize(a.A()->n_obj());
  for (int x = 0; x < a.A()->n_obj(); ++x)
    m.mu.component[x] = a.right.on_mor(a.counit.component[a.left.on_obj(x)]);  // GεF
  return m;
}

Comonad comonad_of(const Adjunction& a) {
  Comonad s;
  s.carrier = a.B();
  s.endo = compose_functors(a.right, a.left);  // S = F∘G
  s.counit = a.counit;
  s.counit.source = s.endo;
  s.comult.source = s.endo;
  s.comult.target = compose_functors(s.endo, s.endo);
  s.comult.component.resize(a.B()->n_obj());
  for (int u = 0; u < a.B()->n_obj(); ++u)
    s.comult.component[u] = a.left.on_mor(a.unit.component[a.right.on_obj(u)]);  // FηG
  return s;
}

// ---- Eilenberg-Moore ------------------------------------------------------

Resolution em_algebras(const Monad& m) {
  const Category& A = *m.carrier;
  const Functor& T = m.endo;
  Resolution res;
  CategoryBuilder bld("em(" + A.name + ")");
  struct Alg { int x, a, obj; };
  std::vector<Alg> algs;
  for (int x = 0; x < A.n_obj(); ++x) {
    int tx = T.on_obj(x);
    for (int al : A.hom(tx, x)) {
      if (A.then(m.eta.component[x], al) != A.identity[x]) continue;       // α∘η = id
      if (A.then(T.on_mor(al), al) != A.then(m.mu.component[x], al)) continue;  // α∘Tα = α∘μ
      int obj = bld.add_object(pair_object_name(A.obj_name(x), A.mor_name(al)));
      algs.push_back({x, al, obj});
      res.carrier_object.push_back(x);
      res.structure_morphism.push_back(al);
    }
  }
  struct AlgMor { int src, dst, f, id; };
  std::vector<AlgMor> mors;
  for (size_t i = 0; i < algs.size(); ++i)
    for (size_t j = 0; j < algs.size(); ++j)
      for (int f : A.hom(algs[i].x, algs[j].x)) {
        // f∘α = γ∘Tf
        if (A.then(algs[i].a, f) != A.then(T.on_mor(f), algs[j].a)) continue;
        std::string nm = derived_morphism_name(A.mor_name(f),
                                               pair_object_name(A.obj_name(algs[i].x), A.mor_name(algs[i].a)),
                                               pair_object_name(A.obj_name(algs[j].x), A.mor_name(algs[j].a)));
        int id = bld.add_morphism(nm, algs[i].obj, algs[j].obj);
        mors.push_back({static_cast<int>(i), static_cast<int>(j), f, id});
      }
  for (const auto& al : algs) {
    // identity underlying morphism is id_x
    for (const auto& mo : mors)
      if (mo.src == mo.dst && algs[mo.src].obj == al.obj && mo.f == A.identity[al.x]) bld.set_identity(al.obj, mo.id);
  }
  for (const auto& m1 : mors)
    for (const auto& m2 : mors) {
      if (m1.dst != m2.src) continue;
      int f = A.then(m1.f, m2.f);
      for (const auto& m3 : mors)
        if (m3.src == m1.src && m3.dst == m2.dst && m3.f == f) { bld.set_then(m1.id, m2.id, m3.id); break; }
    }
  res.category = bld.finish();

  // free ⊣ forgetful
  Functor free;
  free.source = m.carrier;
  free.target = res.category;
  free.object_map.resize(A.n_obj());
  free.morphism_map.resize(A.n_mor());
  auto alg_obj = [&](int x, int al) {
    return res.category->object_index(pair_object_name(A.obj_name(x), A.mor_name(al)));
  };
  auto alg_mor = [&](int src_obj, int dst_obj, int f) {
    return res.category->morphism_index(derived_morphism_name(
        A.mor_name(f), res.category->obj_name(src_obj), res.category->obj_name(dst_obj)));
  };
  for (int x = 0; x < A.n_obj(); ++x) free.object_map[x] = alg_obj(T.on_obj(x), m.mu.component[x]);
  for (int f = 0; f < A.n_mor(); ++f)
    free.morphism_map[f] = alg_mor(free.object_map[A.dom(f)], free.object_map[A.cod(f)], T.on_mor(f));
  Functor forget;
  forget.source = res.category;
  forget.target = m.carrier;
  forget.object_map = res.carrier_object;
  forget.morphism_map.resize(res.category->n_mor());
  for (const auto& mo : mors) forget.morphism_map[mo.id] = mo.f;
  // synthesized identities (none expected: identity morphisms were added explicitly)
  Adjunction adj;
  adj.left = free;
  adj.right = forget;
  adj.unit.source = identity_functor(m.carrier);
  adj.unit.target = compose_functors(free, forget);
  adj.unit.component = m.eta.component;
  adj.counit.source = compose_functors(forget, free);
  adj.counit.target = identity_functor(res.category);
  adj.counit.component.resize(res.category->n_obj());
  for (size_t i = 0; i < algs.size(); ++i)
    adj.counit.component[algs[i].obj] = alg_mor(free.object_map[algs[i].x], algs[i].obj, algs[i].a);
  res.adjunction = adj;
  return res;
}

Resolution em_coalgebras(const Comonad& s) {
  const Category& B = *s.carrier;
  const Functor& S = s.endo;
  Resolution res;
  CategoryBuilder bld("emc(" + B.name + ")");
  struct Coalg { int y, b, obj; };
  std::vector<Coalg> cos;
  for (int y = 0; y < B.n_obj(); ++y) {
    int sy = S.on_obj(y);
    for (int be : B.hom(y, sy)) {
      if (B.then(be, s.counit.component[y]) != B.identity[y]) continue;       // ε∘β = id
      if (B.then(be, S.on_mor(be)) != B.then(be, s.comult.component[y])) continue;  // Sβ∘β = ν∘β
      int obj = bld.add_object(pair_object_name(B.obj_name(y), B.mor_name(be)));
      cos.push_back({y, be, obj});
      res.carrier_object.push_back(y);
      res.structure_morphism.push_back(be);
    }
  }
  struct CoMor { int src, dst, g, id; };
  std::vector<CoMor> mors;
  for (size_t i = 0; i < cos.size(); ++i)
    for (size_t j = 0; j < cos.size(); ++j)
      for (int g : B.hom(cos[i].y, cos[j].y)) {
        // β'∘g = Sg∘β
        if (B.then(g, cos[j].b) != B.then(cos[i].b, S.on_mor(g))) continue;
        int id = bld.add_morphism(derived_morphism_name(B.mor_name(g),
                                                        pair_object_name(B.obj_name(cos[i].y), B.mor_name(cos[i].b)),
                                                        pair_object_name(B.obj_name(cos[j].y), B.mor_name(cos[j].b))),
                                  cos[i].obj, cos[j].obj);
        mors.push_back({static_cast<int>(i), static_cast<int>(j), g, id});
      }
  for (const auto& co : cos)
    for (const auto& mo : mors)
      if (mo.src == mo.dst && cos[mo.src].obj == co.obj && mo.g == B.identity[co.y]) bld.set_identity(co.obj, mo.id);
  for (const auto& m1 : mors)
    for (const auto& m2 : mors) {
      if (m1.dst != m2.src) continue;
      int g = B.then(m1.g, m2.g);
      for (const auto& m3 : mors)
        if (m3.src == m1.src && m3.dst == m2.dst && m3.g == g) { bld.set_then(m1.id, m2.id, m3.id); break; }
    }
  res.category = bld.finish();

  auto co_obj = [&](int y, int be) {
    return res.category->object_index(pair_object_name(B.obj_name(y), B.mor_name(be)));
  };
  auto co_mor = [&](int src_obj, int dst_obj, int g) {
    return res.category->morphism_index(derived_morphism_name(
        B.mor_name(g), res.category->obj_name(src_obj), res.category->obj_name(dst_obj)));
  };
  // forgetful ⊣ cofree
  Functor forget;
  forget.source = res.category;
  forget.target = s.carrier;
  forget.object_map = res.carrier_object;
  forget.morphism_map.resize(res.category->n_mor());
  for (const auto& mo : mors) forget.morphism_map[mo.id] = mo.g;
  Functor cofree;
  cofree.source = s.carrier;
  cofree.target = res.category;
  cofree.object_map.resize(B.n_obj());
  cofree.morphism_map.resize(B.n_mor());
  for (int y = 0; y < B.n_obj(); ++y) cofree.object_map[y] = co_obj(S.on_obj(y), s.comult.component[y]);
  for (int g = 0; g < B.n_mor(); ++g)
    cofree.morphism_map[g] = co_mor(cofree.object_map[B.dom(g)], cofree.object_map[B.cod(g)], S.on_mor(g));
  Adjunction adj;
  adj.left = forget;
  adj.right = cofree;
  adj.unit.source = identity_functor(res.category);
  adj.unit.target = compose_functors(forget, cofree);
  adj.unit.component.resize(res.category->n_obj());
  for (size_t i = 0; i < cos.size(); ++i)
    adj.unit.component[cos[i].obj] = co_mor(cos[i].obj, cofree.object_map[cos[i].y], cos[i].b);
  adj.counit.source = compose_functors(cofree, forget);
  adj.counit.target = identity_functor(s.carrier);
  adj.counit.component = s.counit.component;
  res.adjunction = adj;
  return res;
}

// ---- Kleisli ---------------------------------------------------------------

Resolution kleisli_monad(const Monad& m) {
  const Category& A = *m.carrier;
  const Functor& T = m.endo;
  Resolution res;
  CategoryBuilder bld("kl(" + A.name + ")");
  for (int x = 0; x < A.n_obj(); ++x) {
    bld.add_object(A.obj_name(x));
    res.carrier_object.push_back(x);
    res.structure_morphism.push_back(-1);
  }
  struct KMor { int x, z, f, id; };  // f : x -> Tz
  std::vector<KMor> mors;
  auto kl_name = [&](int f, int z) { return "kl:" + A.mor_name(f) + ">" + A.obj_name(z); };
  for (int x = 0; x < A.n_obj(); ++x)
    for (int z = 0; z < A.n_obj(); ++z)
      for (int f : A.hom(x, T.on_obj(z)))
        mors.push_back({x, z, f, bld.add_morphism(kl_name(f, z), x, z)});
  for (int x = 0; x < A.n_obj(); ++x)
    bld.set_identity(x, bld.morphism_index(kl_name(m.eta.component[x], x)));
  for (const auto& m1 : mors)
    for (const auto& m2 : mors) {
      if (m1.z != m2.x) continue;
      // g∘f = μ∘Tg∘f
      int comp = A.then(m1.f, A.then(T.on_mor(m2.f), m.mu.component[m2.z]));
      bld.set_then(m1.id, m2.id, bld.morphism_index(kl_name(comp, m2.z)));
    }
  res.category = bld.finish();

  Functor to_kl;  // x |-> x, f |-> η∘f
  to_kl.source = m.carrier;
  to_kl.target = res.category;
  to_kl.object_map.resize(A.n_obj());
  to_kl.morphism_map.resize(A.n_mor());
  for (int x = 0; x < A.n_obj(); ++x) to_kl.object_map[x] = x;
  for (int f = 0; f < A.n_mor(); ++f)
    to_kl.morphism_map[f] = res.category->morphism_index(kl_name(A.then(f, m.eta.component[A.cod(f)]), A.cod(f)));
  Functor from_kl;  // x |-> Tx, (f : x~>z) |-> μ∘Tf
  from_kl.source = res.category;
  from_kl.target = m.carrier;
  from_kl.object_map.resize(res.category->n_obj());
  from_kl.morphism_map.resize(res.category->n_mor());
  for (int x = 0; x < A.n_obj(); ++x) from_kl.object_map[x] = T.on_obj(x);
  for (const auto& mo : mors)
    from_kl.morphism_map[mo.id] = A.then(T.on_mor(mo.f), m.mu.component[mo.z]);
  Adjunction adj;
  adj.left = to_kl;
  adj.right = from_kl;
  adj.unit.source = identity_functor(m.carrier);
  adj.unit.target = compose_functors(to_kl, from_kl);
  adj.unit.component = m.eta.component;
  adj.counit.source = compose_functors(from_kl, to_kl);
  adj.counit.target = identity_functor(res.category);
  adj.counit.component.resize(res.category->n_obj());
  for (int x = 0; x < A.n_obj(); ++x)
    adj.counit.component[x] = res.category->morphism_index(kl_name(A.identity[T.on_obj(x)], x));
  res.adjunction = adj;
  return res;
}

Resolution kleisli_comonad(const Comonad& s) {
  const Category& B = *s.carrier;
  const Functor& S = s.endo;
  Resolution res;
  CategoryBuilder bld("klc(" + B.name + ")");
  for (int u = 0; u < B.n_obj(); ++u) {
    bld.add_object(B.obj_name(u));
    res.carrier_object.push_back(u);
    res.structure_morphism.push_back(-1);
  }
  struct KMor { int u, w, f, id; };  // f : Su -> w
  std::vector<KMor> mors;
  auto kl_name = [&](int f, int u) { return "klc:" + B.mor_name(f) + "<" + B.obj_name(u); };
  for (int u = 0; u < B.n_obj(); ++u)
    for (int w = 0; w < B.n_obj(); ++w)
      for (int f : B.hom(S.on_obj(u), w))
        mors.push_back({u, w, f, bld.add_morphism(kl_name(f, u), u, w)});
  for (int u = 0; u < B.n_obj(); ++u)
    bld.set_identity(u, bld.morphism_index(kl_name(s.counit.component[u], u)));
  for (const auto& m1 : mors)
    for (const auto& m2 : mors) {
      if (m1.w != m2.u) continue;
      // g∘f = g∘Sf∘ν
      int comp = B.then(s.comult.component[m1.u], B.then(S.on_mor(m1.f), m2.f));
      bld.set_then(m1.id, m2.id, bld.morphism_index(kl_name(comp, m1.u)));
    }
  res.category = bld.finish();

  Functor from_klc;  // u |-> Su, (f : u~>w) |-> Sf∘ν
  from_klc.source = res.category;
  from_klc.target = s.carrier;
  from_klc.object_map.resize(res.category->n_obj());
  from_klc.morphism_map.resize(res.category->n_mor());
  for (int u = 0; u < B.n_obj(); ++u) from_klc.object_map[u] = S.on_obj(u);
  for (const auto& mo : mors)
    from_klc.morphism_map[mo.id] = B.then(s.comult.component[mo.u], S.on_mor(mo.f));
  Functor to_klc;  // u |-> u, g |-> g∘ε
  to_klc.source = s.carrier;
  to_klc.target = res.category;
  to_klc.object_map.resize(B.n_obj());
  to_klc.morphism_map.resize(B.n_mor());
  for (int u = 0; u < B.n_obj(); ++u) to_klc.object_map[u] = u;
  for (int g = 0; g < B.n_mor(); ++g)
    to_klc.morphism_map[g] = res.category->morphism_index(kl_name(B.then(s.counit.component[B.dom(g)], g), B.dom(g)));
  Adjunction adj;
  adj.left = from_klc;
  adj.right = to_klc;
  adj.unit.source = identity_functor(res.category);
  adj.unit.target = compose_functors(from_klc, to_klc);
  adj.unit.component.resize(res.category->n_obj());
  for (int u = 0; u < B.n_obj(); ++u)
    adj.unit.component[u] = res.category->morphism_index(kl_name(B.identity[S.on_obj(u)], u));
  adj.counit.source = compose_functors(to_klc, from_klc);
  adj.counit.target = identity_functor(s.carrier);
  adj.counit.component = s.counit.component;
  res.adjunction = adj;
  return res;
}

// ---- comparisons ----------------------------------------------------------

Comparison comparison_H0(const Adjunction& a) {
  Comparison cmp;
  cmp.resolution = em_coalgebras(comonad_of(a));
  const Category& A = *a.A();
  const Category& B = *a.B();
  const Category& E = *cmp.resolution.category;
  Functor h0;
  h0.source = a.A();
  h0.target = cmp.resolution.category;
  h0.object_map.resize(A.n_obj());
  h0.morphism_map.resize(A.n_mor());
  for (int x = 0; x < A.n_obj(); ++x) {
    int fx = a.left.on_obj(x);
    int beta = a.left.on_mor(a.unit.component[x]);  // Fη_x
    h0.object_map[x] = E.object_index(pair_object_name(B.obj_name(fx), B.mor_name(beta)));
    if (h0.object_map[x] < 0)
      cmp.factorization_report.push_back({"H0-object-missing", A.obj_name(x)});
  }
  for (int f = 0; f < A.n_mor(); ++f) {
    int src = h0.object_map[A.dom(f)], dst = h0.object_map[A.cod(f)];
    if (src < 0 || dst < 0) { h0.morphism_map[f] = -1; continue; }
    h0.morphism_map[f] = E.morphism_index(derived_morphism_name(B.mor_name(a.left.on_mor(f)),
                                                                E.obj_name(src), E.obj_name(dst)));
    if (h0.morphism_map[f] < 0)
      cmp.factorization_report.push_back({"H0-morphism-missing", A.mor_name(f)});
  }
  cmp.functor = h0;
  if (cmp.factorization_report.empty()) {
    for (auto& v : validate_functor(h0)) cmp.factorization_report.push_back({"H0/" + v.law, v.location});
    // F = V∘H0 (forgetful after comparison)
    Functor vh = compose_functors(h0, cmp.resolution.adjunction.left);
    if (!(vh.object_map == a.left.object_map && vh.morphism_map == a.left.morphism_map))
      cmp.factorization_report.push_back({"H0-factorization (F = V∘H0)", "table"});
    // H0∘G = cofree
    Functor hg = compose_functors(a.right, h0);
    if (!(hg.object_map == cmp.resolution.adjunction.right.object_map &&
          hg.morphism_map == cmp.resolution.adjunction.right.morphism_map))
      cmp.factorization_report.push_back({"H0-cofree (H0∘G = R)", "table"});
  }
  return cmp;
}

Comparison comparison_H1(const Adjunction& a) {
  Comparison cmp;
  cmp.resolution = em_algebras(monad_of(a));
  const Category& A = *a.A();
  const Category& B = *a.B();
  const Category& E = *cmp.resolution.category;
  Functor h1;
  h1.source = a.B();
  h1.target = cmp.resolution.category;
  h1.object_map.resize(B.n_obj());
  h1.morphism_map.resize(B.n_mor());
  for (int u = 0; u < B.n_obj(); ++u) {
    int gu = a.right.on_obj(u);
    int alpha = a.right.on_mor(a.counit.component[u]);  // Gε_u
    h1.object_map[u] = E.object_index(pair_object_name(A.obj_name(gu), A.mor_name(alpha)));
    if (h1.object_map[u] < 0)
      cmp.factorization_report.push_back({"H1-object-missing", B.obj_name(u)});
  }
  for (int g = 0; g < B.n_mor(); ++g) {
    int src = h1.object_map[B.dom(g)], dst = h1.object_map[B.cod(g)];
    if (src < 0 || dst < 0) { h1.morphism_map[g] = -1; continue; }
    h1.morphism_map[g] = E.morphism_index(derived_morphism_name(A.mor_name(a.right.on_mor(g)),
                                                                E.obj_name(src), E.obj_name(dst)));
    if (h1.morphism_map[g] < 0)
      cmp.factorization_report.push_back({"H1-morphism-missing", B.mor_name(g)});
  }
  cmp.functor = h1;
  if (cmp.factorization_report.empty()) {
    for (auto& v : validate_functor(h1)) cmp.factorization_report.push_back({"H1/" + v.law, v.location});
    // G = U∘H1
    Functor uh = compose_functors(h1, cmp.resolution.adjunction.right);
    if (!(uh.object_map == a.right.object_map && uh.morphism_map == a.right.morphism_map))
      cmp.factorization_report.push_back({"H1-factorization (G = U∘H1)", "table"});
    // H1∘F = free
    Functor hf = compose_functors(a.left, h1);
    if (!(hf.object_map == cmp.resolution.adjunction.left.object_map &&
          hf.morphism_map == cmp.resolution.adjunction.left.morphism_map))
      cmp.factorization_report.push_back({"H1-free (H1∘F = U^)", "table"});
  }
  return cmp;
}

// ---- the nucleus ------------------------------------------------------------

Adjunction lift_to_envelopes(const Adjunction& a) {
  auto [envA, embA] = fincat::karoubi_envelope(a.A());
  auto [envB, embB] = fincat::karoubi_envelope(a.B());
  const Category& A = *a.A();
  const Category& B = *a.B();
  auto env_mor = [](const CatPtr& env, const Category& base, int phi, int f, int psi) {
    return env->morphism_index("[" + base.mor_name(phi) + ">" + base.mor_name(f) + ">" + base.mor_name(psi) + "]");
  };
  Adjunction out;
  out.left.source = envA;
  out.left.target = envB;
  out.left.object_map.resize(envA->n_obj());
  out.left.morphism_map.resize(envA->n_mor());
  // envelope objects are named "e:<morphism>"; recover the idempotent index
  std::vector<int> idemA(envA->n_obj()), idemB(envB->n_obj());
  for (int i = 0; i < envA->n_obj(); ++i) idemA[i] = A.morphism_index(envA->obj_name(i).substr(2));
  for (int i = 0; i < envB->n_obj(); ++i) idemB[i] = B.morphism_index(envB->obj_name(i).substr(2));
  for (int i = 0; i < envA->n_obj(); ++i)
    out.left.object_map[i] = envB->object_index("e:" + B.mor_name(a.left.on_mor(idemA[i])));
  // morphism maps by enumeration over the envelope data
  std::fill(out.left.morphism_map.begin(), out.left.morphism_map.end(), -1);
  for (int i = 0; i < envA->n_obj(); ++i)
    for (int j = 0; j < envA->n_obj(); ++j) {
      int phi = idemA[i], psi = idemA[j];
      for (int f : A.hom(A.cod(phi), A.dom(psi))) {
        if (A.then(A.then(phi, f), psi) != f) continue;
        int src = env_mor(envA, A, phi, f, psi);
        out.left.morphism_map[src] = env_mor(envB, B, a.left.on_mor(phi), a.left.on_mor(f), a.left.on_mor(psi));
      }
    }
  out.right.source = envB;
  out.right.target = envA;
  out.right.object_map.resize(envB->n_obj());
  out.right.morphism_map.assign(envB->n_mor(), -1);
  for (int i = 0; i < envB->n_obj(); ++i)
    out.right.object_map[i] = envA->object_index("e:" + A.mor_name(a.right.on_mor(idemB[i])));
  for (int i = 0; i < envB->n_obj(); ++i)
    for (int j = 0; j < envB->n_obj(); ++j) {
      int phi = idemB[i], psi = idemB[j];
      for (int g : B.hom(B.cod(phi), B.dom(psi))) {
        if (B.then(B.then(phi, g), psi) != g) continue;
        int src = env_mor(envB, B, phi, g, psi);
        out.right.morphism_map[src] = env_mor(envA, A, a.right.on_mor(phi), a.right.on_mor(g), a.right.on_mor(psi));
      }
    }
  out.unit.source = identity_functor(envA);
  out.unit.target = compose_functors(out.left, out.right);
  out.unit.component.resize(envA->n_obj());
  for (int i = 0; i < envA->n_obj(); ++i) {
    int phi = idemA[i];
    int x = A.dom(phi);
    int under = A.then(phi, a.unit.component[x]);  // η∘φ
    out.unit.component[i] = env_mor(envA, A, phi, under, a.right.on_mor(a.left.on_mor(phi)));
  }
  out.counit.source = compose_functors(out.right, out.left);
  out.counit.target = identity_functor(envB);
  out.counit.component.resize(envB->n_obj());
  for (int i = 0; i < envB->n_obj(); ++i) {
    int psi = idemB[i];
    int u = B.dom(psi);
    int under = B.then(a.counit.component[u], psi);  // ψ∘ε
    out.counit.component[i] = env_mor(envB, B, a.left.on_mor(a.right.on_mor(psi)), under, psi);
  }
  return out;
}

NucleusOutcome nucleus(const Adjunction& a, bool auto_karoubi) {
  NucleusOutcome out;
  Adjunction base = a;
  auto niA = fincat::non_split_idempotent(a.A());
  auto niB = fincat::non_split_idempotent(a.B());
  if (niA || niB) {
    if (!auto_karoubi) {
      NucleusError err;
      err.message = "carrier not idempotent-complete";
      err.witness_idempotent = niA ? *niA : *niB;
      err.message += niA ? " (witness idempotent " + a.A()->mor_name(*niA) + " in the left carrier)"
                         : " (witness idempotent " + a.B()->mor_name(*niB) + " in the right carrier)";
      out.error = err;
      return out;
    }
    base = lift_to_envelopes(a);
  }
  NucleusResult res;
  res.algebras = em_algebras(monad_of(base));
  res.coalgebras = em_coalgebras(comonad_of(base));
  const Category& A = *base.A();
  const Category& B = *base.B();
  const Category& CA = *res.coalgebras.category;  // A' = EM-coalgebras
  const Category& CB = *res.algebras.category;    // B' = EM-algebras

  Adjunction n;
  // left' : A' -> B', (y,β) |-> (Gy, Gε_y), g |-> Gg
  n.left.source = res.coalgebras.category;
  n.left.target = res.algebras.category;
  n.left.object_map.resize(CA.n_obj());
  n.left.morphism_map.resize(CA.n_mor());
  for (int i = 0; i < CA.n_obj(); ++i) {
    int y = res.coalgebras.carrier_object[i];
    int gy = base.right.on_obj(y);
    int alpha = base.right.on_mor(base.counit.component[y]);
    n.left.object_map[i] = CB.object_index(pair_object_name(A.obj_name(gy), A.mor_name(alpha)));
    if (n.left.object_map[i] < 0) {
      res.report.push_back({"nucleus-left-object-missing", CA.obj_name(i)});
    }
  }
  for (int e = 0; e < CA.n_mor(); ++e) {
    int src = n.left.object_map[CA.dom(e)], dst = n.left.object_map[CA.cod(e)];
    if (src < 0 || dst < 0) { n.left.morphism_map[e] = -1; continue; }
    // underlying morphism of e in B, then G
    int g = res.coalgebras.adjunction.left.on_mor(e);
    n.left.morphism_map[e] = CB.morphism_index(derived_morphism_name(A.mor_name(base.right.on_mor(g)),
                                                                     CB.obj_name(src), CB.obj_name(dst)));
    if (n.left.morphism_map[e] < 0) res.report.push_back({"nucleus-left-morphism-missing", CA.mor_name(e)});
  }
  // right' : B' -> A', (x,α) |-> (Fx, Fη_x), f |-> Ff
  n.right.source = res.algebras.category;
  n.right.target = res.coalgebras.category;
  n.right.object_map.resize(CB.n_obj());
  n.right.morphism_map.resize(CB.n_mor());
  for (int i = 0; i < CB.n_obj(); ++i) {
    int x = res.algebras.carrier_object[i];
    int fx = base.left.on_obj(x);
    int beta = base.left.on_mor(base.unit.component[x]);
    n.right.object_map[i] = CA.object_index(pair_object_name(B.obj_name(fx), B.mor_name(beta)));
    if (n.right.object_map[i] < 0) res.report.push_back({"nucleus-right-object-missing", CB.obj_name(i)});
  }
  for (int e = 0; e < CB.n_mor(); ++e) {
    int src = n.right.object_map[CB.dom(e)], dst = n.right.object_map[CB.cod(e)];
    if (src < 0 || dst < 0) { n.right.morphism_map[e] = -1; continue; }
    int f = res.algebras.adjunction.right.on_mor(e);
    n.right.morphism_map[e] = CA.morphism_index(derived_morphism_name(B.mor_name(base.left.on_mor(f)),
                                                                      CA.obj_name(src), CA.obj_name(dst)));
    if (n.right.morphism_map[e] < 0) res.report.push_back({"nucleus-right-morphism-missing", CB.mor_name(e)});
  }
  if (!res.report.empty()) { out.result = res; return out; }
  // unit at (y,β) is β itself; counit at (x,α) is α itself.
  n.unit.source = identity_functor(res.coalgebras.category);
  n.unit.target = compose_functors(n.left, n.right);
  n.unit.component.resize(CA.n_obj());
  for (int i = 0; i < CA.n_obj(); ++i) {
    int beta = res.coalgebras.structure_morphism[i];
    int dst = n.right.object_map[n.left.object_map[i]];
    n.unit.component[i] = CA.morphism_index(derived_morphism_name(B.mor_name(beta), CA.obj_name(i), CA.obj_name(dst)));
    if (n.unit.component[i] < 0) res.report.push_back({"nucleus-unit-missing", CA.obj_name(i)});
  }
  n.counit.source = compose_functors(n.right, n.left);
  n.counit.target = identity_functor(res.algebras.category);
  n.counit.component.resize(CB.n_obj());
  for (int i = 0; i < CB.n_obj(); ++i) {
    int alpha = res.algebras.structure_morphism[i];
    int src = n.left.object_map[n.right.object_map[i]];
    n.counit.component[i] = CB.morphism_index(derived_morphism_name(A.mor_name(alpha), CB.obj_name(src), CB.obj_name(i)));
    if (n.counit.component[i] < 0) res.report.push_back({"nucleus-counit-missing", CB.obj_name(i)});
  }
  res.adjunction = n;
  if (res.report.empty()) {
    for (auto& v : check_adjunction(n)) res.report.push_back({"nucleus/" + v.law, v.location});
    for (auto& v : check_hom_bijection(n)) res.report.push_back({"nucleus/" + v.law, v.location});
  }
  out.result = res;
  return out;
}

// ---- simple nucleus ---------------------------------------------------------

namespace {

// admitted objects (x, α idempotent on Fx) with transpose-splitting witness
std::vector<SimpleNucleusObject> scan_ec_objects(const Adjunction& a) {
  const Category& A = *a.A();
  const Category& B = *a.B();
  std::vector<SimpleNucleusObject> out;
  for (int x = 0; x < A.n_obj(); ++x) {
    int fx = a.left.on_obj(x);
    int tx = a.right.on_obj(fx);
    for (int alpha : B.hom(fx, fx)) {
      if (B.then(alpha, alpha) != alpha) continue;
      int transpose = A.then(a.unit.component[x], a.right.on_mor(alpha));  // Gα∘η
      int g_alpha = a.right.on_mor(alpha);
      // witness e : GFx -> x with α̃∘e = Gα and e∘α̃ = id, least name first
      auto cands = A.hom(tx, x);
      std::sort(cands.begin(), cands.end(),
                [&](int p, int q) { return A.mor_name(p) < A.mor_name(q); });
      int witness = -1;
      for (int e : cands)
        if (A.then(e, transpose) == g_alpha && A.then(transpose, e) == A.identity[x]) { witness = e; break; }
      if (witness < 0) continue;
      out.push_back({x, alpha, transpose, witness});
    }
  }
  return out;
}

std::vector<SimpleNucleusObject> scan_em_objects(const Adjunction& a) {
  const Category& A = *a.A();
  const Category& B = *a.B();
  std::vector<SimpleNucleusObject> out;
  for (int u = 0; u < B.n_obj(); ++u) {
    int gu = a.right.on_obj(u);
    int su = a.left.on_obj(gu);
    for (int beta : A.hom(gu, gu)) {
      if (A.then(beta, beta) != beta) continue;
      int transpose = B.then(a.left.on_mor(beta), a.counit.component[u]);  // ε∘Fβ : FGu -> u
      int f_beta = a.left.on_mor(beta);
      // witness m : u -> FGu with m-then-β̃ = id_u and β̃-then-m = Fβ
      auto cands = B.hom(u, su);
      std::sort(cands.begin(), cands.end(),
                [&](int p, int q) { return B.mor_name(p) < B.mor_name(q); });
      int witness = -1;
      for (int m : cands)
        if (B.then(transpose, m) == f_beta && B.then(m, transpose) == B.identity[u]) { witness = m; break; }
      if (witness < 0) continue;
      out.push_back({u, beta, transpose, witness});
    }
  }
  return out;
}

int derived_mor_index(const Category& cat, const Category& underlying, int f, int src_obj, int dst_obj) {
  return cat.morphism_index(derived_morphism_name(underlying.mor_name(f), cat.obj_name(src_obj), cat.obj_name(dst_obj)));
}

}  // namespace

SimpleNucleusResult simple_nucleus(const Adjunction& a) {
  SimpleNucleusResult res;
  const Category& A = *a.A();
  const Category& B = *a.B();
  res.Ec_objects = scan_ec_objects(a);
  res.Em_objects = scan_em_objects(a);

  // Ec: objects (x, α on Fx); morphisms f in A(x,z) with Ff∘α = γ∘Ff.
  {
    std::vector<int> ep(res.Ec_objects.size());
    for (size_t i = 0; i < res.Ec_objects.size(); ++i) ep[i] = res.Ec_objects[i].carrier;
    // naming uses A for the carrier and B for alpha; patch names below.
    CategoryBuilder bld("ec");
    std::vector<int> obj_id(res.Ec_objects.size());
    for (size_t i = 0; i < res.Ec_objects.size(); ++i)
      obj_id[i] = bld.add_object(pair_object_name(A.obj_name(res.Ec_objects[i].carrier),
                                                  B.mor_name(res.Ec_objects[i].alpha)));
    struct M { int src, dst, f, id; };
    std::vector<M> mors;
    for (size_t i = 0; i < res.Ec_objects.size(); ++i)
      for (size_t j = 0; j < res.Ec_objects.size(); ++j)
        for (int f : A.hom(res.Ec_objects[i].carrier, res.Ec_objects[j].carrier)) {
          int ff = a.left.on_mor(f);
          if (B.then(res.Ec_objects[i].alpha, ff) != B.then(ff, res.Ec_objects[j].alpha)) continue;
          std::string src_name = pair_object_name(A.obj_name(res.Ec_objects[i].carrier), B.mor_name(res.Ec_objects[i].alpha));
          std::string dst_name = pair_object_name(A.obj_name(res.Ec_objects[j].carrier), B.mor_name(res.Ec_objects[j].alpha));
          mors.push_back({static_cast<int>(i), static_cast<int>(j), f,
                          bld.add_morphism(derived_morphism_name(A.mor_name(f), src_name, dst_name), obj_id[i], obj_id[j])});
        }
    for (size_t i = 0; i < res.Ec_objects.size(); ++i)
      for (const auto& mo : mors)
        if (mo.src == static_cast<int>(i) && mo.dst == static_cast<int>(i) &&
            mo.f == A.identity[res.Ec_objects[i].carrier])
          bld.set_identity(obj_id[i], mo.id);
    for (const auto& m1 : mors)
      for (const auto& m2 : mors) {
        if (m1.dst != m2.src) continue;
        int f = A.then(m1.f, m2.f);
        for (const auto& m3 : mors)
          if (m3.src == m1.src && m3.dst == m2.dst && m3.f == f) { bld.set_then(m1.id, m2.id, m3.id); break; }
      }
    res.Ec = bld.finish();
  }
  // Em: objects (u, β on Gu); morphisms g in B(u,w) with Gg∘β = δ∘Gg.
  {
    CategoryBuilder bld("em-simple");
    std::vector<int> obj_id(res.Em_objects.size());
    for (size_t i = 0; i < res.Em_objects.size(); ++i)
      obj_id[i] = bld.add_object(pair_object_name(B.obj_name(res.Em_objects[i].carrier),
                                                  A.mor_name(res.Em_objects[i].alpha)));
    struct M { int src, dst, g, id; };
    std::vector<M> mors;
    for (size_t i = 0; i < res.Em_objects.size(); ++i)
      for (size_t j = 0; j < res.Em_objects.size(); ++j)
        for (int g : B.hom(res.Em_objects[i].carrier, res.Em_objects[j].carrier)) {
          int gg = a.right.on_mor(g);
          if (A.then(res.Em_objects[i].alpha, gg) != A.then(gg, res.Em_objects[j].alpha)) continue;
          std::string src_name = pair_object_name(B.obj_name(res.Em_objects[i].carrier), A.mor_name(res.Em_objects[i].alpha));
          std::string dst_name = pair_object_name(B.obj_name(res.Em_objects[j].carrier), A.mor_name(res.Em_objects[j].alpha));
          mors.push_back({static_cast<int>(i), static_cast<int>(j), g,
                          bld.add_morphism(derived_morphism_name(B.mor_name(g), src_name, dst_name), obj_id[i], obj_id[j])});
        }
    for (size_t i = 0; i < res.Em_objects.size(); ++i)
      for (const auto& mo : mors)
        if (mo.src == static_cast<int>(i) && mo.dst == static_cast<int>(i) &&
            mo.g == B.identity[res.Em_objects[i].carrier])
          bld.set_identity(obj_id[i], mo.id);
    for (const auto& m1 : mors)
      for (const auto& m2 : mors) {
        if (m1.dst != m2.src) continue;
        int g = B.then(m1.g, m2.g);
        for (const auto& m3 : mors)
          if (m3.src == m1.src && m3.dst == m2.dst && m3.g == g) { bld.set_then(m1.id, m2.id, m3.id); break; }
      }
    res.Em = bld.finish();
  }

  const Category& Ec = *res.Ec;
  const Category& Em = *res.Em;

  auto ec_obj = [&](int x, int alpha) {
    return Ec.object_index(pair_object_name(A.obj_name(x), B.mor_name(alpha)));
  };
  auto em_obj = [&](int u, int beta) {
    return Em.object_index(pair_object_name(B.obj_name(u), A.mor_name(beta)));
  };

  // K0 : A -> Ec, x |-> (GFx, Fη_x∘ε_Fx), f |-> GFf
  {
    Functor k0;
    k0.source = a.A();
    k0.target = res.Ec;
    k0.object_map.resize(A.n_obj());
    k0.morphism_map.resize(A.n_mor());
    bool ok = true;
    for (int x = 0; x < A.n_obj(); ++x) {
      int fx = a.left.on_obj(x);
      int tx = a.right.on_obj(fx);
      int alpha = B.then(a.counit.component[fx], a.left.on_mor(a.unit.component[x]));  // Fη∘εF
      k0.object_map[x] = ec_obj(tx, alpha);
      if (k0.object_map[x] < 0) { res.report.push_back({"K0-object-missing", A.obj_name(x)}); ok = false; }
    }
    if (ok)
      for (int f = 0; f < A.n_mor(); ++f) {
        int tf = a.right.on_mor(a.left.on_mor(f));
        k0.morphism_map[f] = derived_mor_index(Ec, A, tf, k0.object_map[A.dom(f)], k0.object_map[A.cod(f)]);
        if (k0.morphism_map[f] < 0) { res.report.push_back({"K0-morphism-missing", A.mor_name(f)}); ok = false; }
      }
    if (ok)
      for (auto& v : validate_functor(k0)) res.report.push_back({"K0/" + v.law, v.location});
    res.K0 = k0;
  }
  // K1 : B -> Em, u |-> (FGu, ηG∘Gε), g |-> FGg
  {
    Functor k1;
    k1.source = a.B();
    k1.target = res.Em;
    k1.object_map.resize(B.n_obj());
    k1.morphism_map.resize(B.n_mor());
    bool ok = true;
    for (int u = 0; u < B.n_obj(); ++u) {
      int gu = a.right.on_obj(u);
      int su = a.left.on_obj(gu);
      int beta = A.then(a.right.on_mor(a.counit.component[u]), a.unit.component[gu]);  // ηG∘Gε
      k1.object_map[u] = em_obj(su, beta);
      if (k1.object_map[u] < 0) { res.report.push_back({"K1-object-missing", B.obj_name(u)}); ok = false; }
    }
    if (ok)
      for (int g = 0; g < B.n_mor(); ++g) {
        int sg = a.left.on_mor(a.right.on_mor(g));
        k1.morphism_map[g] = derived_mor_index(Em, B, sg, k1.object_map[B.dom(g)], k1.object_map[B.cod(g)]);
        if (k1.morphism_map[g] < 0) { res.report.push_back({"K1-morphism-missing", B.mor_name(g)}); ok = false; }
      }
    if (ok)
      for (auto& v : validate_functor(k1)) res.report.push_back({"K1/" + v.law, v.location});
    res.K1 = k1;
  }

  // the adjunction F̄ ⊣ Ḡ with F̄(x,α) = (Fx,Gα), Ḡ(u,β) = (Gu,Fβ);
  // unit α̃, counit β̃ (which reduce to η and ε on split-unit objects).
  {
    Adjunction n;
    bool ok = true;
    n.left.source = res.Ec;
    n.left.target = res.Em;
    n.left.object_map.resize(Ec.n_obj());
    n.left.morphism_map.resize(Ec.n_mor());
    std::vector<int> ec_of_obj(Ec.n_obj()), em_of_obj(Em.n_obj());
    for (size_t i = 0; i < res.Ec_objects.size(); ++i)
      ec_of_obj[ec_obj(res.Ec_objects[i].carrier, res.Ec_objects[i].alpha)] = static_cast<int>(i);
    for (size_t i = 0; i < res.Em_objects.size(); ++i)
      em_of_obj[em_obj(res.Em_objects[i].carrier, res.Em_objects[i].alpha)] = static_cast<int>(i);
    for (int o = 0; o < Ec.n_obj() && ok; ++o) {
      const auto& so = res.Ec_objects[ec_of_obj[o]];
      int img = em_obj(a.left.on_obj(so.carrier), a.right.on_mor(so.alpha));
      if (img < 0) { res.report.push_back({"simple-left-object-missing", Ec.obj_name(o)}); ok = false; break; }
      n.left.object_map[o] = img;
    }
    // underlying morphisms of Ec are recovered by name lookup
    if (ok) {
      for (int e = 0; e < Ec.n_mor() && ok; ++e) {
        // name is "<f>@<src>><dst>"; recover f by trying all candidates
        int src = Ec.dom(e), dst = Ec.cod(e);
        const auto& so = res.Ec_objects[ec_of_obj[src]];
        const auto& dd = res.Ec_objects[ec_of_obj[dst]];
        int found = -1;
        for (int f : A.hom(so.carrier, dd.carrier))
          if (derived_mor_index(Ec, A, f, src, dst) == e) { found = f; break; }
        if (found < 0) { ok = false; break; }
        int img = derived_mor_index(Em, B, a.left.on_mor(found), n.left.object_map[src], n.left.object_map[dst]);
        if (img < 0) { res.report.push_back({"simple-left-morphism-missing", Ec.mor_name(e)}); ok = false; break; }
        n.left.morphism_map[e] = img;
      }
    }
    n.right.source = res.Em;
    n.right.target = res.Ec;
    n.right.object_map.resize(Em.n_obj());
    n.right.morphism_map.resize(Em.n_mor());
    if (ok)
      for (int o = 0; o < Em.n_obj() && ok; ++o) {
        const auto& so = res.Em_objects[em_of_obj[o]];
        int img = ec_obj(a.right.on_obj(so.carrier), a.left.on_mor(so.alpha));
        if (img < 0) { res.report.push_back({"simple-right-object-missing", Em.obj_name(o)}); ok = false; }
        else n.right.object_map[o] = img;
      }
    if (ok)
      for (int e = 0; e < Em.n_mor() && ok; ++e) {
        int src = Em.dom(e), dst = Em.cod(e);
        const auto& so = res.Em_objects[em_of_obj[src]];
        const auto& dd = res.Em_objects[em_of_obj[dst]];
        int found = -1;
        for (int g : B.hom(so.carrier, dd.carrier))
          if (derived_mor_index(Em, B, g, src, dst) == e) { found = g; break; }
        if (found < 0) { ok = false; break; }
        int img = derived_mor_index(Ec, A, a.right.on_mor(found), n.right.object_map[src], n.right.object_map[dst]);
        if (img < 0) { res.report.push_back({"simple-right-morphism-missing", Em.mor_name(e)}); ok = false; break; }
        n.right.morphism_map[e] = img;
      }
    if (ok) {
      n.unit.source = identity_functor(res.Ec);
      n.unit.target = compose_functors(n.left, n.right);
      n.unit.component.resize(Ec.n_obj());
      for (int o = 0; o < Ec.n_obj() && ok; ++o) {
        const auto& so = res.Ec_objects[ec_of_obj[o]];
        int img = n.right.object_map[n.left.object_map[o]];
        int comp = derived_mor_index(Ec, A, so.transpose, o, img);
        if (comp < 0) { res.report.push_back({"simple-unit-missing (α̃)", Ec.obj_name(o)}); ok = false; break; }
        n.unit.component[o] = comp;
      }
    }
    if (ok) {
      n.counit.source = compose_functors(n.right, n.left);
      n.counit.target = identity_functor(res.Em);
      n.counit.component.resize(Em.n_obj());
      for (int o = 0; o < Em.n_obj() && ok; ++o) {
        const auto& so = res.Em_objects[em_of_obj[o]];
        int src = n.left.object_map[n.right.object_map[o]];
        int comp = derived_mor_index(Em, B, so.transpose, src, o);
        if (comp < 0) { res.report.push_back({"simple-counit-missing (β̃)", Em.obj_name(o)}); ok = false; break; }
        n.counit.component[o] = comp;
      }
    }
    if (ok) {
      for (auto& v : check_adjunction(n)) res.report.push_back({"simple/" + v.law, v.location});
      res.adjunction = n;
    }
  }
  return res;
}

// ---- little nucleus ----------------------------------------------------------

LittleNucleusResult little_nucleus(const Adjunction& a) {
  LittleNucleusResult res;
  const Category& A = *a.A();
  const Category& B = *a.B();
  auto ec_objs = scan_ec_objects(a);
  auto em_objs = scan_em_objects(a);

  // Karm: objects (x, α on Fx); morphisms g in B(Fx,Fz) with Gg∘Gα = Gγ∘Gg.
  struct DM { int src, dst, f, id; };
  std::vector<DM> karm_mors, karc_mors;
  {
    CategoryBuilder bld("karm");
    std::vector<int> obj_id(ec_objs.size());
    for (size_t i = 0; i < ec_objs.size(); ++i)
      obj_id[i] = bld.add_object(pair_object_name(A.obj_name(ec_objs[i].carrier), B.mor_name(ec_objs[i].alpha)));
    for (size_t i = 0; i < ec_objs.size(); ++i)
      for (size_t j = 0; j < ec_objs.size(); ++j) {
        int fx = a.left.on_obj(ec_objs[i].carrier), fz = a.left.on_obj(ec_objs[j].carrier);
        for (int g : B.hom(fx, fz)) {
          int gg = a.right.on_mor(g);
          if (A.then(a.right.on_mor(ec_objs[i].alpha), gg) != A.then(gg, a.right.on_mor(ec_objs[j].alpha))) continue;
          std::string sn = pair_object_name(A.obj_name(ec_objs[i].carrier), B.mor_name(ec_objs[i].alpha));
          std::string dn = pair_object_name(A.obj_name(ec_objs[j].carrier), B.mor_name(ec_objs[j].alpha));
          karm_mors.push_back({static_cast<int>(i), static_cast<int>(j), g,
                               bld.add_morphism(derived_morphism_name(B.mor_name(g), sn, dn), obj_id[i], obj_id[j])});
        }
      }
    for (size_t i = 0; i < ec_objs.size(); ++i)
      for (const auto& mo : karm_mors)
        if (mo.src == static_cast<int>(i) && mo.dst == static_cast<int>(i) &&
            mo.f == B.identity[a.left.on_obj(ec_objs[i].carrier)])
          bld.set_identity(obj_id[i], mo.id);
    for (const auto& m1 : karm_mors)
      for (const auto& m2 : karm_mors) {
        if (m1.dst != m2.src) continue;
        int g = B.then(m1.f, m2.f);
        for (const auto& m3 : karm_mors)
          if (m3.src == m1.src && m3.dst == m2.dst && m3.f == g) { bld.set_then(m1.id, m2.id, m3.id); break; }
      }
    res.Karm = bld.finish();
  }
  // Karc: objects (u, β on Gu); morphisms f in A(Gu,Gw) with Ff∘Fβ = Fδ∘Ff.
  {
    CategoryBuilder bld("karc");
    std::vector<int> obj_id(em_objs.size());
    for (size_t i = 0; i < em_objs.size(); ++i)
      obj_id[i] = bld.add_object(pair_object_name(B.obj_name(em_objs[i].carrier), A.mor_name(em_objs[i].alpha)));
    for (size_t i = 0; i < em_objs.size(); ++i)
      for (size_t j = 0; j < em_objs.size(); ++j) {
        int gu = a.right.on_obj(em_objs[i].carrier), gw = a.right.on_obj(em_objs[j].carrier);
        for (int f : A.hom(gu, gw)) {
          int ff = a.left.on_mor(f);
          if (B.then(a.left.on_mor(em_objs[i].alpha), ff) != B.then(ff, a.left.on_mor(em_objs[j].alpha))) continue;
          std::string sn = pair_object_name(B.obj_name(em_objs[i].carrier), A.mor_name(em_objs[i].alpha));
          std::string dn = pair_object_name(B.obj_name(em_objs[j].carrier), A.mor_name(em_objs[j].alpha));
          karc_mors.push_back({static_cast<int>(i), static_cast<int>(j), f,
                               bld.add_morphism(derived_morphism_name(A.mor_name(f), sn, dn), obj_id[i], obj_id[j])});
        }
      }
    for (size_t i = 0; i < em_objs.size(); ++i)
      for (const auto& mo : karc_mors)
        if (mo.src == static_cast<int>(i) && mo.dst == static_cast<int>(i) &&
            mo.f == A.identity[a.right.on_obj(em_objs[i].carrier)])
          bld.set_identity(obj_id[i], mo.id);
    for (const auto& m1 : karc_mors)
      for (const auto& m2 : karc_mors) {
        if (m1.dst != m2.src) continue;
        int f = A.then(m1.f, m2.f);
        for (const auto& m3 : karc_mors)
          if (m3.src == m1.src && m3.dst == m2.dst && m3.f == f) { bld.set_then(m1.id, m2.id, m3.id); break; }
      }
    res.Karc = bld.finish();
  }
  const Category& Karm = *res.Karm;
  const Category& Karc = *res.Karc;

  // restricted adjunction: L : Karc -> Karm, (u,β) |-> (Gu, Fβ), f |-> Ff;
  // R : Karm -> Karc, (x,α) |-> (Fx, Gα), g |-> Gg; unit η, counit ε.
  {
    Adjunction n;
    bool ok = true;
    n.left.source = res.Karc;
    n.left.target = res.Karm;
    n.left.object_map.resize(Karc.n_obj());
    n.left.morphism_map.resize(Karc.n_mor());
    for (size_t i = 0; i < em_objs.size() && ok; ++i) {
      int img = Karm.object_index(pair_object_name(A.obj_name(a.right.on_obj(em_objs[i].carrier)),
                                                   B.mor_name(a.left.on_mor(em_objs[i].alpha))));
      if (img < 0) { res.report.push_back({"little-left-object-missing", Karc.obj_name(static_cast<int>(i))}); ok = false; }
      else n.left.object_map[i] = img;
    }
    if (ok)
      for (const auto& mo : karc_mors) {
        int img = derived_mor_index(Karm, B, a.left.on_mor(mo.f), n.left.object_map[mo.src], n.left.object_map[mo.dst]);
        if (img < 0) { res.report.push_back({"little-left-morphism-missing", A.mor_name(mo.f)}); ok = false; break; }
        n.left.morphism_map[Karc.morphism_index(derived_morphism_name(
            A.mor_name(mo.f), Karc.obj_name(mo.src), Karc.obj_name(mo.dst)))] = img;
      }
    n.right.source = res.Karm;
    n.right.target = res.Karc;
    n.right.object_map.resize(Karm.n_obj());
    n.right.morphism_map.resize(Karm.n_mor());
    if (ok)
      for (size_t i = 0; i < ec_objs.size() && ok; ++i) {
        int img = Karc.object_index(pair_object_name(B.obj_name(a.left.on_obj(ec_objs[i].carrier)),
                                                     A.mor_name(a.right.on_mor(ec_objs[i].alpha))));
        if (img < 0) { res.report.push_back({"little-right-object-missing", Karm.obj_name(static_cast<int>(i))}); ok = false; }
        else n.right.object_map[i] = img;
      }
    if (ok)
      for (const auto& mo : karm_mors) {
        int img = derived_mor_index(Karc, A, a.right.on_mor(mo.f), n.right.object_map[mo.src], n.right.object_map[mo.dst]);
        if (img < 0) { res.report.push_back({"little-right-morphism-missing", B.mor_name(mo.f)}); ok = false; break; }
        n.right.morphism_map[Karm.morphism_index(derived_morphism_name(
            B.mor_name(mo.f), Karm.obj_name(mo.src), Karm.obj_name(mo.dst)))] = img;
      }
    if (ok) {
      n.unit.source = identity_functor(res.Karc);
      n.unit.target = compose_functors(n.left, n.right);
      n.unit.component.resize(Karc.n_obj());
      for (size_t i = 0; i < em_objs.size() && ok; ++i) {
        int gu = a.right.on_obj(em_objs[i].carrier);
        int comp = derived_mor_index(Karc, A, a.unit.component[gu], static_cast<int>(i),
                                     n.right.object_map[n.left.object_map[i]]);
        if (comp < 0) { res.report.push_back({"little-unit-missing (ηG)", Karc.obj_name(static_cast<int>(i))}); ok = false; }
        else n.unit.component[i] = comp;
      }
    }
    if (ok) {
      n.counit.source = compose_functors(n.right, n.left);
      n.counit.target = identity_functor(res.Karm);
      n.counit.component.resize(Karm.n_obj());
      for (size_t i = 0; i < ec_objs.size() && ok; ++i) {
        int fx = a.left.on_obj(ec_objs[i].carrier);
        int comp = derived_mor_index(Karm, B, a.counit.component[fx],
                                     n.left.object_map[n.right.object_map[i]], static_cast<int>(i));
        if (comp < 0) { res.report.push_back({"little-counit-missing (εF)", Karm.obj_name(static_cast<int>(i))}); ok = false; }
        else n.counit.component[i] = comp;
      }
    }
    if (ok) {
      for (auto& v : check_adjunction(n)) res.report.push_back({"little/" + v.law, v.location});
      res.adjunction = n;
    }
  }

  // full-and-faithful embeddings into the simple-nucleus categories
  {
    auto sim = simple_nucleus(a);
    const Category& Em = *sim.Em;
    const Category& Ec = *sim.Ec;
    Functor j1;  // Karm -> Em, (x,α) |-> (Fx, Gα), g |-> g
    j1.source = res.Karm;
    j1.target = sim.Em;
    j1.object_map.assign(Karm.n_obj(), -1);
    j1.morphism_map.assign(Karm.n_mor(), -1);
    bool ok = true;
    for (size_t i = 0; i < ec_objs.size() && ok; ++i) {
      int img = Em.object_index(pair_object_name(B.obj_name(a.left.on_obj(ec_objs[i].carrier)),
                                                 A.mor_name(a.right.on_mor(ec_objs[i].alpha))));
      if (img < 0) { res.report.push_back({"embed-Karm-object-missing", Karm.obj_name(static_cast<int>(i))}); ok = false; }
      else j1.object_map[i] = img;
    }
    if (ok)
      for (const auto& mo : karm_mors) {
        int im = derived_mor_index(Em, B, mo.f, j1.object_map[mo.src], j1.object_map[mo.dst]);
        if (im < 0) { res.report.push_back({"embed-Karm-morphism-missing", B.mor_name(mo.f)}); ok = false; break; }
        j1.morphism_map[Karm.morphism_index(derived_morphism_name(B.mor_name(mo.f), Karm.obj_name(mo.src),
                                                                  Karm.obj_name(mo.dst)))] = im;
      }
    if (ok) {
      for (auto& v : validate_functor(j1)) res.report.push_back({"embed-Karm/" + v.law, v.location});
      auto ev = fincat::functor_is_equivalence(j1);
      if (!ev.full) res.report.push_back({"embed-Karm-not-full", ev.detail});
      if (!ev.faithful) res.report.push_back({"embed-Karm-not-faithful", ev.detail});
      res.embed_Karm_Em = j1;
    }
    Functor j0;  // Karc -> Ec, (u,β) |-> (Gu, Fβ), f |-> f
    j0.source = res.Karc;
    j0.target = sim.Ec;
    j0.object_map.assign(Karc.n_obj(), -1);
    j0.morphism_map.assign(Karc.n_mor(), -1);
    ok = true;
    for (size_t i = 0; i < em_objs.size() && ok; ++i) {
      int img = Ec.object_index(pair_object_name(A.obj_name(a.right.on_obj(em_objs[i].carrier)),
                                                 B.mor_name(a.left.on_mor(em_objs[i].alpha))));
      if (img < 0) { res.report.push_back({"embed-Karc-object-missing", Karc.obj_name(static_cast<int>(i))}); ok = false; }
      else j0.object_map[i] = img;
    }
    if (ok)
      for (const auto& mo : karc_mors) {
        int im = derived_mor_index(Ec, A, mo.f, j0.object_map[mo.src], j0.object_map[mo.dst]);
        if (im < 0) { res.report.push_back({"embed-Karc-morphism-missing", A.mor_name(mo.f)}); ok = false; break; }
        j0.morphism_map[Karc.morphism_index(derived_morphism_name(A.mor_name(mo.f), Karc.obj_name(mo.src),
                                                                  Karc.obj_name(mo.dst)))] = im;
      }
    if (ok) {
      for (auto& v : validate_functor(j0)) res.report.push_back({"embed-Karc/" + v.law, v.location});
      auto ev = fincat::functor_is_equivalence(j0);
      if (!ev.full) res.report.push_back({"embed-Karc-not-full", ev.detail});
      if (!ev.faithful) res.report.push_back({"embed-Karc-not-faithful", ev.detail});
      res.embed_Karc_Ec = j0;
    }
  }
  return res;
}

// ---- nuclearity ----------------------------------------------------------------

NuclearityEvidence is_nuclear(const Adjunction& a) {
  NuclearityEvidence ev;
  Comparison h1 = comparison_H1(a);
  Comparison h0 = comparison_H0(a);
  ev.h1 = fincat::functor_is_equivalence(h1.functor);
  ev.h0 = fincat::functor_is_equivalence(h0.functor);
  ev.value = h1.factorization_report.empty() && h0.factorization_report.empty() &&
             ev.h1.is_equivalence && ev.h0.is_equivalence;
  return ev;
}

SubnuclearityEvidence is_subnuclear(const Adjunction& a) {
  SubnuclearityEvidence ev;
  ev.left_essentially_surjective = fincat::essentially_surjective(a.left);
  ev.right_essentially_surjective = fincat::essentially_surjective(a.right);
  const Category& A = *a.A();
  const Category& B = *a.B();
  Resolution klm = kleisli_monad(monad_of(a));
  Resolution klc = kleisli_comonad(comonad_of(a));
  // E1 : Klm -> B, x |-> Fx, (f : x -> Tz) |-> ε∘Ff
  Functor e1;
  e1.source = klm.category;
  e1.target = a.B();
  e1.object_map.resize(klm.category->n_obj());
  e1.morphism_map.resize(klm.category->n_mor());
  for (int x = 0; x < klm.category->n_obj(); ++x) e1.object_map[x] = a.left.on_obj(klm.carrier_object[x]);
  e1.morphism_map.assign(klm.category->n_mor(), -1);
  // Kleisli morphisms are A-morphisms x -> Tz; their mates are ε∘Ff.
  {
    const Category& Kl = *klm.category;
    for (int x = 0; x < Kl.n_obj(); ++x)
      for (int z = 0; z < Kl.n_obj(); ++z)
        for (int f : A.hom(klm.carrier_object[x], monad_of(a).endo.on_obj(klm.carrier_object[z]))) {
          int e = Kl.morphism_index("kl:" + A.mor_name(f) + ">" + A.obj_name(klm.carrier_object[z]));
          if (e < 0) continue;
          int fz = a.left.on_obj(klm.carrier_object[z]);
          e1.morphism_map[e] = B.then(a.left.on_mor(f), a.counit.component[fz]);
        }
  }
  ev.e1 = fincat::functor_is_equivalence(e1);
  // E0 : Klc -> A, u |-> Gu, (f : Su -> w) |-> Gf∘η
  Functor e0;
  e0.source = klc.category;
  e0.target = a.A();
  e0.object_map.resize(klc.category->n_obj());
  e0.morphism_map.assign(klc.category->n_mor(), -1);
  for (int u = 0; u < klc.category->n_obj(); ++u) e0.object_map[u] = a.right.on_obj(klc.carrier_object[u]);
  {
    const Category& Kl = *klc.category;
    Comonad s = comonad_of(a);
    for (int u = 0; u < Kl.n_obj(); ++u)
      for (int w = 0; w < Kl.n_obj(); ++w)
        for (int f : B.hom(s.endo.on_obj(klc.carrier_object[u]), klc.carrier_object[w])) {
          int e = Kl.morphism_index("klc:" + B.mor_name(f) + "<" + B.obj_name(klc.carrier_object[u]));
          if (e < 0) continue;
          int gu = a.right.on_obj(klc.carrier_object[u]);
          e0.morphism_map[e] = A.then(a.unit.component[gu], a.right.on_mor(f));
        }
  }
  ev.e0 = fincat::functor_is_equivalence(e0);
  ev.value = ev.e1.is_equivalence && ev.e0.is_equivalence;
  return ev;
}

// ---- Street nucleus --------------------------------------------------------------

StreetOutcome street_nucleus_monad(const Monad& m, bool auto_karoubi) {
  StreetOutcome out;
  auto ni = fincat::non_split_idempotent(m.carrier);
  if (ni && !auto_karoubi) {
    out.error = NucleusError{"carrier not idempotent-complete (witness idempotent " +
                                 m.carrier->mor_name(*ni) + ")",
                             *ni};
    return out;
  }
  Monad base = m;
  if (ni) {
    // lift the bare monad to the envelope: T̄(e:φ) = e:Tφ
    auto env = fincat::karoubi_envelope(m.carrier).first;
    const Category& A = *m.carrier;
    auto env_mor = [&](int phi, int f, int psi) {
      return env->morphism_index("[" + A.mor_name(phi) + ">" + A.mor_name(f) + ">" + A.mor_name(psi) + "]");
    };
    std::vector<int> idem(env->n_obj());
    for (int i = 0; i < env->n_obj(); ++i) idem[i] = A.morphism_index(env->obj_name(i).substr(2));
    Monad lift;
    lift.carrier = env;
    lift.endo.source = lift.endo.target = env;
    lift.endo.object_map.resize(env->n_obj());
    lift.endo.morphism_map.assign(env->n_mor(), -1);
    for (int i = 0; i < env->n_obj(); ++i)
      lift.endo.object_map[i] = env->object_index("e:" + A.mor_name(m.endo.on_mor(idem[i])));
    for (int i = 0; i < env->n_obj(); ++i)
      for (int j = 0; j < env->n_obj(); ++j) {
        int phi = idem[i], psi = idem[j];
        for (int f : A.hom(A.cod(phi), A.dom(psi))) {
          if (A.then(A.then(phi, f), psi) != f) continue;
          lift.endo.morphism_map[env_mor(phi, f, psi)] =
              env_mor(m.endo.on_mor(phi), m.endo.on_mor(f), m.endo.on_mor(psi));
        }
      }
    lift.eta.source = identity_functor(env);
    lift.eta.target = lift.endo;
    lift.eta.component.resize(env->n_obj());
    lift.mu.source = compose_functors(lift.endo, lift.endo);
    lift.mu.target = lift.endo;
    lift.mu.component.resize(env->n_obj());
    for (int i = 0; i < env->n_obj(); ++i) {
      int phi = idem[i];
      int x = A.dom(phi);
      lift.eta.component[i] = env_mor(phi, A.then(phi, m.eta.component[x]), m.endo.on_mor(phi));
      int ttphi = m.endo.on_mor(m.endo.on_mor(phi));
      lift.mu.component[i] = env_mor(ttphi, A.then(ttphi, m.mu.component[x]), m.endo.on_mor(phi));
    }
    base = lift;
  }
  Resolution kl = kleisli_monad(base);
  Comonad s1 = comonad_of(kl.adjunction);
  Resolution emc = em_coalgebras(s1);
  out.monad = monad_of(emc.adjunction);
  return out;
}

StreetOutcome street_nucleus_comonad(const Comonad& s, bool auto_karoubi) {
  StreetOutcome out;
  auto ni = fincat::non_split_idempotent(s.carrier);
  if (ni) {
    if (!auto_karoubi) {
      out.error = NucleusError{"carrier not idempotent-complete (witness idempotent " +
                                   s.carrier->mor_name(*ni) + ")",
                               *ni};
      return out;
    }
    out.error = NucleusError{"auto-karoubi for bare comonads is not implemented; complete the carrier first", *ni};
    return out;
  }
  Resolution kl = kleisli_comonad(s);
  Monad t1 = monad_of(kl.adjunction);
  Resolution em = em_algebras(t1);
  out.comonad = comonad_of(em.adjunction);
  return out;
}

}  // namespace nuc
