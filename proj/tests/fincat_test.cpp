#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nucleus/fincat.hpp"
#include "nucleus/adjunction.hpp"
#include "nucleus/json_io.hpp"
#include "support.hpp"

using namespace fincat;

namespace {

CatPtr poset2() { return testsup::poset_cat(testsup::chain(2), "2"); }

CatPtr chain3() { return testsup::poset_cat(testsup::chain(3), "3"); }

// two objects x ≅ y, one iso pair
CatPtr iso_pair() {
  CategoryBuilder bld("isopair");
  int x = bld.add_object("x"), y = bld.add_object("y");
  int f = bld.add_morphism("f", x, y);
  int g = bld.add_morphism("g", y, x);
  int idx = bld.add_morphism("id:x", x, x);
  int idy = bld.add_morphism("id:y", y, y);
  bld.set_identity(x, idx);
  bld.set_identity(y, idy);
  bld.set_then(f, g, idx);
  bld.set_then(g, f, idy);
  return bld.finish();
}

CatPtr idempotent_monoid() {
  return monoid_category({"1", "e"}, {{0, 1}, {1, 1}}, "M");
}

}  // namespace

TEST_CASE("validate_category accepts the poset 2") {
  auto c = poset2();
  CHECK(validate_category(*c).empty());
  CHECK(c->n_obj() == 2);
  CHECK(c->n_mor() == 3);
}

TEST_CASE("validate_category flags a deleted composite") {
  CategoryBuilder bld;
  int a = bld.add_object("0"), b = bld.add_object("1");
  int f = bld.add_morphism("le:0:1", a, b);
  (void)f;
  auto c = bld.finish();
  // builder infers identity composites, so delete one manually
  Category broken = *c;
  int id1 = broken.identity[1];
  int fm = broken.morphism_index("le:0:1");
  broken.then_table[static_cast<size_t>(fm) * broken.n_mor() + id1] = -1;
  auto rep = validate_category(broken);
  REQUIRE(!rep.empty());
  CHECK(rep.front().law == "missing-composite");
}

TEST_CASE("validate_category flags associativity violations") {
  // chain 0 < 1 < 2 < 3 with (h∘g)∘f redirected
  auto c = testsup::poset_cat(testsup::chain(4), "4");
  Category broken = *c;
  int f = broken.morphism_index("le:p0:p1");
  int g = broken.morphism_index("le:p1:p2");
  int h = broken.morphism_index("le:p2:p3");
  int gf = broken.then(f, g);
  // redirect (g∘f) then h to the identity-composite slot of a wrong morphism
  broken.then_table[static_cast<size_t>(gf) * broken.n_mor() + h] = broken.morphism_index("le:p1:p3");
  auto rep = validate_category(broken);
  bool assoc = false, endpoints = false;
  for (auto& v : rep) {
    if (v.law == "associativity") assoc = true;
    if (v.law == "composite-endpoints") endpoints = true;
  }
  CHECK((assoc || endpoints));
}

TEST_CASE("validate_functor worked examples") {
  auto two = poset2();
  auto one = testsup::poset_cat(testsup::chain(1), "1");
  CHECK(validate_functor(identity_functor(two)).empty());

  Functor constant;  // 2 -> 1
  constant.source = two;
  constant.target = one;
  constant.object_map = {0, 0};
  constant.morphism_map.assign(two->n_mor(), one->identity[0]);
  CHECK(validate_functor(constant).empty());

  Functor bad = identity_functor(two);  // sends id_0 to a non-identity
  bad.morphism_map[two->identity[0]] = two->morphism_index("le:p0:p1");
  CHECK(!validate_functor(bad).empty());
}

TEST_CASE("validate_nat_trans: identity and poset transformations") {
  auto two = poset2();
  NatTransformation t;
  t.source = identity_functor(two);
  t.target = identity_functor(two);
  t.component = {two->identity[0], two->identity[1]};
  CHECK(validate_nat_trans(t).empty());

  // p ≤ q pointwise between monotone maps of posets: unique and natural
  auto three = chain3();
  Functor p, q;  // p = const p0, q = id on a chain of 3
  p.source = q.source = three;
  p.target = q.target = three;
  p.object_map = {0, 0, 0};
  p.morphism_map.assign(three->n_mor(), three->identity[0]);
  q = identity_functor(three);
  NatTransformation s;
  s.source = p;
  s.target = q;
  s.component.resize(3);
  for (int x = 0; x < 3; ++x) s.component[x] = *three->hom(0, x).begin();
  CHECK(validate_nat_trans(s).empty());

  // break one square
  NatTransformation broken = t;
  broken.component[0] = two->morphism_index("le:p0:p1");
  CHECK(!validate_nat_trans(broken).empty());
}

TEST_CASE("skeleton collapses isomorphic objects") {
  auto c = iso_pair();
  auto [sk, incl] = skeleton(c);
  CHECK(sk->n_obj() == 1);
  CHECK(validate_category(*sk).empty());
  CHECK(validate_functor(incl).empty());

  auto p = chain3();
  auto [skp, ip] = skeleton(p);
  CHECK(skp->n_obj() == 3);  // posets are skeletal

  // Karoubi envelope of the idempotent monoid: 2 non-isomorphic objects
  auto [env, emb] = karoubi_envelope(idempotent_monoid());
  auto [ske, ie] = skeleton(env);
  CHECK(env->n_obj() == 2);
  CHECK(ske->n_obj() == 2);
}

TEST_CASE("equivalent: examples") {
  auto two = poset2();
  auto two_renamed = fincat::poset_category({"a", "b"}, {{true, true}, {false, true}}, "2'");
  CHECK(equivalent(two, two_renamed).verdict == EquivVerdict::Yes);

  auto pair = iso_pair();
  auto one_obj = testsup::poset_cat(testsup::chain(1), "1");
  CHECK(equivalent(pair, one_obj).verdict == EquivVerdict::Yes);

  CategoryBuilder disc;
  disc.add_object("u");
  disc.add_object("v");
  auto discrete2 = disc.finish();
  CHECK(equivalent(two, discrete2).verdict == EquivVerdict::No);
}

TEST_CASE("equivalent is an equivalence relation on a small family") {
  std::vector<CatPtr> family;
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : testsup::enumerate_posets(n)) family.push_back(testsup::poset_cat(p));
  family.push_back(iso_pair());
  family.push_back(idempotent_monoid());
  family.push_back(karoubi_envelope(idempotent_monoid()).first);
  family.push_back(monoid_category({"1", "s"}, {{0, 1}, {1, 0}}, "z2"));

  const int n = static_cast<int>(family.size());
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      eq[i][j] = equivalent(family[i], family[j]).verdict == EquivVerdict::Yes;
  for (int i = 0; i < n; ++i) CHECK(eq[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(eq[i][j] == eq[j][i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
}

TEST_CASE("equivalent reports undecided under a tiny node cap") {
  auto a = finset_category({2, 2});
  auto b = finset_category({2, 2});
  auto res = equivalent(a, b, 3);
  CHECK(res.verdict == EquivVerdict::Undecided);
}

TEST_CASE("karoubi envelope of the idempotent monoid") {
  auto M = idempotent_monoid();
  auto [env, emb] = karoubi_envelope(M);
  CHECK(validate_category(*env).empty());
  CHECK(validate_functor(emb).empty());
  REQUIRE(env->n_obj() == 2);
  int o1 = env->object_index("e:1");
  int oe = env->object_index("e:e");
  CHECK(env->hom(o1, o1).size() == 2);
  CHECK(env->hom(o1, oe).size() == 1);
  CHECK(env->hom(oe, o1).size() == 1);
  CHECK(env->hom(oe, oe).size() == 1);
  CHECK(is_idempotent_complete(env));
  CHECK(!is_idempotent_complete(M));

  // envelope is idempotent up to equivalence
  auto [env2, emb2] = karoubi_envelope(env);
  CHECK(equivalent(env2, env).verdict == EquivVerdict::Yes);

  // idempotent-complete category: envelope equivalent to it
  auto two = poset2();
  auto [envp, embp] = karoubi_envelope(two);
  CHECK(equivalent(envp, two).verdict == EquivVerdict::Yes);

  // empty category -> empty envelope
  CategoryBuilder eb;
  auto empty = eb.finish();
  auto [enve, embe] = karoubi_envelope(empty);
  CHECK(enve->n_obj() == 0);
}

TEST_CASE("split_idempotent") {
  auto M = idempotent_monoid();
  int e = M->morphism_index("e");
  auto res = split_idempotent(M, e);
  CHECK(!res.ok);
  CHECK(res.error == "no splitting");

  auto [env, emb] = karoubi_envelope(M);
  int ee = emb.on_mor(e);
  auto res2 = split_idempotent(env, ee);
  REQUIRE(res2.ok);
  CHECK(env->then(res2.retraction.e, res2.retraction.m) == ee);
  CHECK(env->then(res2.retraction.m, res2.retraction.e) == env->identity[res2.retraction.small]);

  // identity splits through itself
  auto two = poset2();
  auto res3 = split_idempotent(two, two->identity[0]);
  REQUIRE(res3.ok);
  CHECK(res3.retraction.e == two->identity[0]);

  // non-idempotent rejected
  auto z2 = monoid_category({"1", "s"}, {{0, 1}, {1, 0}}, "z2");
  auto res4 = split_idempotent(z2, z2->morphism_index("s"));
  CHECK(res4.error == "not idempotent");

  // any two splittings are canonically isomorphic
  auto splits = all_splittings(env, ee);
  for (const auto& s1 : splits)
    for (const auto& s2 : splits) {
      int u = env->then(s1.m, s2.e);  // small1 -> small2
      int v = env->then(s2.m, s1.e);
      CHECK(env->then(u, v) == env->identity[s1.small]);
      CHECK(env->then(v, u) == env->identity[s2.small]);
    }
}

TEST_CASE("opposite is involutive") {
  for (const auto& p : testsup::enumerate_posets(3)) {
    auto c = testsup::poset_cat(p);
    CHECK(structurally_equal(*opposite(opposite(c)), *c));
  }
  auto M = idempotent_monoid();
  CHECK(structurally_equal(*opposite(opposite(M)), *M));
}

TEST_CASE("grothendieck on the hom distributor of poset 2") {
  auto two = poset2();
  auto phi = hom_distributor(two);
  CHECK(validate_distributor(phi).empty());
  auto res = grothendieck(phi);
  CHECK(res.total->n_obj() == 3);  // the ≤-pairs of the 2-chain
  CHECK(validate_category(*res.total).empty());
  CHECK(validate_functor(res.projection).empty());
  CHECK(res.fibration_report.empty());
}

TEST_CASE("grothendieck degenerate cases") {
  // constant singleton over 1 x 1
  auto one = testsup::poset_cat(testsup::chain(1), "1");
  FiniteDistributor phi;
  phi.A = phi.B = one;
  phi.values = {{{"pt"}}};
  phi.action.assign(1, {0});
  auto res = grothendieck(phi);
  CHECK(res.total->n_obj() == 1);
  CHECK(res.total->n_mor() == 1);
  CHECK(res.fibration_report.empty());

  // empty-valued everywhere
  FiniteDistributor psi;
  psi.A = psi.B = one;
  psi.values = {{{}}};
  psi.action.assign(1, {});
  auto res2 = grothendieck(psi);
  CHECK(res2.total->n_obj() == 0);
}

TEST_CASE("check_split_equalizer worked examples") {
  // all six maps identities on a one-object category
  auto one = testsup::poset_cat(testsup::chain(1), "1");
  int id0 = one->identity[0];
  auto rep = check_split_equalizer(one, id0, id0, id0, id0, id0);
  REQUIRE(rep.preconditions_ok);
  CHECK(rep.rf_idempotent);
  CHECK(rep.iq_equals_rf);
  CHECK(rep.i_is_equalizer);
  CHECK(rep.biconditional_holds);

  // finite sets: A={0}, B=C={0,1}, i incl, q const-0, f const-0, j=id, r=id
  auto fs = finset_category({1, 2});
  auto name = [&](int s, int d, std::vector<int> graph) {
    std::string nm = std::to_string(s) + ">" + std::to_string(d) + ":f[";
    for (size_t i = 0; i < graph.size(); ++i) nm += (i ? "," : "") + std::to_string(graph[i]);
    return nm + "]";
  };
  int i = fs->morphism_index(name(0, 1, {0}));
  int q = fs->morphism_index(name(1, 0, {0, 0}));
  int f = fs->morphism_index(name(1, 1, {0, 0}));
  int j = fs->morphism_index(name(1, 1, {0, 1}));
  int r = fs->morphism_index(name(1, 1, {0, 1}));
  REQUIRE(i >= 0);
  REQUIRE(q >= 0);
  auto rep2 = check_split_equalizer(fs, i, q, f, j, r);
  REQUIRE(rep2.preconditions_ok);
  CHECK(rep2.rf_idempotent);
  CHECK(rep2.iq_equals_rf);
  CHECK(rep2.i_is_equalizer);
  CHECK(rep2.biconditional_holds);

  // perturbed: i from the other point, i∘q != r∘f, equalizer fails too
  int i2 = fs->morphism_index(name(0, 1, {1}));
  int q2 = fs->morphism_index(name(1, 0, {0, 0}));
  auto rep3 = check_split_equalizer(fs, i2, q2, f, j, r);
  REQUIRE(rep3.preconditions_ok);
  CHECK(rep3.rf_idempotent);
  CHECK(!rep3.iq_equals_rf);
  CHECK(!rep3.i_is_equalizer);
  CHECK(rep3.biconditional_holds);
}

TEST_CASE("split equalizer biconditional on generated instances") {
  std::mt19937 rng(20260808);
  auto fs = finset_category({1, 2, 3});
  const Category& C = *fs;
  // collect candidate tuples and check the proposition on every one
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 1000; ++trial) {
    int A = rng() % 3, B = rng() % 3, Cc = rng() % 3;
    auto homeAB = C.hom(A, B);
    auto homeBA = C.hom(B, A);
    auto homeBC = C.hom(B, Cc);
    auto homeCB = C.hom(Cc, B);
    if (homeAB.empty() || homeBA.empty() || homeBC.empty() || homeCB.empty()) continue;
    int i = homeAB[rng() % homeAB.size()];
    int q = homeBA[rng() % homeBA.size()];
    int f = homeBC[rng() % homeBC.size()];
    int j = homeBC[rng() % homeBC.size()];
    int r = homeCB[rng() % homeCB.size()];
    if (C.then(i, q) != C.identity[A]) continue;
    if (C.then(j, r) != C.identity[B]) continue;
    int rf = C.then(f, r);
    if (C.then(rf, f) != C.then(rf, j)) continue;
    auto rep = check_split_equalizer(fs, i, q, f, j, r);
    REQUIRE(rep.preconditions_ok);
    CHECK(rep.rf_idempotent);
    CHECK(rep.biconditional_holds);
    ++checked;
  }
  CHECK(checked > 50);  // sanity: the sampler found enough instances
}

TEST_CASE("category JSON round trip is the identity on structure") {
  std::vector<CatPtr> cats = {poset2(), idempotent_monoid(),
                              karoubi_envelope(idempotent_monoid()).first,
                              finset_category({1, 2})};
  // a category whose identities are not named "id:<obj>"
  cats.push_back(nuc::kleisli_monad(nuc::monad_of(testsup::two_one_adjunction())).category);
  for (const auto& c : cats) {
    auto back = nucio::category_from_json(nucio::category_to_json(*c));
    CHECK(structurally_equal(*back, *c));
  }
}

TEST_CASE("functor_is_equivalence") {
  auto pair = iso_pair();
  auto one = testsup::poset_cat(testsup::chain(1), "1");
  Functor collapse;
  collapse.source = pair;
  collapse.target = one;
  collapse.object_map = {0, 0};
  collapse.morphism_map.assign(pair->n_mor(), one->identity[0]);
  auto ev = functor_is_equivalence(collapse);
  CHECK(ev.is_equivalence);

  auto two = poset2();
  Functor cst;
  cst.source = two;
  cst.target = two;
  cst.object_map = {1, 1};
  cst.morphism_map.assign(two->n_mor(), two->identity[1]);
  auto ev2 = functor_is_equivalence(cst);
  CHECK(!ev2.is_equivalence);
  CHECK(!ev2.essentially_surjective);
}
