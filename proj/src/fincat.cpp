#include "nucleus/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fincat {

std::string report_to_string(const Report& r) {
  std::ostringstream os;
  for (const auto& v : r) os << v.law << " at " << v.location << "\n";
  return os.str();
}

void Category::build_index() const {
  if (index_built_) return;
  for (int i = 0; i < n_obj(); ++i) obj_index_[objects[i]] = i;
  for (int i = 0; i < n_mor(); ++i) mor_index_[morphisms[i].name] = i;
  index_built_ = true;
}

int Category::object_index(const std::string& s) const {
  build_index();
  auto it = obj_index_.find(s);
  return it == obj_index_.end() ? -1 : it->second;
}

int Category::morphism_index(const std::string& s) const {
  build_index();
  auto it = mor_index_.find(s);
  return it == mor_index_.end() ? -1 : it->second;
}

std::vector<int> Category::hom(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < n_mor(); ++f)
    if (morphisms[f].dom == x && morphisms[f].cod == y) out.push_back(f);
  return out;
}

bool Category::is_iso(int f, int* inverse) const {
  int x = dom(f), y = cod(f);
  for (int g : hom(y, x))
    if (then(f, g) == identity[x] && then(g, f) == identity[y]) {
      if (inverse) *inverse = g;
      return true;
    }
  return false;
}

bool Category::iso_objects(int x, int y) const {
  if (x == y) return true;
  for (int f : hom(x, y))
    if (is_iso(f)) return true;
  return false;
}

bool Category::is_monic(int m) const {
  int x = dom(m);
  for (int f = 0; f < n_mor(); ++f) {
    if (cod(f) != x) continue;
    for (int g = 0; g < n_mor(); ++g) {
      if (cod(g) != x || dom(g) != dom(f)) continue;
      if (then(f, m) == then(g, m) && f != g) return false;
    }
  }
  return true;
}

bool Category::is_epi(int e) const {
  int y = cod(e);
  for (int f = 0; f < n_mor(); ++f) {
    if (dom(f) != y) continue;
    for (int g = 0; g < n_mor(); ++g) {
      if (dom(g) != y || cod(g) != cod(f)) continue;
      if (then(e, f) == then(e, g) && f != g) return false;
    }
  }
  return true;
}

// ---- builder ---------------------------------------------------------

int CategoryBuilder::add_object(const std::string& obj) {
  auto it = obj_index_.find(obj);
  if (it != obj_index_.end()) return it->second;
  int id = static_cast<int>(cat_.objects.size());
  cat_.objects.push_back(obj);
  obj_index_[obj] = id;
  identities_.push_back(-1);
  return id;
}

int CategoryBuilder::add_morphism(const std::string& name, int dom, int cod) {
  auto it = mor_index_.find(name);
  if (it != mor_index_.end()) {
    const auto& m = cat_.morphisms[it->second];
    if (m.dom != dom || m.cod != cod) throw std::runtime_error("morphism redeclared with different endpoints: " + name);
    return it->second;
  }
  int id = static_cast<int>(cat_.morphisms.size());
  cat_.morphisms.push_back({name, dom, cod});
  mor_index_[name] = id;
  return id;
}

int CategoryBuilder::add_morphism(const std::string& name, const std::string& dom, const std::string& cod) {
  return add_morphism(name, add_object(dom), add_object(cod));
}

void CategoryBuilder::set_then(int f, int g, int h) { pending_.push_back({{f, g}, h}); }

void CategoryBuilder::set_identity(int obj, int mor) { identities_[obj] = mor; }

int CategoryBuilder::object_index(const std::string& s) const {
  auto it = obj_index_.find(s);
  return it == obj_index_.end() ? -1 : it->second;
}

int CategoryBuilder::morphism_index(const std::string& s) const {
  auto it = mor_index_.find(s);
  return it == mor_index_.end() ? -1 : it->second;
}

CatPtr CategoryBuilder::finish() {
  // synthesize missing identities
  for (int x = 0; x < static_cast<int>(cat_.objects.size()); ++x) {
    if (identities_[x] >= 0) continue;
    std::string nm = "id:" + cat_.objects[x];
    int id = add_morphism(nm, x, x);
    identities_[x] = id;
  }
  cat_.identity = identities_;
  size_t m = cat_.morphisms.size();
  cat_.then_table.assign(m * m, -1);
  for (const auto& [fg, h] : pending_) cat_.then_table[static_cast<size_t>(fg.first) * m + fg.second] = h;
  // identity composites may be omitted in input; infer them.
  for (size_t f = 0; f < m; ++f) {
    int idd = cat_.identity[cat_.morphisms[f].dom];
    int idc = cat_.identity[cat_.morphisms[f].cod];
    size_t pre = static_cast<size_t>(idd) * m + f;
    size_t post = f * m + idc;
    if (cat_.then_table[pre] < 0) cat_.then_table[pre] = static_cast<int>(f);
    if (cat_.then_table[post] < 0) cat_.then_table[post] = static_cast<int>(f);
  }
  return std::make_shared<Category>(std::move(cat_));
}

// ---- validation ------------------------------------------------------

Report validate_category(const Category& c) {
  Report rep;
  int nm = c.n_mor();
  for (int x = 0; x < c.n_obj(); ++x) {
    int e = c.identity[x];
    if (e < 0 || e >= nm || c.dom(e) != x || c.cod(e) != x)
      rep.push_back({"identity-designation", c.obj_name(x)});
  }
  for (int f = 0; f < nm; ++f) {
    for (int g = 0; g < nm; ++g) {
      int h = c.then(f, g);
      bool composable = c.cod(f) == c.dom(g);
      if (composable) {
        if (h < 0) {
          rep.push_back({"missing-composite", "(" + c.mor_name(f) + "," + c.mor_name(g) + ")"});
        } else if (c.dom(h) != c.dom(f) || c.cod(h) != c.cod(g)) {
          rep.push_back({"composite-endpoints", "(" + c.mor_name(f) + "," + c.mor_name(g) + ")"});
        }
      } else if (h >= 0) {
        rep.push_back({"spurious-composite", "(" + c.mor_name(f) + "," + c.mor_name(g) + ")"});
      }
    }
  }
  if (!rep.empty()) return rep;  // laws below assume totality
  for (int f = 0; f < nm; ++f) {
    int idd = c.identity[c.dom(f)], idc = c.identity[c.cod(f)];
    if (c.then(idd, f) != f) rep.push_back({"identity-law-left", c.mor_name(f)});
    if (c.then(f, idc) != f) rep.push_back({"identity-law-right", c.mor_name(f)});
  }
  for (int f = 0; f < nm; ++f)
    for (int g = 0; g < nm; ++g) {
      if (c.cod(f) != c.dom(g)) continue;
      int gf = c.then(f, g);
      for (int h = 0; h < nm; ++h) {
        if (c.cod(g) != c.dom(h)) continue;
        int hg = c.then(g, h);
        if (c.then(gf, h) != c.then(f, hg))
          rep.push_back({"associativity", "(" + c.mor_name(f) + "," + c.mor_name(g) + "," + c.mor_name(h) + ")"});
      }
    }
  return rep;
}

Report validate_functor(const Functor& F) {
  Report rep;
  const Category& A = *F.source;
  const Category& B = *F.target;
  if (static_cast<int>(F.object_map.size()) != A.n_obj() ||
      static_cast<int>(F.morphism_map.size()) != A.n_mor()) {
    rep.push_back({"functor-map-sizes", "object/morphism map arity"});
    return rep;
  }
  for (int f = 0; f < A.n_mor(); ++f) {
    int ff = F.on_mor(f);
    if (ff < 0 || ff >= B.n_mor()) { rep.push_back({"functor-range", A.mor_name(f)}); continue; }
    if (B.dom(ff) != F.on_obj(A.dom(f)) || B.cod(ff) != F.on_obj(A.cod(f)))
      rep.push_back({"functor-endpoints", A.mor_name(f)});
  }
  if (!rep.empty()) return rep;
  for (int x = 0; x < A.n_obj(); ++x)
    if (F.on_mor(A.identity[x]) != B.identity[F.on_obj(x)])
      rep.push_back({"functor-identity", A.obj_name(x)});
  for (int f = 0; f < A.n_mor(); ++f)
    for (int g = 0; g < A.n_mor(); ++g) {
      if (A.cod(f) != A.dom(g)) continue;
      if (F.on_mor(A.then(f, g)) != B.then(F.on_mor(f), F.on_mor(g)))
        rep.push_back({"functor-composition", "(" + A.mor_name(f) + "," + A.mor_name(g) + ")"});
    }
  return rep;
}

Report validate_nat_trans(const NatTransformation& t) {
  Report rep;
  const Functor& F = t.source;
  const Functor& G = t.target;
  const Category& A = *F.source;
  const Category& B = *F.target;
  if (F.source.get() != G.source.get() || F.target.get() != G.target.get()) {
    rep.push_back({"nat-parallel", "source/target functors not parallel"});
    return rep;
  }
  if (static_cast<int>(t.component.size()) != A.n_obj()) {
    rep.push_back({"nat-component-arity", "components per object"});
    return rep;
  }
  for (int x = 0; x < A.n_obj(); ++x) {
    int cx = t.component[x];
    if (cx < 0 || cx >= B.n_mor() || B.dom(cx) != F.on_obj(x) || B.cod(cx) != G.on_obj(x)) {
      rep.push_back({"nat-component-endpoints", A.obj_name(x)});
      return rep;
    }
  }
  for (int f = 0; f < A.n_mor(); ++f) {
    int x = A.dom(f), y = A.cod(f);
    // G(f)∘comp_x = comp_y∘F(f)
    if (B.then(t.component[x], G.on_mor(f)) != B.then(F.on_mor(f), t.component[y]))
      rep.push_back({"naturality", A.mor_name(f)});
  }
  return rep;
}

// ---- constructions ---------------------------------------------------

Functor identity_functor(const CatPtr& c) {
  Functor F;
  F.source = F.target = c;
  F.object_map.resize(c->n_obj());
  F.morphism_map.resize(c->n_mor());
  for (int i = 0; i < c->n_obj(); ++i) F.object_map[i] = i;
  for (int i = 0; i < c->n_mor(); ++i) F.morphism_map[i] = i;
  return F;
}

Functor compose_functors(const Functor& first, const Functor& then) {
  if (first.target.get() != then.source.get())
    throw std::runtime_error("compose_functors: middle categories differ");
  Functor F;
  F.source = first.source;
  F.target = then.target;
  F.object_map.resize(first.object_map.size());
  F.morphism_map.resize(first.morphism_map.size());
  for (size_t i = 0; i < first.object_map.size(); ++i) F.object_map[i] = then.on_obj(first.object_map[i]);
  for (size_t i = 0; i < first.morphism_map.size(); ++i) F.morphism_map[i] = then.on_mor(first.morphism_map[i]);
  return F;
}

CatPtr opposite(const CatPtr& c) {
  Category o;
  o.name = c->name.empty() ? "" : c->name + "^op";
  o.objects = c->objects;
  o.morphisms = c->morphisms;
  for (auto& m : o.morphisms) std::swap(m.dom, m.cod);
  o.identity = c->identity;
  size_t nm = o.morphisms.size();
  o.then_table.assign(nm * nm, -1);
  for (size_t f = 0; f < nm; ++f)
    for (size_t g = 0; g < nm; ++g)
      o.then_table[f * nm + g] = c->then_table[g * nm + f];
  return std::make_shared<Category>(std::move(o));
}

bool structurally_equal(const Category& a, const Category& b) {
  return a.objects == b.objects && a.identity == b.identity && a.then_table == b.then_table &&
         [&] {
           if (a.morphisms.size() != b.morphisms.size()) return false;
           for (size_t i = 0; i < a.morphisms.size(); ++i)
             if (a.morphisms[i].name != b.morphisms[i].name || a.morphisms[i].dom != b.morphisms[i].dom ||
                 a.morphisms[i].cod != b.morphisms[i].cod)
               return false;
           return true;
         }();
}

CatPtr product_category(const CatPtr& a, const CatPtr& b) {
  CategoryBuilder bld("(" + a->name + "x" + b->name + ")");
  std::vector<std::vector<int>> obj(a->n_obj(), std::vector<int>(b->n_obj()));
  for (int x = 0; x < a->n_obj(); ++x)
    for (int y = 0; y < b->n_obj(); ++y)
      obj[x][y] = bld.add_object("(" + a->obj_name(x) + "," + b->obj_name(y) + ")");
  std::vector<std::vector<int>> mor(a->n_mor(), std::vector<int>(b->n_mor()));
  for (int f = 0; f < a->n_mor(); ++f)
    for (int g = 0; g < b->n_mor(); ++g)
      mor[f][g] = bld.add_morphism("(" + a->mor_name(f) + "," + b->mor_name(g) + ")",
                                   obj[a->dom(f)][b->dom(g)], obj[a->cod(f)][b->cod(g)]);
  for (int x = 0; x < a->n_obj(); ++x)
    for (int y = 0; y < b->n_obj(); ++y)
      bld.set_identity(obj[x][y], mor[a->identity[x]][b->identity[y]]);
  for (int f1 = 0; f1 < a->n_mor(); ++f1)
    for (int g1 = 0; g1 < b->n_mor(); ++g1)
      for (int f2 = 0; f2 < a->n_mor(); ++f2) {
        if (a->cod(f1) != a->dom(f2)) continue;
        for (int g2 = 0; g2 < b->n_mor(); ++g2) {
          if (b->cod(g1) != b->dom(g2)) continue;
          bld.set_then(mor[f1][g1], mor[f2][g2], mor[a->then(f1, f2)][b->then(g1, g2)]);
        }
      }
  return bld.finish();
}

std::pair<CatPtr, Functor> full_subcategory(const CatPtr& c, const std::vector<int>& objs) {
  CategoryBuilder bld(c->name);
  std::vector<int> obj_of(c->n_obj(), -1);
  for (int x : objs) obj_of[x] = bld.add_object(c->obj_name(x));
  std::vector<int> mor_of(c->n_mor(), -1);
  for (int f = 0; f < c->n_mor(); ++f)
    if (obj_of[c->dom(f)] >= 0 && obj_of[c->cod(f)] >= 0)
      mor_of[f] = bld.add_morphism(c->mor_name(f), obj_of[c->dom(f)], obj_of[c->cod(f)]);
  for (int x : objs) bld.set_identity(obj_of[x], mor_of[c->identity[x]]);
  for (int f = 0; f < c->n_mor(); ++f) {
    if (mor_of[f] < 0) continue;
    for (int g = 0; g < c->n_mor(); ++g) {
      if (mor_of[g] < 0 || c->cod(f) != c->dom(g)) continue;
      bld.set_then(mor_of[f], mor_of[g], mor_of[c->then(f, g)]);
    }
  }
  CatPtr sub = bld.finish();
  Functor incl;
  incl.source = sub;
  incl.target = c;
  incl.object_map.resize(sub->n_obj());
  incl.morphism_map.resize(sub->n_mor());
  for (int x = 0; x < c->n_obj(); ++x)
    if (obj_of[x] >= 0) incl.object_map[obj_of[x]] = x;
  for (int f = 0; f < c->n_mor(); ++f)
    if (mor_of[f] >= 0) incl.morphism_map[mor_of[f]] = f;
  return {sub, incl};
}

std::pair<CatPtr, Functor> skeleton(const CatPtr& c) {
  int n = c->n_obj();
  std::vector<int> rep(n, -1);
  std::vector<int> chosen;
  // lexicographic object id breaks ties deterministically
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return c->obj_name(a) < c->obj_name(b); });
  for (int x : order) {
    if (rep[x] >= 0) continue;
    chosen.push_back(x);
    for (int y : order)
      if (rep[y] < 0 && c->iso_objects(x, y)) rep[y] = x;
  }
  return full_subcategory(c, chosen);
}

// ---- equivalence search ----------------------------------------------

namespace {

// per-object invariant used to prune the object bijection
std::vector<std::vector<int>> object_profiles(const Category& c) {
  std::vector<std::vector<int>> prof(c.n_obj());
  for (int x = 0; x < c.n_obj(); ++x) {
    std::vector<int> row;
    row.push_back(static_cast<int>(c.hom(x, x).size()));
    std::vector<int> outs, ins;
    for (int y = 0; y < c.n_obj(); ++y) {
      outs.push_back(static_cast<int>(c.hom(x, y).size()));
      ins.push_back(static_cast<int>(c.hom(y, x).size()));
    }
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    row.insert(row.end(), outs.begin(), outs.end());
    row.insert(row.end(), ins.begin(), ins.end());
    prof[x] = row;
  }
  return prof;
}

struct IsoSearch {
  const Category& a;
  const Category& b;
  long long cap;
  long long nodes = 0;
  bool exhausted = false;
  std::vector<int> obj_map;  // a-obj -> b-obj
  std::vector<int> mor_map;  // a-mor -> b-mor
  std::vector<char> b_obj_used, b_mor_used;

  IsoSearch(const Category& a_, const Category& b_, long long cap_) : a(a_), b(b_), cap(cap_) {}

  bool tick() {
    if (++nodes > cap) { exhausted = true; return false; }
    return true;
  }

  bool mor_compatible(int f, int g) {
    // endpoints already ensured by caller; check composition with all
    // previously assigned morphisms.
    for (int f2 = 0; f2 < a.n_mor(); ++f2) {
      if (mor_map[f2] < 0) continue;
      if (a.cod(f) == a.dom(f2)) {
        int h = a.then(f, f2);
        if (mor_map[h] >= 0 && b.then(g, mor_map[f2]) != mor_map[h]) return false;
      }
      if (a.cod(f2) == a.dom(f)) {
        int h = a.then(f2, f);
        if (mor_map[h] >= 0 && b.then(mor_map[f2], g) != mor_map[h]) return false;
      }
    }
    if (a.dom(f) == a.cod(f)) {
      int h = a.then(f, f);
      if (mor_map[h] >= 0 && b.then(g, g) != mor_map[h]) return false;
    }
    return true;
  }

  bool assign_morphisms(int f) {
    while (f < a.n_mor() && mor_map[f] >= 0) ++f;
    if (f == a.n_mor()) return verify();
    if (!tick()) return false;
    int bx = obj_map[a.dom(f)], by = obj_map[a.cod(f)];
    for (int g : b.hom(bx, by)) {
      if (b_mor_used[g]) continue;
      if (a.is_identity(f) != b.is_identity(g)) continue;
      if (!mor_compatible(f, g)) continue;
      mor_map[f] = g;
      b_mor_used[g] = 1;
      if (assign_morphisms(f + 1)) return true;
      if (exhausted) return false;
      mor_map[f] = -1;
      b_mor_used[g] = 0;
    }
    return false;
  }

  bool verify() {
    for (int f = 0; f < a.n_mor(); ++f)
      for (int g = 0; g < a.n_mor(); ++g) {
        if (a.cod(f) != a.dom(g)) continue;
        if (b.then(mor_map[f], mor_map[g]) != mor_map[a.then(f, g)]) return false;
      }
    for (int x = 0; x < a.n_obj(); ++x)
      if (mor_map[a.identity[x]] != b.identity[obj_map[x]]) return false;
    return true;
  }

  bool assign_objects(int idx, const std::vector<std::vector<int>>& pa, const std::vector<std::vector<int>>& pb) {
    if (idx == a.n_obj()) {
      std::fill(mor_map.begin(), mor_map.end(), -1);
      std::fill(b_mor_used.begin(), b_mor_used.end(), 0);
      return assign_morphisms(0);
    }
    if (!tick()) return false;
    for (int y = 0; y < b.n_obj(); ++y) {
      if (b_obj_used[y] || pa[idx] != pb[y]) continue;
      bool ok = true;  // hom-set sizes against already assigned objects
      for (int x2 = 0; x2 < idx && ok; ++x2) {
        if (a.hom(idx, x2).size() != b.hom(y, obj_map[x2]).size()) ok = false;
        if (a.hom(x2, idx).size() != b.hom(obj_map[x2], y).size()) ok = false;
      }
      if (!ok) continue;
      obj_map[idx] = y;
      b_obj_used[y] = 1;
      if (assign_objects(idx + 1, pa, pb)) return true;
      if (exhausted) return false;
      obj_map[idx] = -1;
      b_obj_used[y] = 0;
    }
    return false;
  }

  bool run() {
    if (a.n_obj() != b.n_obj() || a.n_mor() != b.n_mor()) return false;
    auto pa = object_profiles(a), pb = object_profiles(b);
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    obj_map.assign(a.n_obj(), -1);
    mor_map.assign(a.n_mor(), -1);
    b_obj_used.assign(b.n_obj(), 0);
    b_mor_used.assign(b.n_mor(), 0);
    return assign_objects(0, pa, pb);
  }
};

}  // namespace

EquivResult equivalent(const CatPtr& c, const CatPtr& d, long long node_cap) {
  EquivResult res;
  auto [sc, ic] = skeleton(c);
  auto [sd, id_] = skeleton(d);
  IsoSearch search(*sc, *sd, node_cap);
  bool found = search.run();
  res.nodes_used = search.nodes;
  if (found) {
    res.verdict = EquivVerdict::Yes;
    Functor w;
    w.source = sc;
    w.target = sd;
    w.object_map = search.obj_map;
    w.morphism_map = search.mor_map;
    res.witness = w;
  } else if (search.exhausted) {
    res.verdict = EquivVerdict::Undecided;
  } else {
    res.verdict = EquivVerdict::No;
  }
  return res;
}

bool essentially_surjective(const Functor& F) {
  const Category& B = *F.target;
  for (int d = 0; d < B.n_obj(); ++d) {
    bool hit = false;
    for (int x = 0; x < F.source->n_obj() && !hit; ++x)
      if (B.iso_objects(F.on_obj(x), d)) hit = true;
    if (!hit) return false;
  }
  return true;
}

EquivalenceEvidence functor_is_equivalence(const Functor& F) {
  EquivalenceEvidence ev;
  const Category& A = *F.source;
  const Category& B = *F.target;
  for (int x = 0; x < A.n_obj() && (ev.full && ev.faithful); ++x)
    for (int y = 0; y < A.n_obj() && (ev.full && ev.faithful); ++y) {
      auto ha = A.hom(x, y);
      auto hb = B.hom(F.on_obj(x), F.on_obj(y));
      std::set<int> image;
      for (int f : ha) image.insert(F.on_mor(f));
      if (image.size() != ha.size()) {
        ev.faithful = false;
        ev.detail = "not faithful at hom(" + A.obj_name(x) + "," + A.obj_name(y) + ")";
      }
      if (image.size() != hb.size()) {
        ev.full = false;
        if (ev.detail.empty()) ev.detail = "not full at hom(" + A.obj_name(x) + "," + A.obj_name(y) + ")";
      }
    }
  ev.essentially_surjective = essentially_surjective(F);
  if (!ev.essentially_surjective && ev.detail.empty()) ev.detail = "not essentially surjective";
  ev.is_equivalence = ev.full && ev.faithful && ev.essentially_surjective;
  return ev;
}

// ---- idempotents -----------------------------------------------------

std::pair<CatPtr, Functor> karoubi_envelope(const CatPtr& c) {
  CategoryBuilder bld(c->name.empty() ? "karoubi" : "karoubi(" + c->name + ")");
  std::vector<int> idem;  // morphism indices of idempotents
  std::vector<int> obj_of_idem(c->n_mor(), -1);
  for (int f = 0; f < c->n_mor(); ++f)
    if (c->is_idempotent(f)) {
      obj_of_idem[f] = bld.add_object("e:" + c->mor_name(f));
      idem.push_back(f);
    }
  // morphism (phi -> psi): every f with psi∘f∘phi = f
  struct EnvMor { int phi, psi, f; };
  std::vector<EnvMor> mors;
  std::vector<std::vector<std::vector<int>>> env_id(c->n_mor());
  std::map<std::tuple<int, int, int>, int> mor_id;
  for (int phi : idem)
    for (int psi : idem) {
      for (int f : c->hom(c->cod(phi), c->dom(psi))) {
        if (c->then(c->then(phi, f), psi) != f) continue;
        std::string nm = "[" + c->mor_name(phi) + ">" + c->mor_name(f) + ">" + c->mor_name(psi) + "]";
        int id = bld.add_morphism(nm, obj_of_idem[phi], obj_of_idem[psi]);
        mor_id[{phi, psi, f}] = id;
        mors.push_back({phi, psi, f});
      }
    }
  for (int phi : idem) bld.set_identity(obj_of_idem[phi], mor_id.at({phi, phi, phi}));
  for (size_t i = 0; i < mors.size(); ++i)
    for (size_t j = 0; j < mors.size(); ++j) {
      if (mors[i].psi != mors[j].phi) continue;
      int comp = c->then(mors[i].f, mors[j].f);
      bld.set_then(mor_id.at({mors[i].phi, mors[i].psi, mors[i].f}),
                   mor_id.at({mors[j].phi, mors[j].psi, mors[j].f}),
                   mor_id.at({mors[i].phi, mors[j].psi, comp}));
    }
  CatPtr env = bld.finish();
  Functor emb;
  emb.source = c;
  emb.target = env;
  emb.object_map.resize(c->n_obj());
  emb.morphism_map.resize(c->n_mor());
  for (int x = 0; x < c->n_obj(); ++x) emb.object_map[x] = env->object_index("e:" + c->mor_name(c->identity[x]));
  for (int f = 0; f < c->n_mor(); ++f) {
    int phi = c->identity[c->dom(f)], psi = c->identity[c->cod(f)];
    emb.morphism_map[f] = env->morphism_index("[" + c->mor_name(phi) + ">" + c->mor_name(f) + ">" + c->mor_name(psi) + "]");
  }
  return {env, emb};
}

std::vector<Retraction> all_splittings(const CatPtr& c, int phi) {
  std::vector<Retraction> out;
  if (!c->is_idempotent(phi)) return out;
  int x = c->dom(phi);
  for (int r = 0; r < c->n_obj(); ++r)
    for (int e : c->hom(x, r))
      for (int m : c->hom(r, x))
        if (c->then(e, m) == phi && c->then(m, e) == c->identity[r])
          out.push_back({x, r, e, m});
  return out;
}

SplitResult split_idempotent(const CatPtr& c, int phi) {
  SplitResult res;
  if (c->dom(phi) != c->cod(phi) || c->then(phi, phi) != phi) {
    res.error = "not idempotent";
    return res;
  }
  auto all = all_splittings(c, phi);
  if (all.empty()) {
    res.error = "no splitting";
    return res;
  }
  res.ok = true;
  res.retraction = all.front();
  return res;
}

std::optional<int> non_split_idempotent(const CatPtr& c) {
  for (int f = 0; f < c->n_mor(); ++f) {
    if (!c->is_idempotent(f)) continue;
    if (all_splittings(c, f).empty()) return f;
  }
  return std::nullopt;
}

// ---- distributors ----------------------------------------------------

FiniteDistributor hom_distributor(const CatPtr& c) {
  FiniteDistributor phi;
  phi.A = c;
  phi.B = c;
  int no = c->n_obj(), nm = c->n_mor();
  phi.values.assign(no, std::vector<std::vector<std::string>>(no));
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b)
      for (int f : c->hom(a, b)) phi.values[a][b].push_back(c->mor_name(f));
  phi.action.assign(static_cast<size_t>(nm) * nm, {});
  for (int f = 0; f < nm; ++f)     // f: a -> a'
    for (int g = 0; g < nm; ++g) { // g: b' -> b
      int a = c->dom(f), a2 = c->cod(f), b2 = c->dom(g), b = c->cod(g);
      auto src = c->hom(a2, b2);
      std::vector<int> map(src.size());
      for (size_t i = 0; i < src.size(); ++i) {
        int image = c->then(f, c->then(src[i], g));  // g∘x∘f : a -> b
        auto tgt = c->hom(a, b);
        map[i] = static_cast<int>(std::find(tgt.begin(), tgt.end(), image) - tgt.begin());
      }
      phi.act(f, g) = map;
    }
  return phi;
}

Report validate_distributor(const FiniteDistributor& phi) {
  Report rep;
  const Category& A = *phi.A;
  const Category& B = *phi.B;
  // identity actions
  for (int a = 0; a < A.n_obj(); ++a)
    for (int b = 0; b < B.n_obj(); ++b) {
      const auto& m = phi.act(A.identity[a], B.identity[b]);
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] != static_cast<int>(i)) {
          rep.push_back({"distributor-identity-action", "(" + A.obj_name(a) + "," + B.obj_name(b) + ")"});
          break;
        }
    }
  // composite actions: Φ(f2∘f1, g1∘g2) = Φ(f1,g1)∘Φ(f2,g2)
  for (int f1 = 0; f1 < A.n_mor(); ++f1)
    for (int f2 = 0; f2 < A.n_mor(); ++f2) {
      if (A.cod(f1) != A.dom(f2)) continue;
      for (int g1 = 0; g1 < B.n_mor(); ++g1)
        for (int g2 = 0; g2 < B.n_mor(); ++g2) {
          if (B.cod(g2) != B.dom(g1)) continue;
          const auto& outer = phi.act(A.then(f1, f2), B.then(g2, g1));
          const auto& first = phi.act(f2, g2);
          const auto& second = phi.act(f1, g1);
          if (outer.size() != first.size()) {
            rep.push_back({"distributor-action-arity", A.mor_name(f1) + "|" + B.mor_name(g1)});
            continue;
          }
          for (size_t i = 0; i < outer.size(); ++i)
            if (outer[i] != second[first[i]]) {
              rep.push_back({"distributor-action-composition",
                             "(" + A.mor_name(f1) + "," + A.mor_name(f2) + ";" + B.mor_name(g1) + "," + B.mor_name(g2) + ")"});
              break;
            }
        }
    }
  return rep;
}

GrothendieckResult grothendieck(const FiniteDistributor& phi) {
  GrothendieckResult res;
  Report valid = validate_distributor(phi);
  if (!valid.empty()) throw std::runtime_error("grothendieck: invalid distributor:\n" + report_to_string(valid));
  const Category& A = *phi.A;
  const Category& B = *phi.B;
  CatPtr bop = opposite(phi.B);
  res.base = product_category(phi.A, bop);

  CategoryBuilder bld2("groth");
  std::vector<std::vector<std::vector<int>>> obj_of(A.n_obj(),
      std::vector<std::vector<int>>(B.n_obj()));
  for (int a = 0; a < A.n_obj(); ++a)
    for (int b = 0; b < B.n_obj(); ++b) {
      obj_of[a][b].resize(phi.values[a][b].size());
      for (size_t i = 0; i < phi.values[a][b].size(); ++i)
        obj_of[a][b][i] = bld2.add_object(phi.values[a][b][i] + "@(" + A.obj_name(a) + "," + B.obj_name(b) + ")");
    }
  struct TotMor { int f, g, src_obj, dst_obj; };
  std::vector<TotMor> tmors;
  std::map<std::tuple<int, int, int>, int> mor_of;  // (f, g, dst_obj) -> builder id
  for (int f = 0; f < A.n_mor(); ++f)
    for (int g = 0; g < B.n_mor(); ++g) {
      int a = A.dom(f), a2 = A.cod(f), b2 = B.dom(g), b = B.cod(g);
      const auto& act = phi.act(f, g);
      for (size_t i2 = 0; i2 < phi.values[a2][b2].size(); ++i2) {
        int src = obj_of[a][b][act[i2]];
        int dst = obj_of[a2][b2][i2];
        std::string nm = "(" + A.mor_name(f) + "," + B.mor_name(g) + ")->" + phi.values[a2][b2][i2] +
                         "@(" + A.obj_name(a2) + "," + B.obj_name(b2) + ")";
        int id = bld2.add_morphism(nm, src, dst);
        mor_of[{f, g, dst}] = id;
        tmors.push_back({f, g, src, dst});
      }
    }
  for (int a = 0; a < A.n_obj(); ++a)
    for (int b = 0; b < B.n_obj(); ++b)
      for (size_t i = 0; i < phi.values[a][b].size(); ++i)
        bld2.set_identity(obj_of[a][b][i], mor_of.at({A.identity[a], B.identity[b], obj_of[a][b][i]}));
  for (const auto& m1 : tmors)
    for (const auto& m2 : tmors) {
      if (m1.dst_obj != m2.src_obj) continue;
      if (A.cod(m1.f) != A.dom(m2.f) || B.cod(m2.g) != B.dom(m1.g)) continue;
      int fc = A.then(m1.f, m2.f);
      int gc = B.then(m2.g, m1.g);
      bld2.set_then(mor_of.at({m1.f, m1.g, m1.dst_obj}), mor_of.at({m2.f, m2.g, m2.dst_obj}),
                    mor_of.at({fc, gc, m2.dst_obj}));
    }
  res.total = bld2.finish();

  // projection to A × B^op
  Functor proj;
  proj.source = res.total;
  proj.target = res.base;
  proj.object_map.resize(res.total->n_obj());
  proj.morphism_map.resize(res.total->n_mor());
  for (int a = 0; a < A.n_obj(); ++a)
    for (int b = 0; b < B.n_obj(); ++b)
      for (size_t i = 0; i < phi.values[a][b].size(); ++i) {
        int t = res.total->object_index(phi.values[a][b][i] + "@(" + A.obj_name(a) + "," + B.obj_name(b) + ")");
        proj.object_map[t] = res.base->object_index("(" + A.obj_name(a) + "," + B.obj_name(b) + ")");
      }
  for (const auto& m : tmors) {
    int t = mor_of.at({m.f, m.g, m.dst_obj});
    proj.morphism_map[t] = res.base->morphism_index("(" + A.mor_name(m.f) + "," + B.mor_name(m.g) + ")");
  }
  res.projection = proj;

  // discrete fibration: unique lifting of every base morphism into the image
  const Category& T = *res.total;
  const Category& Ba = *res.base;
  for (int x = 0; x < T.n_obj(); ++x) {
    int px = proj.on_obj(x);
    for (int t = 0; t < Ba.n_mor(); ++t) {
      if (Ba.cod(t) != px) continue;
      int count = 0;
      for (int th = 0; th < T.n_mor(); ++th)
        if (T.cod(th) == x && proj.on_mor(th) == t) ++count;
      if (count != 1)
        res.fibration_report.push_back({"discrete-fibration-unique-lifting",
                                        T.obj_name(x) + " over " + Ba.mor_name(t) + " (count " + std::to_string(count) + ")"});
    }
  }
  return res;
}

// ---- split equalizers -------------------------------------------------

SplitEqualizerReport check_split_equalizer(const CatPtr& c, int i, int q, int f, int j, int r) {
  SplitEqualizerReport rep;
  const Category& C = *c;
  int A = C.dom(i), B = C.cod(i), Cc = C.cod(f);
  // shape requirements
  if (C.dom(q) != B || C.cod(q) != A || C.dom(f) != B || C.dom(j) != B || C.cod(j) != Cc ||
      C.dom(r) != Cc || C.cod(r) != B) {
    rep.precondition_error = "morphism endpoints do not form the split equalizer shape";
    return rep;
  }
  if (C.then(i, q) != C.identity[A]) { rep.precondition_error = "q∘i != id"; return rep; }
  if (C.then(j, r) != C.identity[B]) { rep.precondition_error = "r∘j != id"; return rep; }
  int rf = C.then(f, r);  // r∘f : B -> B
  if (C.then(rf, f) != C.then(rf, j)) { rep.precondition_error = "f∘r∘f != j∘r∘f"; return rep; }
  rep.preconditions_ok = true;
  rep.rf_idempotent = (C.then(rf, rf) == rf);
  rep.iq_equals_rf = (C.then(q, i) == rf);
  for (int q2 : C.hom(B, A))
    if (C.then(i, q2) == C.identity[A] && C.then(q2, i) == rf) { rep.split_exists = true; break; }
  // universal property, by enumeration
  bool equalizes = (C.then(i, f) == C.then(i, j));
  bool universal = equalizes;
  if (equalizes) {
    for (int d = 0; d < C.n_obj() && universal; ++d)
      for (int h : C.hom(d, B)) {
        if (C.then(h, f) != C.then(h, j)) continue;
        int count = 0;
        for (int u : C.hom(d, A))
          if (C.then(u, i) == h) ++count;
        if (count != 1) { universal = false; break; }
      }
  }
  rep.i_is_equalizer = universal;
  rep.biconditional_holds = (rep.split_exists == rep.i_is_equalizer);
  rep.given_q_implies = !rep.iq_equals_rf || rep.i_is_equalizer;
  return rep;
}

// ---- ready-made categories -------------------------------------------

CatPtr poset_category(const std::vector<std::string>& els,
                      const std::vector<std::vector<bool>>& leq,
                      const std::string& name) {
  CategoryBuilder bld(name);
  int n = static_cast<int>(els.size());
  for (const auto& e : els) bld.add_object(e);
  std::vector<std::vector<int>> mor(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq[x][y]) {
        std::string nm = (x == y) ? "id:" + els[x] : "le:" + els[x] + ":" + els[y];
        mor[x][y] = bld.add_morphism(nm, x, y);
      }
  for (int x = 0; x < n; ++x) bld.set_identity(x, mor[x][x]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (leq[x][y] && leq[y][z]) bld.set_then(mor[x][y], mor[y][z], mor[x][z]);
  return bld.finish();
}

namespace {
std::string fun_name(const std::vector<int>& graph) {
  std::string s = "f";
  for (size_t i = 0; i < graph.size(); ++i) s += (i ? "," : "[") + std::to_string(graph[i]);
  s += graph.empty() ? "[]" : "]";
  return s;
}
}  // namespace

CatPtr finset_category(const std::vector<int>& sizes) {
  CategoryBuilder bld("finset");
  int n = static_cast<int>(sizes.size());
  for (int i = 0; i < n; ++i) bld.add_object("s" + std::to_string(sizes[i]) + "#" + std::to_string(i));
  // enumerate all functions between each pair of sets
  struct Fun { int src, dst; std::vector<int> graph; int id; };
  std::vector<Fun> funs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      long long total = 1;
      for (int k = 0; k < sizes[a]; ++k) total *= sizes[b];
      if (sizes[a] == 0) total = 1;  // the empty function
      for (long long code = 0; code < total; ++code) {
        std::vector<int> graph(sizes[a]);
        long long c2 = code;
        for (int k = 0; k < sizes[a]; ++k) { graph[k] = static_cast<int>(c2 % sizes[b]); c2 /= sizes[b]; }
        if (sizes[a] > 0 && sizes[b] == 0) continue;  // no functions into empty set from nonempty
        std::string nm = std::to_string(a) + ">" + std::to_string(b) + ":" + fun_name(graph);
        int id = bld.add_morphism(nm, a, b);
        funs.push_back({a, b, graph, id});
      }
    }
  for (int a = 0; a < n; ++a) {
    std::vector<int> idg(sizes[a]);
    for (int k = 0; k < sizes[a]; ++k) idg[k] = k;
    bld.set_identity(a, bld.morphism_index(std::to_string(a) + ">" + std::to_string(a) + ":" + fun_name(idg)));
  }
  for (const auto& f1 : funs)
    for (const auto& f2 : funs) {
      if (f1.dst != f2.src) continue;
      std::vector<int> comp(f1.graph.size());
      for (size_t k = 0; k < f1.graph.size(); ++k) comp[k] = f2.graph[f1.graph[k]];
      int h = bld.morphism_index(std::to_string(f1.src) + ">" + std::to_string(f2.dst) + ":" + fun_name(comp));
      bld.set_then(f1.id, f2.id, h);
    }
  return bld.finish();
}

CatPtr monoid_category(const std::vector<std::string>& elements,
                       const std::vector<std::vector<int>>& table,
                       const std::string& name) {
  CategoryBuilder bld(name);
  int star = bld.add_object("*");
  std::vector<int> mor(elements.size());
  for (size_t i = 0; i < elements.size(); ++i) mor[i] = bld.add_morphism(elements[i], star, star);
  bld.set_identity(star, mor[0]);
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = 0; j < elements.size(); ++j)
      bld.set_then(mor[i], mor[j], mor[table[i][j]]);
  return bld.finish();
}

}  // namespace fincat
