#include "nucleus/json_io.hpp"

#include <algorithm>
#include <istream>
#include <stdexcept>

#include <json.hpp>

namespace nucio {

using fincat::Category;
using fincat::CategoryBuilder;
using fincat::CatPtr;
using fincat::Functor;
using fincat::NatTransformation;
using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

CatPtr category_from_parsed(const json& j, const std::string& name) {
  CategoryBuilder bld(name);
  for (const auto& o : j.at("objects")) bld.add_object(o.get<std::string>());
  if (j.contains("morphisms"))
    for (const auto& m : j.at("morphisms")) {
      std::string nm = m.at("name").get<std::string>();
      std::string dom = m.at("dom").get<std::string>();
      std::string cod = m.at("cod").get<std::string>();
      if (bld.object_index(dom) < 0 || bld.object_index(cod) < 0)
        throw std::runtime_error("category '" + name + "': morphism '" + nm + "' has an unknown endpoint");
      bld.add_morphism(nm, bld.object_index(dom), bld.object_index(cod));
    }
  // explicit identity designation, else morphisms named "id:<obj>" (synthesized on finish)
  if (j.contains("identities")) {
    for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it) {
      int obj = bld.object_index(it.key());
      int mor = bld.morphism_index(it.value().get<std::string>());
      if (obj < 0 || mor < 0)
        throw std::runtime_error("category '" + name + "': bad identity designation for '" + it.key() + "'");
      bld.set_identity(obj, mor);
    }
  } else {
    for (const auto& o : j.at("objects")) {
      std::string nm = "id:" + o.get<std::string>();
      if (bld.morphism_index(nm) >= 0) bld.set_identity(bld.object_index(o.get<std::string>()), bld.morphism_index(nm));
    }
  }
  if (j.contains("composition"))
    for (const auto& e : j.at("composition")) {
      int f = bld.morphism_index(e.at("first").get<std::string>());
      int g = bld.morphism_index(e.at("then").get<std::string>());
      int h = bld.morphism_index(e.at("equals").get<std::string>());
      if (f < 0 || g < 0 || h < 0)
        throw std::runtime_error("category '" + name + "': composition entry names an unknown morphism");
      bld.set_then(f, g, h);
    }
  return bld.finish();
}

Functor functor_from_parsed(const json& j, const Bundle& bundle, const std::string& what) {
  Functor f;
  f.source = bundle.category(j.at("source").get<std::string>());
  f.target = bundle.category(j.at("target").get<std::string>());
  f.object_map.assign(f.source->n_obj(), -1);
  f.morphism_map.assign(f.source->n_mor(), -1);
  for (auto it = j.at("object_map").begin(); it != j.at("object_map").end(); ++it) {
    int x = f.source->object_index(it.key());
    int y = f.target->object_index(it.value().get<std::string>());
    if (x < 0 || y < 0) throw std::runtime_error(what + ": object_map names an unknown object: " + it.key());
    f.object_map[x] = y;
  }
  if (j.contains("morphism_map"))
    for (auto it = j.at("morphism_map").begin(); it != j.at("morphism_map").end(); ++it) {
      int m = f.source->morphism_index(it.key());
      int n = f.target->morphism_index(it.value().get<std::string>());
      if (m < 0 || n < 0) throw std::runtime_error(what + ": morphism_map names an unknown morphism: " + it.key());
      f.morphism_map[m] = n;
    }
  // identities may be omitted from the map
  for (int x = 0; x < f.source->n_obj(); ++x) {
    if (f.object_map[x] < 0) throw std::runtime_error(what + ": object_map misses " + f.source->obj_name(x));
    int idm = f.source->identity[x];
    if (f.morphism_map[idm] < 0) f.morphism_map[idm] = f.target->identity[f.object_map[x]];
  }
  for (int m = 0; m < f.source->n_mor(); ++m)
    if (f.morphism_map[m] < 0) throw std::runtime_error(what + ": morphism_map misses " + f.source->mor_name(m));
  return f;
}

NatTransformation nat_from_parsed(const json& j, const Functor& src, const Functor& tgt, const std::string& what) {
  NatTransformation t;
  t.source = src;
  t.target = tgt;
  t.component.assign(src.source->n_obj(), -1);
  for (auto it = j.at("components").begin(); it != j.at("components").end(); ++it) {
    int x = src.source->object_index(it.key());
    int m = src.target->morphism_index(it.value().get<std::string>());
    if (x < 0 || m < 0) throw std::runtime_error(what + ": component names an unknown object or morphism: " + it.key());
    t.component[x] = m;
  }
  for (int x = 0; x < src.source->n_obj(); ++x)
    if (t.component[x] < 0) throw std::runtime_error(what + ": missing component at " + src.source->obj_name(x));
  return t;
}

}  // namespace

CatPtr Bundle::category(const std::string& name) const {
  for (const auto& [n, c] : categories)
    if (n == name) return c;
  throw std::runtime_error("bundle: unknown category '" + name + "'");
}

CatPtr category_from_json(const std::string& text) {
  return category_from_parsed(json::parse(text), "");
}

Bundle parse_bundle(std::istream& in) {
  json j;
  in >> j;
  Bundle b;
  if (!j.contains("categories")) throw std::runtime_error("bundle: missing \"categories\"");
  for (auto it = j.at("categories").begin(); it != j.at("categories").end(); ++it)
    b.categories.push_back({it.key(), category_from_parsed(it.value(), it.key())});
  std::sort(b.categories.begin(), b.categories.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  if (j.contains("adjunction")) {
    const auto& ja = j.at("adjunction");
    nuc::Adjunction a;
    a.left = functor_from_parsed(ja.at("left"), b, "adjunction.left");
    a.right = functor_from_parsed(ja.at("right"), b, "adjunction.right");
    if (a.left.source.get() != a.right.target.get() || a.left.target.get() != a.right.source.get())
      throw std::runtime_error("adjunction: left and right functors do not share carriers");
    a.unit.source = fincat::identity_functor(a.left.source);
    a.unit.target = fincat::compose_functors(a.left, a.right);
    a.unit = nat_from_parsed(ja.at("unit"), a.unit.source, a.unit.target, "adjunction.unit");
    a.counit.source = fincat::compose_functors(a.right, a.left);
    a.counit.target = fincat::identity_functor(a.left.target);
    a.counit = nat_from_parsed(ja.at("counit"), a.counit.source, a.counit.target, "adjunction.counit");
    b.adjunction = a;
  }
  if (j.contains("monad")) {
    const auto& jm = j.at("monad");
    nuc::Monad m;
    m.endo = functor_from_parsed(jm.at("endofunctor"), b, "monad.endofunctor");
    if (m.endo.source.get() != m.endo.target.get())
      throw std::runtime_error("monad: endofunctor is not an endofunctor");
    m.carrier = m.endo.source;
    m.eta = nat_from_parsed(jm.at("eta"), fincat::identity_functor(m.carrier), m.endo, "monad.eta");
    m.mu = nat_from_parsed(jm.at("mu"), fincat::compose_functors(m.endo, m.endo), m.endo, "monad.mu");
    b.monad = m;
  }
  return b;
}

std::string category_to_json(const Category& c) {
  ojson out;
  out["objects"] = c.objects;
  out["morphisms"] = ojson::array();
  for (int m = 0; m < c.n_mor(); ++m) {
    ojson jm;
    jm["name"] = c.mor_name(m);
    jm["dom"] = c.obj_name(c.dom(m));
    jm["cod"] = c.obj_name(c.cod(m));
    out["morphisms"].push_back(jm);
  }
  ojson ids = ojson::object();
  for (int x = 0; x < c.n_obj(); ++x) ids[c.obj_name(x)] = c.mor_name(c.identity[x]);
  out["identities"] = ids;
  out["composition"] = ojson::array();
  for (int f = 0; f < c.n_mor(); ++f)
    for (int g = 0; g < c.n_mor(); ++g) {
      if (c.cod(f) != c.dom(g)) continue;
      if (c.is_identity(f) || c.is_identity(g)) continue;  // inferable
      ojson e;
      e["first"] = c.mor_name(f);
      e["then"] = c.mor_name(g);
      e["equals"] = c.mor_name(c.then(f, g));
      out["composition"].push_back(e);
    }
  return out.dump(2) + "\n";
}

std::string report_to_json(const fincat::Report& rep) {
  ojson out = ojson::array();
  for (const auto& v : rep) {
    ojson e;
    e["law"] = v.law;
    e["location"] = v.location;
    e["status"] = "violated";
    out.push_back(e);
  }
  return out.dump(2) + "\n";
}

std::string category_dot(const Category& c) {
  std::string s = "digraph category {\n  rankdir=LR;\n";
  for (int x = 0; x < c.n_obj(); ++x)
    s += "  o" + std::to_string(x) + " [label=\"" + c.obj_name(x) + "\"];\n";
  for (int m = 0; m < c.n_mor(); ++m) {
    if (c.is_identity(m)) continue;
    s += "  o" + std::to_string(c.dom(m)) + " -> o" + std::to_string(c.cod(m)) +
         " [label=\"" + c.mor_name(m) + "\"];\n";
  }
  s += "}\n";
  return s;
}

std::string adjunction_to_json(const nuc::Adjunction& a, const std::string& a_name, const std::string& b_name) {
  ojson out;
  auto functor_json = [&](const Functor& f, const std::string& src, const std::string& tgt) {
    ojson jf;
    jf["source"] = src;
    jf["target"] = tgt;
    ojson om = ojson::object(), mm = ojson::object();
    for (int x = 0; x < f.source->n_obj(); ++x) om[f.source->obj_name(x)] = f.target->obj_name(f.on_obj(x));
    for (int m = 0; m < f.source->n_mor(); ++m) mm[f.source->mor_name(m)] = f.target->mor_name(f.on_mor(m));
    jf["object_map"] = om;
    jf["morphism_map"] = mm;
    return jf;
  };
  out["left"] = functor_json(a.left, a_name, b_name);
  out["right"] = functor_json(a.right, b_name, a_name);
  ojson unit = ojson::object(), counit = ojson::object();
  for (int x = 0; x < a.A()->n_obj(); ++x) unit[a.A()->obj_name(x)] = a.A()->mor_name(a.unit.component[x]);
  for (int u = 0; u < a.B()->n_obj(); ++u) counit[a.B()->obj_name(u)] = a.B()->mor_name(a.counit.component[u]);
  out["unit"]["components"] = unit;
  out["counit"]["components"] = counit;
  return out.dump(2) + "\n";
}

}  // namespace nucio
