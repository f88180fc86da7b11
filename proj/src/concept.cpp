#include "nucleus/concept.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fca {

int Bitset::count() const {
  int c = 0;
  for (auto x : w_) c += std::popcount(x);
  return c;
}

bool Bitset::subset_of(const Bitset& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

Bitset Bitset::operator&(const Bitset& o) const {
  Bitset r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

Bitset Bitset::operator|(const Bitset& o) const {
  Bitset r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

std::vector<int> Bitset::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

namespace {

bool po_valid(const std::vector<std::vector<bool>>& leq) {
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

}  // namespace

Report validate_context(const Context& c) {
  Report rep;
  if (static_cast<int>(c.rows.size()) != c.n_obj()) {
    rep.push_back({"context-rows", "row count"});
    return rep;
  }
  for (const auto& r : c.rows)
    if (r.size() != c.n_att()) {
      rep.push_back({"context-row-width", "attribute count"});
      return rep;
    }
  if (!c.order_objects.empty() && !po_valid(c.order_objects)) rep.push_back({"object-order-axioms", "order_A"});
  if (!c.order_attributes.empty() && !po_valid(c.order_attributes)) rep.push_back({"attribute-order-axioms", "order_B"});
  if (!rep.empty()) return rep;
  // monotonicity: a ≤ a' ∧ a'Φb' ∧ b' ≤ b ⟹ aΦb
  if (c.has_orders()) {
    for (int a = 0; a < c.n_obj(); ++a)
      for (int a2 = 0; a2 < c.n_obj(); ++a2) {
        if (!c.order_objects.empty() && !c.order_objects[a][a2]) continue;
        for (int b2 = 0; b2 < c.n_att(); ++b2) {
          if (!c.incident(a2, b2)) continue;
          for (int b = 0; b < c.n_att(); ++b) {
            if (!c.order_attributes.empty() && !c.order_attributes[b2][b]) continue;
            if (!c.incident(a, b))
              rep.push_back({"incidence-monotonicity", c.objects[a] + "," + c.attributes[b]});
          }
        }
      }
  }
  return rep;
}

Bitset derive_intent(const Context& c, const Bitset& objs) {
  Bitset out(c.n_att());
  out.set_all();
  for (int a = 0; a < c.n_obj(); ++a)
    if (objs.test(a)) out = out & c.rows[a];
  return out;
}

Bitset derive_extent(const Context& c, const Bitset& atts) {
  Bitset out(c.n_obj());
  for (int a = 0; a < c.n_obj(); ++a)
    if (atts.subset_of(c.rows[a])) out.set(a);
  return out;
}

Bitset closure_obj(const Context& c, const Bitset& objs) { return derive_extent(c, derive_intent(c, objs)); }

Bitset closure_att(const Context& c, const Bitset& atts) { return derive_intent(c, derive_extent(c, atts)); }

std::vector<Bitset> down_sets(const Context& c) {
  std::vector<Bitset> out;
  int n = c.n_obj();
  if (n > 24) throw std::runtime_error("down_sets: object set too large for exhaustive enumeration");
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    Bitset s(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.set(i);
    bool closed = true;
    if (!c.order_objects.empty())
      for (int i = 0; i < n && closed; ++i)
        for (int j = 0; j < n && closed; ++j)
          if (c.order_objects[i][j] && s.test(j) && !s.test(i)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

std::vector<Bitset> up_sets(const Context& c) {
  std::vector<Bitset> out;
  int n = c.n_att();
  if (n > 24) throw std::runtime_error("up_sets: attribute set too large for exhaustive enumeration");
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    Bitset s(n);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.set(i);
    bool closed = true;
    if (!c.order_attributes.empty())
      for (int i = 0; i < n && closed; ++i)
        for (int j = 0; j < n && closed; ++j)
          if (c.order_attributes[i][j] && s.test(i) && !s.test(j)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

GaloisCheckResult galois_check(const Context& c, long long cap) {
  GaloisCheckResult res;
  bool small = c.n_obj() <= 20 && c.n_att() <= 20 &&
               (1LL << c.n_obj()) <= cap && (1LL << c.n_att()) <= cap;
  std::vector<Bitset> ls, us;
  if (small) {
    ls = down_sets(c);
    us = up_sets(c);
  } else {
    res.exhaustive = false;
    std::mt19937 rng(0x5eed);
    auto random_down = [&] {
      Bitset s(c.n_obj());
      for (int i = 0; i < c.n_obj(); ++i)
        if (rng() & 1) s.set(i);
      if (!c.order_objects.empty())
        for (int i = 0; i < c.n_obj(); ++i)
          for (int j = 0; j < c.n_obj(); ++j)
            if (c.order_objects[i][j] && s.test(j)) s.set(i);
      return s;
    };
    auto random_up = [&] {
      Bitset s(c.n_att());
      for (int i = 0; i < c.n_att(); ++i)
        if (rng() & 1) s.set(i);
      if (!c.order_attributes.empty())
        for (int i = 0; i < c.n_att(); ++i)
          for (int j = 0; j < c.n_att(); ++j)
            if (c.order_attributes[i][j] && s.test(i)) s.set(j);
      return s;
    };
    for (int k = 0; k < 1024; ++k) {
      ls.push_back(random_down());
      us.push_back(random_up());
    }
  }
  std::vector<Bitset> intents(ls.size()), extents(us.size());
  for (size_t i = 0; i < ls.size(); ++i) intents[i] = derive_intent(c, ls[i]);
  for (size_t j = 0; j < us.size(); ++j) extents[j] = derive_extent(c, us[j]);
  for (size_t i = 0; i < ls.size(); ++i)
    for (size_t j = 0; j < us.size(); ++j) {
      const Bitset& L = ls[i];
      const Bitset& U = us[j];
      ++res.pairs_checked;
      bool rel = true;  // L Φ̄ U: every pair incident
      for (int a = 0; a < c.n_obj() && rel; ++a)
        if (L.test(a) && !U.subset_of(c.rows[a])) rel = false;
      bool via_intent = U.subset_of(intents[i]);
      bool via_extent = L.subset_of(extents[j]);
      if (rel != via_intent || rel != via_extent) {
        std::ostringstream loc;
        loc << "L={";
        for (int a : L.members()) loc << c.objects[a] << " ";
        loc << "} U={";
        for (int b : U.members()) loc << c.attributes[b] << " ";
        loc << "}";
        res.violations.push_back({"galois-biconditional (F̂L ⊆ U ⇔ LΦ̄U ⇔ L ⊇ ǦU)", loc.str()});
      }
    }
  return res;
}

int ConceptLattice::meet(int i, int j) const {
  Bitset e = concepts[i].extent & concepts[j].extent;
  for (int k = 0; k < size(); ++k)
    if (concepts[k].extent == e) return k;
  return -1;
}

int ConceptLattice::join(int i, int j) const {
  Bitset t = concepts[i].intent & concepts[j].intent;
  for (int k = 0; k < size(); ++k)
    if (concepts[k].intent == t) return k;
  return -1;
}

ConceptLattice concept_lattice(const Context& c, long long max_concepts) {
  ConceptLattice lat;
  int m = c.n_att();
  // NextClosure over intents in lectic order
  Bitset A = closure_att(c, Bitset(m));
  while (true) {
    lat.concepts.push_back({derive_extent(c, A), A});
    if (static_cast<long long>(lat.concepts.size()) > max_concepts)
      throw std::runtime_error("concept_lattice: concept count exceeds the configured guard");
    // find the next closed set
    bool found = false;
    Bitset cur = A;
    for (int i = m - 1; i >= 0 && !found; --i) {
      if (cur.test(i)) {
        cur.reset(i);
      } else {
        Bitset probe = cur;
        probe.set(i);
        Bitset B = closure_att(c, probe);
        bool ok = true;  // B ∩ {0..i-1} ⊆ cur
        for (int j = 0; j < i && ok; ++j)
          if (B.test(j) && !cur.test(j)) ok = false;
        if (ok) {
          A = B;
          found = true;
        }
      }
    }
    if (!found) break;
  }
  // canonical output order: extent-sorted lexicographic (by member names)
  std::sort(lat.concepts.begin(), lat.concepts.end(), [&](const FormalConcept& x, const FormalConcept& y) {
    std::vector<std::string> nx, ny;
    for (int i : x.extent.members()) nx.push_back(c.objects[i]);
    for (int i : y.extent.members()) ny.push_back(c.objects[i]);
    std::sort(nx.begin(), nx.end());
    std::sort(ny.begin(), ny.end());
    return nx < ny;
  });
  return lat;
}

Report verify_lattice(const Context& c, const ConceptLattice& l) {
  Report rep;
  for (int i = 0; i < l.size(); ++i) {
    const auto& fc = l.concepts[i];
    if (derive_extent(c, fc.intent) != fc.extent || derive_intent(c, fc.extent) != fc.intent)
      rep.push_back({"concept-fixed-pair (L = ǦU ∧ F̂L = U)", std::to_string(i)});
  }
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j < l.size(); ++j) {
      if (l.meet(i, j) < 0) rep.push_back({"meet-closed", std::to_string(i) + "," + std::to_string(j)});
      if (l.join(i, j) < 0) rep.push_back({"join-closed", std::to_string(i) + "," + std::to_string(j)});
    }
  return rep;
}

namespace {

// order isomorphism of two explicitly listed finite posets via the maps
// provided (must be mutually inverse and monotone both ways)
template <typename Le1, typename Le2>
bool order_isomorphic(int n, Le1 le1, Le2 le2, const std::vector<int>& fwd, const std::vector<int>& bwd) {
  for (int i = 0; i < n; ++i)
    if (bwd[fwd[i]] != i) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le1(i, j) != le2(fwd[i], fwd[j])) return false;
  return true;
}

}  // namespace

Report check_three_lattice_isomorphism(const Context& c) {
  Report rep;
  // closure fixpoints among down-sets, ordered by inclusion
  std::vector<Bitset> cl;
  for (const auto& L : down_sets(c))
    if (closure_obj(c, L) == L) cl.push_back(L);
  // interior fixpoints among up-sets; the interior of U is intent(extent(U)),
  // which contains U, so fixpoints are the closed intents; Up B is ordered by
  // reverse inclusion.
  std::vector<Bitset> in;
  for (const auto& U : up_sets(c))
    if (closure_att(c, U) == U) in.push_back(U);
  ConceptLattice cut = concept_lattice(c);
  if (static_cast<int>(cl.size()) != cut.size() || static_cast<int>(in.size()) != cut.size()) {
    rep.push_back({"three-lattices-cardinality", "sizes " + std::to_string(cl.size()) + "," +
                                                     std::to_string(in.size()) + "," + std::to_string(cut.size())});
    return rep;
  }
  int n = cut.size();
  // cut -> closure fixpoints via the extent, cut -> interior fixpoints via the intent
  std::vector<int> to_cl(n, -1), from_cl(n, -1), to_in(n, -1), from_in(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (cl[k] == cut.concepts[i].extent) to_cl[i] = k;
      if (in[k] == cut.concepts[i].intent) to_in[i] = k;
    }
    if (to_cl[i] < 0 || to_in[i] < 0) {
      rep.push_back({"three-lattices-bijection", "concept " + std::to_string(i)});
      return rep;
    }
    from_cl[to_cl[i]] = i;
    from_in[to_in[i]] = i;
  }
  auto le_cut = [&](int i, int j) { return cut.leq(i, j); };
  auto le_cl = [&](int i, int j) { return cl[i].subset_of(cl[j]); };
  auto le_in = [&](int i, int j) { return in[j].subset_of(in[i]); };  // reverse inclusion
  if (!order_isomorphic(n, le_cut, le_cl, to_cl, from_cl))
    rep.push_back({"order-isomorphism (Cut ≅ closure fixpoints)", "order mismatch"});
  if (!order_isomorphic(n, le_cut, le_in, to_in, from_in))
    rep.push_back({"order-isomorphism (Cut ≅ interior fixpoints)", "order mismatch"});
  return rep;
}

Report validate_poset(const Poset& p) {
  Report rep;
  if (static_cast<int>(p.leq.size()) != p.n()) {
    rep.push_back({"poset-shape", "relation size"});
    return rep;
  }
  if (!po_valid(p.leq)) rep.push_back({"partial-order-axioms", "leq"});
  return rep;
}

DedekindMacNeille dedekind_macneille(const Poset& p) {
  DedekindMacNeille out;
  Context c;
  c.objects = p.elements;
  c.attributes = p.elements;
  c.order_objects = p.leq;
  c.order_attributes = p.leq;
  c.rows.assign(p.n(), Bitset(p.n()));
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.leq[i][j]) c.rows[i].set(j);
  out.lattice = concept_lattice(c);
  out.embedding.assign(p.n(), -1);
  for (int x = 0; x < p.n(); ++x) {
    Bitset down(p.n()), up(p.n());
    for (int i = 0; i < p.n(); ++i) {
      if (p.leq[i][x]) down.set(i);
      if (p.leq[x][i]) up.set(i);
    }
    for (int k = 0; k < out.lattice.size(); ++k)
      if (out.lattice.concepts[k].extent == down && out.lattice.concepts[k].intent == up) out.embedding[x] = k;
    if (out.embedding[x] < 0) out.report.push_back({"dm-embedding-missing", p.elements[x]});
  }
  if (!out.report.empty()) return out;
  // injective + order-reflecting
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y) {
      if (x != y && out.embedding[x] == out.embedding[y]) out.report.push_back({"dm-embedding-injective", p.elements[x]});
      bool below = out.lattice.leq(out.embedding[x], out.embedding[y]);
      if (below != static_cast<bool>(p.leq[x][y]))
        out.report.push_back({"dm-order-embedding", p.elements[x] + "," + p.elements[y]});
    }
  // preservation of existing binary meets and joins
  for (int x = 0; x < p.n(); ++x)
    for (int y = 0; y < p.n(); ++y) {
      // meet: greatest common lower bound, when it exists
      int meet = -1;
      for (int z = 0; z < p.n(); ++z) {
        if (!p.leq[z][x] || !p.leq[z][y]) continue;
        bool greatest = true;
        for (int w = 0; w < p.n(); ++w)
          if (p.leq[w][x] && p.leq[w][y] && !p.leq[w][z]) greatest = false;
        if (greatest) { meet = z; break; }
      }
      if (meet >= 0 && out.lattice.meet(out.embedding[x], out.embedding[y]) != out.embedding[meet])
        out.report.push_back({"dm-meet-preservation", p.elements[x] + "∧" + p.elements[y]});
      int join = -1;
      for (int z = 0; z < p.n(); ++z) {
        if (!p.leq[x][z] || !p.leq[y][z]) continue;
        bool least = true;
        for (int w = 0; w < p.n(); ++w)
          if (p.leq[x][w] && p.leq[y][w] && !p.leq[z][w]) least = false;
        if (least) { join = z; break; }
      }
      if (join >= 0 && out.lattice.join(out.embedding[x], out.embedding[y]) != out.embedding[join])
        out.report.push_back({"dm-join-preservation", p.elements[x] + "∨" + p.elements[y]});
    }
  return out;
}

// ---- parsing --------------------------------------------------------------

namespace {
std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
}  // namespace

Context parse_cxt(std::istream& in) {
  std::string line;
  auto next_line = [&](bool allow_empty) -> std::string {
    while (std::getline(in, line)) {
      if (allow_empty) return line;
      if (!strip(line).empty()) return line;
    }
    throw std::runtime_error("cxt: unexpected end of file");
  };
  std::string header = strip(next_line(false));
  if (header != "B") throw std::runtime_error("cxt: expected header line 'B'");
  // optional name line(s) before the two counts
  std::string l = next_line(true);
  std::string s = strip(l);
  int n_obj = -1, n_att = -1;
  auto is_int = [](const std::string& t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos;
  };
  while (!is_int(s)) s = strip(next_line(true));
  n_obj = std::stoi(s);
  s = strip(next_line(false));
  if (!is_int(s)) throw std::runtime_error("cxt: expected attribute count");
  n_att = std::stoi(s);
  Context c;
  for (int i = 0; i < n_obj; ++i) c.objects.push_back(strip(next_line(false)));
  for (int i = 0; i < n_att; ++i) c.attributes.push_back(strip(next_line(false)));
  c.rows.assign(n_obj, Bitset(n_att));
  for (int i = 0; i < n_obj; ++i) {
    std::string row = strip(next_line(false));
    if (static_cast<int>(row.size()) < n_att) throw std::runtime_error("cxt: row too short for " + c.objects[i]);
    for (int j = 0; j < n_att; ++j)
      if (row[j] == 'X' || row[j] == 'x') c.rows[i].set(j);
  }
  return c;
}

Context parse_context_csv(std::istream& in) {
  std::string line;
  std::vector<std::vector<std::string>> cells;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    std::vector<std::string> row;
    std::string cur;
    for (char ch : line) {
      if (ch == ',') {
        row.push_back(strip(cur));
        cur.clear();
      } else
        cur += ch;
    }
    row.push_back(strip(cur));
    cells.push_back(row);
  }
  if (cells.empty()) throw std::runtime_error("csv: empty file");
  Context c;
  for (size_t j = 1; j < cells[0].size(); ++j) c.attributes.push_back(cells[0][j]);
  for (size_t i = 1; i < cells.size(); ++i) {
    if (cells[i].empty()) continue;
    c.objects.push_back(cells[i][0]);
    Bitset row(static_cast<int>(c.attributes.size()));
    for (size_t j = 1; j < cells[i].size() && j <= c.attributes.size(); ++j) {
      const std::string& v = cells[i][j];
      if (v == "1" || v == "X" || v == "x") row.set(static_cast<int>(j - 1));
      else if (!(v.empty() || v == "0" || v == "."))
        throw std::runtime_error("csv: cell value '" + v + "' not in {0,1,X,blank}");
    }
    c.rows.push_back(row);
  }
  return c;
}

Poset parse_poset_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  Poset p;
  for (const auto& e : j.at("elements")) p.elements.push_back(e.get<std::string>());
  int n = p.n();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  auto index = [&](const std::string& s) {
    for (int i = 0; i < n; ++i)
      if (p.elements[i] == s) return i;
    throw std::runtime_error("poset: unknown element " + s);
  };
  for (const auto& pr : j.at("le")) p.leq[index(pr.at(0).get<std::string>())][index(pr.at(1).get<std::string>())] = true;
  // reflexive-transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        if (p.leq[i][k] && p.leq[k][jj]) p.leq[i][jj] = true;
  auto rep = validate_poset(p);
  if (!rep.empty()) throw std::runtime_error("poset: " + fincat::report_to_string(rep));
  return p;
}

// ---- output ----------------------------------------------------------------

std::string concepts_to_json(const Context& c, const ConceptLattice& l) {
  nlohmann::ordered_json out;
  out["count"] = l.size();
  out["concepts"] = nlohmann::ordered_json::array();
  for (const auto& fc : l.concepts) {
    nlohmann::ordered_json jc;
    std::vector<std::string> ext, intn;
    for (int i : fc.extent.members()) ext.push_back(c.objects[i]);
    for (int i : fc.intent.members()) intn.push_back(c.attributes[i]);
    std::sort(ext.begin(), ext.end());
    std::sort(intn.begin(), intn.end());
    jc["extent"] = ext;
    jc["intent"] = intn;
    out["concepts"].push_back(jc);
  }
  return out.dump(2) + "\n";
}

std::string hasse_dot(const Context& c, const ConceptLattice& l) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < l.size(); ++i) {
    std::vector<std::string> ext;
    for (int k : l.concepts[i].extent.members()) ext.push_back(c.objects[k]);
    std::sort(ext.begin(), ext.end());
    os << "  c" << i << " [label=\"{";
    for (size_t k = 0; k < ext.size(); ++k) os << (k ? "," : "") << ext[k];
    os << "}\"];\n";
  }
  // covering relation: i < j with nothing strictly between
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j < l.size(); ++j) {
      if (i == j || !l.leq(i, j)) continue;
      bool covers = true;
      for (int k = 0; k < l.size() && covers; ++k)
        if (k != i && k != j && l.leq(i, k) && l.leq(k, j)) covers = false;
      if (covers) os << "  c" << i << " -> c" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace fca
