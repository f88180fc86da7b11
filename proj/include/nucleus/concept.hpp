// Formal concept analysis on finite contexts: derivation operators,
// Galois-connection checks, concept lattices via NextClosure, and the
// Dedekind-MacNeille completion of a finite poset.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nucleus/fincat.hpp"  // Report

namespace fca {

using fincat::Report;

// dynamic bitset sized at construction
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}
  int size() const { return n_; }
  bool test(int i) const { return w_[i >> 6] >> (i & 63) & 1; }
  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void set_all() {
    for (auto& x : w_) x = ~uint64_t{0};
    trim();
  }
  int count() const;
  bool subset_of(const Bitset& o) const;
  Bitset operator&(const Bitset& o) const;
  Bitset operator|(const Bitset& o) const;
  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  bool operator<(const Bitset& o) const { return w_ < o.w_; }  // arbitrary total order
  std::vector<int> members() const;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
  void trim() {
    if (n_ % 64) w_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  }
};

struct Context {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<Bitset> rows;  // per object, the set of its attributes
  // optional partial orders; empty = discrete
  std::vector<std::vector<bool>> order_objects;
  std::vector<std::vector<bool>> order_attributes;

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_att() const { return static_cast<int>(attributes.size()); }
  bool incident(int a, int b) const { return rows[a].test(b); }
  bool has_orders() const { return !order_objects.empty() || !order_attributes.empty(); }
};

Report validate_context(const Context& c);

// derivation operators (any subsets allowed; empty set maps to everything)
Bitset derive_intent(const Context& c, const Bitset& objs);
Bitset derive_extent(const Context& c, const Bitset& atts);

// closure on object sets: extent∘intent, lifted to the down-set lattice
Bitset closure_obj(const Context& c, const Bitset& objs);
// interior... on attribute sets the composite intent∘extent is again a
// closure; the interior operator lives on up-sets of B via the order dual.
Bitset closure_att(const Context& c, const Bitset& atts);

// all down-closed subsets of the object order / up-closed subsets of the
// attribute order (every subset when the order is discrete)
std::vector<Bitset> down_sets(const Context& c);
std::vector<Bitset> up_sets(const Context& c);

struct GaloisCheckResult {
  Report violations;
  bool exhaustive = true;
  long long pairs_checked = 0;
};
// The adjunction biconditional  U ⊆ F̂L  <=>  L Φ̄ U  <=>  L ⊆ ǦU  over
// down-sets L and up-sets U. Exhaustive up to `cap` enumerated sets per
// side, sampled beyond (recorded in `exhaustive`).
GaloisCheckResult galois_check(const Context& c, long long cap = 1 << 20);

struct FormalConcept {
  Bitset extent;
  Bitset intent;
};

struct ConceptLattice {
  std::vector<FormalConcept> concepts;  // sorted by extent, lexicographically
  bool leq(int i, int j) const { return concepts[i].extent.subset_of(concepts[j].extent); }
  int size() const { return static_cast<int>(concepts.size()); }
  int meet(int i, int j) const;  // index of the meet concept
  int join(int i, int j) const;
};

// NextClosure over intents; throws on exceeding max_concepts.
ConceptLattice concept_lattice(const Context& c, long long max_concepts = 1'000'000);

// lattice laws: meets/joins land on concepts, top/bottom exist
Report verify_lattice(const Context& c, const ConceptLattice& l);

// pairwise order-isomorphism of closure fixpoints, interior fixpoints and
// the cut lattice (exhaustive; meant for small contexts)
Report check_three_lattice_isomorphism(const Context& c);

struct Poset {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;
  int n() const { return static_cast<int>(elements.size()); }
};

Report validate_poset(const Poset& p);

struct DedekindMacNeille {
  ConceptLattice lattice;
  std::vector<int> embedding;  // element index -> concept index
  Report report;               // embedding/preservation violations
};
DedekindMacNeille dedekind_macneille(const Poset& p);

// ---- input formats ----

// Burmeister .cxt
Context parse_cxt(std::istream& in);
// CSV: header row of attribute names, first column object names,
// cells in {1, X, x} incident; {0, ., blank} not.
Context parse_context_csv(std::istream& in);

// JSON poset {"elements": [...], "le": [[a,b],...]}; reflexive-transitive
// closure is taken, antisymmetry is validated.
Poset parse_poset_json(std::istream& in);

// ---- output ----

std::string concepts_to_json(const Context& c, const ConceptLattice& l);
std::string hasse_dot(const Context& c, const ConceptLattice& l);

}  // namespace fca
