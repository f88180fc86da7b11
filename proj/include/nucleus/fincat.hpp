// Finite categories, functors, natural transformations, distributors,
// Karoubi envelopes and equivalence search. Everything here is exact:
// morphisms are interned by name, composition is a dense table, and all
// law checks enumerate the (finite) data they quantify over.
//
// Values are immutable after construction; every operation is a pure
// function, so categories may be shared freely via CatPtr.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace fincat {

struct MorphismData {
  std::string name;
  int dom = -1;
  int cod = -1;
};

// A single violated law. Empty report == all laws hold.
struct Violation {
  std::string law;       // short law id, e.g. "associativity"
  std::string location;  // where it failed, e.g. "(f,g,h)"
};
using Report = std::vector<Violation>;

std::string report_to_string(const Report& r);

class Category;
using CatPtr = std::shared_ptr<const Category>;

class Category {
 public:
  std::string name;  // informational only
  std::vector<std::string> objects;
  std::vector<MorphismData> morphisms;
  std::vector<int> identity;  // per object, index into morphisms
  // then_table[f * n_mor + g] = g∘f when cod(f)=dom(g), else -1.
  std::vector<int> then_table;

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_mor() const { return static_cast<int>(morphisms.size()); }

  // g after f; -1 when not composable or undefined.
  int then(int f, int g) const { return then_table[static_cast<size_t>(f) * morphisms.size() + g]; }
  // classical order: compose(g, f) = g∘f.
  int compose(int g, int f) const { return then(f, g); }

  int dom(int f) const { return morphisms[f].dom; }
  int cod(int f) const { return morphisms[f].cod; }
  const std::string& mor_name(int f) const { return morphisms[f].name; }
  const std::string& obj_name(int x) const { return objects[x]; }

  int object_index(const std::string& s) const;    // -1 if absent
  int morphism_index(const std::string& s) const;  // -1 if absent

  bool is_identity(int f) const { return identity[morphisms[f].dom] == f && morphisms[f].dom == morphisms[f].cod; }
  bool is_idempotent(int f) const { return morphisms[f].dom == morphisms[f].cod && then(f, f) == f; }

  std::vector<int> hom(int x, int y) const;  // morphism indices x -> y
  bool is_iso(int f, int* inverse = nullptr) const;
  bool iso_objects(int x, int y) const;

  // monic/epi by cancellation over all morphisms of the category.
  bool is_monic(int m) const;
  bool is_epi(int e) const;

 private:
  mutable std::unordered_map<std::string, int> obj_index_, mor_index_;
  mutable bool index_built_ = false;
  void build_index() const;
};

// Incremental construction; finish() freezes the value.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name = "") { cat_.name = std::move(name); }
  int add_object(const std::string& obj);
  int add_morphism(const std::string& name, int dom, int cod);
  int add_morphism(const std::string& name, const std::string& dom, const std::string& cod);
  // record g∘f = h ("f first, then g")
  void set_then(int f, int g, int h);
  void set_identity(int obj, int mor);
  int object_index(const std::string& s) const;
  int morphism_index(const std::string& s) const;
  // Synthesizes missing identities (named "id:<obj>") and identity
  // composites, then freezes. Does not validate the axioms; callers run
  // validate_category when the data is untrusted.
  CatPtr finish();

 private:
  Category cat_;
  std::unordered_map<std::string, int> obj_index_, mor_index_;
  std::vector<std::pair<std::pair<int, int>, int>> pending_;
  std::vector<int> identities_;
};

struct Functor {
  CatPtr source;
  CatPtr target;
  std::vector<int> object_map;    // per source object
  std::vector<int> morphism_map;  // per source morphism

  int on_obj(int x) const { return object_map[x]; }
  int on_mor(int f) const { return morphism_map[f]; }
};

Functor identity_functor(const CatPtr& c);
Functor compose_functors(const Functor& first, const Functor& then);  // then ∘ first

struct NatTransformation {
  Functor source;  // F
  Functor target;  // G, parallel to F
  std::vector<int> component;  // per source-category object, morphism in target cat F(x) -> G(x)
};

struct Retraction {
  int big = -1;    // object X
  int small = -1;  // retract R
  int e = -1;      // X -> R
  int m = -1;      // R -> X,  e∘m = id_R
};

// ---- validation ------------------------------------------------------

Report validate_category(const Category& c);
Report validate_functor(const Functor& f);
Report validate_nat_trans(const NatTransformation& t);

// ---- constructions ---------------------------------------------------

CatPtr opposite(const CatPtr& c);
bool structurally_equal(const Category& a, const Category& b);

// Product category a × b; objects named "(x,y)", morphisms "(f,g)".
CatPtr product_category(const CatPtr& a, const CatPtr& b);

// Full subcategory spanned by the given objects (indices into c).
std::pair<CatPtr, Functor> full_subcategory(const CatPtr& c, const std::vector<int>& objs);

// One object per isomorphism class (lexicographically least id wins),
// with the inclusion functor.
std::pair<CatPtr, Functor> skeleton(const CatPtr& c);

// ---- equivalence -----------------------------------------------------

enum class EquivVerdict { Yes, No, Undecided };

struct EquivResult {
  EquivVerdict verdict = EquivVerdict::No;
  // When Yes: an isomorphism skeleton(c) -> skeleton(d).
  std::optional<Functor> witness;
  long long nodes_used = 0;
};

inline constexpr long long kDefaultSearchCap = 10'000'000;

EquivResult equivalent(const CatPtr& c, const CatPtr& d, long long node_cap = kDefaultSearchCap);

// Exact test: full + faithful + essentially surjective.
struct EquivalenceEvidence {
  bool is_equivalence = false;
  bool full = true, faithful = true, essentially_surjective = true;
  std::string detail;
};
EquivalenceEvidence functor_is_equivalence(const Functor& f);

bool essentially_surjective(const Functor& f);

// ---- idempotents -----------------------------------------------------

std::pair<CatPtr, Functor> karoubi_envelope(const CatPtr& c);

struct SplitResult {
  bool ok = false;
  Retraction retraction;
  std::string error;  // "not idempotent" | "no splitting"
};
SplitResult split_idempotent(const CatPtr& c, int phi);
std::vector<Retraction> all_splittings(const CatPtr& c, int phi);

// nullopt when complete; otherwise a witness idempotent with no splitting.
std::optional<int> non_split_idempotent(const CatPtr& c);
inline bool is_idempotent_complete(const CatPtr& c) { return !non_split_idempotent(c).has_value(); }

// ---- distributors ----------------------------------------------------

struct FiniteDistributor {
  CatPtr A, B;
  // values[a][b] = names of the elements of Φ(a,b)
  std::vector<std::vector<std::vector<std::string>>> values;
  // action[f * B->n_mor() + g] maps Φ(a',b') -> Φ(a,b) for f: a -> a' in A
  // and g: b' -> b in B, as index vectors. Entries for non-matching
  // endpoints stay empty.
  std::vector<std::vector<int>> action;

  const std::vector<int>& act(int f, int g) const { return action[static_cast<size_t>(f) * B->n_mor() + g]; }
  std::vector<int>& act(int f, int g) { return action[static_cast<size_t>(f) * B->n_mor() + g]; }
};

FiniteDistributor hom_distributor(const CatPtr& c);
Report validate_distributor(const FiniteDistributor& phi);

struct GrothendieckResult {
  CatPtr total;       // ∫Φ
  CatPtr base;        // A × B^op
  Functor projection; // ∫Φ -> A × B^op
  Report fibration_report;  // empty iff projection is a discrete fibration
};
GrothendieckResult grothendieck(const FiniteDistributor& phi);

// ---- split equalizers ------------------------------------------------

struct SplitEqualizerReport {
  bool preconditions_ok = false;
  std::string precondition_error;
  bool rf_idempotent = false;
  bool iq_equals_rf = false;        // for the q supplied with the data
  bool split_exists = false;        // some retraction q̃ of i has i∘q̃ = r∘f
  bool i_is_equalizer = false;
  // (i∘q = r∘f for the given q) implies the equalizer property, and the
  // equalizer property holds iff a splitting retraction exists at all:
  // a retraction is only pinned down on the image of i, so the converse
  // direction quantifies it existentially.
  bool biconditional_holds = false;  // split_exists <=> i_is_equalizer
  bool given_q_implies = false;      // iq_equals_rf => i_is_equalizer
};
// i: A->B, q: B->A, f: B->C, j: B->C, r: C->B with q∘i = id, r∘j = id,
// f∘r∘f = j∘r∘f.
SplitEqualizerReport check_split_equalizer(const CatPtr& c, int i, int q, int f, int j, int r);

// ---- ready-made categories (used by tests and generators) ------------

// Poset category: objects els[i], a unique morphism "le:x:y" whenever
// leq(i,j); identities "id:x".
CatPtr poset_category(const std::vector<std::string>& els,
                      const std::vector<std::vector<bool>>& leq,
                      const std::string& name = "");

// The category of all functions between sets of the given sizes.
// Object "s<k>" for each size k; morphism names encode the graph.
CatPtr finset_category(const std::vector<int>& sizes);

// One-object category from a monoid multiplication table.
// table[i][j] = index of (element j) ∘ (element i); unit must be index 0.
CatPtr monoid_category(const std::vector<std::string>& elements,
                       const std::vector<std::vector<int>>& table,
                       const std::string& name = "");

}  // namespace fincat
