// Adjunctions, monads, comonads, their resolutions, and the nucleus
// constructions (big, simple, little) on finite categories, with all
// laws checked instance-wise.
//
// Conventions. An Adjunction stores the left adjoint F : A -> B, the
// right adjoint G : B -> A, the unit id_A => G∘F and the counit
// F∘G => id_B. Derived categories name their objects "(x,α)" after the
// carrier and structure morphism, and their morphisms
// "<underlying>@<src>><dst>", so every construction is deterministic
// and diff-friendly.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nucleus/fincat.hpp"

namespace nuc {

using fincat::CatPtr;
using fincat::Functor;
using fincat::NatTransformation;
using fincat::Report;

struct Adjunction {
  Functor left;   // F : A -> B
  Functor right;  // G : B -> A
  NatTransformation unit;    // id_A => G∘F
  NatTransformation counit;  // F∘G => id_B

  const CatPtr& A() const { return left.source; }
  const CatPtr& B() const { return left.target; }
};

struct Monad {
  CatPtr carrier;
  Functor endo;             // T : A -> A
  NatTransformation eta;    // id => T
  NatTransformation mu;     // T∘T => T
};

struct Comonad {
  CatPtr carrier;
  Functor endo;             // S : B -> B
  NatTransformation counit; // S => id
  NatTransformation comult; // S => S∘S
};

struct MonadMorphism {
  Monad source;  // T on A
  Monad target;  // S on C
  Functor H;     // A -> C
  NatTransformation chi;  // H∘T => S∘H, componentwise iso
};

struct ComonadMorphism {
  Comonad source;  // S on B
  Comonad target;  // T on D
  Functor K;       // B -> D
  NatTransformation kappa;  // K∘S => T∘K, componentwise iso
};

struct AdjunctionMorphism {
  Adjunction source;  // F between A, B
  Adjunction target;  // G between C, D
  Functor H;          // A -> C
  Functor K;          // B -> D
  NatTransformation upsilon_left;   // K∘F̂ => Ĝ∘H
  NatTransformation upsilon_right;  // H∘Ǧ => Ǧ'∘K
};

// ---- law checks --------------------------------------------------------

Report check_adjunction(const Adjunction& a);
Report check_monad(const Monad& m);
Report check_comonad(const Comonad& s);
Report check_monad_morphism(const MonadMorphism& mm);
Report check_comonad_morphism(const ComonadMorphism& cm);
Report check_adjunction_morphism(const AdjunctionMorphism& am);

// unit/counit hom-correspondence of an adjunction, verified to be a
// mutually inverse bijection on every hom-pair.
Report check_hom_bijection(const Adjunction& a);

// ---- induced (co)monads ------------------------------------------------

Monad monad_of(const Adjunction& a);      // T = G∘F, μ = GεF
Comonad comonad_of(const Adjunction& a);  // S = F∘G, ν = FηG

// ---- resolutions -------------------------------------------------------

// A resolution of a monad/comonad: the derived category together with
// the resolving adjunction. `carrier_object`/`structure_morphism` give,
// per derived object, the underlying object of the base category and
// the structure morphism (-1 for Kleisli-style objects).
struct Resolution {
  CatPtr category;
  Adjunction adjunction;
  std::vector<int> carrier_object;
  std::vector<int> structure_morphism;
};

Resolution em_algebras(const Monad& m);
Resolution em_coalgebras(const Comonad& s);
Resolution kleisli_monad(const Monad& m);
Resolution kleisli_comonad(const Comonad& s);

// ---- comparison functors ------------------------------------------------

struct Comparison {
  Resolution resolution;
  Functor functor;  // into resolution.category
  Report factorization_report;
};

// H0 : A -> EM-coalgebras(comonad_of a), x |-> (Fx, Fη_x)
Comparison comparison_H0(const Adjunction& a);
// H1 : B -> EM-algebras(monad_of a),    u |-> (Gu, Gε_u)
Comparison comparison_H1(const Adjunction& a);

// ---- the nucleus -------------------------------------------------------

struct NucleusResult {
  Adjunction adjunction;   // between EM-coalgebras and EM-algebras
  Resolution algebras;     // B' side
  Resolution coalgebras;   // A' side
  Report report;           // law violations, empty on success
};

struct NucleusError {
  std::string message;
  int witness_idempotent = -1;  // when a carrier is not idempotent-complete
};

// Computes the nucleus via the Eilenberg-Moore route. Refuses when a
// carrier is not idempotent-complete unless auto_karoubi is set, in
// which case both carriers are replaced by their envelopes first.
struct NucleusOutcome {
  std::optional<NucleusResult> result;
  std::optional<NucleusError> error;
};
NucleusOutcome nucleus(const Adjunction& a, bool auto_karoubi = false);

// Lift an adjunction along the Karoubi embeddings of its carriers.
Adjunction lift_to_envelopes(const Adjunction& a);

// ---- simple nucleus ----------------------------------------------------

struct SimpleNucleusObject {
  int carrier = -1;    // x in A (resp. u in B)
  int alpha = -1;      // idempotent on Fx in B (resp. on Gu in A)
  int transpose = -1;  // α̃ = Gα∘η_x (resp. β̃ = ε_u∘Fβ)
  int witness = -1;    // e with α̃∘e = Gα and e∘α̃ = id (resp. dual)
};

struct SimpleNucleusResult {
  CatPtr Ec;  // objects (x, α on Fx)
  CatPtr Em;  // objects (u, β on Gu)
  std::vector<SimpleNucleusObject> Ec_objects;
  std::vector<SimpleNucleusObject> Em_objects;
  std::optional<Adjunction> adjunction;  // F̄(x,α) = (Fx,Gα) ⊣ Ḡ(u,β) = (Gu,Fβ)
  Functor K0;  // A -> Ec, x |-> (GFx, Fη∘εF)
  Functor K1;  // B -> Em, u |-> (FGu, ηG∘Gε)
  Report report;
};

SimpleNucleusResult simple_nucleus(const Adjunction& a);

// ---- little nucleus ----------------------------------------------------

struct LittleNucleusResult {
  CatPtr Karc;  // objects (u, β on Gu), morphisms f in A(Gu,Gw)
  CatPtr Karm;  // objects (x, α on Fx), morphisms g in B(Fx,Fz)
  std::optional<Adjunction> adjunction;  // Karc <-> Karm, unit η, counit ε
  // full-and-faithful embeddings into the simple nucleus categories
  std::optional<Functor> embed_Karm_Em;
  std::optional<Functor> embed_Karc_Ec;
  Report report;
};

LittleNucleusResult little_nucleus(const Adjunction& a);

// ---- nuclearity --------------------------------------------------------

struct NuclearityEvidence {
  bool value = false;
  fincat::EquivalenceEvidence h1;  // right adjoint monadic?
  fincat::EquivalenceEvidence h0;  // left adjoint comonadic?
};
NuclearityEvidence is_nuclear(const Adjunction& a);

struct SubnuclearityEvidence {
  bool value = false;
  bool left_essentially_surjective = false;
  bool right_essentially_surjective = false;
  fincat::EquivalenceEvidence e1;  // Kleisli comparison Klm -> B
  fincat::EquivalenceEvidence e0;  // Kleisli comparison Klc -> A
};
SubnuclearityEvidence is_subnuclear(const Adjunction& a);

// ---- Street nucleus ----------------------------------------------------

struct StreetOutcome {
  std::optional<Monad> monad;
  std::optional<Comonad> comonad;
  std::optional<NucleusError> error;
};
StreetOutcome street_nucleus_monad(const Monad& m, bool auto_karoubi = false);
StreetOutcome street_nucleus_comonad(const Comonad& s, bool auto_karoubi = false);

// ---- helpers shared with tests and the CLI ------------------------------

Adjunction identity_adjunction(const CatPtr& c);

// name used for objects of derived categories
std::string pair_object_name(const std::string& carrier, const std::string& structure);
std::string derived_morphism_name(const std::string& underlying, const std::string& src, const std::string& dst);

}  // namespace nuc
