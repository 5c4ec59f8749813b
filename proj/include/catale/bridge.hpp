#ifndef CATALE_BRIDGE_HPP_
#define CATALE_BRIDGE_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "catale/fincat.hpp"
#include "catale/psemi.hpp"

namespace catale {

inline constexpr uint64_t kDefaultSearchBound = 10'000'000;

// The partial semigroup of morphisms: g*f is the composite when the
// endpoints match and undefined otherwise.
PartialSemigroup cat_to_psg(const FinCategory& cat);

// The morphism part of a functor as a semigroup homomorphism.
PsgHom cat_to_psg_hom(const Functor& fun);

struct PsgCatResult {
  std::shared_ptr<const FinCategory> category;
  std::vector<Idx> object_idempotent;       // object -> idempotent element
  std::vector<std::array<Idx, 3>> triples;  // morphism -> (a, b, f) elements
  // Morphism index of <a, b, f>, or kNone.
  Idx find_triple(Idx a, Idx b, Idx f) const;

  std::vector<Idx> idem_position;  // element -> object, kNone if not idempotent
  std::vector<Idx> lookup;         // internal flat (obj, obj, element) index
};

// The category induced by a partial semigroup: objects are its idempotents
// and a morphism a -> b is a triple <a, b, f> with b*f*a = f, so the same
// element appears once per frame that absorbs it. Identities are <a, a, a>.
PsgCatResult psg_to_cat(std::shared_ptr<const PartialSemigroup> psg);

struct CataleCatResult {
  std::shared_ptr<const FinCategory> category;
  std::vector<Idx> object_identity;  // object -> identity element
  // Morphism i of the category is element i of the catale.
};

// The category carried by a catale: objects are the identities, the hom-set
// from a to b collects the elements framed by them, composition is the
// partial product. Throws ErrorKind::Precondition if the input fails the
// catale axioms; the output is always taut.
CataleCatResult catale_to_cat(std::shared_ptr<const PartialSemigroup> psg);

struct UnitCatResult {
  PsgCatResult completion;  // psg_to_cat(cat_to_psg(C))
  Functor unit;             // x -> id_x, h -> <id_dom, id_cod, h>
};
UnitCatResult unit_cat(std::shared_ptr<const FinCategory> cat);

struct CounitPsgResult {
  PsgCatResult induced;
  std::shared_ptr<const PartialSemigroup> tensor;  // cat_to_psg(psg_to_cat(A))
  PsgHom counit;                                   // <a, b, f> -> f
};
CounitPsgResult counit_psg(std::shared_ptr<const PartialSemigroup> psg);

// Functors C -> D in deterministic order. Throws ErrorKind::Bound when the
// number of candidate maps exceeds max_search.
std::vector<Functor> enumerate_functors(std::shared_ptr<const FinCategory> src,
                                        std::shared_ptr<const FinCategory> dst,
                                        uint64_t max_search = kDefaultSearchBound);

// Semigroup homomorphisms S -> T in deterministic order, same bound.
std::vector<PsgHom> enumerate_psg_homs(
    std::shared_ptr<const PartialSemigroup> src,
    std::shared_ptr<const PartialSemigroup> dst,
    uint64_t max_search = kDefaultSearchBound);

// Holds both sides of the correspondence between functors C -> psg_to_cat(A)
// and semigroup homs cat_to_psg(C) -> A.
class Adjunction {
 public:
  Adjunction(std::shared_ptr<const FinCategory> cat,
             std::shared_ptr<const PartialSemigroup> psg);

  const PsgCatResult& points() const { return up_; }
  std::shared_ptr<const PartialSemigroup> tensor() const { return tensor_; }

  // F'(h) = third component of F(h).
  PsgHom transpose_right(const Functor& fun) const;
  // F0(x) = G(id_x), F1(h) = <G(id_dom h), G(id_cod h), G(h)>.
  Functor transpose_left(const PsgHom& hom) const;

 private:
  std::shared_ptr<const FinCategory> cat_;
  std::shared_ptr<const PartialSemigroup> psg_;
  std::shared_ptr<const PartialSemigroup> tensor_;
  PsgCatResult up_;
};

struct AdjunctionReport {
  uint64_t functor_count = 0;
  uint64_t hom_count = 0;
  bool bijective = false;
  std::vector<std::string> mismatches;
};

// Enumerates both hom-sets and checks the two transposes are mutually
// inverse bijections.
AdjunctionReport verify_adjunction(std::shared_ptr<const FinCategory> cat,
                                   std::shared_ptr<const PartialSemigroup> psg,
                                   uint64_t max_search = kDefaultSearchBound);

struct TautTransposeResult {
  CataleCatResult source;  // catale_to_cat(A)
  Functor functor;         // catale_to_cat(A) -> C
  // The transpose back A -> cat_to_psg(C) is the functor's morphism map read
  // on elements. It always sends identities to identities; it reproduces the
  // input hom exactly when that hom already did.
  bool round_trip_equal = false;
  bool reconstruction_preserves_identities = false;
};

// For a hom G : A -> cat_to_psg(C) with A a catale and C taut, the functor
// sending an identity a to the object splitting G(a) and an element f to the
// induced morphism between splitting objects. Throws on unmet preconditions.
TautTransposeResult taut_transpose(const PsgHom& hom,
                                   std::shared_ptr<const PartialSemigroup> psg,
                                   std::shared_ptr<const FinCategory> cat);

struct EquivalenceReport {
  bool unit_is_isomorphism = false;    // A = cat_to_psg(catale_to_cat(A))
  bool counit_is_isomorphism = false;  // catale_to_cat(cat_to_psg(C)) = C
  std::vector<std::string> violations;
  bool ok() const { return unit_is_isomorphism && counit_is_isomorphism; }
};

// Round-trip checks of the taut/catale correspondence, entered from a taut
// category or from a catale. Throws ErrorKind::Precondition otherwise.
EquivalenceReport verify_equivalence_cat(std::shared_ptr<const FinCategory> cat);
EquivalenceReport verify_equivalence_psg(std::shared_ptr<const PartialSemigroup> psg);

}  // namespace catale

#endif  // CATALE_BRIDGE_HPP_
