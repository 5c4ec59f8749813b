#ifndef CATALE_FINCAT_HPP_
#define CATALE_FINCAT_HPP_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catale/core.hpp"

namespace catale {

struct Morphism {
  std::string name;
  Idx dom = kNone;
  Idx cod = kNone;

  bool operator==(const Morphism&) const = default;
};

// A finite category as explicit tables: ordered objects, ordered morphisms
// with domain/codomain, an identity morphism per object and a composition
// table. compose(g, f) is "g after f" and is present exactly when
// dom(g) == cod(f); kNone marks an absent entry. Raw (possibly lawless)
// tables are representable so that validate_category can report on them.
// Morphism identity is positional. Values are immutable once built.
class FinCategory {
 public:
  FinCategory() = default;
  FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
              std::vector<Idx> identity, std::vector<Idx> compose_table);

  static FinCategory empty();

  Idx object_count() const { return static_cast<Idx>(objects_.size()); }
  Idx morphism_count() const { return static_cast<Idx>(morphisms_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const std::string& object_name(Idx x) const { return objects_[x]; }
  const Morphism& morphism(Idx f) const { return morphisms_[f]; }
  Idx identity_of(Idx x) const { return identity_[x]; }
  const std::vector<Idx>& identities() const { return identity_; }
  const std::vector<Idx>& compose_table() const { return compose_; }

  Idx dom(Idx f) const { return morphisms_[f].dom; }
  Idx cod(Idx f) const { return morphisms_[f].cod; }
  bool composable(Idx g, Idx f) const { return dom(g) == cod(f); }
  Idx compose(Idx g, Idx f) const {
    return compose_[static_cast<size_t>(g) * morphisms_.size() + f];
  }

  bool is_identity(Idx f) const;
  std::vector<Idx> hom(Idx x, Idx y) const;
  std::vector<Idx> endomorphisms(Idx x) const;

  bool operator==(const FinCategory& other) const = default;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<Idx> identity_;  // per object
  std::vector<Idx> compose_;   // n_mor * n_mor, row = outer morphism
};

struct Functor {
  std::shared_ptr<const FinCategory> source;
  std::shared_ptr<const FinCategory> target;
  std::vector<Idx> obj_map;
  std::vector<Idx> mor_map;
};

// A splitting of the idempotent `idem` on x through object `through`:
// section * retraction = idem and retraction * section = identity(through).
struct Splitting {
  Idx idem = kNone;
  Idx through = kNone;
  Idx retraction = kNone;  // q : x -> through
  Idx section = kNone;     // i : through -> x
};

struct IsoWitness {
  Idx forward = kNone;   // u : a -> b
  Idx backward = kNone;  // v : b -> a, v*u = id_a, u*v = id_b
};

// Deterministic choice realizing the skeleton: per isomorphism class the
// least object index is the representative, and to_rep[x] is the first
// isomorphism x -> rep found in enumeration order (the identity on
// representatives). The family to_rep_inv[y] * to_rep[x] is then closed
// under composition by construction.
struct SkeletonChoice {
  std::vector<Idx> class_of;        // object -> class
  std::vector<Idx> representative;  // class -> object
  std::vector<Idx> to_rep;          // object -> morphism into representative
  std::vector<Idx> to_rep_inv;      // object -> morphism out of representative
};

ValidationReport validate_category(const FinCategory& cat);

// Endomorphisms f with f*f = f, in morphism order.
std::vector<Idx> idempotents(const FinCategory& cat);

struct IdempotentPreorder {
  std::vector<Idx> idempotents;
  // leq[i][j]: idem_i <= idem_j, i.e. same domain object and i = i * j.
  std::vector<std::vector<bool>> leq;
  bool reflexive = false;
  bool transitive = false;
};
IdempotentPreorder idempotent_preorder(const FinCategory& cat);

// Least splitting of an idempotent in (object, retraction, section)
// enumeration order; identities split through their own object. Throws
// ErrorKind::Precondition if phi is not idempotent.
std::optional<Splitting> find_splitting(const FinCategory& cat, Idx phi);

struct AbsoluteCompleteness {
  bool complete = false;
  Idx first_unsplit = kNone;
};
AbsoluteCompleteness is_absolutely_complete(const FinCategory& cat);

struct KaroubiResult {
  std::shared_ptr<const FinCategory> category;
  Functor embedding;                        // x -> id_x, f -> f
  std::vector<Idx> object_idempotent;       // Kar object -> idempotent of C
  std::vector<std::array<Idx, 3>> triples;  // Kar morphism -> (phi, psi, f)
};

// The idempotent completion: objects are the idempotents of C, morphisms
// from phi to psi are the f with psi*f*phi = f, composition is inherited and
// the identity of the object phi is phi itself.
KaroubiResult karoubi(std::shared_ptr<const FinCategory> cat);

struct IsoClasses {
  std::vector<Idx> class_of;             // object -> class
  std::vector<std::vector<Idx>> classes;  // ascending members
  // witness[x][y] for same-class pairs; found by exhaustive pair search.
  std::vector<std::vector<std::optional<IsoWitness>>> witness;
};
IsoClasses iso_classes(const FinCategory& cat);

struct SkeletalCheck {
  bool skeletal = false;
  Idx counterexample_a = kNone;
  Idx counterexample_b = kNone;
};
SkeletalCheck is_skeletal(const FinCategory& cat);

struct SkeletonResult {
  std::shared_ptr<const FinCategory> category;
  Functor projection;  // full, faithful, essentially surjective
  SkeletonChoice choice;
};

// Full subcategory on class representatives; projection transports f along
// the chosen isomorphisms, which realizes the quotient of hom-sets by
// composition with isomorphisms while keeping equality decidable by lookup.
SkeletonResult skeleton(std::shared_ptr<const FinCategory> cat);

struct AutomorphismGroups {
  struct ClassData {
    std::vector<Idx> objects;
    std::vector<Idx> group_elements;        // Aut(rep), morphism indices
    std::vector<std::vector<Idx>> table;    // indices into group_elements
    // For each member pair (x, x'): the chosen iso kappa and the bijection
    // iso(x,x') -> Aut(x), chi -> chi^{-1} * kappa.
    struct PairBijection {
      Idx x = kNone, y = kNone, kappa = kNone;
      std::vector<std::pair<Idx, Idx>> map;  // (chi, chi^{-1} * kappa)
      bool bijective = false;
    };
    std::vector<PairBijection> pairs;
    bool homs_equal_group_order = false;
  };
  std::vector<ClassData> classes;
};

// Per isomorphism class: the automorphism group of the representative as a
// multiplication table, plus for every member pair the canonical bijection
// between the iso hom-set and that group. With `require_groupoid` set, a
// non-invertible morphism between class members is an error; otherwise the
// hom-sets are silently restricted to the isomorphisms.
AutomorphismGroups automorphism_groups(const FinCategory& cat,
                                       bool require_groupoid = false);

// Witness (u, v) with a = u*v, b = v*u, u*v*u = u, v*u*v = v, by exhaustive
// search in enumeration order. Throws if a or b is not idempotent.
std::optional<IsoWitness> idempotents_isomorphic(const FinCategory& cat, Idx a,
                                                 Idx b);

struct TautResult {
  std::shared_ptr<const FinCategory> category;
  Functor completion;                  // C -> Taut C
  std::vector<Idx> class_of_idempotent;  // idempotent list index -> class
  std::vector<Idx> idempotents;          // idempotents of C, ascending
};

// Idempotent completion followed by identification of idempotents that are
// isomorphic as completion objects; hom-sets are transported to the least
// representative along chosen witnesses.
TautResult taut_completion(std::shared_ptr<const FinCategory> cat);

bool is_taut(const FinCategory& cat);

// Verifies that the section equalizes (id, phi) and the retraction
// coequalizes (id, phi), by checking the universal property against every
// cone and cocone in the category. Throws if the splitting is not valid.
ValidationReport check_splitting_universal(const FinCategory& cat,
                                           const Splitting& splitting);

// For phi <= psi with both split, exhibits a section/retraction pair between
// the splitting objects by search; a failure would contradict the theorem
// and is reported as a violation. Throws on unmet preconditions.
ValidationReport check_retract_of_splitting(const FinCategory& cat, Idx phi,
                                            Idx psi);

ValidationReport validate_functor(const Functor& fun);

Functor identity_functor(std::shared_ptr<const FinCategory> cat);

// outer * inner, defined when inner's target equals outer's source.
Functor compose_functors(const Functor& outer, const Functor& inner);

struct EquivalenceCheck {
  bool full = false;
  bool faithful = false;
  bool essentially_surjective = false;
  bool ok() const { return full && faithful && essentially_surjective; }
};
EquivalenceCheck is_equivalence(const Functor& fun);

bool is_isomorphism(const Functor& fun);

}  // namespace catale

#endif  // CATALE_FINCAT_HPP_
