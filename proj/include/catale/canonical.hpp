#ifndef CATALE_CANONICAL_HPP_
#define CATALE_CANONICAL_HPP_

#include <vector>

#include "catale/fincat.hpp"
#include "catale/locales.hpp"
#include "catale/psemi.hpp"

namespace catale {

// Canonical relabelings: minimal-under-permutation encodings found by
// colour refinement plus individualization backtracking. Two structures get
// equal forms exactly when they are isomorphic; names never influence the
// form. Carriers here stay small, so no further sophistication is needed.

struct PsgCanonicalForm {
  std::vector<Idx> perm;  // original element -> canonical position
  PartialSemigroup form;  // relabeled, elements named e0, e1, ...

  bool operator==(const PsgCanonicalForm& other) const {
    return form == other.form;
  }
};
PsgCanonicalForm canonical_psg(const PartialSemigroup& psg);

// A category is canonicalized through its morphism semigroup, which
// determines it up to isomorphism (objects are recovered as identities).
struct CatCanonicalForm {
  std::vector<Idx> object_perm;
  std::vector<Idx> morphism_perm;
  FinCategory form;

  bool operator==(const CatCanonicalForm& other) const {
    return form == other.form;
  }
};
CatCanonicalForm canonical_category(const FinCategory& cat);

struct MslCanonicalForm {
  std::vector<Idx> perm;
  MeetSemilattice form;

  bool operator==(const MslCanonicalForm& other) const {
    return form == other.form;
  }
};
MslCanonicalForm canonical_msl(const MeetSemilattice& msl);

struct SpaceCanonicalForm {
  std::vector<Idx> perm;
  FinSpace form;

  bool operator==(const SpaceCanonicalForm& other) const {
    return form == other.form;
  }
};
SpaceCanonicalForm canonical_space(const FinSpace& space);

}  // namespace catale

#endif  // CATALE_CANONICAL_HPP_
