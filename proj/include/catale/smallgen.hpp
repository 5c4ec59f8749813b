#ifndef CATALE_SMALLGEN_HPP_
#define CATALE_SMALLGEN_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "catale/fincat.hpp"
#include "catale/locales.hpp"
#include "catale/psemi.hpp"

namespace catale {

// Exhaustive generators of small structures, in a fixed deterministic order.
// Yield callbacks return false to stop the stream early. Beyond the stated
// bounds the generators throw ErrorKind::Bound; seeded random sampling below
// covers larger carriers.

using PsgYield = std::function<bool(const PartialSemigroup&)>;
using SpaceYield = std::function<bool(const FinSpace&)>;
using MslYield = std::function<bool(const MeetSemilattice&)>;
using CatYield = std::function<bool(const FinCategory&)>;

// Every one of the (n+1)^(n*n) raw tables on n elements, n <= 3.
void enum_psg_tables(Idx n, const PsgYield& yield);
// The valid ones only.
void enum_psgs(Idx n, const PsgYield& yield);

// All topologies on n labelled points, n <= 4.
void enum_topologies(Idx n, const SpaceYield& yield);

// All meet-semilattices (with top) on n labelled elements, n <= 5.
void enum_msls(Idx n, const MslYield& yield);

// All monoids on n labelled elements, n <= 3.
void enum_monoids(Idx n, const PsgYield& yield);

// All categories with at most the given numbers of objects and morphisms
// (identities included in the count), both bounds <= 4.
void enum_categories(Idx max_objects, Idx max_morphisms, const CatYield& yield);

// Seeded sampling; equal seeds give byte-identical results.
PartialSemigroup random_psg(Idx n, uint64_t seed);
FinSpace random_topology(Idx n, uint64_t seed);
MeetSemilattice random_msl(Idx n, uint64_t seed);
PartialSemigroup shuffle_psg(const PartialSemigroup& psg, uint64_t seed);
FinCategory shuffle_category(const FinCategory& cat, uint64_t seed);

// Named structures. A fixture may live in more than one world (a discrete
// space is also a discrete category); absent views are nullopt.
struct Fixture {
  std::optional<FinCategory> category;
  std::optional<PartialSemigroup> psg;
  std::optional<FinSpace> space;
  std::optional<MeetSemilattice> msl;
};

// Known names: walking_idempotent, walking_iso, discrete<n>, indiscrete<n>,
// sierpinski, chain_msl<n>, boolean_msl<n>, T<n> (n <= 4), m3.
// Throws ErrorKind::UnknownName otherwise.
Fixture fixture(const std::string& name);

// Full transformation monoid on an n-element set; element names spell the
// value table, e.g. "120" maps 0->1, 1->2, 2->0.
PartialSemigroup transformation_monoid(Idx n);
FinCategory one_object_category(const PartialSemigroup& monoid,
                                const std::string& object_name = "*");

FinCategory walking_idempotent();
FinCategory walking_iso();
FinCategory discrete_category(Idx n);
FinSpace discrete_space(Idx n);
FinSpace indiscrete_space(Idx n);
FinSpace sierpinski_space();
MeetSemilattice chain_msl(Idx n);
MeetSemilattice boolean_msl(Idx n);
MeetSemilattice diamond_msl();

}  // namespace catale

#endif  // CATALE_SMALLGEN_HPP_
