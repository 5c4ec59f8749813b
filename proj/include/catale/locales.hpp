#ifndef CATALE_LOCALES_HPP_
#define CATALE_LOCALES_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "catale/core.hpp"

namespace catale {

using Mask = uint64_t;  // subset of up to 64 points or elements

// A finite topological space as an explicit family of open point sets. The
// family must contain the empty and the full set and be closed under binary
// union and intersection.
class FinSpace {
 public:
  FinSpace() = default;
  FinSpace(std::vector<std::string> points, std::vector<Mask> opens);

  Idx point_count() const { return static_cast<Idx>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_name(Idx x) const { return points_[x]; }
  const std::vector<Mask>& opens() const { return opens_; }
  Mask full() const;
  bool is_open(Mask set) const;

  bool operator==(const FinSpace&) const = default;

 private:
  std::vector<std::string> points_;
  std::vector<Mask> opens_;
};

// A finite meet-semilattice: a partial order with all binary greatest lower
// bounds and a top element. Finiteness plus the top makes the carrier a
// complete lattice; joins are derived as meets of upper bounds where needed.
class MeetSemilattice {
 public:
  MeetSemilattice() = default;
  MeetSemilattice(std::vector<std::string> elements, std::vector<bool> leq,
                  Idx top);

  Idx size() const { return static_cast<Idx>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element_name(Idx a) const { return elements_[a]; }
  Idx top() const { return top_; }
  bool leq(Idx a, Idx b) const {
    return leq_[static_cast<size_t>(a) * elements_.size() + b];
  }
  const std::vector<bool>& leq_table() const { return leq_; }

  // Greatest lower bound, kNone if absent (flagged by validate_msl).
  Idx meet(Idx a, Idx b) const;
  // Least upper bound, kNone if absent.
  Idx join(Idx a, Idx b) const;
  // Global minimum, kNone if absent.
  Idx bottom() const;

  bool operator==(const MeetSemilattice&) const = default;

 private:
  std::vector<std::string> elements_;
  std::vector<bool> leq_;  // n*n
  Idx top_ = kNone;
};

struct ContinuousMap {
  std::shared_ptr<const FinSpace> source;
  std::shared_ptr<const FinSpace> target;
  std::vector<Idx> map;
};

struct MslHom {
  std::shared_ptr<const MeetSemilattice> source;
  std::shared_ptr<const MeetSemilattice> target;
  std::vector<Idx> map;
};

ValidationReport validate_space(const FinSpace& space);
ValidationReport validate_msl(const MeetSemilattice& msl);
ValidationReport validate_continuous(const ContinuousMap& map);
ValidationReport validate_msl_hom(const MslHom& hom);

// Abstract points of a meet-semilattice are subsets P that arise as the
// zero-sets of two-valued morphisms:
//
//   literal: top not in P, downward closed, and a meet lands in P only if a
//            factor does (the complement is a filter; P may be empty).
//   strict:  additionally the bottom lies in P and P is closed under the
//            (always existing) binary joins, i.e. the morphism also respects
//            finite joins and the complement filter is prime.
//
// The two variants genuinely differ: under literal no space with an empty
// open is ever sober, while strict reproduces the classical fixed-point
// behaviour. Default strict everywhere a variant is not spelled out.
enum class PointVariant { literal, strict };

struct SpacePoints {
  FinSpace space;
  std::vector<Mask> point_sets;  // P as a subset of the semilattice carrier
  PointVariant variant = PointVariant::strict;
};

// All abstract points with the topology generated by the basic opens
// a-check = {P : a not in P}, closed under unions.
SpacePoints points(const MeetSemilattice& msl, PointVariant variant);

// Opens ordered by (size, mask), with inclusion as the order and
// intersection as the meet.
MeetSemilattice opens(const FinSpace& space);

// x maps to {U : x not in U}; throws if some image fails the point
// conditions (cannot happen for either variant).
ContinuousMap unit_space(std::shared_ptr<const FinSpace> space,
                         PointVariant variant);

// a maps to its basic open; meet and top preservation hold by construction
// and are rechecked by validate_msl_hom.
MslHom counit_msl(std::shared_ptr<const MeetSemilattice> msl,
                  PointVariant variant);

// Sober: the unit is a homeomorphism. Spatial: the counit is an order
// isomorphism.
bool is_sober(const FinSpace& space, PointVariant variant);
bool is_spatial(const MeetSemilattice& msl, PointVariant variant);

FinSpace soberify(const FinSpace& space,
                  PointVariant variant = PointVariant::strict);
MeetSemilattice spatialize(const MeetSemilattice& msl,
                           PointVariant variant = PointVariant::strict);

// All joins exist (always, finitely) and binary meet distributes over
// binary join; the finite distributive law follows by induction and the
// empty case needs the bottom, which exists.
bool is_frame(const MeetSemilattice& msl);

// Identifies points with identical open neighbourhood sets.
FinSpace kolmogorov_quotient(const FinSpace& space);

struct SierpinskiMaps {
  std::shared_ptr<const FinSpace> sierpinski;
  std::vector<ContinuousMap> maps;      // all continuous maps X -> 2
  std::vector<Mask> characteristic;     // per map, the preimage of the open point
  bool bijects_with_opens = false;
};

// Continuous maps into the two-point space with one open point, together
// with the bijection sending a map to the open it classifies.
SierpinskiMaps sierpinski_maps(const FinSpace& space);

}  // namespace catale

#endif  // CATALE_LOCALES_HPP_
