#include "doctest.h"

#include <algorithm>

#include "catale/canonical.hpp"
#include "catale/locales.hpp"
#include "catale/smallgen.hpp"

using namespace catale;

namespace {

std::shared_ptr<const FinSpace> shared(const FinSpace& space) {
  return std::make_shared<FinSpace>(space);
}

std::shared_ptr<const MeetSemilattice> shared(const MeetSemilattice& msl) {
  return std::make_shared<MeetSemilattice>(msl);
}

// Independent oracle for the abstract points: scan every subset of the
// carrier against the variant's conditions directly.
std::vector<Mask> points_by_subset_scan(const MeetSemilattice& msl,
                                        PointVariant variant) {
  const Idx n = msl.size();
  std::vector<Mask> out;
  for (Mask p = 0; p < (Mask{1} << n); ++p) {
    if (p >> msl.top() & 1) continue;
    bool ok = true;
    for (Idx a = 0; a < n && ok; ++a) {
      for (Idx c = 0; c < n && ok; ++c) {
        if ((p >> c & 1) && msl.leq(a, c) && !(p >> a & 1)) ok = false;
        const Idx m = msl.meet(a, c);
        if (m != kNone && (p >> m & 1) && !(p >> a & 1) && !(p >> c & 1)) {
          ok = false;
        }
      }
    }
    if (ok && variant == PointVariant::strict) {
      const Idx bot = msl.bottom();
      if (bot != kNone && !(p >> bot & 1)) ok = false;
      for (Idx a = 0; a < n && ok; ++a) {
        for (Idx c = 0; c < n && ok; ++c) {
          if (!(p >> a & 1) || !(p >> c & 1)) continue;
          const Idx j = msl.join(a, c);
          if (j != kNone && !(p >> j & 1)) ok = false;
        }
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

// A space is T0 when distinct points have distinct neighbourhood profiles.
bool is_t0(const FinSpace& space) {
  for (Idx x = 0; x < space.point_count(); ++x) {
    for (Idx y = x + 1; y < space.point_count(); ++y) {
      bool same = true;
      for (Mask u : space.opens()) {
        if (((u >> x) & 1) != ((u >> y) & 1)) same = false;
      }
      if (same) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validate_space on the fixtures") {
  CHECK(validate_space(sierpinski_space()).ok());
  CHECK(validate_space(discrete_space(2)).ok());
  CHECK(validate_space(indiscrete_space(3)).ok());
  CHECK(validate_space(FinSpace({}, {0})).ok());  // the empty space
}

TEST_CASE("validate_space names a missing union") {
  const FinSpace broken({"0", "1"}, {0b00, 0b01, 0b10});
  const auto report = validate_space(broken);
  CHECK_FALSE(report.ok());
  bool named = false;
  for (const auto& v : report.violations) {
    if (v.find("union {0,1}") != std::string::npos) named = true;
  }
  CHECK(named);
}

TEST_CASE("validate_msl on chains and broken orders") {
  CHECK(validate_msl(chain_msl(1)).ok());
  CHECK(validate_msl(chain_msl(2)).ok());
  CHECK(validate_msl(boolean_msl(2)).ok());
  CHECK(validate_msl(diamond_msl()).ok());

  // Two incomparable elements with no meet and no top.
  std::vector<bool> leq = {true, false, false, true};
  const MeetSemilattice broken({"a", "b"}, leq, 0);
  CHECK_FALSE(validate_msl(broken).ok());
}

TEST_CASE("opens of the fixtures") {
  const MeetSemilattice sier = opens(sierpinski_space());
  REQUIRE(sier.size() == 3);  // a three-element chain
  for (Idx a = 0; a < 3; ++a) {
    for (Idx b = a; b < 3; ++b) CHECK(sier.leq(a, b));
  }

  const MeetSemilattice four = opens(discrete_space(2));
  CHECK(four.size() == 4);
  CHECK(is_frame(four));

  const MeetSemilattice two = opens(indiscrete_space(2));
  CHECK(two.size() == 2);
}

TEST_CASE("sierpinski_maps classify opens") {
  const auto sier = sierpinski_maps(sierpinski_space());
  CHECK(sier.maps.size() == 3);
  CHECK(sier.bijects_with_opens);

  CHECK(sierpinski_maps(indiscrete_space(2)).maps.size() == 2);
  CHECK(sierpinski_maps(discrete_space(1)).maps.size() == 2);

  enum_topologies(3, [](const FinSpace& space) {
    CHECK(sierpinski_maps(space).bijects_with_opens);
    return true;
  });
}

TEST_CASE("points against the subset-scan oracle") {
  for (Idx n = 1; n <= 5; ++n) {
    enum_msls(n, [](const MeetSemilattice& msl) {
      for (const auto variant : {PointVariant::literal, PointVariant::strict}) {
        const SpacePoints fast = points(msl, variant);
        std::vector<Mask> sets = fast.point_sets;
        std::sort(sets.begin(), sets.end());
        CHECK(sets == points_by_subset_scan(msl, variant));
      }
      return true;
    });
  }
}

TEST_CASE("points of the two-chain") {
  const MeetSemilattice chain = chain_msl(2);
  const SpacePoints literal = points(chain, PointVariant::literal);
  REQUIRE(literal.point_sets.size() == 2);
  CHECK(literal.point_sets[0] == 0b00);  // the empty zero-set
  CHECK(literal.point_sets[1] == 0b01);  // {0}
  CHECK(canonical_space(literal.space) == canonical_space(sierpinski_space()));

  const SpacePoints strict = points(chain, PointVariant::strict);
  REQUIRE(strict.point_sets.size() == 1);
  CHECK(strict.point_sets[0] == 0b01);
}

TEST_CASE("points of the trivial semilattice differ by variant") {
  const MeetSemilattice trivial = chain_msl(1);
  CHECK(points(trivial, PointVariant::literal).point_sets.size() == 1);
  // The bottom is the top, so no strict point exists and the empty space is
  // its own soberification.
  CHECK(points(trivial, PointVariant::strict).point_sets.empty());
}

TEST_CASE("points of the opens of the point") {
  const MeetSemilattice two = opens(discrete_space(1));
  REQUIRE(two.size() == 2);
  CHECK(points(two, PointVariant::strict).point_sets.size() == 1);
}

TEST_CASE("unit_space on the fixtures") {
  const ContinuousMap sier = unit_space(shared(sierpinski_space()),
                                        PointVariant::strict);
  CHECK(validate_continuous(sier).ok());
  CHECK(sier.map[0] != sier.map[1]);
  CHECK(sier.target->point_count() == 2);

  const ContinuousMap indis = unit_space(shared(indiscrete_space(2)),
                                         PointVariant::strict);
  CHECK(indis.map[0] == indis.map[1]);

  const ContinuousMap point = unit_space(shared(discrete_space(1)),
                                         PointVariant::strict);
  CHECK(point.target->point_count() == 1);
}

TEST_CASE("the unit is continuous on every small space, both variants") {
  for (Idx n = 0; n <= 3; ++n) {
    enum_topologies(n, [](const FinSpace& space) {
      for (const auto variant : {PointVariant::literal, PointVariant::strict}) {
        CHECK(validate_continuous(unit_space(shared(space), variant)).ok());
      }
      return true;
    });
  }
}

TEST_CASE("counit_msl on the two-chain and the square") {
  const auto chain = shared(chain_msl(2));
  const MslHom hom = counit_msl(chain, PointVariant::strict);
  CHECK(validate_msl_hom(hom).ok());
  // Injective, image the basis.
  CHECK(hom.map[0] != hom.map[1]);

  CHECK(is_spatial(boolean_msl(2), PointVariant::strict));
}

TEST_CASE("the counit preserves meets and sends the top everywhere") {
  for (Idx n = 1; n <= 4; ++n) {
    enum_msls(n, [](const MeetSemilattice& msl) {
      for (const auto variant : {PointVariant::literal, PointVariant::strict}) {
        const MslHom hom = counit_msl(shared(msl), variant);
        CHECK(validate_msl_hom(hom).ok());
        const SpacePoints pts = points(msl, variant);
        // top-check is the set of all points.
        Mask top_check = 0;
        for (size_t i = 0; i < pts.point_sets.size(); ++i) {
          if (!(pts.point_sets[i] >> msl.top() & 1)) top_check |= Mask{1} << i;
        }
        CHECK(top_check == pts.space.full());
      }
      return true;
    });
  }
}

TEST_CASE("sober and spatial fixtures") {
  CHECK(is_sober(sierpinski_space(), PointVariant::strict));
  CHECK_FALSE(is_sober(indiscrete_space(2), PointVariant::strict));
  CHECK(is_spatial(boolean_msl(2), PointVariant::strict));
}

TEST_CASE("under the literal variant no space with an empty open is sober") {
  for (Idx n = 0; n <= 3; ++n) {
    enum_topologies(n, [](const FinSpace& space) {
      if (space.point_count() > 0) {
        CHECK_FALSE(is_sober(space, PointVariant::literal));
      }
      return true;
    });
  }
}

TEST_CASE("the literal point space always contains the empty zero-set") {
  for (Idx n = 1; n <= 4; ++n) {
    enum_msls(n, [](const MeetSemilattice& msl) {
      const SpacePoints pts = points(msl, PointVariant::literal);
      CHECK(std::find(pts.point_sets.begin(), pts.point_sets.end(), Mask{0}) !=
            pts.point_sets.end());
      return true;
    });
  }
  // The unit never reaches that point: every neighbourhood set contains the
  // empty open of the source space.
  enum_topologies(3, [](const FinSpace& space) {
    const ContinuousMap unit = unit_space(shared(space), PointVariant::literal);
    const SpacePoints pts = points(opens(space), PointVariant::literal);
    const auto empty_pos = std::find(pts.point_sets.begin(),
                                     pts.point_sets.end(), Mask{0});
    REQUIRE(empty_pos != pts.point_sets.end());
    const Idx empty_index =
        static_cast<Idx>(empty_pos - pts.point_sets.begin());
    for (Idx x = 0; x < space.point_count(); ++x) {
      CHECK(unit.map[x] != empty_index);
    }
    return true;
  });
}

TEST_CASE("strict sobriety is exactly the T0 separation") {
  for (Idx n = 0; n <= 4; ++n) {
    enum_topologies(n, [](const FinSpace& space) {
      CHECK(is_sober(space, PointVariant::strict) == is_t0(space));
      return true;
    });
  }
}

TEST_CASE("soberify collapses the indiscrete space") {
  const FinSpace collapsed = soberify(indiscrete_space(2));
  CHECK(collapsed.point_count() == 1);
  const FinSpace same = soberify(sierpinski_space());
  CHECK(canonical_space(same) == canonical_space(sierpinski_space()));
}

TEST_CASE("soberify is a fixed point and matches the indistinguishability quotient") {
  for (Idx n = 0; n <= 3; ++n) {
    enum_topologies(n, [](const FinSpace& space) {
      const FinSpace sober = soberify(space);
      CHECK(is_sober(sober, PointVariant::strict));
      CHECK(canonical_space(sober) ==
            canonical_space(kolmogorov_quotient(space)));
      CHECK(canonical_space(soberify(sober)) == canonical_space(sober));
      return true;
    });
  }
}

TEST_CASE("spatialize fixes distributive lattices") {
  const MeetSemilattice square = boolean_msl(2);
  const MeetSemilattice spatial = spatialize(square);
  CHECK(canonical_msl(spatial) == canonical_msl(square));
  CHECK(is_spatial(spatial, PointVariant::strict));

  const MeetSemilattice diamond = diamond_msl();
  const MeetSemilattice crushed = spatialize(diamond);
  CHECK(is_spatial(crushed, PointVariant::strict));
  CHECK(crushed.size() == 1);  // no strict points survive
}

TEST_CASE("is_frame on fixtures and every opens lattice") {
  CHECK_FALSE(is_frame(diamond_msl()));
  CHECK(is_frame(chain_msl(1)));
  CHECK(is_frame(chain_msl(4)));
  for (Idx n = 0; n <= 3; ++n) {
    enum_topologies(n, [](const FinSpace& space) {
      CHECK(is_frame(opens(space)));
      return true;
    });
  }
}

TEST_CASE("kolmogorov_quotient identifies indistinguishable points") {
  CHECK(kolmogorov_quotient(indiscrete_space(2)).point_count() == 1);
  CHECK(kolmogorov_quotient(sierpinski_space()) == sierpinski_space());
  for (Idx n = 0; n <= 4; ++n) {
    enum_topologies(n, [](const FinSpace& space) {
      CHECK(is_t0(kolmogorov_quotient(space)));
      return true;
    });
  }
}

TEST_CASE("continuous map validation flags a non-open preimage") {
  const auto source = shared(indiscrete_space(2));
  const auto target = shared(discrete_space(2));
  ContinuousMap identity{source, target, {0, 1}};
  CHECK_FALSE(validate_continuous(identity).ok());

  ContinuousMap constant{source, target, {0, 0}};
  CHECK(validate_continuous(constant).ok());

  ContinuousMap wrong{source, target, {0}};
  CHECK_THROWS_AS(validate_continuous(wrong), Error);
}

TEST_CASE("msl hom validation flags an unpreserved meet") {
  const auto square = shared(boolean_msl(2));
  const auto chain = shared(chain_msl(2));
  // Send both atoms to the chain bottom and the extremes correctly: the meet
  // of the atoms is the bottom, preserved; this one is fine.
  MslHom collapse{square, chain, {0, 0, 0, 1}};
  CHECK(validate_msl_hom(collapse).ok());
  // Sending an atom up to the top breaks meet preservation.
  MslHom broken{square, chain, {0, 1, 1, 1}};
  CHECK_FALSE(validate_msl_hom(broken).ok());
  // Dropping the top is flagged.
  MslHom droptop{square, chain, {0, 0, 0, 0}};
  CHECK_FALSE(validate_msl_hom(droptop).ok());
}
