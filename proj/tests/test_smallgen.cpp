#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "catale/bridge.hpp"
#include "catale/canonical.hpp"
#include "catale/smallgen.hpp"

using namespace catale;

namespace {

// Brute-force isomorphism of partial tables: try every bijection.
bool psgs_isomorphic(const PartialSemigroup& a, const PartialSemigroup& b) {
  if (a.size() != b.size()) return false;
  const Idx n = a.size();
  std::vector<Idx> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Idx x = 0; x < n && ok; ++x) {
      for (Idx y = 0; y < n && ok; ++y) {
        const Idx xy = a.product(x, y);
        const Idx image = b.product(perm[x], perm[y]);
        if (xy == kNone ? image != kNone : image != perm[xy]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("enum_psg_tables counts all candidates") {
  int count = 0;
  enum_psg_tables(1, [&](const PartialSemigroup&) {
    ++count;
    return true;
  });
  CHECK(count == 2);

  count = 0;
  enum_psg_tables(2, [&](const PartialSemigroup&) {
    ++count;
    return true;
  });
  CHECK(count == 81);  // 3^4

  count = 0;
  enum_psg_tables(3, [&](const PartialSemigroup&) {
    ++count;
    return true;
  });
  CHECK(count == 262144);  // 4^9
}

TEST_CASE("both tables on one element are valid") {
  int count = 0;
  enum_psgs(1, [&](const PartialSemigroup& psg) {
    CHECK(validate_psg(psg).ok());
    ++count;
    return true;
  });
  CHECK(count == 2);
}

TEST_CASE("enumeration bounds fail loudly") {
  const auto swallow_psg = [](const PartialSemigroup&) { return true; };
  CHECK_THROWS_AS(enum_psgs(4, swallow_psg), Error);
  const auto swallow_space = [](const FinSpace&) { return true; };
  CHECK_THROWS_AS(enum_topologies(5, swallow_space), Error);
  const auto swallow_msl = [](const MeetSemilattice&) { return true; };
  CHECK_THROWS_AS(enum_msls(6, swallow_msl), Error);
  const auto swallow_cat = [](const FinCategory&) { return true; };
  CHECK_THROWS_AS(enum_categories(5, 5, swallow_cat), Error);
}

TEST_CASE("topology counts on up to four labelled points") {
  const auto count_topologies = [](Idx n) {
    int count = 0;
    enum_topologies(n, [&](const FinSpace& space) {
      CHECK(validate_space(space).ok());
      ++count;
      return true;
    });
    return count;
  };
  CHECK(count_topologies(0) == 1);
  CHECK(count_topologies(1) == 1);
  CHECK(count_topologies(2) == 4);
  // Frozen regression values computed by this enumeration.
  CHECK(count_topologies(3) == 29);
  CHECK(count_topologies(4) == 355);
}

TEST_CASE("semilattice enumeration is validated and small") {
  int labelled = 0;
  std::vector<MslCanonicalForm> forms;
  enum_msls(2, [&](const MeetSemilattice& msl) {
    CHECK(validate_msl(msl).ok());
    ++labelled;
    forms.push_back(canonical_msl(msl));
    return true;
  });
  CHECK(labelled == 2);  // either element on top
  CHECK(forms[0] == forms[1]);  // one two-chain up to isomorphism

  enum_msls(5, [](const MeetSemilattice& msl) {
    CHECK(validate_msl(msl).ok());
    return true;
  });
}

TEST_CASE("monoid enumeration finds the two groups of order two") {
  std::vector<PsgCanonicalForm> forms;
  enum_monoids(2, [&](const PartialSemigroup& monoid) {
    CHECK(validate_psg(monoid).ok());
    forms.push_back(canonical_psg(monoid));
    return true;
  });
  std::sort(forms.begin(), forms.end(),
            [](const PsgCanonicalForm& a, const PsgCanonicalForm& b) {
              return a.form.table() < b.form.table();
            });
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  CHECK(forms.size() == 2);  // the order-two group and the idempotent monoid
}

TEST_CASE("category enumeration contains the walking isomorphism") {
  const auto target = canonical_category(walking_iso());
  bool found = false;
  enum_categories(2, 4, [&](const FinCategory& cat) {
    if (canonical_category(cat) == target) found = true;
    return !found;
  });
  CHECK(found);
}

TEST_CASE("every enumerated category validates") {
  int count = 0;
  enum_categories(4, 4, [&](const FinCategory& cat) {
    CHECK(validate_category(cat).ok());
    ++count;
    return true;
  });
  CHECK(count == 242);  // frozen regression value from this enumeration
}

TEST_CASE("canonical forms are relabeling-invariant and idempotent") {
  const PartialSemigroup t2 = transformation_monoid(2);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(canonical_psg(shuffle_psg(t2, seed)) == canonical_psg(t2));
  }
  const auto once = canonical_psg(t2);
  CHECK(canonical_psg(once.form) == once);

  const FinCategory iso = walking_iso();
  for (uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(canonical_category(shuffle_category(iso, seed)) ==
          canonical_category(iso));
  }

  const FinSpace sier = sierpinski_space();
  CHECK(canonical_space(sier) == canonical_space(sier));
}

TEST_CASE("distinct structures get distinct forms") {
  CHECK_FALSE(canonical_category(walking_iso()) ==
              canonical_category(discrete_category(2)));
  CHECK_FALSE(canonical_msl(chain_msl(3)) == canonical_msl(boolean_msl(2)));
}

TEST_CASE("canonical equality agrees with brute-force isomorphism") {
  std::vector<PartialSemigroup> sample;
  enum_psgs(2, [&](const PartialSemigroup& psg) {
    sample.push_back(psg);
    return true;
  });
  // A slice of the three-element tables keeps the quadratic scan fast.
  int taken = 0;
  enum_psgs(3, [&](const PartialSemigroup& psg) {
    if (++taken % 7 == 0) sample.push_back(psg);
    return true;
  });
  std::vector<PsgCanonicalForm> forms;
  forms.reserve(sample.size());
  for (const auto& psg : sample) forms.push_back(canonical_psg(psg));
  for (size_t i = 0; i < sample.size(); ++i) {
    for (size_t j = i + 1; j < sample.size(); ++j) {
      CHECK((forms[i] == forms[j]) == psgs_isomorphic(sample[i], sample[j]));
    }
  }
}

TEST_CASE("fixtures by name") {
  CHECK(fixture("walking_idempotent").category.has_value());
  CHECK(fixture("walking_iso").category.has_value());
  CHECK(fixture("sierpinski").space.has_value());
  CHECK(fixture("m3").msl.has_value());
  CHECK(fixture("discrete2").category.has_value());
  CHECK(fixture("discrete2").space.has_value());
  CHECK(fixture("indiscrete2").space.has_value());
  CHECK(fixture("chain_msl3").msl.has_value());
  CHECK(fixture("boolean_msl2").msl.has_value());

  const Fixture t2 = fixture("T2");
  REQUIRE(t2.psg.has_value());
  CHECK(t2.psg->size() == 4);
  REQUIRE(t2.category.has_value());
  CHECK(t2.category->morphism_count() == 4);

  const Fixture t3 = fixture("T3");
  REQUIRE(t3.psg.has_value());
  CHECK(t3.psg->size() == 27);

  CHECK_THROWS_AS(fixture("nope"), Error);
}

TEST_CASE("the sierpinski fixture carries the concrete open family") {
  const FinSpace sier = sierpinski_space();
  REQUIRE(sier.point_count() == 2);
  CHECK(sier.opens() == std::vector<Mask>{0b00, 0b10, 0b11});
}

TEST_CASE("transformation monoids multiply by composition") {
  const PartialSemigroup t4 = transformation_monoid(4);
  CHECK(t4.size() == 256);
  CHECK(validate_psg(transformation_monoid(2)).ok());
  // Composition spot check in T(3): "120" after "201" maps 0 to 2... each
  // name spells the value table.
  const PartialSemigroup t3 = transformation_monoid(3);
  const auto at = [&](const std::string& name) {
    for (Idx f = 0; f < t3.size(); ++f) {
      if (t3.element_name(f) == name) return f;
    }
    return kNone;
  };
  // g = "120" (0->1,1->2,2->0), f = "201" (0->2,1->0,2->1): g after f maps
  // 0 -> g(2) = 0, 1 -> g(0) = 1, 2 -> g(1) = 2.
  CHECK(t3.product(at("120"), at("201")) == at("012"));
}

TEST_CASE("seeded generators are reproducible") {
  const PartialSemigroup a = random_psg(4, 7);
  const PartialSemigroup b = random_psg(4, 7);
  CHECK(a == b);
  CHECK(validate_psg(a).ok());

  const FinSpace s = random_topology(5, 11);
  CHECK(s == random_topology(5, 11));
  CHECK(validate_space(s).ok());

  const MeetSemilattice m = random_msl(4, 3);
  CHECK(m == random_msl(4, 3));
  CHECK(validate_msl(m).ok());

  CHECK(shuffle_psg(transformation_monoid(2), 5) ==
        shuffle_psg(transformation_monoid(2), 5));
}

TEST_CASE("one_object_category demands a monoid") {
  CHECK_THROWS_AS(one_object_category(PartialSemigroup({"e"}, {kNone})),
                  Error);
}

TEST_CASE("canonical_space refuses oversized point sets") {
  CHECK_THROWS_AS(canonical_space(indiscrete_space(11)), Error);
}
