#include "catale/locales.hpp"

#include <algorithm>
#include <unordered_set>

namespace catale {

namespace {

constexpr Idx kMaxPoints = 64;
constexpr Idx kMaxMslSize = 2048;

std::string set_name(const std::vector<std::string>& names, Mask set) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < names.size(); ++i) {
    if (set >> i & 1) {
      if (!first) out += ",";
      out += names[i];
      first = false;
    }
  }
  return out + "}";
}

void sort_opens(std::vector<Mask>& opens) {
  std::sort(opens.begin(), opens.end(), [](Mask a, Mask b) {
    const int pa = __builtin_popcountll(a);
    const int pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
}

// Closure of a family under binary union, including the empty union.
std::vector<Mask> union_closure(std::vector<Mask> basis) {
  std::unordered_set<Mask> seen(basis.begin(), basis.end());
  seen.insert(0);
  std::vector<Mask> queue(seen.begin(), seen.end());
  for (size_t i = 0; i < queue.size(); ++i) {
    for (size_t j = 0; j < queue.size(); ++j) {
      const Mask u = queue[i] | queue[j];
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  sort_opens(out);
  return out;
}

}  // namespace

FinSpace::FinSpace(std::vector<std::string> points, std::vector<Mask> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  if (point_count() > kMaxPoints) {
    throw Error(ErrorKind::Bound, "space exceeds the point bound");
  }
  for (Mask u : opens_) {
    if ((u & ~full()) != 0) {
      throw Error(ErrorKind::Carrier, "open set mentions unknown points");
    }
  }
}

Mask FinSpace::full() const {
  return points_.size() == 64 ? ~Mask{0} : (Mask{1} << points_.size()) - 1;
}

bool FinSpace::is_open(Mask set) const {
  return std::find(opens_.begin(), opens_.end(), set) != opens_.end();
}

MeetSemilattice::MeetSemilattice(std::vector<std::string> elements,
                                 std::vector<bool> leq, Idx top)
    : elements_(std::move(elements)), leq_(std::move(leq)), top_(top) {
  if (size() > kMaxMslSize) {
    throw Error(ErrorKind::Bound, "semilattice exceeds the size bound");
  }
  if (leq_.size() != elements_.size() * elements_.size()) {
    throw Error(ErrorKind::Carrier, "order table size mismatch");
  }
  if (!elements_.empty() && (top_ < 0 || top_ >= size())) {
    throw Error(ErrorKind::Carrier, "top element out of range");
  }
}

Idx MeetSemilattice::meet(Idx a, Idx b) const {
  Idx best = kNone;
  for (Idx c = 0; c < size(); ++c) {
    if (!leq(c, a) || !leq(c, b)) continue;
    if (best == kNone || leq(best, c)) best = c;
  }
  if (best == kNone) return kNone;
  for (Idx c = 0; c < size(); ++c) {
    if (leq(c, a) && leq(c, b) && !leq(c, best)) return kNone;
  }
  return best;
}

Idx MeetSemilattice::join(Idx a, Idx b) const {
  Idx best = kNone;
  for (Idx c = 0; c < size(); ++c) {
    if (!leq(a, c) || !leq(b, c)) continue;
    if (best == kNone || leq(c, best)) best = c;
  }
  if (best == kNone) return kNone;
  for (Idx c = 0; c < size(); ++c) {
    if (leq(a, c) && leq(b, c) && !leq(best, c)) return kNone;
  }
  return best;
}

Idx MeetSemilattice::bottom() const {
  for (Idx c = 0; c < size(); ++c) {
    bool least = true;
    for (Idx d = 0; d < size() && least; ++d) {
      if (!leq(c, d)) least = false;
    }
    if (least) return c;
  }
  return kNone;
}

ValidationReport validate_space(const FinSpace& space) {
  ValidationReport report;
  const auto& opens = space.opens();
  const auto contains = [&](Mask u) {
    return std::find(opens.begin(), opens.end(), u) != opens.end();
  };
  if (!contains(0)) report.fail("empty set is not open");
  if (!contains(space.full())) report.fail("full set is not open");
  for (size_t i = 0; i < opens.size(); ++i) {
    for (size_t j = i; j < opens.size(); ++j) {
      if (!contains(opens[i] | opens[j])) {
        report.fail("union " + set_name(space.points(), opens[i] | opens[j]) +
                    " is missing");
      }
      if (!contains(opens[i] & opens[j])) {
        report.fail("intersection " +
                    set_name(space.points(), opens[i] & opens[j]) +
                    " is missing");
      }
    }
  }
  for (size_t i = 0; i < opens.size(); ++i) {
    for (size_t j = i + 1; j < opens.size(); ++j) {
      if (opens[i] == opens[j]) report.fail("duplicate open set");
    }
  }
  return report;
}

ValidationReport validate_msl(const MeetSemilattice& msl) {
  ValidationReport report;
  const Idx n = msl.size();
  if (n == 0) {
    report.fail("carrier is empty (no top element)");
    return report;
  }
  for (Idx a = 0; a < n; ++a) {
    if (!msl.leq(a, a)) report.fail("order not reflexive at " + msl.element_name(a));
  }
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      if (a != b && msl.leq(a, b) && msl.leq(b, a)) {
        report.fail("order not antisymmetric on " + msl.element_name(a) + "," +
                    msl.element_name(b));
      }
      for (Idx c = 0; c < n; ++c) {
        if (msl.leq(a, b) && msl.leq(b, c) && !msl.leq(a, c)) {
          report.fail("order not transitive via " + msl.element_name(b));
        }
      }
    }
  }
  for (Idx a = 0; a < n; ++a) {
    if (!msl.leq(a, msl.top())) {
      report.fail("top does not dominate " + msl.element_name(a));
    }
  }
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = a; b < n; ++b) {
      if (msl.meet(a, b) == kNone) {
        report.fail("meet of " + msl.element_name(a) + " and " +
                    msl.element_name(b) + " is missing");
      }
    }
  }
  return report;
}

ValidationReport validate_continuous(const ContinuousMap& map) {
  const FinSpace& src = *map.source;
  const FinSpace& dst = *map.target;
  if (map.map.size() != static_cast<size_t>(src.point_count())) {
    throw Error(ErrorKind::Carrier, "map does not cover the source points");
  }
  for (Idx v : map.map) {
    if (v < 0 || v >= dst.point_count()) {
      throw Error(ErrorKind::Carrier, "map value outside target points");
    }
  }
  ValidationReport report;
  for (Mask u : dst.opens()) {
    Mask preimage = 0;
    for (Idx x = 0; x < src.point_count(); ++x) {
      if (u >> map.map[x] & 1) preimage |= Mask{1} << x;
    }
    if (!src.is_open(preimage)) {
      report.fail("preimage of " + set_name(dst.points(), u) + " is not open");
    }
  }
  return report;
}

ValidationReport validate_msl_hom(const MslHom& hom) {
  const MeetSemilattice& src = *hom.source;
  const MeetSemilattice& dst = *hom.target;
  if (hom.map.size() != static_cast<size_t>(src.size())) {
    throw Error(ErrorKind::Carrier, "map does not cover the source carrier");
  }
  for (Idx v : hom.map) {
    if (v < 0 || v >= dst.size()) {
      throw Error(ErrorKind::Carrier, "map value outside target carrier");
    }
  }
  ValidationReport report;
  if (hom.map[src.top()] != dst.top()) report.fail("top not preserved");
  for (Idx a = 0; a < src.size(); ++a) {
    for (Idx b = a; b < src.size(); ++b) {
      const Idx m = src.meet(a, b);
      if (m == kNone) continue;
      if (dst.meet(hom.map[a], hom.map[b]) != hom.map[m]) {
        report.fail("meet of " + src.element_name(a) + "," +
                    src.element_name(b) + " not preserved");
      }
    }
  }
  return report;
}

MeetSemilattice opens(const FinSpace& space) {
  std::vector<Mask> family = space.opens();
  sort_opens(family);
  std::vector<std::string> names;
  names.reserve(family.size());
  for (Mask u : family) names.push_back(set_name(space.points(), u));
  const Idx n = static_cast<Idx>(family.size());
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  Idx top = kNone;
  for (Idx i = 0; i < n; ++i) {
    if (family[i] == space.full()) top = i;
    for (Idx j = 0; j < n; ++j) {
      leq[static_cast<size_t>(i) * n + j] = (family[i] & ~family[j]) == 0;
    }
  }
  return MeetSemilattice(std::move(names), std::move(leq), top);
}

namespace {

bool literal_point(const MeetSemilattice& msl, Mask p) {
  const Idx n = msl.size();
  if (p >> msl.top() & 1) return false;
  for (Idx a = 0; a < n; ++a) {
    for (Idx c = 0; c < n; ++c) {
      // downward closed
      if ((p >> c & 1) && msl.leq(a, c) && !(p >> a & 1)) return false;
      // a meet in P needs a factor in P
      const Idx m = msl.meet(a, c);
      if (m != kNone && (p >> m & 1) && !(p >> a & 1) && !(p >> c & 1)) {
        return false;
      }
    }
  }
  return true;
}

bool strict_point(const MeetSemilattice& msl, Mask p) {
  if (!literal_point(msl, p)) return false;
  const Idx bot = msl.bottom();
  if (bot != kNone && !(p >> bot & 1)) return false;
  for (Idx a = 0; a < msl.size(); ++a) {
    for (Idx c = 0; c < msl.size(); ++c) {
      if (!(p >> a & 1) || !(p >> c & 1)) continue;
      const Idx j = msl.join(a, c);
      if (j != kNone && !(p >> j & 1)) return false;
    }
  }
  return true;
}

}  // namespace

SpacePoints points(const MeetSemilattice& msl, PointVariant variant) {
  const Idx n = msl.size();
  std::vector<Mask> sets;
  // Every filter of a finite semilattice with top is principal, so the
  // candidate zero-sets are the complements of up-sets of single elements;
  // each is checked against the variant's conditions directly.
  for (Idx a = 0; a < n; ++a) {
    Mask p = 0;
    for (Idx x = 0; x < n; ++x) {
      if (!msl.leq(a, x)) p |= Mask{1} << x;
    }
    const bool keep = variant == PointVariant::literal ? literal_point(msl, p)
                                                       : strict_point(msl, p);
    if (keep) sets.push_back(p);
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

  if (sets.size() > static_cast<size_t>(kMaxPoints)) {
    throw Error(ErrorKind::Bound, "point space exceeds the point bound");
  }

  std::vector<std::string> names;
  names.reserve(sets.size());
  for (Mask p : sets) names.push_back(set_name(msl.elements(), p));

  // Basic opens: a-check = the points not containing a.
  std::vector<Mask> basis;
  for (Idx a = 0; a < n; ++a) {
    Mask u = 0;
    for (size_t i = 0; i < sets.size(); ++i) {
      if (!(sets[i] >> a & 1)) u |= Mask{1} << i;
    }
    basis.push_back(u);
  }
  SpacePoints result;
  result.space = FinSpace(std::move(names), union_closure(std::move(basis)));
  result.point_sets = std::move(sets);
  result.variant = variant;
  return result;
}

ContinuousMap unit_space(std::shared_ptr<const FinSpace> space,
                         PointVariant variant) {
  const FinSpace& x = *space;
  const MeetSemilattice lattice = opens(x);
  SpacePoints pts = points(lattice, variant);

  // Opens of X indexed as lattice elements, in the lattice's order.
  std::vector<Mask> open_sets(lattice.size());
  {
    std::vector<Mask> sorted = x.opens();
    sort_opens(sorted);
    open_sets = sorted;
  }

  ContinuousMap unit;
  unit.source = space;
  unit.target = std::make_shared<FinSpace>(pts.space);
  unit.map.resize(x.point_count());
  for (Idx p = 0; p < x.point_count(); ++p) {
    Mask hat = 0;
    for (Idx u = 0; u < lattice.size(); ++u) {
      if (!(open_sets[u] >> p & 1)) hat |= Mask{1} << u;
    }
    const auto it =
        std::find(pts.point_sets.begin(), pts.point_sets.end(), hat);
    if (it == pts.point_sets.end()) {
      throw Error(ErrorKind::Precondition,
                  "neighbourhood set of " + x.point_name(p) +
                      " fails the point conditions");
    }
    unit.map[p] = static_cast<Idx>(it - pts.point_sets.begin());
  }
  return unit;
}

MslHom counit_msl(std::shared_ptr<const MeetSemilattice> msl,
                  PointVariant variant) {
  const MeetSemilattice& a = *msl;
  SpacePoints pts = points(a, variant);
  const MeetSemilattice target = opens(pts.space);

  std::vector<Mask> target_sets = pts.space.opens();
  sort_opens(target_sets);

  MslHom counit;
  counit.source = msl;
  counit.target = std::make_shared<MeetSemilattice>(target);
  counit.map.resize(a.size());
  for (Idx e = 0; e < a.size(); ++e) {
    Mask check = 0;
    for (size_t i = 0; i < pts.point_sets.size(); ++i) {
      if (!(pts.point_sets[i] >> e & 1)) check |= Mask{1} << i;
    }
    const auto it = std::find(target_sets.begin(), target_sets.end(), check);
    if (it == target_sets.end()) {
      throw Error(ErrorKind::Precondition, "basic open escaped the closure");
    }
    counit.map[e] = static_cast<Idx>(it - target_sets.begin());
  }
  return counit;
}

bool is_sober(const FinSpace& space, PointVariant variant) {
  const ContinuousMap unit = unit_space(std::make_shared<FinSpace>(space), variant);
  const FinSpace& target = *unit.target;
  if (space.point_count() != target.point_count()) return false;
  std::vector<bool> hit(target.point_count(), false);
  for (Idx v : unit.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  // Bijective; homeomorphism iff the families of opens correspond.
  std::vector<Mask> images;
  for (Mask u : space.opens()) {
    Mask image = 0;
    for (Idx x = 0; x < space.point_count(); ++x) {
      if (u >> x & 1) image |= Mask{1} << unit.map[x];
    }
    images.push_back(image);
  }
  sort_opens(images);
  std::vector<Mask> target_opens = target.opens();
  sort_opens(target_opens);
  return images == target_opens;
}

bool is_spatial(const MeetSemilattice& msl, PointVariant variant) {
  const MslHom counit = counit_msl(std::make_shared<MeetSemilattice>(msl), variant);
  const MeetSemilattice& target = *counit.target;
  if (msl.size() != target.size()) return false;
  std::vector<bool> hit(target.size(), false);
  for (Idx v : counit.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  for (Idx a = 0; a < msl.size(); ++a) {
    for (Idx b = 0; b < msl.size(); ++b) {
      if (msl.leq(a, b) != target.leq(counit.map[a], counit.map[b])) {
        return false;
      }
    }
  }
  return true;
}

FinSpace soberify(const FinSpace& space, PointVariant variant) {
  return points(opens(space), variant).space;
}

MeetSemilattice spatialize(const MeetSemilattice& msl, PointVariant variant) {
  return opens(points(msl, variant).space);
}

bool is_frame(const MeetSemilattice& msl) {
  const Idx n = msl.size();
  if (msl.bottom() == kNone) return false;
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      if (msl.join(a, b) == kNone) return false;
    }
  }
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      for (Idx c = 0; c < n; ++c) {
        const Idx lhs = msl.meet(a, msl.join(b, c));
        const Idx rhs = msl.join(msl.meet(a, b), msl.meet(a, c));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

FinSpace kolmogorov_quotient(const FinSpace& space) {
  const Idx n = space.point_count();
  std::vector<Mask> profile(n, 0);
  for (size_t u = 0; u < space.opens().size(); ++u) {
    for (Idx x = 0; x < n; ++x) {
      if (space.opens()[u] >> x & 1) profile[x] |= Mask{1} << u;
    }
  }
  std::vector<Idx> class_of(n, kNone);
  std::vector<Idx> reps;
  for (Idx x = 0; x < n; ++x) {
    for (Idx r = 0; r < static_cast<Idx>(reps.size()); ++r) {
      if (profile[reps[r]] == profile[x]) class_of[x] = r;
    }
    if (class_of[x] == kNone) {
      class_of[x] = static_cast<Idx>(reps.size());
      reps.push_back(x);
    }
  }
  std::vector<std::string> names;
  for (Idx r : reps) names.push_back(space.point_name(r));
  std::vector<Mask> opens;
  for (Mask u : space.opens()) {
    Mask image = 0;
    for (Idx x = 0; x < n; ++x) {
      if (u >> x & 1) image |= Mask{1} << class_of[x];
    }
    opens.push_back(image);
  }
  sort_opens(opens);
  return FinSpace(std::move(names), std::move(opens));
}

SierpinskiMaps sierpinski_maps(const FinSpace& space) {
  SierpinskiMaps result;
  result.sierpinski = std::make_shared<FinSpace>(
      FinSpace({"0", "1"}, {0b00, 0b10, 0b11}));
  const Idx n = space.point_count();
  const Mask full = space.full();
  for (Mask chi = 0;; ++chi) {
    if (space.is_open(chi)) {
      ContinuousMap map;
      map.source = std::make_shared<FinSpace>(space);
      map.target = result.sierpinski;
      map.map.resize(n);
      for (Idx x = 0; x < n; ++x) map.map[x] = (chi >> x) & 1;
      result.maps.push_back(std::move(map));
      result.characteristic.push_back(chi);
    }
    if (chi == full) break;
  }
  std::vector<Mask> family = space.opens();
  sort_opens(family);
  std::vector<Mask> classified = result.characteristic;
  sort_opens(classified);
  result.bijects_with_opens = family == classified;
  return result;
}

}  // namespace catale
