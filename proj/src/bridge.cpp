#include "catale/bridge.hpp"

#include <algorithm>

namespace catale {

PartialSemigroup cat_to_psg(const FinCategory& cat) {
  std::vector<std::string> elements;
  elements.reserve(cat.morphism_count());
  for (const Morphism& m : cat.morphisms()) elements.push_back(m.name);
  const Idx n = cat.morphism_count();
  std::vector<Idx> table(static_cast<size_t>(n) * n, kNone);
  for (Idx g = 0; g < n; ++g) {
    for (Idx f = 0; f < n; ++f) {
      if (cat.composable(g, f)) {
        table[static_cast<size_t>(g) * n + f] = cat.compose(g, f);
      }
    }
  }
  return PartialSemigroup(std::move(elements), std::move(table));
}

PsgHom cat_to_psg_hom(const Functor& fun) {
  PsgHom hom;
  hom.source = std::make_shared<PartialSemigroup>(cat_to_psg(*fun.source));
  hom.target = std::make_shared<PartialSemigroup>(cat_to_psg(*fun.target));
  hom.map = fun.mor_map;
  return hom;
}

Idx PsgCatResult::find_triple(Idx a, Idx b, Idx f) const {
  const Idx pa = idem_position[a];
  const Idx pb = idem_position[b];
  if (pa == kNone || pb == kNone) return kNone;
  const size_t k = object_idempotent.size();
  const size_t n = idem_position.size();
  return lookup[(static_cast<size_t>(pa) * k + pb) * n + f];
}

PsgCatResult psg_to_cat(std::shared_ptr<const PartialSemigroup> psg) {
  const PartialSemigroup& a = *psg;
  PsgCatResult result;
  result.object_idempotent = idempotents_psg(a);
  const auto& idems = result.object_idempotent;
  const Idx k = static_cast<Idx>(idems.size());
  const Idx n = a.size();

  result.idem_position.assign(n, kNone);
  for (Idx i = 0; i < k; ++i) result.idem_position[idems[i]] = i;

  std::vector<std::string> objects;
  for (Idx e : idems) objects.push_back(a.element_name(e));

  std::vector<Morphism> morphisms;
  result.lookup.assign(static_cast<size_t>(k) * k * std::max<Idx>(n, 1), kNone);
  const auto slot = [&](Idx pa, Idx pb, Idx f) -> Idx& {
    return result.lookup[(static_cast<size_t>(pa) * k + pb) * n + f];
  };
  for (Idx pa = 0; pa < k; ++pa) {
    for (Idx pb = 0; pb < k; ++pb) {
      for (Idx f = 0; f < n; ++f) {
        const Idx fa = a.product(f, idems[pa]);
        if (fa == kNone || a.product(idems[pb], fa) != f) continue;
        slot(pa, pb, f) = static_cast<Idx>(morphisms.size());
        morphisms.push_back({"<" + objects[pa] + "," + objects[pb] + "," +
                                 a.element_name(f) + ">",
                             pa, pb});
        result.triples.push_back({idems[pa], idems[pb], f});
      }
    }
  }

  std::vector<Idx> identity(k);
  for (Idx pa = 0; pa < k; ++pa) identity[pa] = slot(pa, pa, idems[pa]);

  const Idx m = static_cast<Idx>(morphisms.size());
  std::vector<Idx> compose(static_cast<size_t>(m) * m, kNone);
  for (Idx g = 0; g < m; ++g) {
    for (Idx f = 0; f < m; ++f) {
      if (morphisms[g].dom != morphisms[f].cod) continue;
      const Idx value = a.product(result.triples[g][2], result.triples[f][2]);
      compose[static_cast<size_t>(g) * m + f] =
          slot(morphisms[f].dom, morphisms[g].cod, value);
    }
  }

  result.category = std::make_shared<FinCategory>(
      std::move(objects), std::move(morphisms), std::move(identity),
      std::move(compose));
  return result;
}

CataleCatResult catale_to_cat(std::shared_ptr<const PartialSemigroup> psg) {
  const PartialSemigroup& a = *psg;
  const CataleReport check = is_catale(a);
  if (!check.catale) {
    throw Error(ErrorKind::Precondition,
                "catale_to_cat requires a catale: " +
                    (check.failures.empty() ? std::string("unknown")
                                            : check.failures.front()));
  }
  CataleCatResult result;
  result.object_identity = identities_psg(a);
  const Idx k = static_cast<Idx>(result.object_identity.size());
  std::vector<Idx> obj_of_identity(a.size(), kNone);
  for (Idx i = 0; i < k; ++i) obj_of_identity[result.object_identity[i]] = i;

  std::vector<std::string> objects;
  for (Idx e : result.object_identity) objects.push_back(a.element_name(e));
  std::vector<Morphism> morphisms;
  morphisms.reserve(a.size());
  for (Idx f = 0; f < a.size(); ++f) {
    morphisms.push_back({a.element_name(f), obj_of_identity[dom_of(a, f)],
                         obj_of_identity[cod_of(a, f)]});
  }
  std::vector<Idx> identity(k);
  for (Idx i = 0; i < k; ++i) identity[i] = result.object_identity[i];

  const Idx m = static_cast<Idx>(morphisms.size());
  std::vector<Idx> compose(static_cast<size_t>(m) * m, kNone);
  for (Idx g = 0; g < m; ++g) {
    for (Idx f = 0; f < m; ++f) {
      if (morphisms[g].dom != morphisms[f].cod) continue;
      compose[static_cast<size_t>(g) * m + f] = a.product(g, f);
    }
  }
  result.category = std::make_shared<FinCategory>(
      std::move(objects), std::move(morphisms), std::move(identity),
      std::move(compose));
  return result;
}

UnitCatResult unit_cat(std::shared_ptr<const FinCategory> cat) {
  const FinCategory& c = *cat;
  UnitCatResult result;
  result.completion =
      psg_to_cat(std::make_shared<PartialSemigroup>(cat_to_psg(c)));

  Functor unit;
  unit.source = cat;
  unit.target = result.completion.category;
  unit.obj_map.resize(c.object_count());
  unit.mor_map.resize(c.morphism_count());
  for (Idx x = 0; x < c.object_count(); ++x) {
    unit.obj_map[x] = result.completion.idem_position[c.identity_of(x)];
  }
  for (Idx h = 0; h < c.morphism_count(); ++h) {
    unit.mor_map[h] = result.completion.find_triple(
        c.identity_of(c.dom(h)), c.identity_of(c.cod(h)), h);
  }
  result.unit = std::move(unit);
  return result;
}

CounitPsgResult counit_psg(std::shared_ptr<const PartialSemigroup> psg) {
  CounitPsgResult result;
  result.induced = psg_to_cat(psg);
  result.tensor =
      std::make_shared<PartialSemigroup>(cat_to_psg(*result.induced.category));
  PsgHom hom;
  hom.source = result.tensor;
  hom.target = psg;
  hom.map.reserve(result.induced.triples.size());
  for (const auto& triple : result.induced.triples) hom.map.push_back(triple[2]);
  result.counit = std::move(hom);
  return result;
}

namespace {

// Sum over object assignments of the product of per-morphism candidate
// counts, saturating at the bound sentinel.
uint64_t functor_candidate_count(const FinCategory& src, const FinCategory& dst,
                                 uint64_t cap) {
  if (src.object_count() == 0) return 1;
  std::vector<std::vector<Idx>> hom_sizes(dst.object_count(),
                                          std::vector<Idx>(dst.object_count()));
  for (Idx x = 0; x < dst.object_count(); ++x) {
    for (Idx y = 0; y < dst.object_count(); ++y) {
      hom_sizes[x][y] = static_cast<Idx>(dst.hom(x, y).size());
    }
  }
  uint64_t total = 0;
  std::vector<Idx> assign(src.object_count(), 0);
  if (dst.object_count() == 0) return 0;
  while (true) {
    uint64_t product = 1;
    for (Idx f = 0; f < src.morphism_count() && product <= cap; ++f) {
      if (src.is_identity(f)) continue;
      product *= static_cast<uint64_t>(
          hom_sizes[assign[src.dom(f)]][assign[src.cod(f)]]);
      if (product == 0) break;
    }
    total += std::max<uint64_t>(product, 1);
    if (total > cap) return total;
    Idx pos = src.object_count() - 1;
    while (pos >= 0 && assign[pos] == dst.object_count() - 1) assign[pos--] = 0;
    if (pos < 0) break;
    ++assign[pos];
  }
  return total;
}

}  // namespace

std::vector<Functor> enumerate_functors(std::shared_ptr<const FinCategory> src,
                                        std::shared_ptr<const FinCategory> dst,
                                        uint64_t max_search) {
  const FinCategory& c = *src;
  const FinCategory& d = *dst;
  std::vector<Functor> out;
  if (c.object_count() > 0 && d.object_count() == 0) return out;
  if (functor_candidate_count(c, d, max_search) > max_search) {
    throw Error(ErrorKind::Bound, "functor enumeration exceeds the search bound");
  }

  // Pairs whose composite is a given morphism, for deferred checks.
  std::vector<std::vector<std::pair<Idx, Idx>>> by_composite(c.morphism_count());
  for (Idx g = 0; g < c.morphism_count(); ++g) {
    for (Idx f = 0; f < c.morphism_count(); ++f) {
      const Idx gf = c.composable(g, f) ? c.compose(g, f) : kNone;
      if (gf != kNone) by_composite[gf].emplace_back(g, f);
    }
  }

  std::vector<Idx> obj_map(c.object_count(), 0);
  std::vector<Idx> mor_map(c.morphism_count(), kNone);

  const auto consistent = [&](Idx m) {
    for (Idx f = 0; f <= m; ++f) {
      if (mor_map[f] == kNone) continue;
      for (const auto& [g, h] : {std::pair<Idx, Idx>{m, f}, {f, m}}) {
        if (!c.composable(g, h)) continue;
        const Idx gf = c.compose(g, h);
        if (gf == kNone || gf > m || mor_map[gf] == kNone) continue;
        if (d.compose(mor_map[g], mor_map[h]) != mor_map[gf]) return false;
      }
    }
    for (const auto& [g, h] : by_composite[m]) {
      if (g <= m && h <= m && mor_map[g] != kNone && mor_map[h] != kNone) {
        if (d.compose(mor_map[g], mor_map[h]) != mor_map[m]) return false;
      }
    }
    return true;
  };

  const auto assign_morphisms = [&](auto&& self, Idx m) -> void {
    if (m == c.morphism_count()) {
      Functor fun;
      fun.source = src;
      fun.target = dst;
      fun.obj_map = obj_map;
      fun.mor_map = mor_map;
      out.push_back(std::move(fun));
      return;
    }
    if (c.is_identity(m)) {
      mor_map[m] = d.identity_of(obj_map[c.dom(m)]);
      if (consistent(m)) self(self, m + 1);
      mor_map[m] = kNone;
      return;
    }
    for (Idx candidate : d.hom(obj_map[c.dom(m)], obj_map[c.cod(m)])) {
      mor_map[m] = candidate;
      if (consistent(m)) self(self, m + 1);
    }
    mor_map[m] = kNone;
  };

  if (c.object_count() == 0) {
    Functor fun;
    fun.source = src;
    fun.target = dst;
    out.push_back(std::move(fun));
    return out;
  }

  while (true) {
    assign_morphisms(assign_morphisms, 0);
    Idx pos = c.object_count() - 1;
    while (pos >= 0 && obj_map[pos] == d.object_count() - 1) obj_map[pos--] = 0;
    if (pos < 0) break;
    ++obj_map[pos];
  }
  return out;
}

std::vector<PsgHom> enumerate_psg_homs(
    std::shared_ptr<const PartialSemigroup> src,
    std::shared_ptr<const PartialSemigroup> dst, uint64_t max_search) {
  const PartialSemigroup& s = *src;
  const PartialSemigroup& t = *dst;
  std::vector<PsgHom> out;
  if (s.size() > 0 && t.size() == 0) return out;

  uint64_t candidates = 1;
  for (Idx i = 0; i < s.size(); ++i) {
    candidates *= static_cast<uint64_t>(t.size());
    if (candidates > max_search) {
      throw Error(ErrorKind::Bound, "hom enumeration exceeds the search bound");
    }
  }

  std::vector<std::vector<std::pair<Idx, Idx>>> by_product(s.size());
  for (Idx a = 0; a < s.size(); ++a) {
    for (Idx b = 0; b < s.size(); ++b) {
      const Idx ab = s.product(a, b);
      if (ab != kNone) by_product[ab].emplace_back(a, b);
    }
  }

  std::vector<Idx> map(s.size(), kNone);
  const auto consistent = [&](Idx m) {
    for (Idx f = 0; f <= m; ++f) {
      if (map[f] == kNone) continue;
      for (const auto& [a, b] : {std::pair<Idx, Idx>{m, f}, {f, m}}) {
        const Idx ab = s.product(a, b);
        if (ab == kNone) continue;
        const Idx image = t.product(map[a], map[b]);
        if (image == kNone) return false;
        if (ab <= m && map[ab] != kNone && image != map[ab]) return false;
      }
    }
    for (const auto& [a, b] : by_product[m]) {
      if (a <= m && b <= m && map[a] != kNone && map[b] != kNone) {
        if (t.product(map[a], map[b]) != map[m]) return false;
      }
    }
    return true;
  };

  const auto recurse = [&](auto&& self, Idx m) -> void {
    if (m == s.size()) {
      PsgHom hom;
      hom.source = src;
      hom.target = dst;
      hom.map = map;
      out.push_back(std::move(hom));
      return;
    }
    for (Idx candidate = 0; candidate < t.size(); ++candidate) {
      map[m] = candidate;
      if (consistent(m)) self(self, m + 1);
    }
    map[m] = kNone;
  };
  recurse(recurse, 0);
  return out;
}

Adjunction::Adjunction(std::shared_ptr<const FinCategory> cat,
                       std::shared_ptr<const PartialSemigroup> psg)
    : cat_(std::move(cat)), psg_(std::move(psg)) {
  tensor_ = std::make_shared<PartialSemigroup>(cat_to_psg(*cat_));
  up_ = psg_to_cat(psg_);
}

PsgHom Adjunction::transpose_right(const Functor& fun) const {
  PsgHom hom;
  hom.source = tensor_;
  hom.target = psg_;
  hom.map.reserve(fun.mor_map.size());
  for (Idx image : fun.mor_map) hom.map.push_back(up_.triples[image][2]);
  return hom;
}

Functor Adjunction::transpose_left(const PsgHom& hom) const {
  const FinCategory& c = *cat_;
  Functor fun;
  fun.source = cat_;
  fun.target = up_.category;
  fun.obj_map.resize(c.object_count());
  fun.mor_map.resize(c.morphism_count());
  for (Idx x = 0; x < c.object_count(); ++x) {
    const Idx image = hom.map[c.identity_of(x)];
    const Idx pos = up_.idem_position[image];
    if (pos == kNone) {
      throw Error(ErrorKind::Precondition,
                  "hom image of an identity is not idempotent");
    }
    fun.obj_map[x] = pos;
  }
  for (Idx h = 0; h < c.morphism_count(); ++h) {
    const Idx triple =
        up_.find_triple(hom.map[c.identity_of(c.dom(h))],
                        hom.map[c.identity_of(c.cod(h))], hom.map[h]);
    if (triple == kNone) {
      throw Error(ErrorKind::Precondition,
                  "hom image is not framed by its identity images");
    }
    fun.mor_map[h] = triple;
  }
  return fun;
}

AdjunctionReport verify_adjunction(std::shared_ptr<const FinCategory> cat,
                                   std::shared_ptr<const PartialSemigroup> psg,
                                   uint64_t max_search) {
  Adjunction adj(cat, psg);
  const auto functors = enumerate_functors(cat, adj.points().category, max_search);
  const auto homs = enumerate_psg_homs(adj.tensor(), psg, max_search);

  AdjunctionReport report;
  report.functor_count = functors.size();
  report.hom_count = homs.size();
  report.bijective = true;
  if (functors.size() != homs.size()) {
    report.bijective = false;
    report.mismatches.push_back("hom-set cardinalities differ");
  }

  std::vector<std::vector<Idx>> hom_maps;
  hom_maps.reserve(homs.size());
  for (const auto& hom : homs) hom_maps.push_back(hom.map);
  std::sort(hom_maps.begin(), hom_maps.end());

  std::vector<std::vector<Idx>> images;
  for (const auto& fun : functors) {
    const PsgHom down = adj.transpose_right(fun);
    if (!std::binary_search(hom_maps.begin(), hom_maps.end(), down.map)) {
      report.bijective = false;
      report.mismatches.push_back("transposed functor is not a valid hom");
      continue;
    }
    const Functor back = adj.transpose_left(down);
    if (back.obj_map != fun.obj_map || back.mor_map != fun.mor_map) {
      report.bijective = false;
      report.mismatches.push_back("functor round trip is not the identity");
    }
    images.push_back(down.map);
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
    report.bijective = false;
    report.mismatches.push_back("transpose is not injective");
  }
  if (images != hom_maps) {
    report.bijective = false;
    report.mismatches.push_back("transpose is not surjective onto the homs");
  }
  for (const auto& hom : homs) {
    const Functor up = adj.transpose_left(hom);
    const PsgHom down = adj.transpose_right(up);
    if (down.map != hom.map) {
      report.bijective = false;
      report.mismatches.push_back("hom round trip is not the identity");
    }
  }
  return report;
}

TautTransposeResult taut_transpose(const PsgHom& hom,
                                   std::shared_ptr<const PartialSemigroup> psg,
                                   std::shared_ptr<const FinCategory> cat) {
  const PartialSemigroup& a = *psg;
  const FinCategory& c = *cat;
  if (!is_taut(c)) {
    throw Error(ErrorKind::Precondition, "taut_transpose requires a taut target");
  }
  TautTransposeResult result;
  result.source = catale_to_cat(psg);  // throws unless a catale
  if (hom.map.size() != static_cast<size_t>(a.size())) {
    throw Error(ErrorKind::Carrier, "hom does not cover the catale");
  }

  const auto& identities = result.source.object_identity;
  std::vector<Splitting> splittings(identities.size());
  for (size_t i = 0; i < identities.size(); ++i) {
    const Idx image = hom.map[identities[i]];
    const auto split = find_splitting(c, image);
    if (!split) {
      throw Error(ErrorKind::Precondition,
                  "image idempotent does not split in the target");
    }
    splittings[i] = *split;
  }

  Functor fun;
  fun.source = result.source.category;
  fun.target = cat;
  fun.obj_map.resize(identities.size());
  fun.mor_map.resize(a.size());
  for (size_t i = 0; i < identities.size(); ++i) {
    fun.obj_map[i] = splittings[i].through;
  }
  for (Idx f = 0; f < a.size(); ++f) {
    const Idx da = result.source.category->dom(f);
    const Idx cb = result.source.category->cod(f);
    // q_cod * G(f) * i_dom between the splitting objects.
    const Idx moved = c.compose(splittings[cb].retraction,
                                c.compose(hom.map[f], splittings[da].section));
    fun.mor_map[f] = moved;
  }

  result.reconstruction_preserves_identities = true;
  for (size_t i = 0; i < identities.size(); ++i) {
    const Idx image = fun.mor_map[identities[i]];
    if (image != c.identity_of(fun.obj_map[i])) {
      result.reconstruction_preserves_identities = false;
    }
  }
  result.round_trip_equal = fun.mor_map == hom.map;
  result.functor = std::move(fun);
  return result;
}

EquivalenceReport verify_equivalence_cat(std::shared_ptr<const FinCategory> cat) {
  const FinCategory& c = *cat;
  if (!is_taut(c)) {
    throw Error(ErrorKind::Precondition, "verify_equivalence requires a taut category");
  }
  EquivalenceReport report;
  const auto tensor = std::make_shared<PartialSemigroup>(cat_to_psg(c));
  const CataleCatResult induced = catale_to_cat(tensor);

  // Counit: identities of the morphism semigroup name the original objects.
  Functor counit;
  counit.source = induced.category;
  counit.target = cat;
  counit.obj_map.resize(induced.object_identity.size());
  for (size_t i = 0; i < induced.object_identity.size(); ++i) {
    counit.obj_map[i] = c.dom(induced.object_identity[i]);
  }
  counit.mor_map.resize(c.morphism_count());
  for (Idx f = 0; f < c.morphism_count(); ++f) counit.mor_map[f] = f;
  report.counit_is_isomorphism = is_isomorphism(counit);
  if (!report.counit_is_isomorphism) {
    report.violations.push_back("counit is not an isomorphism of categories");
  }

  const PartialSemigroup back = cat_to_psg(*induced.category);
  report.unit_is_isomorphism = back.table() == tensor->table();
  if (!report.unit_is_isomorphism) {
    report.violations.push_back("unit is not a semigroup isomorphism");
  }
  return report;
}

EquivalenceReport verify_equivalence_psg(
    std::shared_ptr<const PartialSemigroup> psg) {
  EquivalenceReport report;
  const CataleCatResult induced = catale_to_cat(psg);  // throws if not a catale

  // Unit: the carrier of cat_to_psg(catale_to_cat(A)) is the carrier of A.
  const PartialSemigroup back = cat_to_psg(*induced.category);
  report.unit_is_isomorphism = back.table() == psg->table();
  if (!report.unit_is_isomorphism) {
    report.violations.push_back("unit is not a semigroup isomorphism");
  }

  const auto tensor = std::make_shared<PartialSemigroup>(std::move(back));
  const CataleCatResult again = catale_to_cat(tensor);
  Functor counit;
  counit.source = again.category;
  counit.target = induced.category;
  counit.obj_map.resize(again.object_identity.size());
  for (size_t i = 0; i < again.object_identity.size(); ++i) {
    counit.obj_map[i] = induced.category->dom(again.object_identity[i]);
  }
  counit.mor_map.resize(induced.category->morphism_count());
  for (Idx f = 0; f < induced.category->morphism_count(); ++f) {
    counit.mor_map[f] = f;
  }
  report.counit_is_isomorphism = is_isomorphism(counit);
  if (!report.counit_is_isomorphism) {
    report.violations.push_back("counit is not an isomorphism of categories");
  }
  return report;
}

}  // namespace catale
