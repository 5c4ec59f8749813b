#include "catale/fincat.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace catale {

namespace {

// Flat composition tables keep everything O(1); beyond this many morphisms
// the table would not fit in memory and callers get a loud failure instead.
constexpr Idx kMaxMorphisms = 5000;

}  // namespace

FinCategory::FinCategory(std::vector<std::string> objects,
                         std::vector<Morphism> morphisms,
                         std::vector<Idx> identity,
                         std::vector<Idx> compose_table)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      compose_(std::move(compose_table)) {
  const size_t n = morphisms_.size();
  if (static_cast<Idx>(n) > kMaxMorphisms) {
    throw Error(ErrorKind::Bound, "category exceeds the composition table bound");
  }
  if (identity_.size() != objects_.size()) {
    throw Error(ErrorKind::Carrier, "identity table size does not match objects");
  }
  if (compose_.size() != n * n) {
    throw Error(ErrorKind::Carrier, "composition table size mismatch");
  }
  for (const Morphism& m : morphisms_) {
    if (m.dom < 0 || m.dom >= object_count() || m.cod < 0 ||
        m.cod >= object_count()) {
      throw Error(ErrorKind::Carrier, "morphism endpoint out of range");
    }
  }
  for (Idx v : identity_) {
    if (v < 0 || v >= morphism_count()) {
      throw Error(ErrorKind::Carrier, "identity entry out of range");
    }
  }
  for (Idx v : compose_) {
    if (v != kNone && (v < 0 || v >= morphism_count())) {
      throw Error(ErrorKind::Carrier, "composition entry out of range");
    }
  }
}

FinCategory FinCategory::empty() { return FinCategory({}, {}, {}, {}); }

bool FinCategory::is_identity(Idx f) const {
  return identity_[morphisms_[f].dom] == f && morphisms_[f].dom == morphisms_[f].cod;
}

std::vector<Idx> FinCategory::hom(Idx x, Idx y) const {
  std::vector<Idx> out;
  for (Idx f = 0; f < morphism_count(); ++f) {
    if (dom(f) == x && cod(f) == y) out.push_back(f);
  }
  return out;
}

std::vector<Idx> FinCategory::endomorphisms(Idx x) const { return hom(x, x); }

ValidationReport validate_category(const FinCategory& cat) {
  ValidationReport report;
  const Idx n = cat.morphism_count();
  const auto mname = [&](Idx f) { return cat.morphism(f).name; };

  for (Idx x = 0; x < cat.object_count(); ++x) {
    const Idx id = cat.identity_of(x);
    if (cat.dom(id) != x || cat.cod(id) != x) {
      report.fail("identity of " + cat.object_name(x) +
                  " is not an endomorphism of it");
    }
  }
  for (Idx g = 0; g < n; ++g) {
    for (Idx f = 0; f < n; ++f) {
      const Idx gf = cat.compose(g, f);
      if (cat.composable(g, f)) {
        if (gf == kNone) {
          report.fail("composable pair (" + mname(g) + "," + mname(f) +
                      ") missing");
        } else if (cat.dom(gf) != cat.dom(f) || cat.cod(gf) != cat.cod(g)) {
          report.fail("composite " + mname(g) + "*" + mname(f) +
                      " has wrong endpoints");
        }
      } else if (gf != kNone) {
        report.fail("non-composable pair (" + mname(g) + "," + mname(f) +
                    ") has an entry");
      }
    }
  }
  for (Idx f = 0; f < n; ++f) {
    const Idx left = cat.compose(cat.identity_of(cat.cod(f)), f);
    const Idx right = cat.compose(f, cat.identity_of(cat.dom(f)));
    if (left != kNone && left != f) {
      report.fail("left identity law fails on " + mname(f));
    }
    if (right != kNone && right != f) {
      report.fail("right identity law fails on " + mname(f));
    }
  }
  for (Idx h = 0; h < n; ++h) {
    for (Idx g = 0; g < n; ++g) {
      if (!cat.composable(h, g)) continue;
      const Idx hg = cat.compose(h, g);
      if (hg == kNone) continue;
      for (Idx f = 0; f < n; ++f) {
        if (!cat.composable(g, f)) continue;
        const Idx gf = cat.compose(g, f);
        if (gf == kNone) continue;
        const Idx a = cat.compose(hg, f);
        const Idx b = cat.compose(h, gf);
        if (a != kNone && b != kNone && a != b) {
          report.fail("associativity fails on (" + mname(h) + "," + mname(g) +
                      "," + mname(f) + ")");
        }
      }
    }
  }
  return report;
}

std::vector<Idx> idempotents(const FinCategory& cat) {
  std::vector<Idx> out;
  for (Idx f = 0; f < cat.morphism_count(); ++f) {
    if (cat.dom(f) == cat.cod(f) && cat.compose(f, f) == f) out.push_back(f);
  }
  return out;
}

IdempotentPreorder idempotent_preorder(const FinCategory& cat) {
  IdempotentPreorder order;
  order.idempotents = idempotents(cat);
  const size_t k = order.idempotents.size();
  order.leq.assign(k, std::vector<bool>(k, false));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      const Idx phi = order.idempotents[i];
      const Idx psi = order.idempotents[j];
      order.leq[i][j] =
          cat.dom(phi) == cat.dom(psi) && cat.compose(phi, psi) == phi;
    }
  }
  order.reflexive = true;
  order.transitive = true;
  for (size_t i = 0; i < k; ++i) {
    if (!order.leq[i][i]) order.reflexive = false;
    for (size_t j = 0; j < k; ++j) {
      for (size_t l = 0; l < k; ++l) {
        if (order.leq[i][j] && order.leq[j][l] && !order.leq[i][l]) {
          order.transitive = false;
        }
      }
    }
  }
  return order;
}

std::optional<Splitting> find_splitting(const FinCategory& cat, Idx phi) {
  if (cat.dom(phi) != cat.cod(phi) || cat.compose(phi, phi) != phi) {
    throw Error(ErrorKind::Precondition,
                "find_splitting requires an idempotent");
  }
  const Idx x = cat.dom(phi);
  if (phi == cat.identity_of(x)) {
    // Identities split through their own object.
    return Splitting{phi, x, phi, phi};
  }
  for (Idx y = 0; y < cat.object_count(); ++y) {
    for (Idx q = 0; q < cat.morphism_count(); ++q) {
      if (cat.dom(q) != x || cat.cod(q) != y) continue;
      for (Idx i = 0; i < cat.morphism_count(); ++i) {
        if (cat.dom(i) != y || cat.cod(i) != x) continue;
        if (cat.compose(i, q) == phi &&
            cat.compose(q, i) == cat.identity_of(y)) {
          return Splitting{phi, y, q, i};
        }
      }
    }
  }
  return std::nullopt;
}

AbsoluteCompleteness is_absolutely_complete(const FinCategory& cat) {
  for (Idx phi : idempotents(cat)) {
    if (!find_splitting(cat, phi)) return {false, phi};
  }
  return {true, kNone};
}

KaroubiResult karoubi(std::shared_ptr<const FinCategory> cat) {
  const FinCategory& c = *cat;
  KaroubiResult result;
  result.object_idempotent = idempotents(c);
  const auto& idems = result.object_idempotent;
  const Idx k = static_cast<Idx>(idems.size());

  std::vector<std::string> objects;
  objects.reserve(k);
  for (Idx phi : idems) objects.push_back(c.morphism(phi).name);

  std::vector<Morphism> morphisms;
  std::vector<Idx> mor_index(
      static_cast<size_t>(k) * k * std::max<Idx>(c.morphism_count(), 1), kNone);
  const auto slot = [&](Idx a, Idx b, Idx f) -> Idx& {
    return mor_index[(static_cast<size_t>(a) * k + b) * c.morphism_count() + f];
  };
  for (Idx a = 0; a < k; ++a) {
    for (Idx b = 0; b < k; ++b) {
      const Idx phi = idems[a];
      const Idx psi = idems[b];
      for (Idx f = 0; f < c.morphism_count(); ++f) {
        if (c.dom(f) != c.dom(phi) || c.cod(f) != c.dom(psi)) continue;
        const Idx fp = c.compose(f, phi);
        if (fp == kNone || c.compose(psi, fp) != f) continue;
        slot(a, b, f) = static_cast<Idx>(morphisms.size());
        morphisms.push_back({"<" + objects[a] + "," + objects[b] + "," +
                                 c.morphism(f).name + ">",
                             a, b});
        result.triples.push_back({idems[a], idems[b], f});
      }
    }
  }

  std::vector<Idx> identity(k);
  for (Idx a = 0; a < k; ++a) identity[a] = slot(a, a, idems[a]);

  const Idx m = static_cast<Idx>(morphisms.size());
  std::vector<Idx> compose(static_cast<size_t>(m) * m, kNone);
  for (Idx g = 0; g < m; ++g) {
    for (Idx f = 0; f < m; ++f) {
      if (morphisms[g].dom != morphisms[f].cod) continue;
      const auto& tg = result.triples[g];
      const auto& tf = result.triples[f];
      const Idx comp = c.compose(tg[2], tf[2]);
      compose[static_cast<size_t>(g) * m + f] =
          slot(morphisms[f].dom, morphisms[g].cod, comp);
    }
  }

  result.category = std::make_shared<FinCategory>(
      std::move(objects), std::move(morphisms), std::move(identity),
      std::move(compose));

  Functor embed;
  embed.source = cat;
  embed.target = result.category;
  embed.obj_map.resize(c.object_count());
  embed.mor_map.resize(c.morphism_count());
  std::vector<Idx> idem_pos(c.morphism_count(), kNone);
  for (Idx a = 0; a < k; ++a) idem_pos[idems[a]] = a;
  for (Idx x = 0; x < c.object_count(); ++x) {
    embed.obj_map[x] = idem_pos[c.identity_of(x)];
  }
  for (Idx f = 0; f < c.morphism_count(); ++f) {
    embed.mor_map[f] =
        slot(idem_pos[c.identity_of(c.dom(f))], idem_pos[c.identity_of(c.cod(f))], f);
  }
  result.embedding = std::move(embed);
  return result;
}

namespace {

// First inverse of u in enumeration order (unique when u is invertible).
Idx find_inverse(const FinCategory& cat, Idx u) {
  const Idx x = cat.dom(u);
  const Idx y = cat.cod(u);
  for (Idx v = 0; v < cat.morphism_count(); ++v) {
    if (cat.dom(v) != y || cat.cod(v) != x) continue;
    if (cat.compose(v, u) == cat.identity_of(x) &&
        cat.compose(u, v) == cat.identity_of(y)) {
      return v;
    }
  }
  return kNone;
}

std::optional<IsoWitness> find_iso(const FinCategory& cat, Idx x, Idx y) {
  for (Idx u = 0; u < cat.morphism_count(); ++u) {
    if (cat.dom(u) != x || cat.cod(u) != y) continue;
    const Idx v = find_inverse(cat, u);
    if (v != kNone) return IsoWitness{u, v};
  }
  return std::nullopt;
}

}  // namespace

IsoClasses iso_classes(const FinCategory& cat) {
  IsoClasses result;
  const Idx n = cat.object_count();
  result.class_of.assign(n, kNone);
  result.witness.assign(n, std::vector<std::optional<IsoWitness>>(n));
  for (Idx x = 0; x < n; ++x) {
    for (Idx y = 0; y < n; ++y) {
      result.witness[x][y] = find_iso(cat, x, y);
    }
  }
  Idx next_class = 0;
  for (Idx x = 0; x < n; ++x) {
    if (result.class_of[x] != kNone) continue;
    result.class_of[x] = next_class;
    result.classes.push_back({x});
    for (Idx y = x + 1; y < n; ++y) {
      if (result.class_of[y] == kNone && result.witness[x][y].has_value()) {
        result.class_of[y] = next_class;
        result.classes.back().push_back(y);
      }
    }
    ++next_class;
  }
  return result;
}

SkeletalCheck is_skeletal(const FinCategory& cat) {
  const IsoClasses classes = iso_classes(cat);
  for (const auto& cls : classes.classes) {
    if (cls.size() > 1) return {false, cls[0], cls[1]};
  }
  return {true, kNone, kNone};
}

SkeletonResult skeleton(std::shared_ptr<const FinCategory> cat) {
  const FinCategory& c = *cat;
  const IsoClasses classes = iso_classes(c);

  SkeletonChoice choice;
  choice.class_of = classes.class_of;
  choice.representative.reserve(classes.classes.size());
  for (const auto& cls : classes.classes) choice.representative.push_back(cls[0]);
  choice.to_rep.assign(c.object_count(), kNone);
  choice.to_rep_inv.assign(c.object_count(), kNone);
  for (Idx x = 0; x < c.object_count(); ++x) {
    const Idx rep = choice.representative[choice.class_of[x]];
    if (x == rep) {
      choice.to_rep[x] = c.identity_of(x);
      choice.to_rep_inv[x] = c.identity_of(x);
    } else {
      const auto wit = classes.witness[x][rep];
      choice.to_rep[x] = wit->forward;
      choice.to_rep_inv[x] = wit->backward;
    }
  }

  // Full subcategory on the representatives, morphism order inherited.
  std::vector<std::string> objects;
  for (Idx rep : choice.representative) objects.push_back(c.object_name(rep));
  std::vector<Idx> obj_pos(c.object_count(), kNone);
  for (size_t i = 0; i < choice.representative.size(); ++i) {
    obj_pos[choice.representative[i]] = static_cast<Idx>(i);
  }
  std::vector<Morphism> morphisms;
  std::vector<Idx> mor_pos(c.morphism_count(), kNone);
  for (Idx f = 0; f < c.morphism_count(); ++f) {
    if (obj_pos[c.dom(f)] == kNone || obj_pos[c.cod(f)] == kNone) continue;
    mor_pos[f] = static_cast<Idx>(morphisms.size());
    morphisms.push_back({c.morphism(f).name, obj_pos[c.dom(f)], obj_pos[c.cod(f)]});
  }
  std::vector<Idx> identity(objects.size());
  for (size_t i = 0; i < choice.representative.size(); ++i) {
    identity[i] = mor_pos[c.identity_of(choice.representative[i])];
  }
  const Idx m = static_cast<Idx>(morphisms.size());
  std::vector<Idx> compose(static_cast<size_t>(m) * m, kNone);
  for (Idx f = 0; f < c.morphism_count(); ++f) {
    if (mor_pos[f] == kNone) continue;
    for (Idx g = 0; g < c.morphism_count(); ++g) {
      if (mor_pos[g] == kNone || !c.composable(g, f)) continue;
      compose[static_cast<size_t>(mor_pos[g]) * m + mor_pos[f]] =
          mor_pos[c.compose(g, f)];
    }
  }

  SkeletonResult result;
  result.category = std::make_shared<FinCategory>(
      std::move(objects), std::move(morphisms), std::move(identity),
      std::move(compose));
  result.choice = choice;

  Functor proj;
  proj.source = cat;
  proj.target = result.category;
  proj.obj_map.resize(c.object_count());
  proj.mor_map.resize(c.morphism_count());
  for (Idx x = 0; x < c.object_count(); ++x) proj.obj_map[x] = choice.class_of[x];
  for (Idx f = 0; f < c.morphism_count(); ++f) {
    // Transport to representatives: to_rep(cod) * f * to_rep(dom)^{-1}.
    const Idx lifted =
        c.compose(c.compose(choice.to_rep[c.cod(f)], f), choice.to_rep_inv[c.dom(f)]);
    proj.mor_map[f] = mor_pos[lifted];
  }
  result.projection = std::move(proj);
  return result;
}

AutomorphismGroups automorphism_groups(const FinCategory& cat,
                                       bool require_groupoid) {
  AutomorphismGroups result;
  const IsoClasses classes = iso_classes(cat);
  for (const auto& members : classes.classes) {
    AutomorphismGroups::ClassData data;
    data.objects = members;
    const Idx rep = members[0];
    for (Idx u : cat.endomorphisms(rep)) {
      if (find_inverse(cat, u) != kNone) data.group_elements.push_back(u);
    }
    const size_t g = data.group_elements.size();
    std::vector<Idx> pos(cat.morphism_count(), kNone);
    for (size_t i = 0; i < g; ++i) pos[data.group_elements[i]] = static_cast<Idx>(i);
    data.table.assign(g, std::vector<Idx>(g));
    for (size_t i = 0; i < g; ++i) {
      for (size_t j = 0; j < g; ++j) {
        data.table[i][j] =
            pos[cat.compose(data.group_elements[i], data.group_elements[j])];
      }
    }

    data.homs_equal_group_order = true;
    for (Idx x : members) {
      for (Idx y : members) {
        std::vector<Idx> isos;
        for (Idx chi : cat.hom(x, y)) {
          if (find_inverse(cat, chi) != kNone) {
            isos.push_back(chi);
          } else if (require_groupoid) {
            throw Error(ErrorKind::Precondition,
                        "morphism " + cat.morphism(chi).name +
                            " between isomorphic objects is not invertible");
          }
        }
        if (isos.size() != g) data.homs_equal_group_order = false;
        if (x == y) continue;
        AutomorphismGroups::ClassData::PairBijection pair;
        pair.x = x;
        pair.y = y;
        pair.kappa = isos.empty() ? kNone : isos.front();
        if (pair.kappa != kNone) {
          std::vector<bool> hit(cat.morphism_count(), false);
          pair.bijective = true;
          for (Idx chi : isos) {
            const Idx inv = find_inverse(cat, chi);
            const Idx image = cat.compose(inv, pair.kappa);  // chi^{-1} * kappa
            pair.map.emplace_back(chi, image);
            if (image == kNone || cat.dom(image) != x || cat.cod(image) != x ||
                find_inverse(cat, image) == kNone || hit[image]) {
              pair.bijective = false;
            } else {
              hit[image] = true;
            }
          }
          // Onto Aut(x): same count of automorphisms as images.
          std::vector<Idx> aut_x;
          for (Idx u : cat.endomorphisms(x)) {
            if (find_inverse(cat, u) != kNone) aut_x.push_back(u);
          }
          if (pair.map.size() != aut_x.size()) pair.bijective = false;
        }
        data.pairs.push_back(std::move(pair));
      }
    }
    result.classes.push_back(std::move(data));
  }
  return result;
}

std::optional<IsoWitness> idempotents_isomorphic(const FinCategory& cat, Idx a,
                                                 Idx b) {
  const auto idem = [&](Idx f) {
    return cat.dom(f) == cat.cod(f) && cat.compose(f, f) == f;
  };
  if (!idem(a) || !idem(b)) {
    throw Error(ErrorKind::Precondition,
                "idempotents_isomorphic requires idempotents");
  }
  // a = u*v, b = v*u, u*v*u = u, v*u*v = v.
  for (Idx u = 0; u < cat.morphism_count(); ++u) {
    if (cat.dom(u) != cat.dom(b) || cat.cod(u) != cat.dom(a)) continue;
    for (Idx v = 0; v < cat.morphism_count(); ++v) {
      if (cat.dom(v) != cat.dom(a) || cat.cod(v) != cat.dom(b)) continue;
      if (cat.compose(u, v) != a || cat.compose(v, u) != b) continue;
      if (cat.compose(u, cat.compose(v, u)) != u) continue;
      if (cat.compose(v, cat.compose(u, v)) != v) continue;
      return IsoWitness{u, v};
    }
  }
  return std::nullopt;
}

TautResult taut_completion(std::shared_ptr<const FinCategory> cat) {
  const FinCategory& c = *cat;
  TautResult result;
  result.idempotents = idempotents(c);
  const auto& idems = result.idempotents;
  const Idx k = static_cast<Idx>(idems.size());

  result.class_of_idempotent.assign(k, kNone);
  std::vector<Idx> rep_of_class;
  for (Idx i = 0; i < k; ++i) {
    if (result.class_of_idempotent[i] != kNone) continue;
    const Idx cls = static_cast<Idx>(rep_of_class.size());
    result.class_of_idempotent[i] = cls;
    rep_of_class.push_back(i);
    for (Idx j = i + 1; j < k; ++j) {
      if (result.class_of_idempotent[j] == kNone &&
          idempotents_isomorphic(c, idems[i], idems[j])) {
        result.class_of_idempotent[j] = cls;
      }
    }
  }

  // Witness phi = u*v, rep = v*u used to transport morphisms to the
  // representative's hom-sets; identity witness on representatives.
  std::vector<Idx> wit_u(k), wit_v(k);
  for (Idx i = 0; i < k; ++i) {
    const Idx rep = idems[rep_of_class[result.class_of_idempotent[i]]];
    if (idems[i] == rep) {
      wit_u[i] = idems[i];
      wit_v[i] = idems[i];
    } else {
      const auto wit = idempotents_isomorphic(c, idems[i], rep);
      wit_u[i] = wit->forward;
      wit_v[i] = wit->backward;
    }
  }

  const Idx num_classes = static_cast<Idx>(rep_of_class.size());
  std::vector<std::string> objects;
  for (Idx cls = 0; cls < num_classes; ++cls) {
    objects.push_back(c.morphism(idems[rep_of_class[cls]]).name);
  }
  std::vector<Morphism> morphisms;
  std::vector<Idx> mor_index(
      static_cast<size_t>(num_classes) * num_classes *
          std::max<Idx>(c.morphism_count(), 1),
      kNone);
  const auto slot = [&](Idx a, Idx b, Idx f) -> Idx& {
    return mor_index[(static_cast<size_t>(a) * num_classes + b) *
                         c.morphism_count() +
                     f];
  };
  for (Idx a = 0; a < num_classes; ++a) {
    for (Idx b = 0; b < num_classes; ++b) {
      const Idx phi = idems[rep_of_class[a]];
      const Idx psi = idems[rep_of_class[b]];
      for (Idx f = 0; f < c.morphism_count(); ++f) {
        if (c.dom(f) != c.dom(phi) || c.cod(f) != c.dom(psi)) continue;
        const Idx fp = c.compose(f, phi);
        if (fp == kNone || c.compose(psi, fp) != f) continue;
        slot(a, b, f) = static_cast<Idx>(morphisms.size());
        morphisms.push_back({"<" + objects[a] + "," + objects[b] + "," +
                                 c.morphism(f).name + ">",
                             a, b});
      }
    }
  }
  std::vector<Idx> identity(num_classes);
  for (Idx a = 0; a < num_classes; ++a) {
    identity[a] = slot(a, a, idems[rep_of_class[a]]);
  }
  const Idx m = static_cast<Idx>(morphisms.size());
  std::vector<Idx> compose(static_cast<size_t>(m) * m, kNone);
  std::vector<Idx> carrier(m);  // taut morphism -> morphism of C
  for (Idx a = 0; a < num_classes; ++a) {
    for (Idx b = 0; b < num_classes; ++b) {
      for (Idx f = 0; f < c.morphism_count(); ++f) {
        if (slot(a, b, f) != kNone) carrier[slot(a, b, f)] = f;
      }
    }
  }
  for (Idx g = 0; g < m; ++g) {
    for (Idx f = 0; f < m; ++f) {
      if (morphisms[g].dom != morphisms[f].cod) continue;
      compose[static_cast<size_t>(g) * m + f] =
          slot(morphisms[f].dom, morphisms[g].cod,
               c.compose(carrier[g], carrier[f]));
    }
  }

  result.category = std::make_shared<FinCategory>(
      std::move(objects), std::move(morphisms), std::move(identity),
      std::move(compose));

  std::vector<Idx> idem_pos(c.morphism_count(), kNone);
  for (Idx i = 0; i < k; ++i) idem_pos[idems[i]] = i;

  Functor completion;
  completion.source = cat;
  completion.target = result.category;
  completion.obj_map.resize(c.object_count());
  completion.mor_map.resize(c.morphism_count());
  for (Idx x = 0; x < c.object_count(); ++x) {
    completion.obj_map[x] =
        result.class_of_idempotent[idem_pos[c.identity_of(x)]];
  }
  for (Idx f = 0; f < c.morphism_count(); ++f) {
    const Idx dx = idem_pos[c.identity_of(c.dom(f))];
    const Idx dy = idem_pos[c.identity_of(c.cod(f))];
    // Transport along the chosen witnesses: v_cod * f * u_dom.
    const Idx moved = c.compose(wit_v[dy], c.compose(f, wit_u[dx]));
    completion.mor_map[f] = slot(result.class_of_idempotent[dx],
                                 result.class_of_idempotent[dy], moved);
  }
  result.completion = std::move(completion);
  return result;
}

bool is_taut(const FinCategory& cat) {
  return is_skeletal(cat).skeletal && is_absolutely_complete(cat).complete;
}

ValidationReport check_splitting_universal(const FinCategory& cat,
                                           const Splitting& s) {
  const Idx x = cat.dom(s.idem);
  if (cat.compose(s.idem, s.idem) != s.idem ||
      cat.compose(s.section, s.retraction) != s.idem ||
      cat.compose(s.retraction, s.section) != cat.identity_of(s.through)) {
    throw Error(ErrorKind::Precondition, "splitting fails its own invariants");
  }
  ValidationReport report;
  for (Idx w = 0; w < cat.object_count(); ++w) {
    // Equalizer of (id, idem): cones are c with idem * c = c.
    for (Idx c = 0; c < cat.morphism_count(); ++c) {
      if (cat.dom(c) != w || cat.cod(c) != x) continue;
      if (cat.compose(s.idem, c) != c) continue;
      int mediators = 0;
      for (Idx m : cat.hom(w, s.through)) {
        if (cat.compose(s.section, m) == c) ++mediators;
      }
      if (mediators != 1) {
        report.fail("equalizer property fails for cone " +
                    cat.morphism(c).name + " (" + std::to_string(mediators) +
                    " mediators)");
      }
    }
    // Coequalizer of (id, idem): cocones are d with d * idem = d.
    for (Idx d = 0; d < cat.morphism_count(); ++d) {
      if (cat.dom(d) != x || cat.cod(d) != w) continue;
      if (cat.compose(d, s.idem) != d) continue;
      int mediators = 0;
      for (Idx m : cat.hom(s.through, w)) {
        if (cat.compose(m, s.retraction) == d) ++mediators;
      }
      if (mediators != 1) {
        report.fail("coequalizer property fails for cocone " +
                    cat.morphism(d).name + " (" + std::to_string(mediators) +
                    " mediators)");
      }
    }
  }
  return report;
}

ValidationReport check_retract_of_splitting(const FinCategory& cat, Idx phi,
                                            Idx psi) {
  const auto idem = [&](Idx f) {
    return cat.dom(f) == cat.cod(f) && cat.compose(f, f) == f;
  };
  if (!idem(phi) || !idem(psi) || cat.dom(phi) != cat.dom(psi) ||
      cat.compose(phi, psi) != phi) {
    throw Error(ErrorKind::Precondition,
                "check_retract_of_splitting requires phi <= psi");
  }
  const auto sp = find_splitting(cat, phi);
  const auto sq = find_splitting(cat, psi);
  if (!sp || !sq) {
    throw Error(ErrorKind::Precondition,
                "check_retract_of_splitting requires both idempotents to split");
  }
  ValidationReport report;
  for (Idx s = 0; s < cat.morphism_count(); ++s) {
    if (cat.dom(s) != sp->through || cat.cod(s) != sq->through) continue;
    for (Idx r = 0; r < cat.morphism_count(); ++r) {
      if (cat.dom(r) != sq->through || cat.cod(r) != sp->through) continue;
      if (cat.compose(r, s) == cat.identity_of(sp->through)) {
        report.note("retraction pair (" + cat.morphism(s).name + "," +
                    cat.morphism(r).name + ")");
        return report;
      }
    }
  }
  report.fail("no section/retraction pair between the splitting objects");
  return report;
}

ValidationReport validate_functor(const Functor& fun) {
  const FinCategory& src = *fun.source;
  const FinCategory& dst = *fun.target;
  if (fun.obj_map.size() != static_cast<size_t>(src.object_count()) ||
      fun.mor_map.size() != static_cast<size_t>(src.morphism_count())) {
    throw Error(ErrorKind::Carrier, "functor maps do not cover the source");
  }
  for (Idx x : fun.obj_map) {
    if (x < 0 || x >= dst.object_count()) {
      throw Error(ErrorKind::Carrier, "object map value outside target");
    }
  }
  for (Idx f : fun.mor_map) {
    if (f < 0 || f >= dst.morphism_count()) {
      throw Error(ErrorKind::Carrier, "morphism map value outside target");
    }
  }
  ValidationReport report;
  for (Idx f = 0; f < src.morphism_count(); ++f) {
    const Idx im = fun.mor_map[f];
    if (dst.dom(im) != fun.obj_map[src.dom(f)] ||
        dst.cod(im) != fun.obj_map[src.cod(f)]) {
      report.fail("endpoints of " + src.morphism(f).name + " not preserved");
    }
  }
  for (Idx x = 0; x < src.object_count(); ++x) {
    if (fun.mor_map[src.identity_of(x)] != dst.identity_of(fun.obj_map[x])) {
      report.fail("identity of " + src.object_name(x) + " not preserved");
    }
  }
  for (Idx g = 0; g < src.morphism_count(); ++g) {
    for (Idx f = 0; f < src.morphism_count(); ++f) {
      if (!src.composable(g, f)) continue;
      const Idx gf = src.compose(g, f);
      if (gf == kNone) continue;
      const Idx image = dst.compose(fun.mor_map[g], fun.mor_map[f]);
      if (image != fun.mor_map[gf]) {
        report.fail("composition " + src.morphism(g).name + "*" +
                    src.morphism(f).name + " not preserved");
      }
    }
  }
  return report;
}

Functor identity_functor(std::shared_ptr<const FinCategory> cat) {
  Functor fun;
  fun.source = cat;
  fun.target = cat;
  fun.obj_map.resize(cat->object_count());
  fun.mor_map.resize(cat->morphism_count());
  std::iota(fun.obj_map.begin(), fun.obj_map.end(), 0);
  std::iota(fun.mor_map.begin(), fun.mor_map.end(), 0);
  return fun;
}

Functor compose_functors(const Functor& outer, const Functor& inner) {
  if (!(*inner.target == *outer.source)) {
    throw Error(ErrorKind::Carrier, "functor composition endpoints mismatch");
  }
  Functor fun;
  fun.source = inner.source;
  fun.target = outer.target;
  fun.obj_map.reserve(inner.obj_map.size());
  fun.mor_map.reserve(inner.mor_map.size());
  for (Idx x : inner.obj_map) fun.obj_map.push_back(outer.obj_map[x]);
  for (Idx f : inner.mor_map) fun.mor_map.push_back(outer.mor_map[f]);
  return fun;
}

EquivalenceCheck is_equivalence(const Functor& fun) {
  const FinCategory& src = *fun.source;
  const FinCategory& dst = *fun.target;
  EquivalenceCheck check;
  check.full = true;
  check.faithful = true;
  for (Idx x = 0; x < src.object_count(); ++x) {
    for (Idx y = 0; y < src.object_count(); ++y) {
      const auto hom = src.hom(x, y);
      std::vector<Idx> images;
      for (Idx f : hom) images.push_back(fun.mor_map[f]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        check.faithful = false;
      }
      for (Idx g : dst.hom(fun.obj_map[x], fun.obj_map[y])) {
        if (!std::binary_search(images.begin(), images.end(), g)) {
          check.full = false;
        }
      }
    }
  }
  check.essentially_surjective = true;
  for (Idx d = 0; d < dst.object_count(); ++d) {
    bool hit = false;
    for (Idx x = 0; x < src.object_count() && !hit; ++x) {
      if (fun.obj_map[x] == d || find_iso(dst, fun.obj_map[x], d)) hit = true;
    }
    if (!hit) check.essentially_surjective = false;
  }
  return check;
}

bool is_isomorphism(const Functor& fun) {
  const FinCategory& src = *fun.source;
  const FinCategory& dst = *fun.target;
  if (src.object_count() != dst.object_count() ||
      src.morphism_count() != dst.morphism_count()) {
    return false;
  }
  std::vector<bool> obj_hit(dst.object_count(), false);
  for (Idx x : fun.obj_map) {
    if (obj_hit[x]) return false;
    obj_hit[x] = true;
  }
  std::vector<bool> mor_hit(dst.morphism_count(), false);
  for (Idx f : fun.mor_map) {
    if (mor_hit[f]) return false;
    mor_hit[f] = true;
  }
  return validate_functor(fun).ok();
}

}  // namespace catale
