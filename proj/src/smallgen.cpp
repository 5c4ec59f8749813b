#include "catale/smallgen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace catale {

namespace {

std::vector<std::string> numbered_names(Idx n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (Idx i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

bool psg_table_valid(const std::vector<Idx>& table, Idx n) {
  const auto at = [&](Idx a, Idx b) {
    return table[static_cast<size_t>(a) * n + b];
  };
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      const Idx ab = at(a, b);
      for (Idx c = 0; c < n; ++c) {
        const Idx bc = at(b, c);
        if (ab != kNone && bc != kNone) {
          const Idx left = at(ab, c);
          if (left == kNone || left != at(a, bc)) return false;
        } else if (ab != kNone && bc == kNone) {
          if (at(ab, c) != kNone) return false;
        } else if (ab == kNone && bc != kNone) {
          if (at(a, bc) != kNone) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

void enum_psg_tables(Idx n, const PsgYield& yield) {
  if (n < 0 || n > 3) {
    throw Error(ErrorKind::Bound, "exhaustive table scan limited to n <= 3");
  }
  const auto names = numbered_names(n);
  std::vector<Idx> table(static_cast<size_t>(n) * n, kNone);
  while (true) {
    if (!yield(PartialSemigroup(names, table))) return;
    size_t pos = table.size();
    while (pos > 0 && table[pos - 1] == n - 1) table[--pos] = kNone;
    if (pos == 0) return;
    ++table[pos - 1];
  }
}

void enum_psgs(Idx n, const PsgYield& yield) {
  enum_psg_tables(n, [&](const PartialSemigroup& psg) {
    if (!psg_table_valid(psg.table(), n)) return true;
    return yield(psg);
  });
}

void enum_topologies(Idx n, const SpaceYield& yield) {
  if (n < 0 || n > 4) {
    throw Error(ErrorKind::Bound, "topology enumeration limited to n <= 4");
  }
  const auto names = numbered_names(n);
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  if (full == 0) {
    yield(FinSpace(names, {0}));
    return;
  }
  // Choose any family of the interior sets; the empty and full set are fixed.
  const Mask interior_count = full - 1;  // subsets strictly between 0 and full
  for (Mask pick = 0; pick < (Mask{1} << interior_count); ++pick) {
    std::vector<Mask> opens = {0, full};
    for (Mask s = 1; s < full; ++s) {
      if (pick >> (s - 1) & 1) opens.push_back(s);
    }
    bool closed = true;
    const auto member = [&](Mask u) {
      return std::find(opens.begin(), opens.end(), u) != opens.end();
    };
    for (size_t i = 0; i < opens.size() && closed; ++i) {
      for (size_t j = i + 1; j < opens.size() && closed; ++j) {
        if (!member(opens[i] | opens[j]) || !member(opens[i] & opens[j])) {
          closed = false;
        }
      }
    }
    if (!closed) continue;
    std::sort(opens.begin(), opens.end(), [](Mask a, Mask b) {
      const int pa = __builtin_popcountll(a);
      const int pb = __builtin_popcountll(b);
      return pa != pb ? pa < pb : a < b;
    });
    if (!yield(FinSpace(names, opens))) return;
  }
}

void enum_msls(Idx n, const MslYield& yield) {
  if (n < 0 || n > 5) {
    throw Error(ErrorKind::Bound, "semilattice enumeration limited to n <= 5");
  }
  if (n == 0) return;  // a top element is required
  const auto names = numbered_names(n);
  // Orient each unordered pair three ways, keep the transitive relations.
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx i = 0; i < n; ++i) {
    for (Idx j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<int> orient(pairs.size(), 0);  // 0 incomparable, 1 i<j, 2 j<i
  while (true) {
    std::vector<bool> leq(static_cast<size_t>(n) * n, false);
    for (Idx i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = true;
    for (size_t p = 0; p < pairs.size(); ++p) {
      if (orient[p] == 1) {
        leq[static_cast<size_t>(pairs[p].first) * n + pairs[p].second] = true;
      } else if (orient[p] == 2) {
        leq[static_cast<size_t>(pairs[p].second) * n + pairs[p].first] = true;
      }
    }
    const auto le = [&](Idx a, Idx b) {
      return static_cast<bool>(leq[static_cast<size_t>(a) * n + b]);
    };
    bool transitive = true;
    for (Idx a = 0; a < n && transitive; ++a) {
      for (Idx b = 0; b < n && transitive; ++b) {
        for (Idx c = 0; c < n && transitive; ++c) {
          if (le(a, b) && le(b, c) && !le(a, c)) transitive = false;
        }
      }
    }
    if (transitive) {
      Idx top = kNone;
      for (Idx t = 0; t < n && top == kNone; ++t) {
        bool max = true;
        for (Idx a = 0; a < n && max; ++a) {
          if (!le(a, t)) max = false;
        }
        if (max) top = t;
      }
      if (top != kNone) {
        MeetSemilattice candidate(names, leq, top);
        bool meets = true;
        for (Idx a = 0; a < n && meets; ++a) {
          for (Idx b = a; b < n && meets; ++b) {
            if (candidate.meet(a, b) == kNone) meets = false;
          }
        }
        if (meets && !yield(candidate)) return;
      }
    }
    size_t pos = orient.size();
    while (pos > 0 && orient[pos - 1] == 2) orient[--pos] = 0;
    if (pos == 0) return;
    ++orient[pos - 1];
  }
}

void enum_monoids(Idx n, const PsgYield& yield) {
  if (n < 0 || n > 3) {
    throw Error(ErrorKind::Bound, "monoid enumeration limited to n <= 3");
  }
  if (n == 0) return;
  const auto names = numbered_names(n);
  std::vector<Idx> table(static_cast<size_t>(n) * n, 0);
  while (true) {
    bool has_identity = false;
    for (Idx e = 0; e < n && !has_identity; ++e) {
      bool ok = true;
      for (Idx a = 0; a < n && ok; ++a) {
        if (table[static_cast<size_t>(e) * n + a] != a ||
            table[static_cast<size_t>(a) * n + e] != a) {
          ok = false;
        }
      }
      has_identity = ok;
    }
    if (has_identity && psg_table_valid(table, n)) {
      if (!yield(PartialSemigroup(names, table))) return;
    }
    size_t pos = table.size();
    while (pos > 0 && table[pos - 1] == n - 1) table[--pos] = 0;
    if (pos == 0) return;
    ++table[pos - 1];
  }
}

void enum_categories(Idx max_objects, Idx max_morphisms, const CatYield& yield) {
  if (max_objects < 0 || max_objects > 4 || max_morphisms < 0 ||
      max_morphisms > 4) {
    throw Error(ErrorKind::Bound, "category enumeration limited to 4 and 4");
  }
  for (Idx n_obj = 0; n_obj <= max_objects; ++n_obj) {
    if (n_obj > max_morphisms) break;
    std::vector<std::string> objects;
    for (Idx x = 0; x < n_obj; ++x) objects.push_back("x" + std::to_string(x));
    const Idx max_extra = max_morphisms - n_obj;
    for (Idx extra = 0; extra <= max_extra; ++extra) {
      if (n_obj == 0 && extra > 0) break;
      if (n_obj == 0) {
        if (!yield(FinCategory::empty())) return;
        continue;
      }
      const Idx m = n_obj + extra;
      // dom/cod assignment for the non-identity morphisms.
      std::vector<Idx> ends(2 * extra, 0);
      while (true) {
        std::vector<Morphism> morphisms;
        for (Idx x = 0; x < n_obj; ++x) {
          morphisms.push_back({"id" + std::to_string(x), x, x});
        }
        for (Idx e = 0; e < extra; ++e) {
          morphisms.push_back(
              {"f" + std::to_string(e), ends[2 * e], ends[2 * e + 1]});
        }
        std::vector<Idx> identity(n_obj);
        std::iota(identity.begin(), identity.end(), 0);

        // Identity compositions are forced; other composable pairs range
        // over the matching hom-sets.
        std::vector<std::pair<Idx, Idx>> free_pairs;
        std::vector<std::vector<Idx>> candidates;
        for (Idx g = n_obj; g < m; ++g) {
          for (Idx f = n_obj; f < m; ++f) {
            if (morphisms[g].dom != morphisms[f].cod) continue;
            free_pairs.emplace_back(g, f);
            std::vector<Idx> cands;
            for (Idx h = 0; h < m; ++h) {
              if (morphisms[h].dom == morphisms[f].dom &&
                  morphisms[h].cod == morphisms[g].cod) {
                cands.push_back(h);
              }
            }
            candidates.push_back(std::move(cands));
          }
        }
        bool feasible = true;
        for (const auto& c : candidates) {
          if (c.empty()) feasible = false;
        }
        if (feasible) {
          std::vector<size_t> choice(free_pairs.size(), 0);
          while (true) {
            std::vector<Idx> compose(static_cast<size_t>(m) * m, kNone);
            for (Idx g = 0; g < m; ++g) {
              for (Idx f = 0; f < m; ++f) {
                if (morphisms[g].dom != morphisms[f].cod) continue;
                if (g < n_obj) {
                  compose[static_cast<size_t>(g) * m + f] = f;
                } else if (f < n_obj) {
                  compose[static_cast<size_t>(g) * m + f] = g;
                }
              }
            }
            for (size_t p = 0; p < free_pairs.size(); ++p) {
              compose[static_cast<size_t>(free_pairs[p].first) * m +
                      free_pairs[p].second] = candidates[p][choice[p]];
            }
            FinCategory cat(objects, morphisms, identity, compose);
            if (validate_category(cat).ok()) {
              if (!yield(cat)) return;
            }
            size_t pos = choice.size();
            while (pos > 0 && choice[pos - 1] == candidates[pos - 1].size() - 1) {
              choice[--pos] = 0;
            }
            if (pos == 0) break;
            ++choice[pos - 1];
            if (free_pairs.empty()) break;
          }
        }
        size_t pos = ends.size();
        while (pos > 0 && ends[pos - 1] == n_obj - 1) ends[--pos] = 0;
        if (pos == 0) break;
        ++ends[pos - 1];
        if (ends.empty()) break;
      }
    }
  }
}

PartialSemigroup random_psg(Idx n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto names = numbered_names(n);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Idx> table(static_cast<size_t>(n) * n, kNone);
    for (auto& cell : table) {
      const uint64_t r = rng() % (2 * n);
      cell = r < static_cast<uint64_t>(n) ? static_cast<Idx>(r) : kNone;
    }
    if (psg_table_valid(table, n)) return PartialSemigroup(names, table);
  }
  throw Error(ErrorKind::Bound, "random sampling did not find a valid table");
}

FinSpace random_topology(Idx n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<Mask> opens = {0, full};
  const int extras = static_cast<int>(rng() % (n + 2));
  for (int i = 0; i < extras; ++i) opens.push_back(rng() & full);
  // Close under union and intersection.
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < opens.size(); ++i) {
      for (size_t j = i + 1; j < opens.size(); ++j) {
        for (Mask u : {opens[i] | opens[j], opens[i] & opens[j]}) {
          if (std::find(opens.begin(), opens.end(), u) == opens.end()) {
            opens.push_back(u);
            grew = true;
          }
        }
      }
    }
  }
  std::sort(opens.begin(), opens.end(), [](Mask a, Mask b) {
    const int pa = __builtin_popcountll(a);
    const int pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return FinSpace(numbered_names(n), opens);
}

MeetSemilattice random_msl(Idx n, uint64_t seed) {
  return opens(random_topology(n, seed));
}

PartialSemigroup shuffle_psg(const PartialSemigroup& psg, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Idx n = psg.size();
  std::vector<Idx> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names(n);
  std::vector<Idx> table(static_cast<size_t>(n) * n, kNone);
  for (Idx a = 0; a < n; ++a) {
    names[perm[a]] = psg.element_name(a);
    for (Idx b = 0; b < n; ++b) {
      const Idx ab = psg.product(a, b);
      if (ab != kNone) {
        table[static_cast<size_t>(perm[a]) * n + perm[b]] = perm[ab];
      }
    }
  }
  return PartialSemigroup(std::move(names), std::move(table));
}

FinCategory shuffle_category(const FinCategory& cat, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Idx> operm(cat.object_count());
  std::iota(operm.begin(), operm.end(), 0);
  std::shuffle(operm.begin(), operm.end(), rng);
  std::vector<Idx> mperm(cat.morphism_count());
  std::iota(mperm.begin(), mperm.end(), 0);
  std::shuffle(mperm.begin(), mperm.end(), rng);

  std::vector<std::string> objects(cat.object_count());
  for (Idx x = 0; x < cat.object_count(); ++x) {
    objects[operm[x]] = cat.object_name(x);
  }
  std::vector<Morphism> morphisms(cat.morphism_count());
  for (Idx f = 0; f < cat.morphism_count(); ++f) {
    morphisms[mperm[f]] = {cat.morphism(f).name, operm[cat.dom(f)],
                           operm[cat.cod(f)]};
  }
  std::vector<Idx> identity(cat.object_count());
  for (Idx x = 0; x < cat.object_count(); ++x) {
    identity[operm[x]] = mperm[cat.identity_of(x)];
  }
  const Idx m = cat.morphism_count();
  std::vector<Idx> compose(static_cast<size_t>(m) * m, kNone);
  for (Idx g = 0; g < m; ++g) {
    for (Idx f = 0; f < m; ++f) {
      const Idx gf = cat.compose(g, f);
      if (gf != kNone) {
        compose[static_cast<size_t>(mperm[g]) * m + mperm[f]] = mperm[gf];
      }
    }
  }
  return FinCategory(std::move(objects), std::move(morphisms),
                     std::move(identity), std::move(compose));
}

PartialSemigroup transformation_monoid(Idx n) {
  if (n < 1 || n > 4) {
    throw Error(ErrorKind::Bound, "transformation monoid limited to n <= 4");
  }
  Idx count = 1;
  for (Idx i = 0; i < n; ++i) count *= n;
  // Function f encoded in base n, digit i = f(i).
  const auto apply = [&](Idx f, Idx x) {
    for (Idx i = 0; i < x; ++i) f /= n;
    return f % n;
  };
  std::vector<std::string> names;
  names.reserve(count);
  for (Idx f = 0; f < count; ++f) {
    std::string name;
    for (Idx x = 0; x < n; ++x) name += std::to_string(apply(f, x));
    names.push_back(name);
  }
  std::vector<Idx> table(static_cast<size_t>(count) * count);
  for (Idx g = 0; g < count; ++g) {
    for (Idx f = 0; f < count; ++f) {
      Idx composite = 0;
      Idx weight = 1;
      for (Idx x = 0; x < n; ++x) {
        composite += weight * apply(g, apply(f, x));
        weight *= n;
      }
      table[static_cast<size_t>(g) * count + f] = composite;
    }
  }
  return PartialSemigroup(std::move(names), std::move(table));
}

FinCategory one_object_category(const PartialSemigroup& monoid,
                                const std::string& object_name) {
  const auto ids = identities_psg(monoid);
  if (ids.size() != 1) {
    throw Error(ErrorKind::Precondition, "carrier is not a monoid");
  }
  std::vector<Morphism> morphisms;
  for (Idx f = 0; f < monoid.size(); ++f) {
    morphisms.push_back({monoid.element_name(f), 0, 0});
  }
  return FinCategory({object_name}, std::move(morphisms), {ids[0]},
                     monoid.table());
}

FinCategory walking_idempotent() {
  //  id, e : x -> x with e*e = e.
  return FinCategory({"x"}, {{"id_x", 0, 0}, {"e", 0, 0}}, {0},
                     {0, 1, 1, 1});
}

FinCategory walking_iso() {
  // u : a -> b and v : b -> a, mutually inverse.
  std::vector<Morphism> morphisms = {
      {"id_a", 0, 0}, {"id_b", 1, 1}, {"u", 0, 1}, {"v", 1, 0}};
  std::vector<Idx> compose(16, kNone);
  const auto set = [&](Idx g, Idx f, Idx gf) { compose[g * 4 + f] = gf; };
  set(0, 0, 0);  // id_a * id_a
  set(1, 1, 1);  // id_b * id_b
  set(2, 0, 2);  // u * id_a
  set(1, 2, 2);  // id_b * u
  set(3, 1, 3);  // v * id_b
  set(0, 3, 3);  // id_a * v
  set(3, 2, 0);  // v * u = id_a
  set(2, 3, 1);  // u * v = id_b
  return FinCategory({"a", "b"}, std::move(morphisms), {0, 1}, compose);
}

FinCategory discrete_category(Idx n) {
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<Idx> identity;
  for (Idx x = 0; x < n; ++x) {
    objects.push_back("x" + std::to_string(x));
    morphisms.push_back({"id" + std::to_string(x), x, x});
    identity.push_back(x);
  }
  std::vector<Idx> compose(static_cast<size_t>(n) * n, kNone);
  for (Idx x = 0; x < n; ++x) compose[static_cast<size_t>(x) * n + x] = x;
  return FinCategory(std::move(objects), std::move(morphisms),
                     std::move(identity), std::move(compose));
}

FinSpace discrete_space(Idx n) {
  std::vector<Mask> opens;
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask s = 0;; ++s) {
    opens.push_back(s);
    if (s == full) break;
  }
  std::sort(opens.begin(), opens.end(), [](Mask a, Mask b) {
    const int pa = __builtin_popcountll(a);
    const int pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  return FinSpace(numbered_names(n), std::move(opens));
}

FinSpace indiscrete_space(Idx n) {
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<Mask> opens = {0};
  if (full != 0) opens.push_back(full);
  return FinSpace(numbered_names(n), std::move(opens));
}

FinSpace sierpinski_space() {
  return FinSpace({"0", "1"}, {0b00, 0b10, 0b11});
}

MeetSemilattice chain_msl(Idx n) {
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = a; b < n; ++b) leq[static_cast<size_t>(a) * n + b] = true;
  }
  return MeetSemilattice(numbered_names(n), std::move(leq), n - 1);
}

MeetSemilattice boolean_msl(Idx n) {
  if (n < 0 || n > 6) {
    throw Error(ErrorKind::Bound, "boolean semilattice limited to n <= 6");
  }
  const Idx size = Idx{1} << n;
  std::vector<std::string> names;
  std::vector<std::string> atoms;
  for (Idx i = 0; i < n; ++i) atoms.push_back(std::to_string(i));
  for (Idx s = 0; s < size; ++s) {
    std::string name = "{";
    bool first = true;
    for (Idx i = 0; i < n; ++i) {
      if (s >> i & 1) {
        if (!first) name += ",";
        name += atoms[i];
        first = false;
      }
    }
    names.push_back(name + "}");
  }
  std::vector<bool> leq(static_cast<size_t>(size) * size, false);
  for (Idx a = 0; a < size; ++a) {
    for (Idx b = 0; b < size; ++b) {
      leq[static_cast<size_t>(a) * size + b] = (a & ~b) == 0;
    }
  }
  return MeetSemilattice(std::move(names), std::move(leq), size - 1);
}

MeetSemilattice diamond_msl() {
  // bottom, three incomparable atoms, top: the modular non-distributive M3.
  const Idx n = 5;
  std::vector<bool> leq(25, false);
  const auto set = [&](Idx a, Idx b) { leq[a * n + b] = true; };
  for (Idx a = 0; a < n; ++a) set(a, a);
  for (Idx a = 0; a < n; ++a) {
    set(0, a);
    set(a, 4);
  }
  return MeetSemilattice({"bot", "a", "b", "c", "top"}, std::move(leq), 4);
}

Fixture fixture(const std::string& name) {
  Fixture out;
  const auto numeric_suffix = [&](const std::string& prefix) -> std::optional<Idx> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string digits = name.substr(prefix.size());
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      return std::nullopt;
    }
    return static_cast<Idx>(std::stoi(digits));
  };

  if (name == "walking_idempotent") {
    out.category = walking_idempotent();
  } else if (name == "walking_iso") {
    out.category = walking_iso();
  } else if (name == "sierpinski") {
    out.space = sierpinski_space();
  } else if (name == "m3") {
    out.msl = diamond_msl();
  } else if (auto n = numeric_suffix("discrete")) {
    out.category = discrete_category(*n);
    if (*n <= 16) out.space = discrete_space(*n);
  } else if (auto n = numeric_suffix("indiscrete")) {
    out.space = indiscrete_space(*n);
  } else if (auto n = numeric_suffix("chain_msl")) {
    if (*n < 1) throw Error(ErrorKind::UnknownName, "chain needs >= 1 element");
    out.msl = chain_msl(*n);
  } else if (auto n = numeric_suffix("boolean_msl")) {
    out.msl = boolean_msl(*n);
  } else if (auto n = numeric_suffix("T")) {
    out.psg = transformation_monoid(*n);
    out.category = one_object_category(*out.psg);
  } else {
    throw Error(ErrorKind::UnknownName, "unknown fixture: " + name);
  }
  return out;
}

}  // namespace catale
