#include "catale/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "catale/bridge.hpp"

namespace catale {

namespace {

// Shared individualization-refinement search over an n x n table. The entry
// callback must be label-invariant up to the permutation action; for
// semigroup tables the entries are carrier elements (permuted along), for
// order tables they are fixed symbols.
class TableCanonicalizer {
 public:
  TableCanonicalizer(Idx n, bool entries_are_elements,
                     std::vector<Idx> table)
      : n_(n), permuted_entries_(entries_are_elements), table_(std::move(table)) {}

  // Returns the lexicographically least relabeled flat table along with the
  // permutation that achieves it.
  std::pair<std::vector<Idx>, std::vector<Idx>> run() {
    if (n_ == 0) return {{}, {}};
    std::vector<Idx> colors(n_, 0);
    refine(colors);
    search(colors);
    return {best_perm_, best_encoding_};
  }

 private:
  Idx entry(Idx a, Idx b) const {
    return table_[static_cast<size_t>(a) * n_ + b];
  }

  // One-dimensional Weisfeiler-Leman pass over the table until stable.
  void refine(std::vector<Idx>& colors) const {
    while (true) {
      std::vector<std::pair<std::vector<Idx>, Idx>> signatures(n_);
      for (Idx f = 0; f < n_; ++f) {
        std::vector<Idx>& sig = signatures[f].first;
        sig.push_back(colors[f]);
        std::vector<std::array<Idx, 3>> rows;
        rows.reserve(n_);
        for (Idx g = 0; g < n_; ++g) {
          const Idx fg = entry(f, g);
          const Idx gf = entry(g, f);
          rows.push_back({colors[g],
                          fg == kNone ? kNone : (permuted_entries_ ? colors[fg] : fg),
                          gf == kNone ? kNone : (permuted_entries_ ? colors[gf] : gf)});
        }
        std::sort(rows.begin(), rows.end());
        for (const auto& row : rows) {
          sig.insert(sig.end(), row.begin(), row.end());
        }
        signatures[f].second = f;
      }
      auto sorted = signatures;
      std::sort(sorted.begin(), sorted.end());
      std::vector<Idx> next(n_);
      Idx color = -1;
      const std::vector<Idx>* prev = nullptr;
      for (const auto& [sig, f] : sorted) {
        if (prev == nullptr || sig != *prev) {
          ++color;
          prev = &sig;
        }
        next[f] = color;
      }
      if (next == colors) return;
      colors = std::move(next);
    }
  }

  bool discrete(const std::vector<Idx>& colors) const {
    std::vector<bool> seen(n_, false);
    for (Idx c : colors) {
      if (seen[c]) return false;
      seen[c] = true;
    }
    return true;
  }

  void search(std::vector<Idx> colors) {
    if (++nodes_ > kNodeBound) {
      throw Error(ErrorKind::Bound, "canonical labeling search exceeded bound");
    }
    refine(colors);
    if (!discrete(colors)) {
      // Individualize inside the smallest non-singleton cell (ties to the
      // lowest colour); both measures are invariants, and small cells keep
      // the branching near the automorphism count.
      std::vector<Idx> cell_size(n_, 0);
      for (Idx f = 0; f < n_; ++f) ++cell_size[colors[f]];
      Idx target = kNone;
      for (Idx c = 0; c < n_; ++c) {
        if (cell_size[c] < 2) continue;
        if (target == kNone || cell_size[c] < cell_size[target]) target = c;
      }
      for (Idx f = 0; f < n_; ++f) {
        if (colors[f] != target) continue;
        std::vector<Idx> split(n_);
        for (Idx g = 0; g < n_; ++g) {
          split[g] = 2 * colors[g] + (g == f ? 0 : 1);
        }
        search(std::move(split));
      }
      return;
    }
    // Discrete colouring: the permutation is forced, emit and compare.
    std::vector<Idx> perm(n_);  // original -> position
    for (Idx f = 0; f < n_; ++f) perm[f] = colors[f];
    std::vector<Idx> encoding(static_cast<size_t>(n_) * n_);
    for (Idx a = 0; a < n_; ++a) {
      for (Idx b = 0; b < n_; ++b) {
        const Idx v = entry(a, b);
        const Idx out = v == kNone ? n_ : (permuted_entries_ ? perm[v] : v);
        encoding[static_cast<size_t>(perm[a]) * n_ + perm[b]] = out;
      }
    }
    if (best_encoding_.empty() || encoding < best_encoding_) {
      best_encoding_ = std::move(encoding);
      best_perm_ = std::move(perm);
    }
  }

  // Colour refinement on structured small tables reaches near-discrete cells
  // within a few individualizations; a search that grows past this bound is
  // outside the intended carrier scale and fails loudly instead of hanging.
  static constexpr uint64_t kNodeBound = 100'000;

  Idx n_;
  bool permuted_entries_;
  std::vector<Idx> table_;
  std::vector<Idx> best_perm_;
  std::vector<Idx> best_encoding_;
  uint64_t nodes_ = 0;
};

std::vector<std::string> generic_names(const std::string& prefix, Idx n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (Idx i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

PsgCanonicalForm canonical_psg(const PartialSemigroup& psg) {
  const Idx n = psg.size();
  TableCanonicalizer engine(n, /*entries_are_elements=*/true, psg.table());
  auto [perm, encoding] = engine.run();
  std::vector<Idx> table(static_cast<size_t>(n) * n, kNone);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      const Idx v = encoding[static_cast<size_t>(a) * n + b];
      table[static_cast<size_t>(a) * n + b] = v == n ? kNone : v;
    }
  }
  return {std::move(perm),
          PartialSemigroup(generic_names("e", n), std::move(table))};
}

CatCanonicalForm canonical_category(const FinCategory& cat) {
  const PartialSemigroup tensor = cat_to_psg(cat);
  PsgCanonicalForm base = canonical_psg(tensor);

  CatCanonicalForm result;
  result.morphism_perm = base.perm;

  // Objects follow their identities' canonical positions.
  std::vector<std::pair<Idx, Idx>> order;  // (canonical id position, object)
  for (Idx x = 0; x < cat.object_count(); ++x) {
    order.emplace_back(base.perm[cat.identity_of(x)], x);
  }
  std::sort(order.begin(), order.end());
  result.object_perm.assign(cat.object_count(), kNone);
  for (size_t i = 0; i < order.size(); ++i) {
    result.object_perm[order[i].second] = static_cast<Idx>(i);
  }

  const Idx m = cat.morphism_count();
  std::vector<Morphism> morphisms(m);
  for (Idx f = 0; f < m; ++f) {
    morphisms[base.perm[f]] = {"m" + std::to_string(base.perm[f]),
                               result.object_perm[cat.dom(f)],
                               result.object_perm[cat.cod(f)]};
  }
  std::vector<Idx> identity(cat.object_count());
  for (Idx x = 0; x < cat.object_count(); ++x) {
    identity[result.object_perm[x]] = base.perm[cat.identity_of(x)];
  }
  std::vector<Idx> compose(static_cast<size_t>(m) * m, kNone);
  for (Idx g = 0; g < m; ++g) {
    for (Idx f = 0; f < m; ++f) {
      const Idx gf = cat.compose(g, f);
      if (gf != kNone) {
        compose[static_cast<size_t>(base.perm[g]) * m + base.perm[f]] =
            base.perm[gf];
      }
    }
  }
  result.form = FinCategory(generic_names("o", cat.object_count()),
                            std::move(morphisms), std::move(identity),
                            std::move(compose));
  return result;
}

MslCanonicalForm canonical_msl(const MeetSemilattice& msl) {
  const Idx n = msl.size();
  std::vector<Idx> table(static_cast<size_t>(n) * n, 0);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      table[static_cast<size_t>(a) * n + b] = msl.leq(a, b) ? 1 : 0;
    }
  }
  TableCanonicalizer engine(n, /*entries_are_elements=*/false, std::move(table));
  auto [perm, encoding] = engine.run();
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      leq[static_cast<size_t>(a) * n + b] =
          encoding[static_cast<size_t>(a) * n + b] == 1;
    }
  }
  const Idx top = n == 0 ? kNone : perm[msl.top()];
  return {std::move(perm),
          MeetSemilattice(generic_names("e", n), std::move(leq), top)};
}

SpaceCanonicalForm canonical_space(const FinSpace& space) {
  const Idx n = space.point_count();
  if (n > 10) {
    throw Error(ErrorKind::Bound, "space canonical form limited to 10 points");
  }
  std::vector<Idx> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Idx> best_perm;
  std::vector<Mask> best;
  do {
    std::vector<Mask> relabeled;
    relabeled.reserve(space.opens().size());
    for (Mask u : space.opens()) {
      Mask image = 0;
      for (Idx x = 0; x < n; ++x) {
        if (u >> x & 1) image |= Mask{1} << perm[x];
      }
      relabeled.push_back(image);
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (best.empty() || relabeled < best) {
      best = std::move(relabeled);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (n == 0) {
    best.assign(space.opens().size(), 0);
    best_perm = {};
  }
  // Present in the usual (size, mask) order.
  std::sort(best.begin(), best.end(), [](Mask a, Mask b) {
    const int pa = __builtin_popcountll(a);
    const int pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  return {std::move(best_perm), FinSpace(generic_names("p", n), std::move(best))};
}

}  // namespace catale
