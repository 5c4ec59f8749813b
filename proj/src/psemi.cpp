#include "catale/psemi.hpp"

#include <algorithm>
#include <array>

namespace catale {

PartialSemigroup::PartialSemigroup(std::vector<std::string> elements,
                                   std::vector<Idx> table)
    : elements_(std::move(elements)), table_(std::move(table)) {
  if (table_.size() != elements_.size() * elements_.size()) {
    throw Error(ErrorKind::Carrier, "product table size does not match carrier");
  }
  for (Idx v : table_) {
    if (v != kNone && (v < 0 || v >= size())) {
      throw Error(ErrorKind::Carrier, "product table entry out of range");
    }
  }
}

PartialSemigroup PartialSemigroup::empty() { return PartialSemigroup({}, {}); }

Idx PartialSemigroup::word_product(const std::vector<Idx>& word) const {
  if (word.empty()) return kNone;
  Idx acc = word[0];
  for (size_t i = 1; i < word.size(); ++i) {
    acc = product(acc, word[i]);
    if (acc == kNone) return kNone;
  }
  return acc;
}

ValidationReport validate_psg(const PartialSemigroup& psg) {
  ValidationReport report;
  const Idx n = psg.size();
  // Per triple: a*b and b*c defined forces both bracketings (and equality);
  // a bracketing being defined conversely forces the inner factor it skips.
  // The second half is what makes definedness compositional: without it a
  // table can pass the first half yet compose a longer word than its parts.
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      const Idx ab = psg.product(a, b);
      for (Idx c = 0; c < n; ++c) {
        const Idx bc = psg.product(b, c);
        const Idx left = ab == kNone ? kNone : psg.product(ab, c);
        const Idx right = bc == kNone ? kNone : psg.product(a, bc);
        const auto name = [&](Idx x) { return psg.element_name(x); };
        if (ab != kNone && bc != kNone) {
          if (left == kNone) {
            report.fail("(" + name(a) + "*" + name(b) + ")*" + name(c) +
                        " undefined while " + name(a) + "*" + name(b) +
                        " and " + name(b) + "*" + name(c) + " are defined");
          }
          if (right == kNone) {
            report.fail(name(a) + "*(" + name(b) + "*" + name(c) +
                        ") undefined while both factors are defined");
          }
          if (left != kNone && right != kNone && left != right) {
            report.fail("associativity fails on (" + name(a) + "," + name(b) +
                        "," + name(c) + "): " + name(left) +
                        " != " + name(right));
          }
        } else {
          if (left != kNone && bc == kNone) {
            report.fail("(" + name(a) + "*" + name(b) + ")*" + name(c) +
                        " defined while " + name(b) + "*" + name(c) +
                        " is not");
          }
          if (right != kNone && ab == kNone) {
            report.fail(name(a) + "*(" + name(b) + "*" + name(c) +
                        ") defined while " + name(a) + "*" + name(b) +
                        " is not");
          }
        }
      }
    }
  }
  return report;
}

namespace {

// Status of evaluating one subword over all bracketings.
struct EvalCell {
  bool defined = false;    // some bracketing evaluates
  bool undefined = false;  // some bracketing hits an undefined product
  Idx value = kNone;       // defined value (meaningful when unambiguous)
  bool clash = false;      // two bracketings produced different values
};

}  // namespace

ValidationReport spider_check(const PartialSemigroup& psg, int maxlen) {
  if (maxlen < 3) {
    throw Error(ErrorKind::Precondition, "spider_check requires maxlen >= 3");
  }
  ValidationReport report;
  const Idx n = psg.size();
  if (n == 0) return report;

  const auto word_name = [&](const std::vector<Idx>& w, int lo, int hi) {
    std::string s;
    for (int i = lo; i <= hi; ++i) {
      if (i > lo) s += "*";
      s += psg.element_name(w[i]);
    }
    return s;
  };

  std::vector<Idx> word;
  // cell(i,j) covers letters i..j inclusive; flat buffer reused across words.
  std::vector<EvalCell> cells(static_cast<size_t>(maxlen) * maxlen);
  const auto cell = [&](int i, int j) -> EvalCell& {
    return cells[static_cast<size_t>(i) * maxlen + j];
  };

  const auto scan_word = [&](int len) {
    for (int i = 0; i < len; ++i) {
      cell(i, i) = {true, false, word[i], false};
    }
    for (int span = 1; span < len; ++span) {
      for (int i = 0; i + span < len; ++i) {
        const int j = i + span;
        EvalCell c{};
        for (int k = i; k < j; ++k) {
          const EvalCell& l = cell(i, k);
          const EvalCell& r = cell(k + 1, j);
          if (l.undefined || r.undefined) c.undefined = true;
          if (l.clash || r.clash) c.clash = true;
          if (!l.defined || !r.defined) continue;
          const Idx v = psg.product(l.value, r.value);
          if (v == kNone) {
            c.undefined = true;
          } else if (!c.defined) {
            c.defined = true;
            c.value = v;
          } else if (c.value != v) {
            c.clash = true;
          }
        }
        cell(i, j) = c;
      }
    }
    for (int i = 0; i < len; ++i) {
      for (int j = i + 1; j < len; ++j) {
        const EvalCell& c = cell(i, j);
        if (c.clash) {
          report.fail("bracketings of " + word_name(word, i, j) +
                      " evaluate to different values");
          return;
        }
        if (c.defined && c.undefined && j - i >= 2) {
          report.fail("bracketings of " + word_name(word, i, j) +
                      " disagree about definedness");
          return;
        }
      }
    }
    // Every cut of the word into overlapping blocks: the word's product is
    // defined iff each block's is. Cut positions are interior letters.
    const int cuts = len - 1;  // composition steps
    for (uint32_t cut = 0; cut < (1u << (cuts - 1)); ++cut) {
      bool blocks_defined = true;
      int lo = 0;
      for (int p = 1; p <= cuts; ++p) {
        const bool is_cut = p == cuts || ((cut >> (p - 1)) & 1u);
        if (is_cut) {
          if (!cell(lo, p).defined) blocks_defined = false;
          lo = p;
        }
      }
      const bool whole = cell(0, len - 1).defined;
      if (whole != blocks_defined) {
        report.fail("word " + word_name(word, 0, len - 1) + " is " +
                    (whole ? "defined" : "undefined") +
                    " but its blocks are " +
                    (blocks_defined ? "all defined" : "not all defined"));
        return;
      }
    }
  };

  for (int len = 3; len <= maxlen && report.ok(); ++len) {
    word.assign(len, 0);
    while (true) {
      scan_word(len);
      if (!report.ok()) break;
      int pos = len - 1;
      while (pos >= 0 && word[pos] == n - 1) word[pos--] = 0;
      if (pos < 0) break;
      ++word[pos];
    }
  }
  return report;
}

std::vector<Idx> idempotents_psg(const PartialSemigroup& psg) {
  std::vector<Idx> out;
  for (Idx a = 0; a < psg.size(); ++a) {
    if (psg.product(a, a) == a) out.push_back(a);
  }
  return out;
}

std::vector<Idx> identities_psg(const PartialSemigroup& psg) {
  std::vector<Idx> out;
  const Idx n = psg.size();
  for (Idx a = 0; a < n; ++a) {
    if (!psg.defined(a, a)) continue;
    bool ok = true;
    for (Idx f = 0; f < n && ok; ++f) {
      const Idx fa = psg.product(f, a);
      if (fa != kNone && fa != f) ok = false;
      const Idx ag = psg.product(a, f);
      if (ag != kNone && ag != f) ok = false;
    }
    if (ok) out.push_back(a);
  }
  return out;
}

ValidationReport check_identity_lemma(const PartialSemigroup& psg) {
  ValidationReport report;
  const auto ids = identities_psg(psg);
  const Idx n = psg.size();
  for (Idx a : ids) {
    for (Idx b : ids) {
      if (a != b && psg.defined(a, b)) {
        report.fail("identities " + psg.element_name(a) + " and " +
                    psg.element_name(b) + " compose");
      }
      if (a == b) continue;
      for (Idx f = 0; f < n; ++f) {
        if (psg.defined(a, f) && psg.defined(b, f)) {
          report.fail("identities " + psg.element_name(a) + ", " +
                      psg.element_name(b) + " both left-compose with " +
                      psg.element_name(f));
        }
        if (psg.defined(f, a) && psg.defined(f, b)) {
          report.fail("identities " + psg.element_name(a) + ", " +
                      psg.element_name(b) + " both right-compose with " +
                      psg.element_name(f));
        }
      }
    }
  }
  return report;
}

namespace {

Idx unique_identity(const PartialSemigroup& psg, Idx f, bool on_right) {
  Idx found = kNone;
  for (Idx a : identities_psg(psg)) {
    const Idx p = on_right ? psg.product(f, a) : psg.product(a, f);
    if (p == f) {
      if (found != kNone) {
        throw Error(ErrorKind::Precondition,
                    "element " + psg.element_name(f) +
                        " has two framing identities");
      }
      found = a;
    }
  }
  if (found == kNone) {
    throw Error(ErrorKind::Precondition,
                "element " + psg.element_name(f) + " has no framing identity");
  }
  return found;
}

}  // namespace

Idx dom_of(const PartialSemigroup& psg, Idx f) {
  return unique_identity(psg, f, /*on_right=*/true);
}

Idx cod_of(const PartialSemigroup& psg, Idx f) {
  return unique_identity(psg, f, /*on_right=*/false);
}

PsgIdempotentOrder idempotent_order_psg(const PartialSemigroup& psg) {
  PsgIdempotentOrder order;
  order.idempotents = idempotents_psg(psg);
  const size_t k = order.idempotents.size();
  order.leq.assign(k, std::vector<bool>(k, false));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      const Idx a = order.idempotents[i];
      const Idx b = order.idempotents[j];
      order.leq[i][j] = psg.product(a, b) == a;
    }
  }
  for (size_t i = 0; i < k; ++i) {
    bool maximal = true;
    for (size_t j = 0; j < k && maximal; ++j) {
      if (order.leq[i][j] && !order.leq[j][i]) maximal = false;
    }
    if (maximal) order.maximal.push_back(order.idempotents[i]);
  }
  return order;
}

CataleReport is_catale(const PartialSemigroup& psg) {
  CataleReport report;
  const Idx n = psg.size();
  const auto ids = identities_psg(psg);
  std::vector<bool> is_identity(n, false);
  for (Idx a : ids) is_identity[a] = true;

  for (Idx f = 0; f < n; ++f) {
    bool framed = false;
    for (Idx a : ids) {
      const Idx fa = psg.product(f, a);
      if (fa == kNone) continue;
      for (Idx b : ids) {
        if (psg.product(b, fa) != kNone) {
          framed = true;
          break;
        }
      }
      if (framed) break;
    }
    if (!framed) {
      report.failures.push_back("axiom (a): element " + psg.element_name(f) +
                                " is not framed by identities");
    }
  }

  for (Idx phi : idempotents_psg(psg)) {
    Idx unit = kNone;  // common value of q*i over all decompositions
    bool split = false;
    bool unique = true;
    for (Idx i = 0; i < n && unique; ++i) {
      for (Idx q = 0; q < n && unique; ++q) {
        if (psg.product(i, q) != phi) continue;
        const Idx qi = psg.product(q, i);
        if (qi == kNone || !is_identity[qi]) continue;
        if (!split) {
          split = true;
          unit = qi;
        } else if (qi != unit) {
          unique = false;
          report.failures.push_back(
              "axiom (b): idempotent " + psg.element_name(phi) +
              " splits with distinct units " + psg.element_name(unit) +
              " and " + psg.element_name(qi));
        }
      }
    }
    if (!split) {
      report.failures.push_back("axiom (b): idempotent " +
                                psg.element_name(phi) +
                                " has no splitting with identity unit");
    }
  }

  report.catale = report.failures.empty();
  return report;
}

CataleAnnotations catale_annotations(const PartialSemigroup& psg) {
  CataleAnnotations ann;
  ann.identities = identities_psg(psg);
  ann.idempotents = idempotents_psg(psg);
  ann.dom.resize(psg.size());
  ann.cod.resize(psg.size());
  for (Idx f = 0; f < psg.size(); ++f) {
    ann.dom[f] = dom_of(psg, f);
    ann.cod[f] = cod_of(psg, f);
  }
  return ann;
}

ValidationReport validate_psg_hom(const PsgHom& hom) {
  const auto& src = *hom.source;
  const auto& dst = *hom.target;
  if (hom.map.size() != static_cast<size_t>(src.size())) {
    throw Error(ErrorKind::Carrier, "hom map does not cover the source carrier");
  }
  for (Idx v : hom.map) {
    if (v < 0 || v >= dst.size()) {
      throw Error(ErrorKind::Carrier, "hom map value outside target carrier");
    }
  }
  ValidationReport report;
  for (Idx a = 0; a < src.size(); ++a) {
    for (Idx b = 0; b < src.size(); ++b) {
      const Idx ab = src.product(a, b);
      if (ab == kNone) continue;
      const Idx image = dst.product(hom.map[a], hom.map[b]);
      if (image == kNone) {
        report.fail("image product of " + src.element_name(a) + "*" +
                    src.element_name(b) + " is undefined");
      } else if (image != hom.map[ab]) {
        report.fail("hom does not preserve " + src.element_name(a) + "*" +
                    src.element_name(b));
      }
    }
  }
  const auto dst_identities = identities_psg(dst);
  for (Idx a : identities_psg(src)) {
    const Idx im = hom.map[a];
    const bool idem = dst.product(im, im) == im;
    const bool is_id =
        std::find(dst_identities.begin(), dst_identities.end(), im) !=
        dst_identities.end();
    if (idem && !is_id) {
      report.note("identity " + src.element_name(a) +
                  " maps to non-identity idempotent " + dst.element_name(im));
    }
  }
  return report;
}

}  // namespace catale
