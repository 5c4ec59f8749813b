#ifndef CATALE_PSEMI_HPP_
#define CATALE_PSEMI_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catale/core.hpp"

namespace catale {

// A finite partial semigroup: a carrier with a partial binary operation whose
// definedness satisfies the special-Frobenius biconditional
//
//   a*b defined and b*c defined  <=>  (a*b)*c and a*(b*c) defined and equal.
//
// The table is stored flat; kNone marks an undefined product. Values are
// immutable after construction and all operations on them are pure.
class PartialSemigroup {
 public:
  PartialSemigroup() = default;
  PartialSemigroup(std::vector<std::string> elements, std::vector<Idx> table);

  static PartialSemigroup empty();

  Idx size() const { return static_cast<Idx>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element_name(Idx a) const { return elements_[a]; }
  const std::vector<Idx>& table() const { return table_; }

  bool defined(Idx a, Idx b) const { return at(a, b) != kNone; }
  Idx product(Idx a, Idx b) const { return at(a, b); }

  // Product of a word, kNone if any step is undefined. For valid tables the
  // bracketing does not matter; this evaluates left to right.
  Idx word_product(const std::vector<Idx>& word) const;

  bool operator==(const PartialSemigroup& other) const = default;

 private:
  Idx at(Idx a, Idx b) const { return table_[static_cast<size_t>(a) * elements_.size() + b]; }

  std::vector<std::string> elements_;
  std::vector<Idx> table_;  // size n*n, row = left factor
};

struct PsgHom {
  std::shared_ptr<const PartialSemigroup> source;
  std::shared_ptr<const PartialSemigroup> target;
  std::vector<Idx> map;  // element of source -> element of target
};

// Reports every triple breaking the definedness biconditional or the equality
// of the two bracketings. Accepts raw tables; never throws.
ValidationReport validate_psg(const PartialSemigroup& psg);

// Checks that for every word up to `maxlen` letters and every way of cutting
// it into consecutive overlapping blocks, the word's product is defined iff
// every block's product is. Bracketing ambiguities (two bracketings of the
// same subword disagreeing in status or value) are reported as violations as
// well, so on raw tables "no violation up to length 5" is equivalent to
// validate_psg acceptance. Throws ErrorKind::Precondition if maxlen < 3.
ValidationReport spider_check(const PartialSemigroup& psg, int maxlen);

// Elements a with a*a = a.
std::vector<Idx> idempotents_psg(const PartialSemigroup& psg);

// Elements a with a*a defined that absorb on both sides wherever composable:
// f*a defined => f*a = f, and a*g defined => a*g = g. Self-composability is
// required; composability with every element is not (that reading would rule
// out any structure with two or more identities).
std::vector<Idx> identities_psg(const PartialSemigroup& psg);

// For identities a, b and arbitrary f this verifies:
//   (a) a*b defined => a = b
//   (b) a*f and b*f defined => a = b
//   (c) f*a and f*b defined => a = b
// The report is empty on every valid table.
ValidationReport check_identity_lemma(const PartialSemigroup& psg);

// The unique identity a with f*a = f (resp. b*f = f). Throws
// ErrorKind::Precondition if no such identity exists.
Idx dom_of(const PartialSemigroup& psg, Idx f);
Idx cod_of(const PartialSemigroup& psg, Idx f);

struct PsgIdempotentOrder {
  std::vector<Idx> idempotents;        // ascending element index
  std::vector<std::vector<bool>> leq;  // leq[i][j]: idem i <= idem j
  std::vector<Idx> maximal;            // a maximal iff a<=b implies b<=a
};

// a <= b iff a*b is defined and equals a, restricted to idempotents.
PsgIdempotentOrder idempotent_order_psg(const PartialSemigroup& psg);

struct CataleReport {
  bool catale = false;
  std::vector<std::string> failures;  // failing axiom + witness, one per line
};

// Catale axioms over a valid table:
//   (a) every f is framed: some identities a, b have b*f*a defined;
//   (b) every idempotent phi decomposes as i*q = phi with q*i an identity,
//       and all such decompositions share the same value of q*i.
CataleReport is_catale(const PartialSemigroup& psg);

// Domain/codomain assignment for a structure satisfying axiom (a).
struct CataleAnnotations {
  std::vector<Idx> identities;
  std::vector<Idx> idempotents;
  std::vector<Idx> dom;  // per element, an identity
  std::vector<Idx> cod;
};
CataleAnnotations catale_annotations(const PartialSemigroup& psg);

// Preservation where the source product is defined; the target may define
// more. An identity mapped to a non-identity idempotent is legal and is
// surfaced as a note, not a failure. Throws ErrorKind::Carrier on size
// mismatch.
ValidationReport validate_psg_hom(const PsgHom& hom);

}  // namespace catale

#endif  // CATALE_PSEMI_HPP_
