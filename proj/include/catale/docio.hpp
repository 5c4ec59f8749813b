#ifndef CATALE_DOCIO_HPP_
#define CATALE_DOCIO_HPP_

#include <string>

#include "catale/fincat.hpp"
#include "catale/locales.hpp"
#include "catale/psemi.hpp"
#include "catale/smallgen.hpp"

namespace catale {

// Interchange documents, one JSON object per structure:
//   category: {"objects": [...], "morphisms": [{"name","dom","cod"}...],
//              "identities": {obj: mor, ...}, "compose": [[g, f, gf], ...]}
//   psg:      {"elements": [...], "product": [[a, b, c], ...]}
//   space:    {"points": [...], "opens": [[...point names...], ...]}
//   msl:      {"elements": [...], "leq": [[a, b], ...], "top": "..."}
// Printing is canonical (fixed field and entry order); parsing a printed
// document and reprinting reproduces it byte for byte.

std::string print_category(const FinCategory& cat);
std::string print_psg(const PartialSemigroup& psg);
std::string print_space(const FinSpace& space);
std::string print_msl(const MeetSemilattice& msl);

FinCategory parse_category(const std::string& text);
PartialSemigroup parse_psg(const std::string& text);
FinSpace parse_space(const std::string& text);
MeetSemilattice parse_msl(const std::string& text);

// Detects the document kind by its keys; exactly one field is set.
Fixture parse_any(const std::string& text);

// Objects as nodes, non-identity morphisms as labelled edges.
std::string dot_category(const FinCategory& cat);

}  // namespace catale

#endif  // CATALE_DOCIO_HPP_
