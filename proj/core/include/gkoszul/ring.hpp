#pragma once
// Presentation of a local algebra as a quotient of a power series ring:
// field characteristic, ordered variable list, ideal generators contained in
// the square of the maximal ideal, and an optional working truncation degree.
// Serializable to/from a small JSON document.

#include <optional>
#include <string>
#include <vector>

#include "gkoszul/polynomial.hpp"

namespace gkoszul {

struct RingPresentation {
  uint32_t field = 101;
  std::vector<std::string> variables;
  std::vector<Poly> generators;
  std::optional<int> truncation;

  int nvars() const { return static_cast<int>(variables.size()); }
};

// Parse generator strings and validate everything (prime field, well-formed
// distinct variable names, generators in the square of the maximal ideal).
RingPresentation make_presentation(uint32_t field,
                                   std::vector<std::string> variables,
                                   const std::vector<std::string>& generators,
                                   std::optional<int> truncation = std::nullopt);

void validate_presentation(const RingPresentation& p);

// JSON document {"field":p,"variables":[...],"generators":["...",...]} with
// an optional "truncation" key.  Round-trips exactly (generators are printed
// canonically).
RingPresentation presentation_from_json_text(const std::string& text);
std::string presentation_to_json_text(const RingPresentation& p);

}  // namespace gkoszul
