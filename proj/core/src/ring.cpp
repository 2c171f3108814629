#include "gkoszul/ring.hpp"

#include <set>

#include <nlohmann/json.hpp>

namespace gkoszul {

using nlohmann::json;

void validate_presentation(const RingPresentation& p) {
  Fp F(p.field);  // throws if not an odd prime in range
  if (p.variables.empty())
    throw PreconditionViolated("a presentation needs at least one variable");
  std::set<std::string> seen;
  for (const std::string& v : p.variables) {
    if (!valid_variable_name(v))
      throw PreconditionViolated("bad variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw PreconditionViolated("duplicate variable name '" + v + "'");
  }
  for (const Poly& g : p.generators) {
    if (g.nvars() != p.nvars())
      throw PreconditionViolated("generator written in the wrong variable count");
    if (!g.is_zero() && g.min_deg() < 2)
      throw PreconditionViolated(
          "ideal generators must lie in the square of the maximal ideal");
  }
  if (p.truncation && *p.truncation < 2)
    throw TruncationTooSmall("truncation degree must be at least 2");
}

RingPresentation make_presentation(uint32_t field,
                                   std::vector<std::string> variables,
                                   const std::vector<std::string>& generators,
                                   std::optional<int> truncation) {
  RingPresentation p;
  p.field = field;
  p.variables = std::move(variables);
  p.truncation = truncation;
  Fp F(field);
  for (const std::string& g : generators)
    p.generators.push_back(parse_poly(g, p.variables, F));
  validate_presentation(p);
  return p;
}

RingPresentation presentation_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("ring description must be a JSON object", 0);
  if (!j.contains("field") || !j["field"].is_number_unsigned())
    throw ParseError("missing or invalid 'field'", 0);
  if (!j.contains("variables") || !j["variables"].is_array())
    throw ParseError("missing or invalid 'variables'", 0);
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError("missing or invalid 'generators'", 0);

  std::vector<std::string> vars;
  for (const auto& v : j["variables"]) {
    if (!v.is_string()) throw ParseError("variable names must be strings", 0);
    vars.push_back(v.get<std::string>());
  }
  std::vector<std::string> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw ParseError("generators must be strings", 0);
    gens.push_back(g.get<std::string>());
  }
  std::optional<int> trunc;
  if (j.contains("truncation")) {
    if (!j["truncation"].is_number_integer())
      throw ParseError("'truncation' must be an integer", 0);
    trunc = j["truncation"].get<int>();
  }
  return make_presentation(j["field"].get<uint32_t>(), std::move(vars), gens, trunc);
}

std::string presentation_to_json_text(const RingPresentation& p) {
  json j;
  j["field"] = p.field;
  j["variables"] = p.variables;
  json gens = json::array();
  for (const Poly& g : p.generators) gens.push_back(print_poly(g, p.variables));
  j["generators"] = std::move(gens);
  if (p.truncation) j["truncation"] = *p.truncation;
  return j.dump(2) + "\n";
}

}  // namespace gkoszul
