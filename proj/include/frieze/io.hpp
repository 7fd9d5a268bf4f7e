#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "frieze/difference_equation.hpp"
#include "frieze/frieze_pattern.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

using Json = nlohmann::ordered_json;

// equation payload: {"k": int, "n": int, "coeffs": [[rational strings]]}
Json equation_to_json(const DifferenceEquation& eq);
DifferenceEquation equation_from_json(const Json& j);

// frieze payload: {"k": int, "w": int, "n": int, "rows": [[rational strings]]}
// with rows[r][c] = alpha_{c}^{r+1}
Json frieze_to_json(const FriezePattern& f);
FriezePattern frieze_from_json(const Json& j);

// polygon payload: {"k": int, "n": int, "points": [[rational strings]]}
Json polygon_to_json(const PolygonLift& p);
PolygonLift polygon_from_json(const Json& j);

// envelope: {"kind": "equation"|"frieze"|"polygon", "payload": ..., "meta": ...}
struct InstanceFile {
  std::string kind;
  Json payload;
  std::optional<Json> meta;
};

Json instance_to_json(const InstanceFile& inst);
InstanceFile instance_from_json(const Json& j);
InstanceFile parse_instance_text(const std::string& text);

// fixed two-space indentation and a trailing newline, so equal values have
// byte-identical serializations
std::string canonical_dump(const Json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace frieze
