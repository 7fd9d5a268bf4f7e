#include "frieze/io.hpp"

#include <fstream>
#include <sstream>

#include "frieze/errors.hpp"

namespace frieze {

namespace {

Json rational_rows(const std::vector<std::vector<Rational>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rat_str(x));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<Rational>> parse_rows(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = j[r];
    if (!row.is_array())
      throw ParseError(path + "[" + std::to_string(r) + "]: expected an array");
    std::vector<Rational> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Json& cell = row[c];
      if (!cell.is_string())
        throw ParseError(path + "[" + std::to_string(r) + "][" + std::to_string(c) +
                         "]: rationals are strings");
      out.push_back(rat_parse(cell.get<std::string>()));
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

int require_int(const Json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError("missing integer field '" + key + "'");
  return j[key].get<int>();
}

}  // namespace

Json equation_to_json(const DifferenceEquation& eq) {
  Json j;
  j["k"] = eq.k();
  j["n"] = eq.n();
  j["coeffs"] = rational_rows(eq.coeffs());
  return j;
}

DifferenceEquation equation_from_json(const Json& j) {
  int k = require_int(j, "k"), n = require_int(j, "n");
  if (!j.contains("coeffs")) throw ParseError("missing field 'coeffs'");
  auto rows = parse_rows(j["coeffs"], "coeffs");
  try {
    return DifferenceEquation(k, n, std::move(rows));
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("coeffs: ") + e.what());
  }
}

Json frieze_to_json(const FriezePattern& f) {
  Json j;
  j["k"] = f.k();
  j["w"] = f.w();
  j["n"] = f.n();
  j["rows"] = rational_rows(f.alpha_rows());
  return j;
}

FriezePattern frieze_from_json(const Json& j) {
  int k = require_int(j, "k"), w = require_int(j, "w"), n = require_int(j, "n");
  if (!j.contains("rows")) throw ParseError("missing field 'rows'");
  auto rows = parse_rows(j["rows"], "rows");
  if (static_cast<int>(rows.size()) != w) throw ParseError("rows: expected w rows");
  if (n != k + w + 2) throw ParseError("inconsistent sizes: n != k+w+2");
  try {
    return FriezePattern::from_alpha_rows(k, rows);
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("rows: ") + e.what());
  }
}

Json polygon_to_json(const PolygonLift& p) {
  Json j;
  j["k"] = p.k;
  j["n"] = p.n();
  j["points"] = rational_rows(p.vertices);
  return j;
}

PolygonLift polygon_from_json(const Json& j) {
  int k = require_int(j, "k"), n = require_int(j, "n");
  if (!j.contains("points")) throw ParseError("missing field 'points'");
  auto rows = parse_rows(j["points"], "points");
  if (static_cast<int>(rows.size()) != n) throw ParseError("points: expected n rows");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != k + 1)
      throw ParseError("points: each vertex needs k+1 coordinates");
  PolygonLift p;
  p.k = k;
  p.vertices = std::move(rows);
  return p;
}

Json instance_to_json(const InstanceFile& inst) {
  Json j;
  j["kind"] = inst.kind;
  j["payload"] = inst.payload;
  if (inst.meta) j["meta"] = *inst.meta;
  return j;
}

InstanceFile instance_from_json(const Json& j) {
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("missing string field 'kind'");
  InstanceFile inst;
  inst.kind = j["kind"].get<std::string>();
  if (inst.kind != "equation" && inst.kind != "frieze" && inst.kind != "polygon")
    throw ParseError("unknown kind '" + inst.kind + "'");
  if (!j.contains("payload")) throw ParseError("missing field 'payload'");
  inst.payload = j["payload"];
  if (j.contains("meta")) inst.meta = j["meta"];
  return inst;
}

InstanceFile parse_instance_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  return instance_from_json(j);
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  out << text;
}

}  // namespace frieze
