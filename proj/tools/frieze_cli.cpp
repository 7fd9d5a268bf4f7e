#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frieze/determinants.hpp"
#include "frieze/difference_equation.hpp"
#include "frieze/errors.hpp"
#include "frieze/frieze_pattern.hpp"
#include "frieze/gale.hpp"
#include "frieze/io.hpp"
#include "frieze/periodic_maps.hpp"
#include "frieze/polygon.hpp"
#include "frieze/unitriangular.hpp"

namespace {

using namespace frieze;

std::vector<Rational> parse_seed_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(rat_parse(item));
  if (out.empty()) throw ArgumentError("empty seed");
  return out;
}

std::string join_state(const MapState& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += rat_str(s[i]);
  }
  return out;
}

MapState random_seed(std::mt19937_64& rng, int arity) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 9);
  MapState s;
  for (int i = 0; i < arity; ++i) s.push_back(rat(num(rng), den(rng)));
  return s;
}

void emit(const InstanceFile& inst, const std::string& out_path) {
  std::string text = canonical_dump(instance_to_json(inst));
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

InstanceFile load(const std::string& path) { return parse_instance_text(read_file(path)); }

DifferenceEquation load_equation(const InstanceFile& inst) {
  if (inst.kind == "equation") return equation_from_json(inst.payload);
  if (inst.kind == "frieze") return equation_from_frieze(frieze_from_json(inst.payload));
  throw ArgumentError("expected an equation (or frieze) instance");
}

void emit_generated(const DifferenceEquation& eq, const MapState& seed,
                    const std::string& generator, bool as_frieze,
                    const std::string& out_path) {
  InstanceFile inst;
  if (as_frieze) {
    inst.kind = "frieze";
    inst.payload = frieze_to_json(frieze_from_equation(eq));
  } else {
    inst.kind = "equation";
    inst.payload = equation_to_json(eq);
  }
  inst.meta = Json{};
  (*inst.meta)["generator"] = generator;
  (*inst.meta)["seed"] = join_state(seed);
  emit(inst, out_path);
}

int cmd_gen(int k, int n, const std::string& seed_text, bool as_frieze,
            const std::string& out_path) {
  if (k != 1 && k != 2)
    throw ArgumentError("gen supports k = 1 and k = 2; higher orders via gale chaining");
  const std::string generator = (k == 1) ? "hill_from_orbit" : "third_order_from_orbit";
  if (seed_text.find(',') != std::string::npos) {
    MapState seed = parse_seed_list(seed_text);
    DifferenceEquation eq =
        (k == 1) ? hill_from_orbit(n, seed) : third_order_from_orbit(n, seed);
    emit_generated(eq, seed, generator, as_frieze, out_path);
    return 0;
  }
  // a single integer is an RNG seed; the state is drawn from it
  std::mt19937_64 rng(std::stoull(seed_text));
  const int arity = (k == 1) ? n - 3 : 2 * (n - 4);
  for (int attempt = 0; attempt < 256; ++attempt) {
    MapState seed = random_seed(rng, arity);
    try {
      DifferenceEquation eq =
          (k == 1) ? hill_from_orbit(n, seed) : third_order_from_orbit(n, seed);
      emit_generated(eq, seed, generator, as_frieze, out_path);
      return 0;
    } catch (const DomainError&) {
      continue;  // singular orbit: redraw
    }
  }
  throw DomainError("no nonsingular seed found");
}

int cmd_check(const std::string& path, bool json_mode) {
  InstanceFile inst = load(path);
  Json report;
  report["kind"] = inst.kind;
  bool ok = true;
  if (inst.kind == "equation") {
    DifferenceEquation eq = equation_from_json(inst.payload);
    bool sp = eq.is_superperiodic();
    report["superperiodic"] = sp;
    if (!sp) {
      RatMatrix t = eq.monodromy();
      Json rows = Json::array();
      for (int r = 0; r <= eq.k(); ++r) {
        Json row = Json::array();
        for (int c = 0; c <= eq.k(); ++c) row.push_back(rat_str(t.at(r, c)));
        rows.push_back(row);
      }
      report["monodromy"] = rows;
      ok = false;
    }
  } else if (inst.kind == "frieze") {
    FriezePattern f = frieze_from_json(inst.payload);
    auto sl = sl_check(f);
    auto tame = tame_check(f);
    auto to_json = [](const CheckReport& rep) {
      Json out;
      out["ok"] = rep.ok();
      Json fails = Json::array();
      for (const auto& w : rep.failures) {
        Json f2;
        f2["i"] = w.i;
        f2["j"] = w.j;
        f2["value"] = rat_str(w.value);
        fails.push_back(f2);
      }
      out["failures"] = fails;
      return out;
    };
    report["sl"] = to_json(sl);
    report["tame"] = to_json(tame);
    ok = sl.ok() && tame.ok();
  } else {
    PolygonLift p = polygon_from_json(inst.payload);
    Json bad = Json::array();
    for (int i = 0; i < p.n(); ++i)
      if (window_determinant(p, i) == 0) bad.push_back(i);
    report["degenerate_windows"] = bad;
    ok = bad.empty();
  }
  report["ok"] = ok;
  if (json_mode) {
    std::cout << canonical_dump(report);
  } else if (ok) {
    std::cout << "ok\n";
  } else {
    if (inst.kind == "frieze") {
      FriezePattern f = frieze_from_json(inst.payload);
      std::cout << sl_check(f).describe("SL windows") << "\n"
                << tame_check(f).describe("tameness windows") << "\n";
    } else {
      std::cout << "check failed\n" << canonical_dump(report);
    }
  }
  return ok ? 0 : 1;
}

int cmd_gale(const std::string& path, const std::string& out_path) {
  InstanceFile inst = load(path);
  if (inst.kind == "frieze") {
    FriezePattern g = gale_on_frieze(frieze_from_json(inst.payload));
    emit({"frieze", frieze_to_json(g), inst.meta}, out_path);
  } else {
    DifferenceEquation g = gale_transform(load_equation(inst));
    emit({"equation", equation_to_json(g), inst.meta}, out_path);
  }
  return 0;
}

int cmd_dual(const std::string& path, const std::string& to,
             const std::string& out_path) {
  InstanceFile inst = load(path);
  std::string kind = to.empty() ? inst.kind : to;
  if (kind != "equation" && kind != "frieze")
    throw ArgumentError("--to must be 'equation' or 'frieze'");
  if (inst.kind == "frieze" && kind == "frieze") {
    FriezePattern f = horizontal_flip(frieze_from_json(inst.payload));
    emit({"frieze", frieze_to_json(f), inst.meta}, out_path);
    return 0;
  }
  DifferenceEquation d = projective_dual(load_equation(inst));
  if (kind == "frieze")
    emit({"frieze", frieze_to_json(frieze_from_equation(d)), inst.meta}, out_path);
  else
    emit({"equation", equation_to_json(d), inst.meta}, out_path);
  return 0;
}

void print_matrix(const std::string& label, const RatMatrix& m) {
  std::cout << label << ":\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      std::cout << (c ? " " : "  ") << rat_str(m.at(r, c));
    std::cout << "\n";
  }
}

int cmd_iota(const std::string& path, bool dump, const std::string& out_path) {
  InstanceFile inst = load(path);
  FriezePattern f = inst.kind == "frieze"
                        ? frieze_from_json(inst.payload)
                        : frieze_from_equation(equation_from_json(inst.payload));
  if (dump) {
    UnitriangularMatrix a = cut_matrix(f);
    print_matrix("A_F", a.matrix());
    print_matrix("iota(A_F)", iota(a).matrix());
  }
  emit({"frieze", frieze_to_json(iota_on_frieze(f)), inst.meta}, out_path);
  return 0;
}

int cmd_orbit(const std::string& map_name, int n, const std::string& seed_text,
              int steps) {
  RationalMap map;
  if (map_name == "F")
    map = map_F(n);
  else if (map_name == "Phi")
    map = map_Phi(n);
  else if (map_name == "Go")
    map = map_Go(n);
  else if (map_name == "Ge")
    map = map_Ge(n);
  else if (map_name == "corner")
    map = corner_map(n);
  else
    throw ArgumentError("unknown map '" + map_name + "'");
  MapState seed = parse_seed_list(seed_text);
  OrbitResult orbit = iterate(map, seed, steps > 0 ? steps : map.claimed_period);
  for (const auto& s : orbit.states) std::cout << join_state(s) << "\n";
  if (orbit.singular_at) {
    std::cout << "singular at step " << *orbit.singular_at << " | claimed "
              << map.claimed_period << "\n";
    return 1;
  }
  if (orbit.minimal_period) {
    std::cout << "minimal period " << *orbit.minimal_period << " | claimed "
              << map.claimed_period << "\n";
    return 0;
  }
  std::cout << "no return within " << steps << " steps | claimed "
            << map.claimed_period << "\n";
  return 1;
}

int cmd_polygon(const std::string& path, bool invert, const std::string& out_path) {
  InstanceFile inst = load(path);
  if (!invert) {
    DifferenceEquation eq = load_equation(inst);
    emit({"polygon", polygon_to_json(lift_from_equation(eq)), inst.meta}, out_path);
    return 0;
  }
  PolygonLift p = polygon_from_json(inst.payload);
  PolygonResult res = equation_from_polygon(p);
  if (std::holds_alternative<DifferenceEquation>(res)) {
    emit({"equation", equation_to_json(std::get<DifferenceEquation>(res)), inst.meta},
         out_path);
    return 0;
  }
  const Obstruction& ob = std::get<Obstruction>(res);
  Json j;
  j["obstruction"] = true;
  if (ob.fiber_dimension) j["fiber_dimension"] = *ob.fiber_dimension;
  if (ob.root_certificate) {
    j["root_of"] = rat_str(*ob.root_certificate);
    j["degree"] = ob.root_degree;
  }
  std::cout << canonical_dump(j);
  return 1;
}

int cmd_det(const std::string& path, long i, int j) {
  InstanceFile inst = load(path);
  DifferenceEquation eq = load_equation(inst);
  FriezePattern f = frieze_from_equation(eq);
  std::cout << "recurrence  " << rat_str(f.entry(i, i + j)) << "\n";
  std::cout << "banded      " << rat_str(entry_determinant(eq, i, j)) << "\n";
  std::cout << "alternative " << rat_str(entry_determinant_alt(eq, i, j)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact difference-equation / frieze-pattern toolkit"};
  app.require_subcommand(1);

  std::string out_path, seed_text, file, map_name = "F";
  int k = 1, n = 5, steps = 0, dj = 0;
  long di = 0;
  bool json_mode = false, invert = false, dump = false, emit_frieze = false;
  std::string to_kind;
  app.add_flag("--json", json_mode, "machine-readable output");
  app.add_flag("--human", "plain output (default)");

  auto* gen = app.add_subcommand("gen", "generate a superperiodic equation");
  gen->add_option("--k", k, "order parameter (1 or 2)")->required();
  gen->add_option("--n", n, "period")->required();
  gen->add_option("--seed", seed_text, "comma-separated state or integer RNG seed")
      ->required();
  gen->add_flag("--emit-frieze", emit_frieze, "write the frieze instead of the equation");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "validate an instance file");
  check->add_option("file", file, "instance JSON")->required();

  auto* gale = app.add_subcommand("gale", "combinatorial Gale transform");
  gale->add_option("file", file)->required();
  gale->add_option("-o,--out", out_path);

  auto* dual = app.add_subcommand("dual", "projective dual");
  dual->add_option("file", file)->required();
  dual->add_option("--to", to_kind, "output representation: equation | frieze");
  dual->add_option("-o,--out", out_path);

  auto* iotac = app.add_subcommand("iota", "unitriangular anti-involution");
  iotac->add_option("file", file)->required();
  iotac->add_flag("--dump-matrices", dump, "print A_F and iota(A_F)");
  iotac->add_option("-o,--out", out_path);

  auto* orbit = app.add_subcommand("orbit", "iterate a periodic rational map");
  orbit->add_option("--map", map_name, "F | Phi | Go | Ge | corner")->required();
  orbit->add_option("--n", n, "period parameter")->required();
  orbit->add_option("--seed", seed_text, "comma-separated rational state")->required();
  orbit->add_option("--steps", steps, "maximum steps (default: claimed period)");

  auto* poly = app.add_subcommand("polygon", "equation <-> polygon");
  poly->add_option("file", file)->required();
  poly->add_flag("--invert", invert, "polygon -> equation / obstruction");
  poly->add_option("-o,--out", out_path);

  auto* det = app.add_subcommand("det", "frieze entry via determinant formulas");
  det->add_option("file", file)->required();
  det->add_option("--i", di, "diagonal index")->required();
  det->add_option("--j", dj, "band offset")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(k, n, seed_text, emit_frieze, out_path);
    if (check->parsed()) return cmd_check(file, json_mode);
    if (gale->parsed()) return cmd_gale(file, out_path);
    if (dual->parsed()) return cmd_dual(file, to_kind, out_path);
    if (iotac->parsed()) return cmd_iota(file, dump, out_path);
    if (orbit->parsed()) return cmd_orbit(map_name, n, seed_text, steps);
    if (poly->parsed()) return cmd_polygon(file, invert, out_path);
    if (det->parsed()) return cmd_det(file, di, dj);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
