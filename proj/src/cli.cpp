#include "lehmus/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "lehmus/bisector.hpp"
#include "lehmus/construction.hpp"
#include "lehmus/harness.hpp"
#include "lehmus/logic.hpp"
#include "lehmus/rational.hpp"
#include "lehmus/report.hpp"

namespace lehmus::cli {

namespace {

struct LogicTableArgs {
  std::string formula;
};

struct LogicEquivArgs {
  std::string lhs, rhs;
};

struct GeomTriangleArgs {
  std::string a, b, c;
};

struct GeomConstructArgs {
  std::string a, b, c;
  bool dump_scene = false;
};

struct VerifyArgs {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  std::string shape = "any";
  std::string min_gap = "1/20";
  std::string lo = "1";
  std::string hi = "10";
  unsigned max_denominator = 1000;
  std::string json_path;
};

geom::Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("expected coordinates as 'x,y', got '" + text + "'");
  }
  std::size_t used_x = 0;
  std::size_t used_y = 0;
  const std::string xs = text.substr(0, comma);
  const std::string ys = text.substr(comma + 1);
  const double x = std::stod(xs, &used_x);
  const double y = std::stod(ys, &used_y);
  if (used_x != xs.size() || used_y != ys.size() || !std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("expected coordinates as 'x,y', got '" + text + "'");
  }
  return {x, y};
}

int run_logic_table(const LogicTableArgs& args, std::ostream& out) {
  const auto formula = logic::parse_formula(args.formula);
  const auto table = logic::truth_table(formula);
  for (const auto& name : table.variables) out << name << ' ';
  out << "| " << formula.str() << '\n';
  for (std::size_t row = 0; row < table.rows.size(); ++row) {
    for (std::size_t v = 0; v < table.variables.size(); ++v) {
      out << std::string(table.variables[v].size() - 1, ' ')
          << (table.cell(row, v) ? 'T' : 'F') << ' ';
    }
    out << "| " << (table.rows[row].value ? 'T' : 'F') << '\n';
  }
  return kExitOk;
}

int run_logic_equiv(const LogicEquivArgs& args, std::ostream& out) {
  const auto lhs = logic::parse_formula(args.lhs);
  const auto rhs = logic::parse_formula(args.rhs);
  const bool equivalent = logic::are_equivalent(lhs, rhs);
  out << (equivalent ? "EQUIVALENT" : "NOT EQUIVALENT") << '\n';
  return equivalent ? kExitOk : kExitCheckFailed;
}

int run_logic_catalog(std::ostream& out) {
  const auto report = logic::verify_catalog();
  for (const auto& record : report.checks) {
    out << (record.pass ? "PASS " : "FAIL ") << record.check_id << "  ("
        << record.anchor << ")\n";
  }
  out << report.passed() << '/' << report.checks.size() << " laws verified\n";
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

exact::TriangleSides triangle_from(const GeomTriangleArgs& args) {
  return exact::TriangleSides::create(Rational::parse(args.a), Rational::parse(args.b),
                                      Rational::parse(args.c));
}

int run_geom_bisectors(const GeomTriangleArgs& args, std::ostream& out) {
  const auto triangle = triangle_from(args);
  const auto data = exact::bisector_data(triangle);
  const int sign = exact::sign_theorem(triangle);
  out << "alpha = " << data.alpha << '\n';
  out << "beta = " << data.beta << '\n';
  out << "AA1^2 = " << data.aa1_sq << '\n';
  out << "BB1^2 = " << data.bb1_sq << '\n';
  out << "alpha - beta = " << exact::alpha_minus_beta(triangle) << '\n';
  out << "sign(|AA1|^2 - |BB1|^2) = sign(b - a) = "
      << (sign > 0 ? "+" : (sign < 0 ? "-" : "0")) << '\n';
  if (sign == 0) {
    out << "isosceles: |AA1| = |BB1| exactly\n";
  }
  return kExitOk;
}

int run_geom_identity(const GeomTriangleArgs& args, std::ostream& out) {
  const auto triangle = triangle_from(args);
  const auto identity = exact::lehmus_identity(triangle);
  out << "Y = " << identity.y << '\n';
  out << "(|AA1|^2 - |BB1|^2)/c = " << identity.lhs << '\n';
  out << "(b - a) * Y = " << identity.rhs << '\n';
  out << (identity.pass ? "IDENTITY HOLDS (exact)" : "IDENTITY VIOLATED") << '\n';
  return identity.pass ? kExitOk : kExitCheckFailed;
}

nlohmann::ordered_json point_json(const geom::Point& p) {
  return nlohmann::ordered_json{{"x", p.x}, {"y", p.y}};
}

nlohmann::ordered_json scene_json(const geom::ConstructionScene& s) {
  nlohmann::ordered_json j;
  j["A"] = point_json(s.a);
  j["B"] = point_json(s.b);
  j["C"] = point_json(s.c);
  j["A1"] = point_json(s.foot_a);
  j["B1"] = point_json(s.foot_b);
  j["J"] = point_json(s.incenter);
  j["H"] = point_json(s.h);
  j["G"] = point_json(s.g);
  j["K"] = point_json(s.mid_k);
  j["M"] = point_json(s.mid_m);
  j["N"] = point_json(s.n);
  j["L"] = point_json(s.l);
  j["k1"] = {{"center", point_json(s.k1.center)}, {"radius_sq", s.k1.radius_sq}};
  j["k2"] = {{"center", point_json(s.k2.center)}, {"radius_sq", s.k2.radius_sq}};
  j["gamma"] = s.gamma;
  j["d"] = s.d;
  j["x"] = s.x;
  j["y"] = s.y;
  j["power_h"] = s.power_h;
  j["power_g"] = s.power_g;
  j["bisector_a"] = s.bisector_a;
  j["bisector_b"] = s.bisector_b;
  return j;
}

int run_geom_construct(const GeomConstructArgs& args, std::ostream& out) {
  const auto scene = geom::build_scene(parse_point(args.a), parse_point(args.b),
                                       parse_point(args.c));
  if (args.dump_scene) {
    out << scene_json(scene).dump(2) << '\n';
    return kExitOk;
  }

  out << std::setprecision(17);
  bool ok = true;

  const auto power = geom::power_relations(scene);
  const bool power_ok = power.at_h <= 1e-9 && power.at_g <= 1e-9;
  ok = ok && power_ok;
  out << (power_ok ? "PASS" : "FAIL") << " power of a point: residuals " << power.at_h
      << ", " << power.at_g << '\n';

  const auto coincidence = geom::hg_coincidence(scene);
  const bool roots_ok =
      coincidence.root_residual_x <= 1e-9 && coincidence.root_residual_y <= 1e-9;
  ok = ok && roots_ok;
  out << (roots_ok ? "PASS" : "FAIL") << " quadratic roots for |HJ|, |GJ|: residuals "
      << coincidence.root_residual_x << ", " << coincidence.root_residual_y << '\n';

  out << "info H-G gap: " << coincidence.gap << '\n';

  const double rel_bisector_gap =
      std::abs(scene.bisector_a - scene.bisector_b) / scene.scale;
  if (rel_bisector_gap <= 1e-9) {
    const bool congruent = geom::congruence_conclusion(scene);
    ok = ok && congruent;
    out << (congruent ? "PASS" : "FAIL")
        << " congruence conclusion (equal bisectors): |CA| = |CB|\n";
  } else {
    out << "info congruence conclusion skipped: |AA1| and |BB1| differ ("
        << rel_bisector_gap << " relative)\n";
  }

  const double defect = geom::parallelism_check(scene);
  const char* verdict = std::abs(defect) < 1e-9
                            ? "parallel (isosceles)"
                            : (std::abs(defect) > 1e-6 ? "not parallel" : "inconclusive");
  out << "info parallelism defect of A1B1 vs AB: " << defect << " (" << verdict << ")\n";

  return ok ? kExitOk : kExitCheckFailed;
}

harness::Shape parse_shape(const std::string& name) {
  if (name == "any") return harness::Shape::Any;
  if (name == "isosceles") return harness::Shape::Isosceles;
  if (name == "scalene") return harness::Shape::ScaleneMinGap;
  throw std::invalid_argument("unknown shape '" + name + "' (any|isosceles|scalene)");
}

int run_verify(const VerifyArgs& args, std::ostream& out) {
  harness::SampleConfig config;
  config.seed = args.seed;
  config.count = args.count;
  config.shape = parse_shape(args.shape);
  config.min_gap = Rational::parse(args.min_gap);
  config.side_lo = Rational::parse(args.lo);
  config.side_hi = Rational::parse(args.hi);
  config.max_denominator = args.max_denominator;

  const auto report = harness::run_full_suite(config);
  if (!args.json_path.empty()) {
    std::ofstream file(args.json_path, std::ios::binary);
    if (!file) {
      throw std::invalid_argument("cannot open '" + args.json_path + "' for writing");
    }
    file << report.to_json_string();
  }
  for (const auto& record : report.checks) {
    if (!record.pass) {
      out << "FAIL " << record.check_id << " (" << record.anchor << ") inputs:";
      for (const auto& [key, value] : record.inputs) {
        out << ' ' << key << '=' << value;
      }
      out << '\n';
    }
  }
  out << report.passed() << '/' << report.checks.size() << " checks passed (seed "
      << report.seed << ")\n";
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"machine checks for the Lehmus-Steiner theorem and its logic toolkit"};
  app.name("lehmus");
  app.require_subcommand(1);

  // logic
  auto* logic_cmd = app.add_subcommand("logic", "propositional calculus checks");
  logic_cmd->require_subcommand(1);

  LogicTableArgs table_args;
  auto* table_cmd = logic_cmd->add_subcommand("table", "print the truth table");
  table_cmd->add_option("formula", table_args.formula, "formula, e.g. \"p -> q\"")
      ->required();

  LogicEquivArgs equiv_args;
  auto* equiv_cmd = logic_cmd->add_subcommand("equiv", "decide logical equivalence");
  equiv_cmd->add_option("lhs", equiv_args.lhs, "first formula")->required();
  equiv_cmd->add_option("rhs", equiv_args.rhs, "second formula")->required();

  auto* catalog_cmd = logic_cmd->add_subcommand("catalog", "verify the built-in law catalog");

  // geom
  auto* geom_cmd = app.add_subcommand("geom", "triangle geometry checks");
  geom_cmd->require_subcommand(1);

  GeomTriangleArgs bisector_args;
  auto* bisectors_cmd =
      geom_cmd->add_subcommand("bisectors", "exact bisector data for sides a b c");
  bisectors_cmd->add_option("a", bisector_args.a, "side a = |BC| (integer or p/q)")
      ->required();
  bisectors_cmd->add_option("b", bisector_args.b, "side b = |AC|")->required();
  bisectors_cmd->add_option("c", bisector_args.c, "side c = |AB|")->required();

  GeomTriangleArgs identity_args;
  auto* identity_cmd =
      geom_cmd->add_subcommand("identity", "exact bisector-difference identity check");
  identity_cmd->add_option("a", identity_args.a, "side a = |BC|")->required();
  identity_cmd->add_option("b", identity_args.b, "side b = |AC|")->required();
  identity_cmd->add_option("c", identity_args.c, "side c = |AB|")->required();

  GeomConstructArgs construct_args;
  auto* construct_cmd =
      geom_cmd->add_subcommand("construct", "build the two-circle scene from vertices");
  construct_cmd->add_option("A", construct_args.a, "vertex A as 'x,y'")->required();
  construct_cmd->add_option("B", construct_args.b, "vertex B as 'x,y'")->required();
  construct_cmd->add_option("C", construct_args.c, "vertex C as 'x,y'")->required();
  construct_cmd->add_flag("--dump-scene", construct_args.dump_scene,
                          "emit all named points and circles as JSON");

  // verify
  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run the full seeded suite");
  verify_cmd->add_option("--seed", verify_args.seed, "64-bit generator seed");
  verify_cmd->add_option("--count", verify_args.count, "number of sampled triangles");
  verify_cmd->add_option("--shape", verify_args.shape, "any|isosceles|scalene");
  verify_cmd->add_option("--min-gap", verify_args.min_gap,
                         "scalene filter: require |a-b| > gap * max side (rational)");
  verify_cmd->add_option("--lo", verify_args.lo, "lower side bound (rational)");
  verify_cmd->add_option("--hi", verify_args.hi, "upper side bound (rational)");
  verify_cmd->add_option("--max-den", verify_args.max_denominator,
                         "largest sampled denominator (<= 1000)");
  verify_cmd->add_option("--json", verify_args.json_path, "write the JSON report here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (table_cmd->parsed()) return run_logic_table(table_args, out);
    if (equiv_cmd->parsed()) return run_logic_equiv(equiv_args, out);
    if (catalog_cmd->parsed()) return run_logic_catalog(out);
    if (bisectors_cmd->parsed()) return run_geom_bisectors(bisector_args, out);
    if (identity_cmd->parsed()) return run_geom_identity(identity_args, out);
    if (construct_cmd->parsed()) return run_geom_construct(construct_args, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, out);
  } catch (const logic::ParseError& e) {
    err << "formula error at position " << e.position() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lehmus::cli
