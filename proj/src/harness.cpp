#include "lehmus/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lehmus/construction.hpp"
#include "lehmus/logic.hpp"
#include "lehmus/rng.hpp"

namespace lehmus::harness {

namespace {

constexpr std::size_t kMaxRejectionsPerSample = 20000;

// Keeps every slack of the triangle inequality above max_side / 20, so
// embedded triangles are well-conditioned for the double-precision
// construction checks.
const Rational& degeneracy_margin() {
  static const Rational margin(1, 20);
  return margin;
}

void validate(const SampleConfig& config) {
  if (config.count < 1) {
    throw std::invalid_argument("sample config: count must be at least 1");
  }
  if (!config.side_lo.is_positive() || config.side_hi < config.side_lo) {
    throw std::invalid_argument("sample config: need 0 < side_lo <= side_hi");
  }
  if (config.max_denominator < 1 || config.max_denominator > 1000) {
    throw std::invalid_argument("sample config: max_denominator must lie in [1, 1000]");
  }
  if (config.min_gap.is_negative() || config.min_gap >= Rational(1)) {
    throw std::invalid_argument("sample config: min_gap must lie in [0, 1)");
  }
}

// ceil(value * q) and floor(value * q) for positive rationals.
boost::multiprecision::cpp_int ceil_times(const Rational& value,
                                          const boost::multiprecision::cpp_int& q) {
  const auto num = numerator(value.raw()) * q;
  const auto den = denominator(value.raw());
  return (num + den - 1) / den;
}

boost::multiprecision::cpp_int floor_times(const Rational& value,
                                           const boost::multiprecision::cpp_int& q) {
  return numerator(value.raw()) * q / denominator(value.raw());
}

Rational sample_side(SplitMix64& rng, const SampleConfig& config) {
  using boost::multiprecision::cpp_int;
  for (;;) {
    const cpp_int q = 1 + static_cast<long long>(rng.below(config.max_denominator));
    const cpp_int lo = ceil_times(config.side_lo, q);
    const cpp_int hi = floor_times(config.side_hi, q);
    if (lo > hi) continue;  // denominator too coarse for the range
    const auto span = (hi - lo + 1).convert_to<std::uint64_t>();
    const cpp_int p = lo + static_cast<long long>(rng.below(span));
    return Rational(Rational::Backend(p, q));
  }
}

bool margins_ok(const Rational& a, const Rational& b, const Rational& c) {
  const Rational max_side = std::max({a, b, c});
  const Rational bound = degeneracy_margin() * max_side;
  return (a + b - c) > bound && (b + c - a) > bound && (c + a - b) > bound;
}

bool shape_ok(const SampleConfig& config, const Rational& a, const Rational& b,
              const Rational& c) {
  switch (config.shape) {
    case Shape::Any:
      return true;
    case Shape::Isosceles:
      return a == b;
    case Shape::ScaleneMinGap: {
      const Rational max_side = std::max({a, b, c});
      return (a - b).abs() > config.min_gap * max_side;
    }
  }
  return false;
}

}  // namespace

std::string shape_name(Shape shape) {
  switch (shape) {
    case Shape::Any:
      return "any";
    case Shape::Isosceles:
      return "isosceles";
    case Shape::ScaleneMinGap:
      return "scalene";
  }
  return "unknown";
}

std::vector<exact::TriangleSides> sample_triangles(const SampleConfig& config) {
  validate(config);
  SplitMix64 rng(config.seed);
  std::vector<exact::TriangleSides> out;
  out.reserve(config.count);
  while (out.size() < config.count) {
    std::size_t rejections = 0;
    for (;;) {
      const Rational a = sample_side(rng, config);
      const Rational b = config.shape == Shape::Isosceles ? a : sample_side(rng, config);
      const Rational c = sample_side(rng, config);
      if (margins_ok(a, b, c) && shape_ok(config, a, b, c)) {
        out.push_back(exact::TriangleSides::create(a, b, c));
        break;
      }
      if (++rejections >= kMaxRejectionsPerSample) {
        throw std::runtime_error("sample_triangles: shape filter unsatisfiable after " +
                                 std::to_string(rejections) + " rejections");
      }
    }
  }
  return out;
}

namespace {

std::vector<std::pair<std::string, std::string>> triangle_inputs(
    const exact::TriangleSides& t) {
  return {{"a", t.a().str()}, {"b", t.b().str()}, {"c", t.c().str()}};
}

CheckRecord exact_record(std::string id, std::string anchor,
                         const exact::TriangleSides& t, bool pass) {
  CheckRecord r;
  r.check_id = std::move(id);
  r.anchor = std::move(anchor);
  r.pass = pass;
  r.exact = pass;
  r.inputs = triangle_inputs(t);
  return r;
}

CheckRecord residual_record(std::string id, std::string anchor,
                            const exact::TriangleSides& t, double residual,
                            double tolerance) {
  CheckRecord r;
  r.check_id = std::move(id);
  r.anchor = std::move(anchor);
  r.pass = residual <= tolerance;
  r.residual = residual;
  r.tolerance = tolerance;
  r.inputs = triangle_inputs(t);
  return r;
}

geom::ConstructionScene scene_for(const exact::TriangleSides& t) {
  const auto [a, b, c] = geom::embed_sides(t.a().to_double(), t.b().to_double(),
                                           t.c().to_double());
  return geom::build_scene(a, b, c);
}

void run_exact_checks(VerificationReport& report, const exact::TriangleSides& t,
                      const Rational& split, const SuiteChecks& checks) {
  const auto quad = exact::cevian_quadruple(t, split);
  CheckRecord stewart = exact_record("exact.stewart_residual",
                                     "Stewart's relation for a cevian quadruple", t,
                                     exact::stewart_residual(quad).is_zero());
  stewart.inputs.emplace_back("t", split.str());
  report.add(std::move(stewart));

  const auto identity = checks.identity(t);
  CheckRecord id_record = exact_record(
      "exact.bisector_identity",
      "(|AA1|^2 - |BB1|^2)/c = (b - a) * Y for internal bisectors", t, identity.pass);
  id_record.inputs.emplace_back("lhs", identity.lhs.str());
  id_record.inputs.emplace_back("rhs", identity.rhs.str());
  report.add(std::move(id_record));

  const auto data = exact::bisector_data(t);
  const int delta_sign = (data.aa1_sq - data.bb1_sq).sign();
  const int side_sign = (t.b() - t.a()).sign();
  report.add(exact_record("exact.sign_law",
                          "sign(|AA1|^2 - |BB1|^2) equals sign(b - a); zero iff a = b",
                          t, delta_sign == side_sign));

  const Rational direct = data.alpha - data.beta;
  report.add(exact_record("exact.alpha_minus_beta",
                          "closed form of alpha - beta matches the direct difference",
                          t, exact::alpha_minus_beta(t) == direct));
}

void run_construction_checks(VerificationReport& report, const exact::TriangleSides& t,
                             Shape shape) {
  const auto scene = scene_for(t);

  const auto power = geom::power_relations(scene);
  report.add(residual_record("construction.power_of_point",
                             "|HK||HN| = |HJ||HC| and |GM||GL| = |GJ||GC|", t,
                             std::max(power.at_h, power.at_g), 1e-9));

  const double defect = std::abs(geom::parallelism_check(scene));
  report.add(exact_record("construction.parallel_iff_isosceles",
                          "A1B1 parallel to AB exactly when |CA| = |CB|", t,
                          (defect < 1e-12) == (t.a() == t.b())));

  if (shape == Shape::Isosceles) {
    const auto coincidence = geom::hg_coincidence(scene);
    report.add(residual_record("construction.hg_gap",
                               "H and G on ray CJ coincide for equal bisectors", t,
                               coincidence.gap, 1e-9));
    const double radii = std::abs(scene.k1.radius() - scene.k2.radius()) /
                         std::max(scene.k1.radius(), scene.k2.radius());
    report.add(residual_record("construction.equal_radii",
                               "equal chords under equal angles lie on congruent circles",
                               t, radii, 1e-12));
    report.add(residual_record("construction.bisection_root",
                               "measured |HJ| solves t^2 + d t - power = 0", t,
                               std::max(coincidence.root_residual_x,
                                        coincidence.root_residual_y),
                               1e-12));
    bool congruent = false;
    try {
      congruent = geom::congruence_conclusion(scene);
    } catch (const std::invalid_argument&) {
      congruent = false;
    }
    report.add(exact_record("construction.congruence",
                            "triangles AGC and BGC are congruent, so |CA| = |CB|", t,
                            congruent));
  }

  if (shape == Shape::ScaleneMinGap) {
    double min_margin = 1.0;
    bool feet_ok = true;
    for (int i = 1; i <= 20; ++i) {
      const double j = static_cast<double>(i) / 21.0;
      try {
        const auto pair = geom::cevian_probe(scene.a, scene.b, scene.c, j);
        const double margin = std::abs(pair.from_a - pair.from_b) /
                              std::max(pair.from_a, pair.from_b);
        min_margin = std::min(min_margin, margin);
      } catch (const std::exception&) {
        feet_ok = false;
      }
    }
    CheckRecord probe;
    probe.check_id = "construction.cevian_probe";
    probe.anchor = "equal cevians through a bisector point force an isosceles triangle";
    probe.pass = feet_ok && min_margin > 1e-6;
    probe.residual = min_margin;
    probe.tolerance = 1e-6;
    probe.inputs = triangle_inputs(t);
    report.add(std::move(probe));

    const double signed_defect = geom::parallelism_check(scene);
    const int defect_sign = signed_defect > 0 ? 1 : (signed_defect < 0 ? -1 : 0);
    const bool sign_consistent = defect_sign == exact::alpha_minus_beta(t).sign();
    CheckRecord parallel;
    parallel.check_id = "construction.parallelism_defect";
    parallel.anchor = "A1B1 stays slanted against AB in a scalene triangle";
    parallel.pass = sign_consistent && std::abs(signed_defect) > 1e-6;
    parallel.residual = std::abs(signed_defect);
    parallel.tolerance = 1e-6;
    parallel.inputs = triangle_inputs(t);
    report.add(std::move(parallel));
  }
}

}  // namespace

VerificationReport run_full_suite(const SampleConfig& config) {
  return run_full_suite(config, SuiteChecks{});
}

VerificationReport run_full_suite(const SampleConfig& config, const SuiteChecks& checks) {
  validate(config);

  VerificationReport report;
  report.generator = std::string(kGeneratorName);
  report.seed = config.seed;
  report.config.emplace_back("count", std::to_string(config.count));
  report.config.emplace_back("shape", shape_name(config.shape));
  report.config.emplace_back("min_gap", config.min_gap.str());
  report.config.emplace_back("side_lo", config.side_lo.str());
  report.config.emplace_back("side_hi", config.side_hi.str());
  report.config.emplace_back("max_denominator", std::to_string(config.max_denominator));

  report.merge(logic::verify_catalog());

  const auto samples = sample_triangles(config);

  // Split points for the Stewart quadruples come from a stream derived
  // from the sampling seed, so the whole run replays from one number.
  SplitMix64 split_rng(SplitMix64(config.seed ^ 0x5DEECE66DULL).next());
  for (const auto& triangle : samples) {
    const Rational split(
        1 + static_cast<long long>(split_rng.below(999)), 1000);
    run_exact_checks(report, triangle, split, checks);
    run_construction_checks(report, triangle, config.shape);
  }
  return report;
}

}  // namespace lehmus::harness
