#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lehmus/bisector.hpp"
#include "lehmus/rational.hpp"
#include "lehmus/report.hpp"

namespace lehmus::harness {

enum class Shape { Any, Isosceles, ScaleneMinGap };

/// Sampling plan for rational triangles. Sides are uniform rationals in
/// [side_lo, side_hi] with denominators up to max_denominator; shapes
/// outside the filter are rejected and redrawn. Every accepted triangle
/// also keeps each triangle-inequality slack above max_side/20 so the
/// floating-point construction stays far from its degeneracy threshold.
struct SampleConfig {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  Shape shape = Shape::Any;
  Rational min_gap{1, 20};  // ScaleneMinGap: require |a-b| > min_gap * max side
  Rational side_lo{1};
  Rational side_hi{10};
  unsigned max_denominator = 1000;
};

std::string shape_name(Shape shape);

/// Exactly config.count triangles, deterministic for a fixed seed.
/// Throws std::invalid_argument on a bad config and std::runtime_error
/// when the filter keeps rejecting (unsatisfiable for the side range).
std::vector<exact::TriangleSides> sample_triangles(const SampleConfig& config);

/// Replaceable check implementations, used by tests to prove the suite
/// catches a deviating implementation.
struct SuiteChecks {
  std::function<exact::IdentityReport(const exact::TriangleSides&)> identity =
      [](const exact::TriangleSides& t) { return exact::lehmus_identity(t); };
};

/// Runs the logic catalog once and the exact + construction checks over
/// the sampled triangles; failures become report records, not errors.
VerificationReport run_full_suite(const SampleConfig& config);
VerificationReport run_full_suite(const SampleConfig& config, const SuiteChecks& checks);

}  // namespace lehmus::harness
