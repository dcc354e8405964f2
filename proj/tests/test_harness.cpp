#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "lehmus/bisector.hpp"
#include "lehmus/harness.hpp"
#include "lehmus/rational.hpp"

using namespace lehmus::harness;
using lehmus::Rational;
using lehmus::exact::TriangleSides;

TEST_CASE("sampling is deterministic for a fixed seed") {
  SampleConfig config;
  config.seed = 42;
  config.count = 3;
  const auto first = sample_triangles(config);
  const auto second = sample_triangles(config);
  REQUIRE(first.size() == 3);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].a() == second[i].a());
    CHECK(first[i].b() == second[i].b());
    CHECK(first[i].c() == second[i].c());
  }

  config.seed = 43;
  const auto other = sample_triangles(config);
  const bool all_same = first[0].a() == other[0].a() && first[0].b() == other[0].b() &&
                        first[0].c() == other[0].c();
  CHECK_FALSE(all_same);
}

TEST_CASE("shape filters shape the samples") {
  SampleConfig config;
  config.seed = 9;
  config.count = 40;

  config.shape = Shape::Isosceles;
  for (const auto& t : sample_triangles(config)) {
    CHECK(t.a() == t.b());
  }

  config.shape = Shape::ScaleneMinGap;
  for (const auto& t : sample_triangles(config)) {
    const Rational max_side = std::max({t.a(), t.b(), t.c()});
    CHECK((t.a() - t.b()).abs() > config.min_gap * max_side);
  }

  config.shape = Shape::Any;
  for (const auto& t : sample_triangles(config)) {
    const Rational max_side = std::max({t.a(), t.b(), t.c()});
    const Rational margin = max_side / 20;
    CHECK(t.a() + t.b() - t.c() > margin);
    CHECK(t.b() + t.c() - t.a() > margin);
    CHECK(t.c() + t.a() - t.b() > margin);
  }
}

TEST_CASE("unsatisfiable filters and bad configs error out") {
  SampleConfig config;
  config.seed = 1;
  config.count = 1;
  config.shape = Shape::ScaleneMinGap;
  config.side_lo = Rational(1);
  config.side_hi = Rational(101, 100);
  CHECK_THROWS_AS(sample_triangles(config), std::runtime_error);

  SampleConfig zero;
  zero.count = 0;
  CHECK_THROWS_AS(sample_triangles(zero), std::invalid_argument);
  CHECK_THROWS_AS(run_full_suite(zero), std::invalid_argument);

  SampleConfig bad_range;
  bad_range.side_lo = Rational(5);
  bad_range.side_hi = Rational(2);
  CHECK_THROWS_AS(sample_triangles(bad_range), std::invalid_argument);
}

TEST_CASE("the full suite passes and reports deterministically") {
  SampleConfig config;
  config.seed = 42;
  config.count = 25;
  const auto report = run_full_suite(config);

  CHECK(report.failed() == 0);
  CHECK(report.checks.size() > 25);
  CHECK(report.generator == "splitmix64");
  CHECK(report.seed == 42);

  const auto again = run_full_suite(config);
  CHECK(report.to_json_string() == again.to_json_string());
}

TEST_CASE("the report serializes with the stable schema fields") {
  SampleConfig config;
  config.seed = 7;
  config.count = 5;
  const auto report = run_full_suite(config);
  const auto parsed = nlohmann::json::parse(report.to_json_string());

  CHECK(parsed.at("seed") == 7);
  CHECK(parsed.at("generator") == "splitmix64");
  CHECK(parsed.at("version").is_string());
  CHECK(parsed.at("config").at("count") == "5");

  REQUIRE(parsed.at("checks").is_array());
  REQUIRE(!parsed.at("checks").empty());
  for (const auto& record : parsed.at("checks")) {
    CHECK(record.contains("check_id"));
    CHECK(record.contains("anchor"));
    CHECK(record.at("pass").is_boolean());
    CHECK(record.contains("residual"));
    CHECK(record.contains("inputs"));
  }

  const auto& summary = parsed.at("summary");
  CHECK(summary.at("total").get<std::size_t>() ==
        summary.at("passed").get<std::size_t>() + summary.at("failed").get<std::size_t>());
  CHECK(summary.at("total").get<std::size_t>() == parsed.at("checks").size());
}

TEST_CASE("an injected identity bug is flagged with its inputs") {
  SampleConfig config;
  config.seed = 12;
  config.count = 10;

  SuiteChecks mutated;
  mutated.identity = [](const TriangleSides& t) {
    using lehmus::exact::IdentityReport;
    const Rational& a = t.a();
    const Rational& b = t.b();
    const Rational& c = t.c();
    // Deliberately drops the "+ b*a" term inside Y.
    const Rational numerator =
        b * a * (c.squared() + b.squared() + a.squared() + 2 * c * (b + a));
    IdentityReport report;
    report.y = Rational(1) + numerator / ((c + a).squared() * (c + b).squared());
    const auto data = lehmus::exact::bisector_data(t);
    report.lhs = (data.aa1_sq - data.bb1_sq) / c;
    report.rhs = (b - a) * report.y;
    report.pass = report.lhs == report.rhs;
    return report;
  };

  const auto report = run_full_suite(config, mutated);
  std::size_t identity_failures = 0;
  for (const auto& record : report.checks) {
    if (record.check_id == "exact.bisector_identity" && !record.pass) {
      ++identity_failures;
      bool has_a = false;
      for (const auto& [key, value] : record.inputs) {
        if (key == "a") has_a = !value.empty();
      }
      CHECK(has_a);
    }
  }
  // Isosceles samples keep both sides at zero, so only a != b can expose
  // the dropped term; the any-shape sampler virtually always does.
  CHECK(identity_failures > 0);
}
