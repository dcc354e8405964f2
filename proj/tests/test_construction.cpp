#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "lehmus/bisector.hpp"
#include "lehmus/construction.hpp"
#include "lehmus/rational.hpp"
#include "support/coordinate_oracle.hpp"

using namespace lehmus::geom;
using lehmus::Rational;

namespace {

constexpr double kPi = 3.14159265358979323846;

ConstructionScene isosceles_scene() {
  return build_scene({0.0, 0.0}, {4.0, 0.0}, {2.0, 3.0});
}

ConstructionScene scalene_scene() {
  return build_scene({0.0, 0.0}, {5.0, 0.0}, {1.0, 3.0});
}

}  // namespace

TEST_CASE("build_scene rejects collinear input") {
  CHECK_THROWS_AS(build_scene({0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_scene({0.0, 0.0}, {1.0, 0.0}, {0.5, 1e-9}), std::invalid_argument);
}

TEST_CASE("scene invariants hold on a generic triangle") {
  const ConstructionScene s = build_scene({0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0});

  // A1 divides BC in the ratio |AB| : |AC|.
  const double side_b = distance(s.a, s.c);
  const double side_c = distance(s.a, s.b);
  CHECK(distance(s.b, s.foot_a) * side_b ==
        doctest::Approx(distance(s.foot_a, s.c) * side_c).epsilon(1e-12));

  // H and G sit on ray CJ beyond J.
  CHECK(distance(s.c, s.h) > s.d);
  CHECK(distance(s.c, s.g) > s.d);
  CHECK(s.x == doctest::Approx(distance(s.c, s.h) - s.d).epsilon(1e-9));
  CHECK(s.y == doctest::Approx(distance(s.c, s.g) - s.d).epsilon(1e-9));

  // The bisectors differ in a scalene triangle.
  CHECK(std::abs(s.bisector_a - s.bisector_b) / s.scale > 1e-3);

  // The scene radii match the inscribed-angle relation chord = 2 R sin(2 gamma).
  CHECK(s.k1.radius() ==
        doctest::Approx(circumradius_for_chord(s.bisector_a, 2.0 * s.gamma)).epsilon(1e-12));
  CHECK(s.k2.radius() ==
        doctest::Approx(circumradius_for_chord(s.bisector_b, 2.0 * s.gamma)).epsilon(1e-12));
}

TEST_CASE("circumradius_for_chord") {
  CHECK(circumradius_for_chord(2.0, kPi / 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(circumradius_for_chord(2.0, kPi / 6.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(circumradius_for_chord(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(circumradius_for_chord(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(circumradius_for_chord(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(circumradius_for_chord(1.0, kPi), std::invalid_argument);
}

TEST_CASE("an isosceles scene collapses H onto G") {
  const ConstructionScene s = isosceles_scene();

  CHECK(std::abs(s.bisector_a - s.bisector_b) / s.scale < 1e-12);
  CHECK(std::abs(s.k1.radius() - s.k2.radius()) / s.k1.radius() < 1e-12);

  const CoincidenceReport r = hg_coincidence(s);
  CHECK(r.gap < 1e-12);
  CHECK(r.power_gap < 1e-12);
  CHECK(r.root_residual_x < 1e-12);
  CHECK(r.root_residual_y < 1e-12);

  CHECK(congruence_conclusion(s));
  CHECK(std::abs(parallelism_check(s)) < 1e-12);
}

TEST_CASE("power relations hold for any triangle") {
  const PowerResiduals equilateral =
      power_relations(build_scene({0.0, 0.0}, {2.0, 0.0}, {1.0, std::sqrt(3.0)}));
  CHECK(equilateral.at_h < 1e-12);
  CHECK(equilateral.at_g < 1e-12);

  const PowerResiduals scalene = power_relations(scalene_scene());
  CHECK(scalene.at_h < 1e-9);
  CHECK(scalene.at_g < 1e-9);

  // Near-flat apex: |CJ| shrinks toward zero but the relations persist.
  const PowerResiduals thin =
      power_relations(build_scene({-1.0, 0.01}, {1.0, 0.01}, {0.0, 0.0}));
  CHECK(thin.at_h < 1e-9);
  CHECK(thin.at_g < 1e-9);
}

TEST_CASE("scalene scenes keep H and G apart") {
  const ConstructionScene s = scalene_scene();
  const CoincidenceReport r = hg_coincidence(s);
  CHECK(r.gap > 1e-3);
  // The quadratic-root relation does not need equal bisectors.
  CHECK(r.root_residual_x < 1e-12);
  CHECK(r.root_residual_y < 1e-12);
}

TEST_CASE("congruence conclusion gates on equal bisectors") {
  CHECK(congruence_conclusion(isosceles_scene()));
  CHECK(congruence_conclusion(
      build_scene({0.0, 0.0}, {2.0, 0.0}, {1.0, std::sqrt(3.0)})));

  const ConstructionScene nudged = build_scene({0.0, 0.0}, {4.0, 0.0}, {2.0 + 1e-6, 3.0});
  CHECK_THROWS_AS(congruence_conclusion(nudged), std::invalid_argument);
}

TEST_CASE("cevian probe: equal lengths only with a symmetric triangle") {
  for (double j : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const CevianPair sym = cevian_probe({0.0, 0.0}, {4.0, 0.0}, {2.0, 3.0}, j);
    CHECK(std::abs(sym.from_a - sym.from_b) / sym.from_a < 1e-12);
  }

  const CevianPair asym = cevian_probe({0.0, 0.0}, {5.0, 0.0}, {1.0, 3.0}, 0.5);
  // Frozen from the coordinate oracle below.
  CHECK(asym.from_a == doctest::Approx(3.026049822814032).epsilon(1e-9));
  CHECK(asym.from_b == doctest::Approx(4.7586031404328892).epsilon(1e-9));
  CHECK(std::abs(asym.from_a - asym.from_b) /
            std::max(asym.from_a, asym.from_b) >
        1e-6);

  // Independent recomputation: J' on the C-bisector, feet by line cuts.
  const oracle::Pt A{0.0, 0.0}, B{5.0, 0.0}, C{1.0, 3.0};
  const double side_a = oracle::dist(B, C);
  const double side_b = oracle::dist(A, C);
  const oracle::Pt c_foot{A.x + side_b / (side_a + side_b) * (B.x - A.x),
                          A.y + side_b / (side_a + side_b) * (B.y - A.y)};
  const oracle::Pt j{C.x + 0.5 * (c_foot.x - C.x), C.y + 0.5 * (c_foot.y - C.y)};
  const auto cut_a = oracle::cut_cevian(A, j, B, C);
  const auto cut_b = oracle::cut_cevian(B, j, A, C);
  CHECK(asym.from_a == doctest::Approx(cut_a.length).epsilon(1e-12));
  CHECK(asym.from_b == doctest::Approx(cut_b.length).epsilon(1e-12));

  CHECK_THROWS_AS(cevian_probe({0.0, 0.0}, {5.0, 0.0}, {1.0, 3.0}, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(cevian_probe({0.0, 0.0}, {5.0, 0.0}, {1.0, 3.0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(cevian_probe({0.0, 0.0}, {5.0, 0.0}, {2.0, 0.0}, 0.5),
                  std::invalid_argument);  // degenerate triangle
}

TEST_CASE("parallelism defect tracks the exact alpha - beta") {
  // Embedded 4-5-6 triangle: alpha - beta = -3/55 exactly.
  const auto [a, b, c] = embed_sides(4.0, 5.0, 6.0);
  const ConstructionScene s = build_scene(a, b, c);
  const double defect = parallelism_check(s);

  const Rational exact_diff = lehmus::exact::alpha_minus_beta(
      lehmus::exact::TriangleSides::create(Rational(4), Rational(5), Rational(6)));
  CHECK(exact_diff == Rational(-3, 55));
  CHECK(defect < 0.0);
  CHECK(std::abs(defect) > 1e-6);

  // defect = (alpha - beta) * 2 * area / (|A1B1| * |AB|), exactly in reals.
  const double area = 0.5 * std::abs(cross(s.b - s.a, s.c - s.a));
  const double expected = exact_diff.to_double() * 2.0 * area /
                          (distance(s.foot_a, s.foot_b) * distance(s.a, s.b));
  CHECK(defect == doctest::Approx(expected).epsilon(1e-9));

  const auto [ea, eb, ec] = embed_sides(2.0, 2.0, 2.0);
  CHECK(std::abs(parallelism_check(build_scene(ea, eb, ec))) < 1e-12);
}

TEST_CASE("embedded isosceles triangles are mirror-exact") {
  const auto [a, b, c] = embed_sides(7.0, 7.0, 9.0);
  const ConstructionScene s = build_scene(a, b, c);
  CHECK(s.bisector_a == s.bisector_b);
  CHECK(s.k1.radius_sq == s.k2.radius_sq);
  CHECK(hg_coincidence(s).gap == 0.0);
  CHECK(parallelism_check(s) == 0.0);

  CHECK_THROWS_AS(embed_sides(1.0, 2.0, 3.0), std::invalid_argument);
}

TEST_CASE("relative residuals are similarity invariant") {
  const ConstructionScene base = scalene_scene();
  const double angle = 0.7;
  const double scale = 2.3;
  const Point shift{10.0, -4.0};
  const auto transform = [&](Point p) {
    const double x = std::cos(angle) * p.x - std::sin(angle) * p.y;
    const double y = std::sin(angle) * p.x + std::cos(angle) * p.y;
    return Point{scale * x + shift.x, scale * y + shift.y};
  };
  const ConstructionScene moved = build_scene(transform({0.0, 0.0}), transform({5.0, 0.0}),
                                              transform({1.0, 3.0}));

  const PowerResiduals pr_base = power_relations(base);
  const PowerResiduals pr_moved = power_relations(moved);
  CHECK(std::abs(pr_base.at_h - pr_moved.at_h) < 1e-9);
  CHECK(std::abs(pr_base.at_g - pr_moved.at_g) < 1e-9);

  const CoincidenceReport hg_base = hg_coincidence(base);
  const CoincidenceReport hg_moved = hg_coincidence(moved);
  CHECK(std::abs(hg_base.gap - hg_moved.gap) < 1e-9);
  CHECK(std::abs(hg_base.root_residual_x - hg_moved.root_residual_x) < 1e-9);

  CHECK(std::abs(std::abs(parallelism_check(base)) - std::abs(parallelism_check(moved))) <
        1e-9);
}
