#pragma once

#include <array>

namespace lehmus::geom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

Point operator+(Point a, Point b);
Point operator-(Point a, Point b);
Point operator*(double s, Point p);
double dot(Point a, Point b);
double cross(Point a, Point b);
double norm(Point p);
double distance(Point a, Point b);

struct Circle {
  Point center;
  double radius_sq = 0.0;
  double radius() const;
};

/// Circumscribing circle of three non-collinear points.
Circle circumcircle(Point p, Point q, Point r);

/// Triangles flatter than this (normalized twice-signed area against the
/// squared longest side) are rejected: the power-of-a-point residuals
/// blow up near collinearity.
inline constexpr double kDegeneracyThreshold = 1e-8;

/// Coordinate realization of the two-circle construction:
/// internal bisectors AA1, BB1 meeting at the incenter J, the circles
/// through A,C,A1 and B,C,B1, and the second intersections H, G of ray
/// CJ with them. K, M are the chord midpoints; N, L close the diameters
/// HN, GL.
struct ConstructionScene {
  Point a, b, c;        // vertices A, B, C
  Point foot_a;         // A1 on BC
  Point foot_b;         // B1 on AC
  Point incenter;       // J
  double gamma = 0.0;   // half of angle ACB, radians
  Circle k1, k2;        // circles through A,C,A1 and B,C,B1
  Point h, g;           // ray CJ hits k1 at H, k2 at G (beyond J)
  Point mid_k, mid_m;   // K = midpoint of AA1, M = midpoint of BB1
  Point n, l;           // HK meets k1 again at N, GM meets k2 again at L
  double d = 0.0;       // |CJ|
  double x = 0.0;       // |HJ|
  double y = 0.0;       // |GJ|
  double power_h = 0.0;  // |HK| * |HN|
  double power_g = 0.0;  // |GM| * |GL|
  double bisector_a = 0.0;  // |AA1|
  double bisector_b = 0.0;  // |BB1|
  double scale = 0.0;       // longest side, used to normalize residuals
};

/// Builds the full scene. Throws std::invalid_argument for collinear or
/// near-degenerate input.
ConstructionScene build_scene(Point a, Point b, Point c);

/// Places a triangle with side lengths a = |BC|, b = |AC|, c = |AB| as
/// A = (-c/2, 0), B = (c/2, 0), C above the base. An isosceles triangle
/// (a == b) lands exactly mirror-symmetric, so paired quantities come
/// out bit-equal.
std::array<Point, 3> embed_sides(double a, double b, double c);

/// chord / (2 sin angle): radius of the circle on which a chord of the
/// given length subtends the given inscribed angle. Equal chords under
/// equal angles therefore sit on circles of equal radius.
double circumradius_for_chord(double chord_length, double inscribed_angle);

/// Relative residuals of the two power-of-a-point relations
///   |HK||HN| = |HJ||HC|   and   |GM||GL| = |GJ||GC|,
/// which hold for every triangle, isosceles or not.
struct PowerResiduals {
  double at_h = 0.0;
  double at_g = 0.0;
};

PowerResiduals power_relations(const ConstructionScene& scene);

/// How far the scene is from the H = G collapse that forces the
/// isosceles conclusion. gap is |H - G| / scale; power_gap compares
/// x(x+d) against y(y+d); the root residuals compare the measured |HJ|,
/// |GJ| against the positive root of t^2 + d t - power = 0.
struct CoincidenceReport {
  double gap = 0.0;
  double power_gap = 0.0;
  double root_residual_x = 0.0;
  double root_residual_y = 0.0;
};

CoincidenceReport hg_coincidence(const ConstructionScene& scene);

/// The end of the first proof: with |AA1| = |BB1| (precondition, within
/// tol) the triangles AGC and BGC must agree on the common side CG and
/// the two angle pairs, and consequently |CA| = |CB|. Throws
/// std::invalid_argument when the bisector lengths differ beyond tol.
bool congruence_conclusion(const ConstructionScene& scene, double tol = 1e-9);

/// Lengths of the two cevians through the point J' = C + j*(C1 - C) on
/// the bisector of angle ACB (C1 is the bisector foot on AB). Requires
/// j in (0,1) and both cevian feet strictly inside the opposite sides;
/// equal lengths force an isosceles triangle, so a scalene triangle
/// keeps the pair apart for every j.
struct CevianPair {
  double from_a = 0.0;  // |AA1'|
  double from_b = 0.0;  // |BB1'|
};

CevianPair cevian_probe(Point a, Point b, Point c, double j_param);

/// Signed parallelism defect between A1B1 and AB: the cross product of
/// the two unit directions, oriented so that its sign matches
/// alpha - beta of the exact module. Zero exactly when A1B1 is parallel
/// to AB, i.e. when the triangle is isosceles with |CA| = |CB|.
double parallelism_check(const ConstructionScene& scene);

}  // namespace lehmus::geom
