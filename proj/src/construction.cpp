#include "lehmus/construction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lehmus::geom {

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point p) { return std::sqrt(dot(p, p)); }
double distance(Point a, Point b) { return norm(a - b); }

double Circle::radius() const { return std::sqrt(radius_sq); }

Circle circumcircle(Point p, Point q, Point r) {
  // Translate p to the origin for accuracy; the center offset solves the
  // perpendicular-bisector system.
  const Point u = q - p;
  const Point v = r - p;
  const double denom = 2.0 * cross(u, v);
  if (denom == 0.0) {
    throw std::invalid_argument("circumcircle: collinear points");
  }
  const double uu = dot(u, u);
  const double vv = dot(v, v);
  const Point offset{(v.y * uu - u.y * vv) / denom, (u.x * vv - v.x * uu) / denom};
  return Circle{p + offset, dot(offset, offset)};
}

namespace {

Point normalized(Point p) {
  const double len = norm(p);
  return {p.x / len, p.y / len};
}

// Larger parameter of |start + t*dir - center|^2 = r^2 for a start point
// lying on the circle: the root near zero is the start itself, the other
// one is the far intersection along dir.
double far_intersection_param(Point start, Point dir, const Circle& circle) {
  const Point rel = start - circle.center;
  const double half_b = dot(dir, rel);
  const double c0 = dot(rel, rel) - circle.radius_sq;
  const double disc = half_b * half_b - c0;
  return -half_b + std::sqrt(std::max(disc, 0.0));
}

Point far_intersection(Point start, Point toward, const Circle& circle) {
  const Point dir = normalized(toward - start);
  const double t = far_intersection_param(start, dir, circle);
  return start + t * dir;
}

double point_line_distance(Point p, Point on_line, Point dir) {
  return std::abs(cross(p - on_line, normalized(dir)));
}

}  // namespace

std::array<Point, 3> embed_sides(double a, double b, double c) {
  const Point va{-c / 2.0, 0.0};
  const Point vb{c / 2.0, 0.0};
  const double cx = (b * b - a * a) / (2.0 * c);
  const double arg = b * b - (cx + c / 2.0) * (cx + c / 2.0);
  if (!(arg > 0.0)) {
    throw std::invalid_argument("embed_sides: side lengths do not span a triangle");
  }
  return {va, vb, Point{cx, std::sqrt(arg)}};
}

ConstructionScene build_scene(Point a, Point b, Point c) {
  ConstructionScene s;
  s.a = a;
  s.b = b;
  s.c = c;

  const double side_a = distance(b, c);
  const double side_b = distance(a, c);
  const double side_c = distance(a, b);
  s.scale = std::max({side_a, side_b, side_c});

  const double area2 = cross(b - a, c - a);
  if (std::abs(area2) / (s.scale * s.scale) < kDegeneracyThreshold) {
    throw std::invalid_argument("scene: triangle is degenerate or nearly collinear");
  }

  // Bisector feet divide the opposite sides in the ratio of the adjacent
  // sides; the incenter is the side-length-weighted vertex average.
  s.foot_a = b + (side_c / (side_c + side_b)) * (c - b);
  s.foot_b = a + (side_c / (side_c + side_a)) * (c - a);
  const double perimeter = side_a + side_b + side_c;
  s.incenter = (1.0 / perimeter) * (side_a * a + side_b * b + side_c * c);

  s.gamma = 0.5 * std::atan2(std::abs(cross(a - c, b - c)), dot(a - c, b - c));

  s.bisector_a = distance(a, s.foot_a);
  s.bisector_b = distance(b, s.foot_b);

  s.k1 = circumcircle(a, c, s.foot_a);
  s.k2 = circumcircle(b, c, s.foot_b);

  // Ray CJ leaves C through the interior, so the far intersection with
  // each circle lies beyond J.
  s.h = far_intersection(c, s.incenter, s.k1);
  s.g = far_intersection(c, s.incenter, s.k2);

  s.mid_k = 0.5 * (a + s.foot_a);
  s.mid_m = 0.5 * (b + s.foot_b);
  s.n = far_intersection(s.h, s.mid_k, s.k1);
  s.l = far_intersection(s.g, s.mid_m, s.k2);

  s.d = distance(c, s.incenter);
  s.x = distance(s.h, s.incenter);
  s.y = distance(s.g, s.incenter);
  s.power_h = distance(s.h, s.mid_k) * distance(s.h, s.n);
  s.power_g = distance(s.g, s.mid_m) * distance(s.g, s.l);

  // Construction sanity: the ratio |BA1| : |A1C| = c : b, J on all three
  // bisectors, H and G beyond J on the ray. Violations mean a numeric
  // breakdown, not a caller error.
  const double guard = 1e-6 * s.scale;
  const double ratio_defect =
      std::abs(distance(b, s.foot_a) * side_b - distance(s.foot_a, c) * side_c);
  const Point c_foot = a + (side_b / (side_b + side_a)) * (b - a);
  if (ratio_defect > guard * s.scale ||
      point_line_distance(s.incenter, a, s.foot_a - a) > guard ||
      point_line_distance(s.incenter, b, s.foot_b - b) > guard ||
      point_line_distance(s.incenter, c, c_foot - c) > guard ||
      distance(c, s.h) < s.d - guard || distance(c, s.g) < s.d - guard) {
    throw std::logic_error("scene: construction invariants violated");
  }
  return s;
}

double circumradius_for_chord(double chord_length, double inscribed_angle) {
  if (!(chord_length > 0.0)) {
    throw std::invalid_argument("circumradius_for_chord: chord must be positive");
  }
  if (!(inscribed_angle > 0.0) || !(inscribed_angle < 3.14159265358979323846)) {
    throw std::invalid_argument("circumradius_for_chord: angle must lie in (0, pi)");
  }
  return chord_length / (2.0 * std::sin(inscribed_angle));
}

PowerResiduals power_relations(const ConstructionScene& s) {
  const double lhs_h = s.power_h;
  const double rhs_h = distance(s.h, s.incenter) * distance(s.h, s.c);
  const double lhs_g = s.power_g;
  const double rhs_g = distance(s.g, s.incenter) * distance(s.g, s.c);
  PowerResiduals r;
  r.at_h = std::abs(lhs_h - rhs_h) / std::max(lhs_h, rhs_h);
  r.at_g = std::abs(lhs_g - rhs_g) / std::max(lhs_g, rhs_g);
  return r;
}

namespace {

// Positive root of t^2 + d t - power = 0 in the cancellation-free form.
double bisection_root(double power, double d) {
  return 2.0 * power / (std::sqrt(4.0 * power + d * d) + d);
}

}  // namespace

CoincidenceReport hg_coincidence(const ConstructionScene& s) {
  CoincidenceReport r;
  r.gap = distance(s.h, s.g) / s.scale;
  const double ph = s.x * (s.x + s.d);
  const double pg = s.y * (s.y + s.d);
  r.power_gap = std::abs(ph - pg) / std::max(ph, pg);
  r.root_residual_x = std::abs(s.x - bisection_root(s.power_h, s.d)) / s.x;
  r.root_residual_y = std::abs(s.y - bisection_root(s.power_g, s.d)) / s.y;
  return r;
}

namespace {

double angle_at(Point vertex, Point p, Point q) {
  const Point u = p - vertex;
  const Point v = q - vertex;
  return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

}  // namespace

bool congruence_conclusion(const ConstructionScene& s, double tol) {
  if (std::abs(s.bisector_a - s.bisector_b) / s.scale > tol) {
    throw std::invalid_argument(
        "congruence_conclusion: bisector lengths differ beyond tolerance");
  }
  // Side CG is common once H and G coincide; then CG bisects angle ACB
  // and the inscribed angles at A and B against G agree.
  const bool common_side =
      std::abs(distance(s.c, s.h) - distance(s.c, s.g)) / s.scale <= tol;
  const bool apex_angles =
      std::abs(angle_at(s.c, s.a, s.g) - angle_at(s.c, s.b, s.g)) <= tol;
  const bool base_angles =
      std::abs(angle_at(s.a, s.c, s.g) - angle_at(s.b, s.c, s.g)) <= tol;
  const bool conclusion =
      std::abs(distance(s.c, s.a) - distance(s.c, s.b)) / s.scale <= tol;
  return common_side && apex_angles && base_angles && conclusion;
}

namespace {

// Parameter of line(p, p+dp) hitting line(q, q+dq), measured along dq.
double intersection_param(Point p, Point dp, Point q, Point dq) {
  const double denom = cross(dp, dq);
  if (denom == 0.0) {
    throw std::domain_error("cevian_probe: cevian parallel to the opposite side");
  }
  return cross(dp, q - p) / -denom;
}

}  // namespace

CevianPair cevian_probe(Point a, Point b, Point c, double j_param) {
  if (!(j_param > 0.0) || !(j_param < 1.0)) {
    throw std::invalid_argument("cevian_probe: j_param must lie in (0, 1)");
  }
  const double side_a = distance(b, c);
  const double side_b = distance(a, c);
  const double side_c = distance(a, b);
  const double area2 = cross(b - a, c - a);
  const double scale = std::max({side_a, side_b, side_c});
  if (std::abs(area2) / (scale * scale) < kDegeneracyThreshold) {
    throw std::invalid_argument("cevian_probe: triangle is degenerate");
  }

  // Foot of the C-bisector on AB, then J' between C and that foot.
  const Point c_foot = a + (side_b / (side_b + side_a)) * (b - a);
  const Point j = c + j_param * (c_foot - c);

  const double u_a = intersection_param(a, j - a, b, c - b);
  if (!(u_a > 0.0) || !(u_a < 1.0)) {
    throw std::domain_error("cevian_probe: cevian foot leaves side BC");
  }
  const Point foot_from_a = b + u_a * (c - b);

  const double u_b = intersection_param(b, j - b, a, c - a);
  if (!(u_b > 0.0) || !(u_b < 1.0)) {
    throw std::domain_error("cevian_probe: cevian foot leaves side AC");
  }
  const Point foot_from_b = a + u_b * (c - a);

  return {distance(a, foot_from_a), distance(b, foot_from_b)};
}

double parallelism_check(const ConstructionScene& s) {
  const Point dir_feet = normalized(s.foot_b - s.foot_a);
  const Point dir_base = normalized(s.b - s.a);
  const double orientation = cross(s.b - s.a, s.c - s.a) >= 0.0 ? 1.0 : -1.0;
  return cross(dir_feet, dir_base) * orientation;
}

}  // namespace lehmus::geom
