#include "lehmus/bisector.hpp"

#include <stdexcept>

namespace lehmus::exact {

TriangleSides TriangleSides::create(Rational a, Rational b, Rational c) {
  if (!a.is_positive() || !b.is_positive() || !c.is_positive()) {
    throw std::invalid_argument("triangle: sides must be positive");
  }
  if (a + b <= c || b + c <= a || c + a <= b) {
    throw std::invalid_argument("triangle: degenerate or impossible side lengths");
  }
  return TriangleSides(std::move(a), std::move(b), std::move(c));
}

TriangleSides TriangleSides::scaled(const Rational& factor) const {
  if (!factor.is_positive()) {
    throw std::invalid_argument("triangle: scale factor must be positive");
  }
  return TriangleSides(a_ * factor, b_ * factor, c_ * factor);
}

SignedQuadruple::SignedQuadruple(Rational ca_sq_in, Rational cb_sq_in, Rational cp_sq_in,
                                 Rational bp_in, Rational pa_in, Rational ab_in)
    : ca_sq(std::move(ca_sq_in)),
      cb_sq(std::move(cb_sq_in)),
      cp_sq(std::move(cp_sq_in)),
      bp(std::move(bp_in)),
      pa(std::move(pa_in)),
      ab(std::move(ab_in)) {
  if (!(bp + pa + ab).is_zero()) {
    throw std::invalid_argument("quadruple: signed measures must close up (bp + pa + ab = 0)");
  }
  if (ca_sq.is_negative() || cb_sq.is_negative() || cp_sq.is_negative()) {
    throw std::invalid_argument("quadruple: squared distances must be nonnegative");
  }
}

SignedQuadruple cevian_quadruple(const TriangleSides& sides, const Rational& t,
                                 bool axis_from_a_to_b) {
  const Rational& a = sides.a();
  const Rational& b = sides.b();
  const Rational& c = sides.c();

  // Embed A = (0,0), B = (c,0); then C = (px, h) with px = (b^2+c^2-a^2)/(2c).
  // P = (t*c, 0), so |CP|^2 = b^2 + t^2 c^2 - 2 t c px stays rational even
  // though h does not.
  const Rational two_c_px = b.squared() + c.squared() - a.squared();  // 2*c*px
  const Rational cp_sq = b.squared() + t.squared() * c.squared() - t * two_c_px;

  Rational bp = (t - 1) * c;  // P - B along the A->B axis
  Rational pa = -(t * c);     // A - P
  Rational ab = c;
  if (!axis_from_a_to_b) {
    bp = -bp;
    pa = -pa;
    ab = -ab;
  }
  return SignedQuadruple(b.squared(), a.squared(), cp_sq, std::move(bp), std::move(pa),
                         std::move(ab));
}

Rational stewart_residual(const SignedQuadruple& q) {
  return q.ca_sq * q.bp + q.cb_sq * q.pa + q.cp_sq * q.ab + q.bp * q.pa * q.ab;
}

BisectorData bisector_data(const TriangleSides& sides) {
  const Rational& a = sides.a();
  const Rational& b = sides.b();
  const Rational& c = sides.c();

  BisectorData data;
  data.alpha = c / (c + b);
  data.one_minus_alpha = b / (c + b);
  data.beta = c / (c + a);
  data.one_minus_beta = a / (c + a);

  const Rational cb_sum_sq = (c + b).squared();
  const Rational ca_sum_sq = (c + a).squared();
  data.aa1_sq = (c * b / cb_sum_sq) * (cb_sum_sq - a.squared());
  data.bb1_sq = (c * a / ca_sum_sq) * (ca_sum_sq - b.squared());
  return data;
}

IdentityReport lehmus_identity(const TriangleSides& sides) {
  const Rational& a = sides.a();
  const Rational& b = sides.b();
  const Rational& c = sides.c();

  IdentityReport report;
  const Rational numerator =
      b * a * (c.squared() + b.squared() + a.squared() + 2 * c * (b + a) + b * a);
  report.y = Rational(1) + numerator / ((c + a).squared() * (c + b).squared());

  const BisectorData data = bisector_data(sides);
  report.lhs = (data.aa1_sq - data.bb1_sq) / c;
  report.rhs = (b - a) * report.y;
  report.pass = report.lhs == report.rhs;
  return report;
}

int sign_theorem(const TriangleSides& sides) {
  const BisectorData data = bisector_data(sides);
  const int bisector_sign = (data.aa1_sq - data.bb1_sq).sign();
  const int side_sign = (sides.b() - sides.a()).sign();
  if (bisector_sign != side_sign) {
    throw std::logic_error("sign law violated; arithmetic bug");
  }
  return bisector_sign;
}

Rational alpha_minus_beta(const TriangleSides& sides) {
  const Rational& a = sides.a();
  const Rational& b = sides.b();
  const Rational& c = sides.c();
  return c * (a - b) / ((c + b) * (c + a));
}

}  // namespace lehmus::exact
