#pragma once

#include <string>

#include "lehmus/rational.hpp"

namespace lehmus::exact {

using lehmus::Rational;

/// Triangle given by side lengths a = |BC|, b = |AC|, c = |AB|.
/// Construction rejects non-positive sides and any triangle where the
/// strict triangle inequality fails (equality counts as degenerate).
class TriangleSides {
 public:
  static TriangleSides create(Rational a, Rational b, Rational c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  /// Same triangle with the roles of A and B exchanged (a <-> b).
  TriangleSides swapped_ab() const { return TriangleSides(b_, a_, c_); }
  TriangleSides scaled(const Rational& factor) const;

 private:
  TriangleSides(Rational a, Rational b, Rational c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  Rational a_, b_, c_;
};

/// Apex C against three collinear points A, B, P on an oriented axis.
/// Signed measures follow the axis: bp + pa + ab = 0 (Chasles), and the
/// squared distances to the apex are plain nonnegative rationals.
struct SignedQuadruple {
  Rational ca_sq, cb_sq, cp_sq;  // |CA|^2, |CB|^2, |CP|^2
  Rational bp, pa, ab;           // signed measures of BP, PA, AB

  // Point labels, for reports.
  std::string apex = "C";
  std::string point_a = "A";
  std::string point_b = "B";
  std::string point_p = "P";

  SignedQuadruple(Rational ca_sq, Rational cb_sq, Rational cp_sq, Rational bp,
                  Rational pa, Rational ab);
};

/// Quadruple for the cevian CP of a triangle, with P = A + t*(B - A) on
/// line AB (any rational t; t in (0,1) lands inside the segment).
/// |CP|^2 comes from an exact coordinate embedding, not from the
/// relation being tested.
SignedQuadruple cevian_quadruple(const TriangleSides& sides, const Rational& t,
                                 bool axis_from_a_to_b = true);

/// |CA|^2*bp + |CB|^2*pa + |CP|^2*ab + bp*pa*ab. Exactly zero for every
/// consistent collinear configuration.
Rational stewart_residual(const SignedQuadruple& q);

/// Internal-bisector data of the triangle: the division ratios of the
/// feet and the squared bisector lengths, all exact.
///   alpha = c/(c+b), beta = c/(c+a)
///   |AA1|^2 = (c*b/(c+b)^2) * ((c+b)^2 - a^2)
///   |BB1|^2 = (c*a/(c+a)^2) * ((c+a)^2 - b^2)
struct BisectorData {
  Rational alpha, one_minus_alpha;
  Rational beta, one_minus_beta;
  Rational aa1_sq, bb1_sq;
};

BisectorData bisector_data(const TriangleSides& sides);

/// The bisector-difference identity in its rational form:
///   (|AA1|^2 - |BB1|^2) / c  ==  (b - a) * Y
/// with Y = 1 + b*a*(c^2+b^2+a^2 + 2c(b+a) + b*a) / ((c+a)^2 (c+b)^2).
/// Multiplying the irrational difference |AA1| - |BB1| by the positive
/// factor |AA1| + |BB1| turns the identity into this exactly checkable
/// statement.
struct IdentityReport {
  Rational y;
  Rational lhs;  // (|AA1|^2 - |BB1|^2) / c
  Rational rhs;  // (b - a) * Y
  bool pass = false;
};

IdentityReport lehmus_identity(const TriangleSides& sides);

/// Sign of |AA1|^2 - |BB1|^2, which always equals the sign of b - a; in
/// particular it vanishes exactly when the triangle is isosceles with
/// |CA| = |CB|.
int sign_theorem(const TriangleSides& sides);

/// Closed form c*(a - b) / ((c+b)(c+a)); equals alpha - beta and is zero
/// iff a = b (the feet A1, B1 span a line parallel to AB exactly then).
Rational alpha_minus_beta(const TriangleSides& sides);

}  // namespace lehmus::exact
