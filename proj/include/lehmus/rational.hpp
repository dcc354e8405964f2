#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lehmus {

/// Arbitrary-precision rational scalar.
///
/// Values are kept reduced with a positive denominator, so two equal
/// rationals always compare bit-equal. All arithmetic is exact; division
/// by zero throws std::domain_error.
class Rational {
 public:
  using Backend = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT: integers embed
  Rational(long long numerator, long long denominator);
  explicit Rational(Backend value) : value_(std::move(value)) {}

  /// Parses "p", "-p" or "p/q" (decimal digits, q > 0).
  static Rational parse(std::string_view text);

  const Backend& raw() const { return value_; }

  Rational operator-() const;

  // Hidden friends so integer literals convert on either side.
  friend Rational operator+(const Rational& lhs, const Rational& rhs) {
    return Rational(Backend(lhs.value_ + rhs.value_));
  }
  friend Rational operator-(const Rational& lhs, const Rational& rhs) {
    return Rational(Backend(lhs.value_ - rhs.value_));
  }
  friend Rational operator*(const Rational& lhs, const Rational& rhs) {
    return Rational(Backend(lhs.value_ * rhs.value_));
  }
  friend Rational operator/(const Rational& lhs, const Rational& rhs);

  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
  Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  int sign() const;
  bool is_zero() const { return value_.is_zero(); }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  Rational abs() const;
  Rational squared() const { return *this * *this; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;
  double to_double() const;

 private:
  Backend value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace lehmus
