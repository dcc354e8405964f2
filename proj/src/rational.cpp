#include "lehmus/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace lehmus {

namespace mp = boost::multiprecision;

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational: zero denominator");
  }
  value_ = Backend(mp::cpp_int(numerator), mp::cpp_int(denominator));
}

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) throw bad();
  mp::cpp_int num(std::string(text.substr(0, i)));
  mp::cpp_int den = 1;
  if (i < text.size()) {
    if (text[i] != '/') throw bad();
    ++i;
    const std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) throw bad();
    den = mp::cpp_int(std::string(text.substr(den_begin)));
    if (den.is_zero()) throw std::domain_error("rational: zero denominator");
  }
  return Rational(Backend(num, den));
}

Rational Rational::operator-() const { return Rational(Backend(-value_)); }

Rational operator/(const Rational& lhs, const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("rational: division by zero");
  }
  return Rational(Rational::Backend(lhs.value_ / rhs.value_));
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const int c = lhs.value_.compare(rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int Rational::sign() const { return value_.sign(); }

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

std::string Rational::str() const {
  const mp::cpp_int& num = numerator(value_);
  const mp::cpp_int& den = denominator(value_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double Rational::to_double() const { return value_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

}  // namespace lehmus
