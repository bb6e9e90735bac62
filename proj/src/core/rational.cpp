#include "rigidkit/rational.hpp"

#include <cctype>

#include "rigidkit/error.hpp"

namespace rigidkit {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Optional sign followed by at least one digit.
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw Error(ErrorCode::Parse, "not a rational number: '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(digits), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;
  if (text.empty()) throw Error(ErrorCode::Parse, "empty rational string");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), whole);
    const mpz_class den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(whole) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }

  // Decimal: [sign] digits [. digits] [e [sign] digits]
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class ez = parse_integer(text.substr(e + 1), whole);
    if (!ez.fits_slong_p() || abs(ez) > 100000) {
      throw Error(ErrorCode::Parse, "exponent out of range in '" + std::string(whole) + "'");
    }
    exponent = ez.get_si();
    text = text.substr(0, e);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw Error(ErrorCode::Parse, "not a rational number: '" + std::string(whole) + "'");
  }
  mpz_class mantissa(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part), 10);
  if (negative) mantissa = -mantissa;
  exponent -= static_cast<long>(frac_part.size());
  mpq_class q = exponent >= 0 ? mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)))
                              : mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
  q.canonicalize();
  return Rational(q);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace rigidkit
