#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tightspan {

// Raised for malformed numeric or document text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact signed rational, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  const mpq_class& raw() const { return value_; }

  // Numerator and denominator in canonical decimal text.
  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Largest integer <= r / ceiling, as a Rational.
Rational floor(const Rational& r);
Rational ceil(const Rational& r);

// Accepts "-3", "3/2", "-0.5", "+.25". A leading U+2212 minus sign is
// accepted as well. Throws ParseError on malformed text or a zero
// denominator.
Rational parse_rational(std::string_view text);

// Canonical text: plain integer or lowest-terms "num/den".
std::string format_rational(const Rational& r);

// Decimal text rounded to `significant` significant digits, for display.
std::string format_decimal(const Rational& r, int significant = 12);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tightspan

template <>
struct std::hash<tightspan::Rational> {
  std::size_t operator()(const tightspan::Rational& r) const noexcept { return r.hash(); }
};
