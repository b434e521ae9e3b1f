#include "tightspan/rational.hpp"

#include <cmath>
#include <functional>
#include <ostream>

namespace tightspan {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, exponent);
  return p;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

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
  if (sgn(rhs.value_) == 0) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::size_t Rational::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

Rational abs(const Rational& r) { return Rational(mpq_class(::abs(r.raw()))); }

Rational floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);

  bool negative = false;
  if (text.starts_with("\xE2\x88\x92")) {  // U+2212 MINUS SIGN
    negative = true;
    text.remove_prefix(3);
  } else if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw ParseError("malformed number: '" + original + "'");

  mpq_class value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den))
      throw ParseError("malformed fraction: '" + original + "'");
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: '" + original + "'");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac))
      throw ParseError("malformed decimal: '" + original + "'");
    const std::string digits = std::string(whole) + std::string(frac);
    value = mpq_class(mpz_class(digits, 10), pow10(frac.size()));
  } else {
    if (!all_digits(text)) throw ParseError("malformed number: '" + original + "'");
    value = mpq_class(mpz_class(std::string(text), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

std::string format_rational(const Rational& r) {
  if (r.is_integer()) return r.numerator();
  return r.numerator() + "/" + r.denominator();
}

std::string format_decimal(const Rational& r, int significant) {
  if (r.sign() == 0) return "0";
  const mpq_class a = ::abs(r.raw());

  // Decimal exponent e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(std::floor(std::log10(a.get_d())));
  auto scale = [](long k) {
    return k >= 0 ? mpq_class(pow10(static_cast<unsigned long>(k)))
                  : mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
  };
  while (a < scale(e)) --e;
  while (a >= scale(e + 1)) ++e;

  // Round a * 10^(significant-1-e) half away from zero.
  const long shift = significant - 1 - e;
  mpq_class scaled = a * scale(shift);
  mpz_class digits;
  mpz_class twice_num = 2 * scaled.get_num() + scaled.get_den();
  mpz_fdiv_q(digits.get_mpz_t(), twice_num.get_mpz_t(), mpz_class(2 * scaled.get_den()).get_mpz_t());

  std::string s = digits.get_str();
  long point = static_cast<long>(s.size()) - shift;  // digits before the decimal point
  if (point <= 0) {
    s = "0." + std::string(static_cast<std::size_t>(-point), '0') + s;
  } else if (point < static_cast<long>(s.size())) {
    s.insert(static_cast<std::size_t>(point), ".");
  } else {
    s += std::string(static_cast<std::size_t>(point) - s.size(), '0');
  }
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return r.sign() < 0 ? "-" + s : s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << format_rational(r); }

}  // namespace tightspan
