#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "spohn/error.hpp"

namespace spohn {

// Exact rational number in canonical form (reduced, positive denominator).
// Thin value wrapper over GMP's mpq_class; no operation ever rounds.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(from_integer(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::integral I, std::integral J>
  Rational(I numerator, J denominator) {
    if (denominator == 0) throw Error(Errc::invalid_argument, "zero denominator");
    value_ = mpq_class(from_integer(numerator), from_integer(denominator));
    value_.canonicalize();
  }

  // Accepts "[+-]digits[.digits]" and "[+-]digits/digits". The decimal form
  // is converted exactly: "0.5185" is 1037/2000.
  static Rational parse(std::string_view text) {
    auto fail = [&](const char* why) {
      return Error(Errc::parse, "bad rational '" + std::string(text) + "': " + why);
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    if (body.empty()) throw fail("empty");
    auto all_digits = [](std::string_view s) {
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
      auto num = body.substr(0, slash);
      auto den = body.substr(slash + 1);
      if (!all_digits(num) || !all_digits(den)) throw fail("expected digits/digits");
      mpz_class d(std::string(den), 10);
      if (d == 0) throw fail("zero denominator");
      result.value_ = mpq_class(mpz_class(std::string(num), 10), d);
    } else {
      auto dot = body.find('.');
      std::string_view whole = body.substr(0, dot);
      std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
      if (dot != std::string_view::npos && frac.empty() && whole.empty()) throw fail("no digits");
      if (!whole.empty() && !all_digits(whole)) throw fail("bad integer part");
      if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) throw fail("bad fraction part");
      if (whole.empty() && frac.empty()) throw fail("no digits");
      std::string digits = std::string(whole) + std::string(frac);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      result.value_ = mpq_class(mpz_class(digits, 10), den);
    }
    result.value_.canonicalize();
    if (negative) result.value_ = -result.value_;
    return result;
  }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  Rational reciprocal() const {
    if (is_zero()) throw Error(Errc::invalid_argument, "reciprocal of zero");
    Rational r;
    r.value_ = 1 / value_;
    return r;
  }

  Rational pow(unsigned long exponent) const {
    Rational r;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    r.value_ = mpq_class(num, den);  // powers of coprime integers stay coprime
    return r;
  }

  // "a/b", or just "a" for integers.
  std::string to_fraction() const {
    if (is_integer()) return numerator();
    return numerator() + "/" + denominator();
  }

  // Fixed-point rendering with round-half-even at `places` digits.
  std::string to_decimal(int places) const {
    if (places < 0) throw Error(Errc::invalid_argument, "negative precision");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpz_class num = abs(value_.get_num()) * scale;
    const mpz_class& den = value_.get_den();
    mpz_class quotient, remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    int half = cmp(remainder * 2, den);
    if (half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t()))) ++quotient;

    std::string digits = quotient.get_str();
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string out;
    if (value_ < 0 && quotient != 0) out += '-';
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) {
      out += '.';
      out += digits.substr(digits.size() - static_cast<std::size_t>(places));
    }
    return out;
  }

  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(Errc::invalid_argument, "division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_fraction(); }

 private:
  template <std::integral I>
  static mpz_class from_integer(I value) {
    static_assert(sizeof(I) <= sizeof(long), "integer wider than long");
    if constexpr (std::is_signed_v<I>) {
      return mpz_class(static_cast<long>(value));
    } else {
      return mpz_class(static_cast<unsigned long>(value));
    }
  }

  mpq_class value_{0};
};

}  // namespace spohn
