#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace runprob {

using BigInt = mpz_class;

/// Exact fraction, always held in lowest terms with a positive denominator.
///
/// Text form is "a/b" for nonzero values (so one renders as "1/1") and "0"
/// for zero. Parsing additionally accepts plain integers and decimal literals
/// such as "0.3" or "2.5e-2", which convert exactly.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
  explicit Rational(mpq_class value);

  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  std::string to_string() const;
  // Rounded to `significant` digits (half away from zero), trailing zeros
  // trimmed. Magnitudes below 1e-6 switch to scientific notation.
  std::string to_decimal(int significant = 10) const;
  double to_double() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rat_add(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);
Rational rat_pow(const Rational& a, std::uint64_t k);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(std::uint64_t n, std::int64_t k);

/// Integer power by repeated squaring.
BigInt big_pow(const BigInt& base, std::uint64_t k);

}  // namespace runprob
