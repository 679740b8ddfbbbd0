#include "runprob/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace runprob {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(std::uint64_t k) { return big_pow(BigInt(10), k); }

// Decimal literal: [sign] digits [. digits] [e [sign] digits], at least one digit.
Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) {
      throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    }
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  if ((!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  BigInt num(digits, 10);
  if (negative) num = -num;
  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) {
    return Rational(BigInt(num * pow10(static_cast<std::uint64_t>(exponent))), BigInt(1));
  }
  return Rational(num, pow10(static_cast<std::uint64_t>(-exponent)));
}

// floor(log10(v)) for v > 0.
long decimal_exponent(const mpq_class& v) {
  long e = static_cast<long>(mpz_sizeinbase(v.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(v.get_den_mpz_t(), 10));
  // sizeinbase may overshoot by one for either operand; settle by comparison.
  auto power = [](long k) {
    return k >= 0 ? mpq_class(pow10(static_cast<std::uint64_t>(k)))
                  : mpq_class(BigInt(1), pow10(static_cast<std::uint64_t>(-k)));
  };
  while (cmp(v, power(e)) < 0) --e;
  while (cmp(v, power(e + 1)) >= 0) ++e;
  return e;
}

void trim_fraction(std::string& s) {
  if (s.find('.') == std::string::npos) return;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
    }
    const BigInt den = parse_integer(den_text, text);
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  return parse_decimal(text);
}

std::string Rational::to_string() const {
  if (is_zero()) return "0";
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant) const {
  if (significant < 1) throw std::invalid_argument("need at least one significant digit");
  if (is_zero()) return "0";
  const mpq_class v = abs(value_);
  long e = decimal_exponent(v);

  // scaled = round(v * 10^(significant - 1 - e)), half away from zero.
  const long shift = significant - 1 - e;
  mpq_class scaled_q = v;
  if (shift >= 0) {
    scaled_q *= mpq_class(pow10(static_cast<std::uint64_t>(shift)));
  } else {
    scaled_q /= mpq_class(pow10(static_cast<std::uint64_t>(-shift)));
  }
  scaled_q.canonicalize();
  BigInt twice_num = 2 * scaled_q.get_num() + scaled_q.get_den();
  BigInt scaled = twice_num / (2 * scaled_q.get_den());
  if (scaled == pow10(static_cast<std::uint64_t>(significant))) {
    scaled /= 10;
    ++e;
  }
  const std::string digits = scaled.get_str();  // exactly `significant` digits

  std::string out = sign() < 0 ? "-" : "";
  if (e < -6) {
    std::string mantissa = digits.substr(0, 1) + "." + digits.substr(1);
    trim_fraction(mantissa);
    out += mantissa + "e-" + std::to_string(-e);
  } else if (e < 0) {
    std::string body = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + digits;
    trim_fraction(body);
    out += body;
  } else if (e < significant - 1) {
    std::string body = digits.substr(0, static_cast<std::size_t>(e + 1)) + "." +
                       digits.substr(static_cast<std::size_t>(e + 1));
    trim_fraction(body);
    out += body;
  } else {
    out += digits + std::string(static_cast<std::size_t>(e - (significant - 1)), '0');
  }
  return out;
}

double Rational::to_double() const {
  // mpq_get_d truncates; produce a correctly rounded (nearest-even) result
  // from a 55+ bit quotient plus a sticky bit.
  if (is_zero()) return 0.0;
  const long num_bits = static_cast<long>(mpz_sizeinbase(value_.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(value_.get_den_mpz_t(), 2));
  const long shift = 56 - (num_bits - den_bits);
  BigInt num = abs(value_.get_num());
  BigInt den = value_.get_den();
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  BigInt q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const bool sticky = sgn(rem) != 0;

  const long drop = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 53;  // 2 or 3
  BigInt mant, low;
  mpz_fdiv_q_2exp(mant.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  mpz_fdiv_r_2exp(low.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  const BigInt half = BigInt(1) << static_cast<mp_bitcnt_t>(drop - 1);
  const int c = cmp(low, half);
  if (c > 0 || (c == 0 && (sticky || mpz_odd_p(mant.get_mpz_t())))) ++mant;

  const double magnitude =
      std::ldexp(mpz_get_d(mant.get_mpz_t()), static_cast<int>(drop - shift));
  return sign() < 0 ? -magnitude : magnitude;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}
Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rat_add(const Rational& a, const Rational& b) { return a + b; }
Rational rat_mul(const Rational& a, const Rational& b) { return a * b; }

Rational rat_pow(const Rational& a, std::uint64_t k) {
  // gcd(num, den) = 1 implies gcd(num^k, den^k) = 1; no reduction needed.
  return Rational(big_pow(a.numerator(), k), big_pow(a.denominator(), k));
}

BigInt big_pow(const BigInt& base, std::uint64_t k) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
  return out;
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return BigInt(0);
  const std::uint64_t kk = std::min<std::uint64_t>(static_cast<std::uint64_t>(k),
                                                   n - static_cast<std::uint64_t>(k));
  BigInt out(1);
  // After step i the accumulator equals C(n - kk + i, i), so each division is exact.
  for (std::uint64_t i = 1; i <= kk; ++i) {
    mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), n - kk + i);
    mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), i);
  }
  return out;
}

}  // namespace runprob
