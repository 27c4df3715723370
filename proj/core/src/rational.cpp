#include "kummerlab/rational.hpp"

#include <cctype>
#include <cmath>

#include "kummerlab/errors.hpp"

namespace kummerlab {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("zero denominator");
  value_ = BigRational(num, den);
  value_.canonicalize();
}

ExactRational::ExactRational(const BigRational& q) : value_(q) {
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ValidationError("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    return ExactRational(parse_big(s.substr(0, slash)), parse_big(s.substr(slash + 1)));
  }
  // decimal with optional fraction and exponent
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '-' || s[pos] == '+') negative = s[pos++] == '-';
  std::string digits;
  long long exponent = 0;
  bool seen_digit = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
    seen_digit = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      --exponent;
      seen_digit = true;
    }
  }
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    try {
      std::size_t used = 0;
      exponent += std::stoll(s.substr(pos), &used);
      pos += used;
    } catch (const std::logic_error&) {
      throw ValidationError("malformed rational: " + s);
    }
  }
  if (!seen_digit || pos != s.size()) throw ValidationError("malformed rational: " + s);
  if (exponent > 100000 || exponent < -100000) throw ValidationError("exponent out of range: " + s);
  BigInt num(digits, 10);
  if (negative) num = -num;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? ExactRational(num, scale) : ExactRational(num * scale, 1);
}

ExactRational ExactRational::from_double(double v) {
  if (!std::isfinite(v)) throw ValidationError("non-finite rational");
  BigRational q;
  mpq_set_d(q.get_mpq_t(), v);
  return ExactRational(q);
}

long double ExactRational::to_long_double() const {
  const BigInt& num = value_.get_num();
  const BigInt& den = value_.get_den();
  if (sgn(num) == 0) return 0.0L;
  // 63- or 64-bit integer quotient, then rescale
  const long shift = 63 + static_cast<long>(bit_length(den)) - static_cast<long>(bit_length(num));
  BigInt q;
  if (shift >= 0) {
    q = (BigInt(abs(num)) << static_cast<mp_bitcnt_t>(shift)) / den;
  } else {
    q = BigInt(abs(num)) / (den << static_cast<mp_bitcnt_t>(-shift));
  }
  const long double r = std::ldexp(static_cast<long double>(*to_u64(q)), static_cast<int>(-shift));
  return sgn(num) < 0 ? -r : r;
}

BigInt ExactRational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

BigInt ExactRational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

ExactRational ExactRational::frac() const {
  return *this - ExactRational(floor(), 1);
}

ExactRational ExactRational::distance_to_integer() const {
  ExactRational f = frac();
  ExactRational g = ExactRational(1) - f;
  return f < g ? f : g;
}

std::string ExactRational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRational operator+(const ExactRational& x, const ExactRational& y) {
  return ExactRational(BigRational(x.value_ + y.value_));
}
ExactRational operator-(const ExactRational& x, const ExactRational& y) {
  return ExactRational(BigRational(x.value_ - y.value_));
}
ExactRational operator*(const ExactRational& x, const ExactRational& y) {
  return ExactRational(BigRational(x.value_ * y.value_));
}
ExactRational operator/(const ExactRational& x, const ExactRational& y) {
  if (y.value_ == 0) throw ValidationError("division by zero");
  return ExactRational(BigRational(x.value_ / y.value_));
}
ExactRational ExactRational::operator-() const {
  return ExactRational(BigRational(-value_));
}

std::strong_ordering operator<=>(const ExactRational& x, const ExactRational& y) {
  const int c = cmp(x.value_, y.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace kummerlab
