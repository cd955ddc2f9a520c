#include "bichrome/rational.hpp"

#include <algorithm>
#include <utility>

#include "bichrome/errors.hpp"

namespace bichrome {

namespace {

using u128 = unsigned __int128;

i128 checked_mul(i128 a, i128 b) {
  i128 out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "rational arithmetic overflow (mul)");
  }
  return out;
}

i128 checked_add(i128 a, i128 b) {
  i128 out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::Overflow, "rational arithmetic overflow (add)");
  }
  return out;
}

u128 magnitude(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

// 128x128 -> 256 bit unsigned product as (hi, lo).
std::pair<u128, u128> mul_wide(u128 a, u128 b) {
  const u128 mask = (u128(1) << 64) - 1;
  u128 a0 = a & mask, a1 = a >> 64;
  u128 b0 = b & mask, b1 = b >> 64;
  u128 p00 = a0 * b0;
  u128 p01 = a0 * b1;
  u128 p10 = a1 * b0;
  u128 p11 = a1 * b1;
  u128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
  u128 lo = (p00 & mask) | (mid << 64);
  u128 hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return {hi, lo};
}

int sign_of(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int compare_products(i128 a, i128 b, i128 c, i128 d) {
  i128 left, right;
  if (!__builtin_mul_overflow(a, b, &left) && !__builtin_mul_overflow(c, d, &right)) {
    i128 diff;
    if (!__builtin_sub_overflow(left, right, &diff)) return sign_of(diff);
    return left > right ? 1 : -1;
  }
  int sl = sign_of(a) * sign_of(b);
  int sr = sign_of(c) * sign_of(d);
  if (sl != sr) return sl > sr ? 1 : -1;
  if (sl == 0) return 0;
  auto lw = mul_wide(magnitude(a), magnitude(b));
  auto rw = mul_wide(magnitude(c), magnitude(d));
  int mag = lw == rw ? 0 : (lw > rw ? 1 : -1);
  return sl > 0 ? mag : -mag;
}

std::string int128_to_string(i128 value) {
  if (value == 0) return "0";
  bool negative = value < 0;
  u128 mag = magnitude(value);
  std::string digits;
  while (mag != 0) {
    digits.push_back(char('0' + int(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

i128 int128_from_string(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::InvalidInput, "empty integer literal");
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw Error(ErrorCode::InvalidInput, "malformed integer literal");
  i128 value = 0;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::InvalidInput, "malformed integer literal: " + std::string(text));
    }
    value = checked_add(checked_mul(value, 10), ch - '0');
  }
  return negative ? -value : value;
}

Rational::Rational(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(checked_add(a.num_, b.num_), a.den_);
  i128 g = gcd128(a.den_, b.den_);
  i128 bd = b.den_ / g;
  i128 num = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g));
  return Rational(num, checked_mul(a.den_, bd));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  i128 g1 = gcd128(a.num_, b.den_);
  i128 g2 = gcd128(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::InvalidInput, "rational division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int s = a.den_ == b.den_ ? (a.num_ < b.num_ ? -1 : (a.num_ > b.num_ ? 1 : 0))
                           : compare_products(a.num_, b.den_, b.num_, a.den_);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(int128_from_string(text), 1);
  return Rational(int128_from_string(text.substr(0, slash)),
                  int128_from_string(text.substr(slash + 1)));
}

double Rational::to_double() const {
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace bichrome
