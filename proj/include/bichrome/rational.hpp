#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bichrome {

using i64 = std::int64_t;
using i128 = __int128;

std::string int128_to_string(i128 value);
i128 int128_from_string(std::string_view text);

i128 gcd128(i128 a, i128 b);

// sign(a*b - c*d), exact for the full 128-bit range.
int compare_products(i128 a, i128 b, i128 c, i128 d);

// Exact rational number with a 128-bit numerator and a positive 128-bit
// denominator, always stored in lowest terms. Arithmetic that would overflow
// throws Error(Overflow); comparisons never overflow.
class Rational {
 public:
  Rational() = default;
  Rational(i64 value) : num_(value), den_(1) {}  // NOLINT: implicit by design of arithmetic use
  Rational(i128 num, i128 den);

  static Rational from_int128(i128 value) { return Rational(value, 1); }

  i128 num() const { return num_; }
  i128 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "num/den"; integers keep the "/1" suffix so every value has one shape.
  std::string to_string() const;
  // Accepts "num/den" or a bare integer.
  static Rational parse(std::string_view text);

  double to_double() const;

 private:
  i128 num_ = 0;
  i128 den_ = 1;
};

Rational midpoint(const Rational& a, const Rational& b);

}  // namespace bichrome
