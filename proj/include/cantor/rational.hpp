#ifndef CANTOR_RATIONAL_HPP
#define CANTOR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator. Zero is canonically 0/1. Values are immutable-by-convention:
/// every operation returns a fresh value, so sharing across threads is safe.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& r) { return *this = *this + r; }
  Rational& operator-=(const Rational& r) { return *this = *this - r; }
  Rational& operator*=(const Rational& r) { return *this = *this * r; }
  Rational& operator/=(const Rational& r) { return *this = *this / r; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Largest integer <= value.
  BigInt floor() const;

  /// Canonical rendering: "num/den", or just "num" when the value is integral.
  std::string to_string() const;

  /// One-way decimal rendering for reports, rounded to `digits` fractional
  /// digits (ties away from zero).
  std::string to_decimal(unsigned digits) const;

private:
  BigInt num_;
  BigInt den_;  // > 0

  struct already_reduced {};
  Rational(BigInt num, BigInt den, already_reduced)
      : num_(std::move(num)), den_(std::move(den)) {}
};

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& r);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cantor

#endif
