#include "cantor/rational.hpp"

#include <ostream>
#include <utility>

namespace cantor {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    return Rational(std::move(num), std::move(den));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("Rational: cannot parse \"" + std::string(text) + "\"");
  }
}

Rational Rational::operator-() const {
  return Rational(-num_, den_, already_reduced{});
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) {
    throw std::domain_error("Rational: division by zero");
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) {
    --q;
  }
  return q;
}

std::string Rational::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += "/" + den_.str();
  }
  return s;
}

std::string Rational::to_decimal(unsigned digits) const {
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  BigInt n = boost::multiprecision::abs(num_) * scale;
  BigInt q = n / den_;
  BigInt r = n % den_;
  if (2 * r >= den_) ++q;  // round ties away from zero

  std::string body = q.str();
  if (digits > 0) {
    if (body.size() <= digits) {
      body.insert(0, digits + 1 - body.size(), '0');
    }
    body.insert(body.size() - digits, ".");
  }
  return (num_ < 0 && q != 0) ? "-" + body : body;
}

Rational pow(const Rational& base, unsigned exponent) {
  using boost::multiprecision::pow;
  if (exponent == 0) return Rational(1);
  // num/den stays reduced under powering.
  return Rational(pow(base.num(), exponent), pow(base.den(), exponent));
}

Rational abs(const Rational& r) {
  return r.sign() < 0 ? -r : r;
}

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace cantor
