#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace patrace {

// Arbitrary-precision rational number, kept canonical at all times:
// positive denominator, gcd(|numerator|, denominator) == 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(static_cast<long>(n)) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(mpq_class v);

  // Parses "a", "a/b", or a finite decimal such as "0.2495" (exactly,
  // never through floating point). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  // Exact value of a finite double (dyadic rational).
  static Rational from_double(double x);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }

  // "a/b", or just "a" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace patrace
