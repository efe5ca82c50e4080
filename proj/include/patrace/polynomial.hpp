#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patrace/rational.hpp"

namespace patrace {

// Dense univariate polynomial over Rational in the formal variable s.
// Trailing zero coefficients are trimmed, so the zero polynomial has an
// empty coefficient vector and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(Rational c, std::size_t power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& coeff(std::size_t k) const;  // zero beyond the degree
  const Rational& leading() const;             // requires a nonzero polynomial
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial shifted(std::size_t k) const;  // multiply by s^k

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Long division a = q*b + r with deg r < deg b. Requires b != 0.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b);
  // Monic greatest common divisor; gcd(0, 0) == 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string str(std::string_view var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Exact division of a by (s-1)^k. Throws std::domain_error as soon as a
// division stage leaves a nonzero remainder.
Polynomial divide_out_s_minus_one(Polynomial a, std::size_t k);

}  // namespace patrace
