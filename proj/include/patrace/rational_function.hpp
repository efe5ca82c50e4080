#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "patrace/polynomial.hpp"

namespace patrace {

// Quotient of two polynomials, kept reduced (numerator and denominator
// coprime) with a monic denominator. The canonical form makes equality
// plain structural comparison.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(Rational constant);
  RationalFunction(Polynomial p);
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational operator()(const Rational& x) const;  // throws when den(x) == 0
  RationalFunction derivative() const;           // quotient rule, reduced

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string str(std::string_view var = "s") const;

 private:
  void reduce();
  Polynomial num_, den_;
};

// Limit of a rational function at s = 1. An infinite limit is a
// legitimate outcome there (SGFs of non-distributions diverge at 1),
// so it is a result variant rather than an error.
struct LimitAtOne {
  bool is_finite = false;
  Rational value;  // meaningful only when is_finite
};

// Cancels common (s-1) factors exactly and evaluates; equivalent to
// L'Hospital for rational functions, without symbolic differentiation.
LimitAtOne limit_at_one(const RationalFunction& f);

// Same, but an infinite limit throws std::domain_error.
Rational finite_limit_at_one(const RationalFunction& f);

// Exact power-series coefficients c_0..c_n_max of f around s = 0, via the
// linear recurrence induced by the denominator. Requires a nonzero
// denominator constant term.
std::vector<Rational> series_coefficients(const RationalFunction& f,
                                          std::size_t n_max);

// Equality by cross-multiplication; agrees with operator== but does not
// rely on the canonical form.
bool equivalent(const RationalFunction& a, const RationalFunction& b);

}  // namespace patrace
