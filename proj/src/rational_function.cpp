#include "patrace/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace patrace {

RationalFunction::RationalFunction(Rational constant)
    : num_(std::move(constant)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial p)
    : num_(std::move(p)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Polynomial::divmod(num_, g).first;
    den_ = Polynomial::divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (!(lead == Rational(1))) {
    const Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d.is_zero())
    throw std::domain_error("rational function evaluated at a pole");
  return num_(x) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                          den_ * den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  return *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by the zero function");
  return *this = RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::str(std::string_view var) const {
  if (den_ == Polynomial(Rational(1))) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

LimitAtOne limit_at_one(const RationalFunction& f) {
  Polynomial n = f.num();
  Polynomial d = f.den();
  const Rational one(1);
  while (!n.is_zero() && n(one).is_zero() && d(one).is_zero()) {
    n = divide_out_s_minus_one(std::move(n), 1);
    d = divide_out_s_minus_one(std::move(d), 1);
  }
  const Rational dv = d(one);
  if (!dv.is_zero()) return {true, n(one) / dv};
  return {false, Rational()};
}

Rational finite_limit_at_one(const RationalFunction& f) {
  const LimitAtOne lim = limit_at_one(f);
  if (!lim.is_finite) throw std::domain_error("limit at s=1 is infinite");
  return lim.value;
}

std::vector<Rational> series_coefficients(const RationalFunction& f,
                                          std::size_t n_max) {
  const Polynomial& num = f.num();
  const Polynomial& den = f.den();
  const Rational d0 = den.coeff(0);
  if (d0.is_zero())
    throw std::domain_error(
        "series at s=0 requires a nonzero denominator constant term");
  std::vector<Rational> c(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) {
    Rational acc = num.coeff(k);
    const std::size_t j_max = std::min<std::size_t>(k, den.coeffs().size() - 1);
    for (std::size_t j = 1; j <= j_max; ++j) acc -= den.coeff(j) * c[k - j];
    c[k] = acc / d0;
  }
  return c;
}

bool equivalent(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace patrace
