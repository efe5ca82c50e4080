#include "patrace/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace patrace {

namespace {
const Rational kZero;
}

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(Rational c, std::size_t power) {
  Polynomial p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(power + 1, Rational());
  p.coeffs_[power] = std::move(c);
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> out(k, Rational());
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const Rational& c) {
  if (c.is_zero()) return Polynomial();
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> q(a.degree() - b.degree() + 1, Rational());
  Polynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Rational c = r.leading() / b.leading();
    const std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
    q[k] = c;
    r -= b.shifted(k) * c;
  }
  return {Polynomial(std::move(q)), std::move(r)};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  // Monic remainders keep coefficient growth in check.
  auto monic = [](Polynomial p) {
    if (!p.is_zero() && !(p.leading() == Rational(1)))
      p = p * (Rational(1) / p.leading());
    return p;
  };
  a = monic(std::move(a));
  b = monic(std::move(b));
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return a;
}

std::string Polynomial::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) {
        const bool fractional = !(mag.den() == 1);
        if (fractional) os << "(" << mag.str() << ")";
        else os << mag.str();
      }
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Polynomial divide_out_s_minus_one(Polynomial a, std::size_t k) {
  if (a.is_zero()) return a;
  for (std::size_t round = 0; round < k; ++round) {
    if (a.is_zero()) return a;
    // Synthetic division by (s - 1).
    const auto& c = a.coeffs();
    const std::size_t n = c.size();
    std::vector<Rational> q(n - 1, Rational());
    Rational carry;
    for (std::size_t i = n; i-- > 1;) {
      carry += c[i];
      q[i - 1] = carry;
    }
    if (!(c[0] + carry).is_zero())
      throw std::domain_error("polynomial is not divisible by (s-1)");
    a = Polynomial(std::move(q));
  }
  return a;
}

}  // namespace patrace
