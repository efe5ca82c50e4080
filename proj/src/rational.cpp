#include "patrace/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace patrace {

namespace {

mpz_class parse_integer(std::string_view text, const char* what) {
  if (text.empty()) throw std::invalid_argument(std::string("missing ") + what);
  try {
    return mpz_class(std::string(text), 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("invalid " + std::string(what) + ": '" +
                                std::string(text) + "'");
  }
}

}  // namespace

Rational::Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0)
    throw std::invalid_argument("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class n = parse_integer(text.substr(0, slash), "numerator");
    const mpz_class d = parse_integer(text.substr(slash + 1), "denominator");
    return Rational(n, d);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.find_first_of("+-.") != std::string_view::npos ||
        frac_part.empty())
      throw std::invalid_argument("invalid decimal: '" + std::string(text) + "'");
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '+' || int_part.front() == '-')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    std::string digits = std::string(int_part.empty() ? "0" : int_part);
    digits += frac_part;
    mpz_class n = parse_integer(digits, "decimal");
    if (negative) n = -n;
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac_part.size());
    return Rational(n, d);
  }
  return Rational(parse_integer(text, "integer"), mpz_class(1));
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  return Rational(mpq_class(x));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned long exponent) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(n, d);
}

}  // namespace patrace
