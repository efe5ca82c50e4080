#include "patrace/pattern.hpp"

#include <cctype>
#include <stdexcept>

namespace patrace {

Pattern Pattern::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty pattern");
  std::string canon;
  canon.reserve(text.size());
  bool saw_sf = false, saw_ht = false;
  for (const char raw : text) {
    switch (std::toupper(static_cast<unsigned char>(raw))) {
      case 'S': canon += 'S'; saw_sf = true; break;
      case 'F': canon += 'F'; saw_sf = true; break;
      case 'H': canon += 'S'; saw_ht = true; break;
      case 'T': canon += 'F'; saw_ht = true; break;
      default:
        throw std::invalid_argument("invalid symbol '" + std::string(1, raw) +
                                    "' in pattern '" + std::string(text) + "'");
    }
  }
  if (saw_sf && saw_ht)
    throw std::invalid_argument("pattern '" + std::string(text) +
                                "' mixes S/F and H/T aliases");
  return Pattern(std::move(canon));
}

ProbParams ProbParams::from_p(Rational p) {
  if (!(Rational(0) < p && p < Rational(1)))
    throw std::invalid_argument("p must be in (0,1)");
  Rational q = Rational(1) - p;
  return ProbParams{std::move(p), std::move(q)};
}

Rational word_probability(std::string_view word, const ProbParams& params) {
  Rational prob(1);
  for (const char c : word) prob *= (c == 'S' ? params.p : params.q);
  return prob;
}

Polynomial CorrelationSet::polynomial() const {
  Polynomial c;
  for (const auto& [k, weight] : entries)
    c += Polynomial::monomial(weight, pattern_length - k);
  return c;
}

Rational CorrelationSet::total() const {
  Rational sum;
  for (const auto& [k, weight] : entries) sum += weight;
  return sum;
}

CorrelationSet autocorrelation(const Pattern& w, const ProbParams& params) {
  const std::size_t m = w.length();
  CorrelationSet corr;
  corr.pattern_length = m;
  for (std::size_t k = 1; k <= m; ++k) {
    if (w.prefix(k) == w.suffix(k))
      corr.entries.emplace(k, word_probability(w.suffix(m - k), params));
  }
  return corr;
}

std::vector<Rational> head_start_initials(const Pattern& w, const Pattern& head,
                                          const ProbParams& params) {
  if (head.text().find(w.text()) != std::string::npos)
    throw std::invalid_argument("pattern " + w.text() +
                                " already occurs inside the head start " +
                                head.text());
  const std::size_t m = w.length();
  const CorrelationSet corr = autocorrelation(w, params);
  std::vector<Rational> u(m);  // u[0] stays 0
  for (std::size_t j = 1; j < m; ++j) {
    // Direct completion at trial j: the head must supply the first m-j
    // symbols of w, i.e. its suffix of that length must match.
    const std::size_t need = m - j;
    Rational value;
    if (head.length() >= need && head.suffix(need) == w.prefix(need))
      value = word_probability(w.suffix(j), params);
    // Remove completions already counted at an earlier overlap-compatible
    // trial; this is the renewal ("from scratch") discount.
    for (const auto& [k, weight] : corr.entries) {
      if (k == m) continue;
      const std::size_t shift = m - k;
      if (j >= shift + 1) value -= weight * u[j - shift];
    }
    u[j] = std::move(value);
  }
  return u;
}

std::string effective_head(const Pattern& w, const Pattern& head) {
  const std::size_t max_len = std::min(head.length(), w.length() - 1);
  for (std::size_t len = max_len; len >= 1; --len) {
    if (head.suffix(len) == w.prefix(len)) return std::string(head.suffix(len));
  }
  return {};
}

void validate_pattern_set(std::span<const Pattern> patterns) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = i + 1; j < patterns.size(); ++j) {
      const std::string& a = patterns[i].text();
      const std::string& b = patterns[j].text();
      if (a == b)
        throw std::invalid_argument("duplicate pattern " + a);
      if (b.find(a) != std::string::npos)
        throw std::invalid_argument("pattern " + a + " is a substring of " + b);
      if (a.find(b) != std::string::npos)
        throw std::invalid_argument("pattern " + b + " is a substring of " + a);
    }
  }
}

}  // namespace patrace
