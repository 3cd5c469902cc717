#include "mom/exact.hpp"

#include <set>
#include <sstream>

#include "mom/errors.hpp"

namespace mom {

std::string to_string(const ExactRational& q) { return q.get_str(); }

ExactRational parse_rational(const std::string& text) {
  ExactRational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw InvalidArgument("not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

ExactPolynomial::ExactPolynomial(std::vector<ExactRational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactRational ExactPolynomial::leading() const { return coeffs_.empty() ? ExactRational(0) : coeffs_.back(); }

ExactRational ExactPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ExactRational(0);
}

ExactRational evaluate(const ExactPolynomial& p, const ExactRational& x) {
  ExactRational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactRational evaluate(const ExactPolynomial& p, long n) { return evaluate(p, ExactRational(n)); }

ExactPolynomial interpolate(const std::vector<std::pair<long, mpz_class>>& samples) {
  std::set<long> seen;
  for (const auto& [x, y] : samples)
    if (!seen.insert(x).second) throw InvalidArgument("duplicate abscissa " + std::to_string(x));
  const std::size_t n = samples.size();
  if (n == 0) return ExactPolynomial();

  // Newton divided differences, then expand the Newton form.
  std::vector<ExactRational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = samples[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / ExactRational(samples[i].first - samples[i - level].first);
      if (i == level) break;
    }

  std::vector<ExactRational> poly{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // poly = poly * (X - x_i) + dd[i]
    std::vector<ExactRational> next(poly.size() + 1, ExactRational(0));
    const ExactRational xi = samples[i].first;
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= xi * poly[d];
    }
    next[0] += dd[i];
    poly = std::move(next);
  }
  return ExactPolynomial(std::move(poly));
}

std::string to_string(const ExactPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    const ExactRational& c = p.coefficients()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    ExactRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && d > 0;
    if (!unit) os << mag.get_str();
    if (d > 0) os << (unit ? "" : "*") << "N";
    if (d > 1) os << "^" << d;
  }
  return os.str();
}

}  // namespace mom
