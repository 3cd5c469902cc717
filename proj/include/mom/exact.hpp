#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace mom {

/// Lowest-terms rational with positive denominator (mpq_class kept canonical).
using ExactRational = mpq_class;

/// Canonical "p/q" text, or "p" for integers.
std::string to_string(const ExactRational& q);
ExactRational parse_rational(const std::string& text);

/// Univariate polynomial over the rationals, ascending coefficients, no
/// trailing zeros. The zero polynomial has no coefficients and degree -1.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<ExactRational> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<ExactRational>& coefficients() const { return coeffs_; }
  /// Zero for the zero polynomial.
  ExactRational leading() const;
  ExactRational coefficient(std::size_t i) const;

  friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

 private:
  std::vector<ExactRational> coeffs_;
};

ExactRational evaluate(const ExactPolynomial& p, const ExactRational& x);
ExactRational evaluate(const ExactPolynomial& p, long n);

/// Unique polynomial of degree < samples.size() through the samples.
ExactPolynomial interpolate(const std::vector<std::pair<long, mpz_class>>& samples);

std::string to_string(const ExactPolynomial& p);  // e.g. "1/2*N^2 + 3/2*N + 1"

}  // namespace mom
