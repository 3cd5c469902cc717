#include "mom/characters.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <string>

#include "mom/errors.hpp"
#include "mom/patterns.hpp"

namespace mom {

namespace {

ComplexPoint ipow(ComplexPoint z, Entry e) {
  if (e < 0) {
    z = 1.0 / z;
    e = -e;
  }
  ComplexPoint r = 1.0;
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

void check_request(const EvaluationRequest& req) {
  if (req.signature.empty()) throw InvalidArgument("signature must have length >= 1");
  if (!req.signature.non_negative()) throw InvalidArgument("signature must be non-negative");
  if (req.points.size() != req.signature.size())
    throw InvalidArgument("expected " + std::to_string(req.signature.size()) + " points, got " +
                          std::to_string(req.points.size()));
  for (const auto& x : req.points) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) throw InvalidArgument("non-finite point");
    if (x == 0.0) throw InvalidArgument("points must be nonzero");
  }
}

ComplexPoint monomial(const std::vector<ComplexPoint>& x, const WeightExponent& w) {
  ComplexPoint r = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) r *= ipow(x[i], w.exponents[i]);
  return r;
}

// Calls visit(rows) for each half pattern of the given length whose top row
// is `top`, with every row non-negative.
void for_each_nonnegative_pattern(const Signature& top, std::size_t length, std::uint64_t cap,
                                  const std::function<void(const PatternRows&)>& visit) {
  PatternRows rows(length);
  rows[length - 1].assign(top.entries().begin(), top.entries().end());
  std::uint64_t leaves = 0;
  std::function<void(std::size_t)> descend = [&](std::size_t r) {  // fill row r (1-based)
    if (r == 0) {
      if (++leaves > cap) throw ResourceLimitError("pattern enumeration exceeded " + std::to_string(cap) + " patterns");
      visit(rows);
      return;
    }
    Signature upper(rows[r]);
    for (const auto& s : rows_below(upper, half_pattern_row_length(r))) {
      rows[r - 1].assign(s.entries().begin(), s.entries().end());
      descend(r - 1);
    }
  };
  descend(length - 1);
}

ComplexPoint det(const Eigen::MatrixXcd& m) { return m.partialPivLu().determinant(); }

template <class Kernel>
Eigen::MatrixXcd kernel_matrix(const std::vector<ComplexPoint>& x, const std::vector<Entry>& powers, Kernel k) {
  const auto m = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXcd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = k(x[static_cast<std::size_t>(i)], powers[static_cast<std::size_t>(j)]);
  return a;
}

ComplexPoint guarded_ratio(ComplexPoint num, ComplexPoint den, double tol) {
  if (std::abs(den) < tol)
    throw NearSingularError("Weyl denominator below tolerance; use the combinatorial evaluation");
  return num / den;
}

}  // namespace

ComplexPoint sp_schur_combinatorial(const EvaluationRequest& req, const CharacterLimits& limits) {
  check_request(req);
  ComplexPoint total = 0.0;
  for_each_nonnegative_pattern(req.signature, 2 * req.signature.size(), limits.max_patterns,
                               [&](const PatternRows& rows) {
                                 total += monomial(req.points, sp_weight_exponents_unchecked(rows));
                               });
  return total;
}

ComplexPoint o_schur_combinatorial(const EvaluationRequest& req, const CharacterLimits& limits) {
  check_request(req);
  const std::size_t length = 2 * req.signature.size() - 1;
  ComplexPoint total = 0.0;
  std::uint64_t leaves = 0;
  for_each_nonnegative_pattern(req.signature, length, limits.max_patterns, [&](const PatternRows& abs_rows) {
    // Free signs on nonzero starters below the top; the top sign is the label.
    std::vector<std::size_t> free;
    for (std::size_t r = 1; r < length; r += 2)
      if (abs_rows[r - 1].back() != 0) free.push_back(r);
    PatternRows rows = abs_rows;
    for (int label : {1, -1}) {
      rows[length - 1].back() = label * abs_rows[length - 1].back();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        if (++leaves > limits.max_patterns)
          throw ResourceLimitError("pattern enumeration exceeded " + std::to_string(limits.max_patterns) + " patterns");
        for (std::size_t b = 0; b < free.size(); ++b) {
          Entry a = abs_rows[free[b] - 1].back();
          rows[free[b] - 1].back() = (mask >> b & 1) ? -a : a;
        }
        total += monomial(req.points, o_weight_exponents_unchecked(rows));
      }
    }
  });
  return total;
}

ComplexPoint sp_schur_determinantal(const EvaluationRequest& req, const CharacterLimits& limits) {
  check_request(req);
  const std::size_t m = req.signature.size();
  std::vector<Entry> num_pow(m), den_pow(m);
  for (std::size_t j = 0; j < m; ++j) {
    den_pow[j] = static_cast<Entry>(m - j);
    num_pow[j] = req.signature[j] + den_pow[j];
  }
  auto k = [](ComplexPoint x, Entry p) { return ipow(x, p) - ipow(x, -p); };
  return guarded_ratio(det(kernel_matrix(req.points, num_pow, k)), det(kernel_matrix(req.points, den_pow, k)),
                       limits.singular_tolerance);
}

ComplexPoint o_schur_determinantal(const EvaluationRequest& req, const CharacterLimits& limits) {
  check_request(req);
  const std::size_t m = req.signature.size();
  std::vector<Entry> num_pow(m), den_pow(m);
  for (std::size_t j = 0; j < m; ++j) {
    den_pow[j] = static_cast<Entry>(m - j - 1);
    num_pow[j] = req.signature[j] + den_pow[j];
  }
  auto k = [](ComplexPoint x, Entry p) { return ipow(x, p) + ipow(x, -p); };
  return 2.0 * guarded_ratio(det(kernel_matrix(req.points, num_pow, k)), det(kernel_matrix(req.points, den_pow, k)),
                             limits.singular_tolerance);
}

ComplexPoint bump_gamburd_average(Group group, int n, const std::vector<ComplexPoint>& points,
                                  const CharacterLimits& limits) {
  if (n < 0) throw InvalidArgument("N must be non-negative");
  if (points.empty()) throw InvalidArgument("need at least one point");
  EvaluationRequest req{Signature::constant(points.size(), n), points};
  ComplexPoint prefactor = 1.0;
  for (const auto& x : points) prefactor *= ipow(x, n);
  ComplexPoint schur;
  try {
    schur = group == Group::Sp ? sp_schur_determinantal(req, limits) : o_schur_determinantal(req, limits);
  } catch (const NearSingularError&) {
    schur = group == Group::Sp ? sp_schur_combinatorial(req, limits) : o_schur_combinatorial(req, limits);
  }
  return prefactor * schur;
}

ComplexPoint cfkrs_average(Group group, int n, const std::vector<ComplexPoint>& points,
                           const CharacterLimits& limits) {
  if (n < 0) throw InvalidArgument("N must be non-negative");
  if (points.empty()) throw InvalidArgument("need at least one point");
  const std::size_t m = points.size();
  ComplexPoint prefactor = 1.0;
  for (const auto& x : points) prefactor *= ipow(x, n);
  ComplexPoint sum = 0.0;
  std::vector<int> eps(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t j = 0; j < m; ++j) eps[j] = (mask >> j & 1) ? -1 : 1;
    ComplexPoint numer = 1.0;
    for (std::size_t j = 0; j < m; ++j) numer *= ipow(points[j], eps[j] * n);
    ComplexPoint denom = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = group == Group::Sp ? i : i + 1; j < m; ++j) {
        ComplexPoint f = 1.0 - ipow(points[i], -eps[i]) * ipow(points[j], -eps[j]);
        if (std::abs(f) < limits.singular_tolerance)
          throw NearSingularError("CFKRS denominator factor below tolerance; perturb the points");
        denom *= f;
      }
    }
    sum += numer / denom;
  }
  return prefactor * sum;
}

}  // namespace mom
