#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mom/signature.hpp"

namespace mom {

using ComplexPoint = std::complex<double>;

struct EvaluationRequest {
  Signature signature;               // non-negative, length M
  std::vector<ComplexPoint> points;  // x_1..x_M
};

struct CharacterLimits {
  std::uint64_t max_patterns = 10'000'000;  // combinatorial enumeration guard
  double singular_tolerance = 1e-12;
};

ComplexPoint sp_schur_combinatorial(const EvaluationRequest& req, const CharacterLimits& limits = {});
ComplexPoint sp_schur_determinantal(const EvaluationRequest& req, const CharacterLimits& limits = {});

// Sums over both top rows nu and nu^-, counted separately even when nu_M = 0.
ComplexPoint o_schur_combinatorial(const EvaluationRequest& req, const CharacterLimits& limits = {});
ComplexPoint o_schur_determinantal(const EvaluationRequest& req, const CharacterLimits& limits = {});

/// E[prod_j det(I - x_j g)] over Sp(2n) or SO(2n) through the Schur form.
/// Determinantal evaluation first, combinatorial when it is near-singular.
ComplexPoint bump_gamburd_average(Group group, int n, const std::vector<ComplexPoint>& points,
                                  const CharacterLimits& limits = {});

/// The same average as a signed sum over epsilon in {+-1}^M.
ComplexPoint cfkrs_average(Group group, int n, const std::vector<ComplexPoint>& points,
                           const CharacterLimits& limits = {});

}  // namespace mom
