#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "mom/signature.hpp"

namespace mom {

// One phase in [0, pi] per conjugate pair {e^{i phi}, e^{-i phi}}.
struct EigenphaseSample {
  Group group = Group::SO;
  std::vector<double> phases;
};

using Rng = std::mt19937_64;

EigenphaseSample sample_so_eigenphases(int n, Rng& rng);
EigenphaseSample sample_sp_eigenphases(int n, Rng& rng);
EigenphaseSample sample_eigenphases(Group group, int n, Rng& rng);

// Haar matrices themselves, for unitarity and determinant checks.
std::vector<std::vector<double>> sample_so_matrix(int n, Rng& rng, double* pre_rejection_det = nullptr);
std::vector<std::vector<std::complex<double>>> sample_sp_matrix(int n, Rng& rng);

// |det(I - g e^{-i theta})|^2 from the phases.
double char_poly_modulus_sq(const EigenphaseSample& sample, double theta);

// Circle average of char_poly_modulus_sq^beta, exact by equispaced
// quadrature. grid = 0 selects 4 N beta + 2 points.
double inner_moment(const EigenphaseSample& sample, int beta, std::size_t grid = 0);

struct MomEstimate {
  Group group = Group::SO;
  int n = 0;
  int k = 0;
  int beta = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double standard_error = 0.0;
};

// Independent of the thread count: sample i always comes from the stream of
// its 65536-sample chunk. When `raw` is given it receives every inner moment
// in sample order.
MomEstimate mom_mc_estimate(Group group, int n, int k, int beta, std::uint64_t samples, std::uint64_t seed,
                            unsigned threads = 1, std::vector<double>* raw = nullptr);

nlohmann::json estimate_to_json(const MomEstimate& e);

}  // namespace mom
