#include "mom/rmt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "mom/asymptotics.hpp"
#include "mom/errors.hpp"
#include "mom/parallel.hpp"

namespace mom {

namespace {

constexpr int kMaxDraws = 1000;

using Cplx = std::complex<double>;

Eigen::MatrixXd haar_orthogonal(int dim, Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

Eigen::MatrixXd haar_special_orthogonal(int n, Rng& rng, double* pre_det) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Eigen::MatrixXd q = haar_orthogonal(2 * n, rng);
    const double det = q.determinant();
    if (pre_det) *pre_det = det;
    if (det > 0) return q;
  }
  throw InternalError("SO sampler exceeded its redraw cap");
}

// Antiunitary partner of a quaternionic column in the 2x2 block form
// [[z, w], [-conj(w), conj(z)]].
Eigen::VectorXcd partner(const Eigen::VectorXcd& c) {
  Eigen::VectorXcd p(c.size());
  for (Eigen::Index l = 0; l < c.size(); l += 2) {
    p(l) = -std::conj(c(l + 1));
    p(l + 1) = std::conj(c(l));
  }
  return p;
}

Eigen::MatrixXcd haar_symplectic(int n, Rng& rng) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  std::normal_distribution<double> gauss;
  const int dim = 2 * n;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Eigen::MatrixXcd u(dim, dim);
    bool degenerate = false;
    for (int j = 0; j < n && !degenerate; ++j) {
      Eigen::VectorXcd c(dim);
      for (int l = 0; l < n; ++l) {
        const Cplx z(gauss(rng), gauss(rng));
        const Cplx w(gauss(rng), gauss(rng));
        c(2 * l) = z;
        c(2 * l + 1) = -std::conj(w);
      }
      for (int p = 0; p < 2 * j; ++p) c -= u.col(p).dot(c) * u.col(p);
      const double norm = c.norm();
      if (norm < 1e-12) {
        degenerate = true;
        break;
      }
      c /= norm;
      u.col(2 * j) = c;
      u.col(2 * j + 1) = partner(c);
    }
    if (!degenerate) return u;
  }
  throw InternalError("Sp sampler exceeded its redraw cap");
}

std::vector<double> fold_phases(const Eigen::VectorXcd& eigenvalues) {
  std::vector<double> all;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) all.push_back(std::abs(std::arg(eigenvalues(i))));
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < all.size(); i += 2) out.push_back(all[i]);
  return out;
}

}  // namespace

EigenphaseSample sample_so_eigenphases(int n, Rng& rng) {
  const Eigen::MatrixXd q = haar_special_orthogonal(n, rng, nullptr);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(q.cast<Cplx>(), false);
  return {Group::SO, fold_phases(es.eigenvalues())};
}

EigenphaseSample sample_sp_eigenphases(int n, Rng& rng) {
  const Eigen::MatrixXcd u = haar_symplectic(n, rng);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u, false);
  return {Group::Sp, fold_phases(es.eigenvalues())};
}

EigenphaseSample sample_eigenphases(Group group, int n, Rng& rng) {
  return group == Group::Sp ? sample_sp_eigenphases(n, rng) : sample_so_eigenphases(n, rng);
}

std::vector<std::vector<double>> sample_so_matrix(int n, Rng& rng, double* pre_rejection_det) {
  const Eigen::MatrixXd q = haar_special_orthogonal(n, rng, pre_rejection_det);
  std::vector<std::vector<double>> out(q.rows(), std::vector<double>(q.cols()));
  for (Eigen::Index i = 0; i < q.rows(); ++i)
    for (Eigen::Index j = 0; j < q.cols(); ++j) out[i][j] = q(i, j);
  return out;
}

std::vector<std::vector<Cplx>> sample_sp_matrix(int n, Rng& rng) {
  const Eigen::MatrixXcd u = haar_symplectic(n, rng);
  std::vector<std::vector<Cplx>> out(u.rows(), std::vector<Cplx>(u.cols()));
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) out[i][j] = u(i, j);
  return out;
}

double char_poly_modulus_sq(const EigenphaseSample& sample, double theta) {
  double v = 1.0;
  for (double phi : sample.phases) v *= (2.0 - 2.0 * std::cos(phi - theta)) * (2.0 - 2.0 * std::cos(phi + theta));
  return v;
}

double inner_moment(const EigenphaseSample& sample, int beta, std::size_t grid) {
  if (beta < 1) throw InvalidArgument("beta must be >= 1");
  const std::size_t m = grid ? grid : 4 * sample.phases.size() * static_cast<std::size_t>(beta) + 2;
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m);
    sum += std::pow(char_poly_modulus_sq(sample, theta), beta);
  }
  return sum / static_cast<double>(m);
}

MomEstimate mom_mc_estimate(Group group, int n, int k, int beta, std::uint64_t samples, std::uint64_t seed,
                            unsigned threads, std::vector<double>* raw) {
  if (n < 1 || k < 1 || beta < 1) throw InvalidArgument("N, k and beta must be >= 1");
  if (samples < 2) throw InvalidArgument("samples must be >= 2");
  struct Moments {
    double count = 0, mean = 0, m2 = 0;
  };
  const std::uint64_t chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  std::vector<Moments> parts(chunks);
  if (raw) raw->assign(samples, 0.0);
  parallel_for(chunks, threads, [&](std::size_t chunk) {
    Rng rng(stream_seed(seed, chunk));
    const std::uint64_t begin = chunk * kSamplesPerChunk;
    const std::uint64_t end = std::min(samples, begin + kSamplesPerChunk);
    Moments m;
    for (std::uint64_t s = begin; s < end; ++s) {
      const double inner = inner_moment(sample_eigenphases(group, n, rng), beta);
      if (raw) (*raw)[s] = inner;
      const double x = std::pow(inner, k);
      m.count += 1;
      const double d = x - m.mean;
      m.mean += d / m.count;
      m.m2 += d * (x - m.mean);
    }
    parts[chunk] = m;
  });
  Moments total;
  for (const auto& p : parts) {
    const double count = total.count + p.count;
    const double d = p.mean - total.mean;
    total.mean += d * p.count / count;
    total.m2 += p.m2 + d * d * total.count * p.count / count;
    total.count = count;
  }
  MomEstimate e{group, n, k, beta, samples, seed, total.mean, 0.0};
  e.standard_error = std::sqrt(total.m2 / (total.count - 1) / total.count);
  return e;
}

nlohmann::json estimate_to_json(const MomEstimate& e) {
  return {{"group", to_string(e.group)}, {"N", e.n},          {"k", e.k},       {"beta", e.beta},
          {"samples", e.samples},        {"seed", e.seed},    {"mean", e.mean}, {"stderr", e.standard_error}};
}

}  // namespace mom
