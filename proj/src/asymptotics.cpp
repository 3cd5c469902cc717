#include "mom/asymptotics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mom/errors.hpp"
#include "mom/lattice_count.hpp"
#include "mom/parallel.hpp"
#include "mom/relabel.hpp"

namespace mom {

std::vector<Coord> determined_coordinates(Group group, int k, int beta) {
  if (k < 1 || beta < 1) throw InvalidArgument("k and beta must be >= 1");
  const long K = k, B = beta, half = k / 2;
  std::vector<Coord> out;
  auto push = [&](long m, long n) { out.push_back({static_cast<std::size_t>(m), static_cast<std::size_t>(n)}); };
  if (group == Group::Sp) {
    for (long i = 1; i <= half; ++i) push(2 * i * B, 4 * i * B);
    for (long i = half + 1; i <= K - 1; ++i) push((4 * K * B - 4 * i * B) / 2, 4 * i * B);
    push(1, 4 * K * B - 1);
  } else {
    for (long i = 1; i <= half; ++i) push((4 * i * B - 1 + 1) / 2, 4 * i * B - 1);
    for (long i = half + 1; i <= K - 1; ++i) {
      const long n = 4 * i * B - 1;
      push((4 * K * B - n - 1) / 2, n);
    }
    const long n = 4 * K * B - 3;
    push((4 * K * B - n - 1) / 2, n);
  }
  return out;
}

namespace {

Entry numeric_row_coefficient(const std::vector<YTerm>& c, std::size_t row, const SignVector& eps) {
  auto e = [&](std::size_t i) { return i == 0 ? 1 : eps[i - 1]; };
  Entry total = 0;
  for (const auto& t : c)
    if (t.row == row) total += t.coefficient * e(t.eps_a) * e(t.eps_b);
  return total;
}

void add_interlacing(PolytopeSpec& spec, std::size_t lower_row, std::size_t upper_row) {
  const std::size_t ll = spec.row_lengths[lower_row - 1];
  const std::size_t lu = spec.row_lengths[upper_row - 1];
  for (std::size_t j = 1; j <= ll; ++j) {
    spec.inequalities.push_back({Coord{j, upper_row}, Coord{j, lower_row}});
    if (j + 1 <= lu) spec.inequalities.push_back({Coord{j, lower_row}, Coord{j + 1, upper_row}});
  }
}

ExactRational exact_determinant(std::vector<std::vector<ExactRational>> a) {
  const std::size_t n = a.size();
  ExactRational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const ExactRational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Determinant of the constraint columns of the given rows (0-based).
mpz_class minor(const std::vector<std::vector<Entry>>& a, const std::vector<std::size_t>& rows) {
  std::vector<std::vector<ExactRational>> m(a.size(), std::vector<ExactRational>(rows.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m[i][j] = static_cast<long>(a[i][rows[j]]);
  const ExactRational d = exact_determinant(std::move(m));
  return d.get_num();
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PolytopeSpec polytope_spec(Group group, int k, int beta, const std::optional<SignVector>& epsilon) {
  if (k < 1 || beta < 1) throw InvalidArgument("k and beta must be >= 1");
  const auto M = static_cast<std::size_t>(2 * k * beta);
  if ((group == Group::SO) != epsilon.has_value())
    throw InvalidArgument("a sign vector is required for SO and not accepted for Sp");
  PolytopeSpec spec;
  spec.group = group;
  spec.k = k;
  spec.beta = beta;
  if (epsilon) {
    check_sign_vector(*epsilon, M);
    spec.epsilon = *epsilon;
  }
  const std::size_t T = relabelled_row_count(group, M);
  for (std::size_t r = 1; r <= T; ++r) spec.row_lengths.push_back(relabelled_row_length(group, M, r));

  const auto cons = relabelled_constraints(group, k, beta);
  spec.constraint_rows.assign(cons.size(), std::vector<Entry>(T, 0));
  for (std::size_t c = 0; c < cons.size(); ++c)
    for (std::size_t r = 1; r <= T; ++r) spec.constraint_rows[c][r - 1] = numeric_row_coefficient(cons[c], r, spec.epsilon);
  std::size_t coordinates = 0;
  for (std::size_t len : spec.row_lengths) coordinates += len;

  // Every coordinate of a row has the same constraint column, so pivots are
  // chosen among rows.
  mpz_class g = 0;
  std::vector<std::size_t> best;
  mpz_class best_det = 0;
  for_each_subset(T, cons.size(), [&](const std::vector<std::size_t>& rows) {
    const mpz_class d = abs(minor(spec.constraint_rows, rows));
    if (d == 0) return;
    g = gcd(g, d);
    if (best_det == 0 || d < best_det) {
      best_det = d;
      best = rows;
    }
  });
  if (g == 0) {
    spec.degenerate = true;
    spec.dimension = coordinates - cons.size();
    spec.note = "constraints have rank below k for this sign vector";
    return spec;
  }

  const auto standard = determined_coordinates(group, k, beta);
  std::vector<std::size_t> standard_rows;
  for (const auto& c : standard) standard_rows.push_back(c.n - 1);
  std::sort(standard_rows.begin(), standard_rows.end());
  mpz_class det = abs(minor(spec.constraint_rows, standard_rows));
  if (det != 0) {
    spec.determined = standard;
  } else {
    det = best_det;
    for (std::size_t r : best) spec.determined.push_back({spec.row_lengths[r], r + 1});
    spec.note = "standard coordinates are dependent for this sign vector";
  }
  const mpz_class index = det / g;
  spec.lattice_index = index.get_ui();

  for (std::size_t r = 1; r <= T; ++r)
    for (std::size_t m = 1; m <= spec.row_lengths[r - 1]; ++m) {
      const Coord c{m, r};
      if (std::find(spec.determined.begin(), spec.determined.end(), c) == spec.determined.end())
        spec.free_indices.push_back(c);
      spec.inequalities.push_back({c, std::nullopt, 1.0, 0.0});
      spec.inequalities.push_back({std::nullopt, c, 1.0, 0.0});
    }
  spec.dimension = spec.free_indices.size();

  const std::size_t H = group == Group::Sp ? M : M - 1;
  for (std::size_t r = 2; r <= H; ++r) add_interlacing(spec, r - 1, r);
  for (std::size_t r = H + 1; r <= T; ++r) add_interlacing(spec, r, r - 1);
  return spec;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

namespace {

struct Compiled {
  std::vector<std::size_t> offset;  // flat index of (1, r) is offset[r-1]
  std::vector<std::size_t> free_flat;
  struct Solve {
    std::size_t target;
    std::vector<std::pair<std::size_t, double>> weights;
  };
  std::vector<Solve> solves;
  struct Ineq {
    long upper, lower;  // -1 means constant
    double upper_value, lower_value;
  };
  std::vector<Ineq> ineqs;
  std::size_t size = 0;
};

Compiled compile(const PolytopeSpec& spec) {
  Compiled c;
  for (std::size_t len : spec.row_lengths) {
    c.offset.push_back(c.size);
    c.size += len;
  }
  auto flat = [&](const Coord& x) { return c.offset[x.n - 1] + x.m - 1; };
  for (const auto& f : spec.free_indices) c.free_flat.push_back(flat(f));
  // B x_det = -C x_free, solved once in exact arithmetic.
  const std::size_t k = spec.determined.size();
  std::vector<std::vector<ExactRational>> aug(k, std::vector<ExactRational>(k + c.size));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& rows = spec.constraint_rows[i];
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = static_cast<long>(rows[spec.determined[j].n - 1]);
    for (const auto& f : spec.free_indices) aug[i][k + flat(f)] = -static_cast<long>(rows[f.n - 1]);
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (aug[piv][col] == 0) ++piv;
    std::swap(aug[piv], aug[col]);
    const ExactRational inv = 1 / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      const ExactRational f = aug[r][col];
      for (std::size_t j = 0; j < aug[r].size(); ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    Compiled::Solve s;
    s.target = flat(spec.determined[i]);
    for (std::size_t idx = 0; idx < c.size; ++idx)
      if (aug[i][k + idx] != 0) s.weights.emplace_back(idx, aug[i][k + idx].get_d());
    c.solves.push_back(std::move(s));
  }
  for (const auto& q : spec.inequalities)
    c.ineqs.push_back({q.upper ? static_cast<long>(flat(*q.upper)) : -1, q.lower ? static_cast<long>(flat(*q.lower)) : -1,
                       q.upper_value, q.lower_value});
  return c;
}

}  // namespace

VolumeEstimate mc_volume(const PolytopeSpec& spec, std::uint64_t samples, std::uint64_t seed, unsigned threads) {
  if (spec.degenerate) throw InvalidArgument("degenerate polytope: " + spec.note);
  if (spec.dimension == 0) throw InvalidArgument("polytope has dimension 0; use the closed form");
  if (samples == 0) throw InvalidArgument("samples must be >= 1");
  VolumeEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.rng = kRngName;
  const Compiled c = compile(spec);
  const std::uint64_t chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t chunk) {
    std::mt19937_64 rng(stream_seed(seed, chunk));
    const std::uint64_t begin = chunk * kSamplesPerChunk;
    const std::uint64_t end = std::min(samples, begin + kSamplesPerChunk);
    std::vector<double> x(c.size, 0.0);
    std::uint64_t local = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      for (std::size_t idx : c.free_flat) x[idx] = unit_uniform(rng());
      for (const auto& solve : c.solves) {
        double v = 0.0;
        for (const auto& [idx, w] : solve.weights) v += w * x[idx];
        x[solve.target] = v;
      }
      bool ok = true;
      for (const auto& q : c.ineqs) {
        const double hi = q.upper < 0 ? q.upper_value : x[static_cast<std::size_t>(q.upper)];
        const double lo = q.lower < 0 ? q.lower_value : x[static_cast<std::size_t>(q.lower)];
        if (hi < lo) {
          ok = false;
          break;
        }
      }
      local += ok;
    }
    hits[chunk] = local;
  });
  for (auto h : hits) est.accepted += h;
  const double p = static_cast<double>(est.accepted) / static_cast<double>(samples);
  const double scale = 1.0 / static_cast<double>(spec.lattice_index);
  est.mean = p * scale;
  est.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) * scale;
  return est;
}

VolumeEstimate mc_volume_so_total(int k, int beta, std::uint64_t samples_per_sign, std::uint64_t seed, unsigned threads) {
  VolumeEstimate total;
  total.seed = seed;
  total.rng = kRngName;
  double var = 0.0;
  const auto signs = all_sign_vectors(static_cast<std::size_t>(2 * k * beta));
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const auto spec = polytope_spec(Group::SO, k, beta, signs[i]);
    const auto v = mc_volume(spec, samples_per_sign, stream_seed(seed, 0x50000000ull + i), threads);
    total.mean += v.mean;
    var += v.standard_error * v.standard_error;
    total.samples += v.samples;
    total.accepted += v.accepted;
  }
  total.standard_error = std::sqrt(var);
  return total;
}

ComparisonReport compare_to_estimate(const ExactRational& exact, const VolumeEstimate& volume, double sigmas) {
  ComparisonReport r;
  r.exact = to_string(exact);
  r.mean = volume.mean;
  r.standard_error = volume.standard_error;
  const double diff = std::abs(exact.get_d() - volume.mean);
  if (volume.standard_error > 0) {
    r.z = diff / volume.standard_error;
    r.status = r.z <= sigmas ? "PASS" : "FAIL";
  } else {
    r.z = diff == 0 ? 0.0 : INFINITY;
    r.status = diff == 0 ? "PASS" : "FAIL";
  }
  return r;
}

ComparisonReport leading_coefficient_check(const MomResult& result, const std::optional<VolumeEstimate>& volume,
                                           double sigmas) {
  if (result.group == Group::SO && result.k == 1 && result.beta == 1) {
    ComparisonReport r;
    r.status = "SKIPPED";
    r.exact = to_string(result.leading);
    r.detail = "degenerate dimension-0 polytope; leading coefficient given by 2(N+1)";
    return r;
  }
  if (!volume) throw InvalidArgument("a volume estimate is required");
  return compare_to_estimate(result.leading, *volume, sigmas);
}

mpz_class double_factorial(long n) {
  if (n < -1) throw InvalidArgument("double factorial needs n >= -1");
  mpz_class r = 1;
  for (long i = n; i > 1; i -= 2) r *= i;
  return r;
}

double half_pattern_volume(int s, const std::vector<double>& top) {
  if (s < 1) throw InvalidArgument("s must be >= 1");
  const std::size_t L = static_cast<std::size_t>((s + 1) / 2);
  if (top.size() != L) throw InvalidArgument("top row must have length floor((s+1)/2)");
  double pref = 1.0;
  for (int j = 1; j <= s; ++j) pref /= double_factorial(j - 1).get_d();
  const int shift = s % 2 == 0 ? 1 : 0;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(L), static_cast<Eigen::Index>(L));
  for (std::size_t i = 1; i <= L; ++i)
    for (std::size_t j = 1; j <= L; ++j)
      a(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) =
          std::pow(top[L - i], 2.0 * static_cast<double>(j - 1) + shift);
  return pref * a.partialPivLu().determinant();
}


ExactRational vol_symmetry_point(int s) {
  if (s < 1) throw InvalidArgument("s must be >= 1");
  const std::size_t L = static_cast<std::size_t>((s + 1) / 2);
  const long shift = s % 2 == 0 ? 2 : 0;
  std::vector<std::vector<ExactRational>> a(L, std::vector<ExactRational>(L));
  for (std::size_t i = 1; i <= L; ++i)
    for (std::size_t j = 1; j <= L; ++j)
      a[i - 1][j - 1] = ExactRational(1, static_cast<unsigned long>(2 * static_cast<long>(i + j) - 3 + shift));
  ExactRational pref = 1;
  for (int j = 1; j <= s; ++j) {
    const mpz_class d = double_factorial(j - 1);
    pref /= ExactRational(d * d);
  }
  ExactRational v = pref * exact_determinant(std::move(a));
  v.canonicalize();
  return v;
}

ExactRational symmetry_point_closed_form(int s) {
  if (s < 1) throw InvalidArgument("s must be >= 1");
  mpz_class denom = 1;
  for (int j = 1; j <= s; ++j) denom *= double_factorial(2 * j - 1);
  return ExactRational(mpz_class(1), denom);
}

SymmetryPointReport symmetry_point_leading_check(int s, const CountLimits& limits, unsigned threads) {
  if (s < 1) throw InvalidArgument("s must be >= 1");
  const int D = s * (s + 1) / 2;
  std::vector<mpz_class> counts(static_cast<std::size_t>(D + 2));
  parallel_for(counts.size(), threads, [&](std::size_t idx) {
    const int n = D + 1 - static_cast<int>(idx);
    counts[static_cast<std::size_t>(n)] = count_sp_fixed_top(n, s, limits).value;
  });
  std::vector<std::pair<long, mpz_class>> samples;
  for (int n = 0; n <= D; ++n) samples.emplace_back(n, counts[static_cast<std::size_t>(n)]);
  SymmetryPointReport rep;
  rep.s = s;
  rep.polynomial = interpolate(samples);
  rep.leading = rep.polynomial.leading();
  rep.volume = vol_symmetry_point(s);
  if (evaluate(rep.polynomial, D + 1) != ExactRational(counts.back()))
    throw IntegrityError("symmetry-point interpolant fails the certification node for s=" + std::to_string(s));
  if (rep.polynomial.degree() != D)
    throw IntegrityError("symmetry-point polynomial has degree " + std::to_string(rep.polynomial.degree()) +
                         ", expected " + std::to_string(D));
  rep.pass = rep.leading == rep.volume;
  if (!rep.pass)
    throw IntegrityError("symmetry-point leading coefficient " + to_string(rep.leading) + " differs from volume " +
                         to_string(rep.volume));
  return rep;
}

nlohmann::json volume_to_json(const PolytopeSpec& spec, const VolumeEstimate& v) {
  nlohmann::json j = {{"group", to_string(spec.group)},
                      {"k", spec.k},
                      {"beta", spec.beta},
                      {"dimension", spec.dimension},
                      {"samples", v.samples},
                      {"seed", v.seed},
                      {"mean", v.mean},
                      {"stderr", v.standard_error},
                      {"lattice_index", spec.lattice_index}};
  if (spec.group == Group::SO) j["epsilon"] = spec.epsilon;
  return j;
}

}  // namespace mom
