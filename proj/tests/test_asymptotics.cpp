#include <doctest.h>

#include <functional>
#include <random>

#include "mom/asymptotics.hpp"
#include "mom/errors.hpp"
#include "mom/relabel.hpp"

using namespace mom;

namespace {

// Nested five-point Gauss-Legendre over the interlacing box of each row.
// Exact for the polynomial integrands that arise at s <= 4.
double quadrature_volume(int s, const std::vector<double>& top) {
  static const double node[5] = {0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                 0.9061798459386640};
  static const double weight[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                   0.2369268850561891, 0.2369268850561891};
  std::function<double(int, const std::vector<double>&)> below = [&](int row, const std::vector<double>& upper) {
    if (row == 0) return 1.0;
    const std::size_t len = static_cast<std::size_t>((row + 1) / 2);
    std::vector<double> lower(len);
    std::function<double(std::size_t)> coord = [&](std::size_t j) -> double {
      if (j == len) return below(row - 1, lower);
      const double hi = upper[j];
      const double lo = j + 1 < upper.size() ? upper[j + 1] : 0.0;
      const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
      double sum = 0.0;
      for (int q = 0; q < 5; ++q) {
        lower[j] = mid + half * node[q];
        sum += weight[q] * half * coord(j + 1);
      }
      return sum;
    };
    return coord(0);
  };
  return below(s - 1, top);
}

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("determined coordinates") {
  CHECK(determined_coordinates(Group::Sp, 1, 1) == std::vector<Coord>{{1, 3}});
  CHECK(determined_coordinates(Group::Sp, 2, 1) == std::vector<Coord>{{2, 4}, {1, 7}});
  CHECK(determined_coordinates(Group::SO, 2, 1) == std::vector<Coord>{{2, 3}, {1, 5}});
  for (int k = 1; k <= 3; ++k)
    for (int b = 1; b <= 2; ++b) {
      CHECK(determined_coordinates(Group::Sp, k, b).size() == static_cast<std::size_t>(k));
      CHECK(determined_coordinates(Group::SO, k, b).size() == static_cast<std::size_t>(k));
    }
}

TEST_CASE("polytope dimensions") {
  const auto sp11 = polytope_spec(Group::Sp, 1, 1);
  CHECK(sp11.dimension == 2);
  CHECK(sp11.determined == std::vector<Coord>{{1, 3}});
  const auto sp21 = polytope_spec(Group::Sp, 2, 1);
  CHECK(sp21.dimension == 8);
  CHECK(sp21.determined == std::vector<Coord>{{2, 4}, {1, 7}});
  CHECK(polytope_spec(Group::Sp, 1, 2).dimension == 9);
  for (const auto& e : all_sign_vectors(4)) {
    const auto so = polytope_spec(Group::SO, 2, 1, e);
    CHECK(so.dimension == 4);
    CHECK_FALSE(so.degenerate);
    CHECK(so.lattice_index == 1);
  }
  const auto so11 = polytope_spec(Group::SO, 1, 1, SignVector{1, 1});
  CHECK(so11.dimension == 0);
  CHECK(so11.degenerate);
  CHECK_THROWS_AS(polytope_spec(Group::SO, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(polytope_spec(Group::Sp, 1, 1, SignVector{1, 1}), InvalidArgument);
}

TEST_CASE("all-plus SO(2,1) piece pivots away from the vanishing coordinate") {
  const auto spec = polytope_spec(Group::SO, 2, 1, SignVector{1, 1, 1, 1});
  CHECK_FALSE(spec.degenerate);
  CHECK_FALSE(spec.note.empty());
  CHECK(spec.determined != determined_coordinates(Group::SO, 2, 1));
  const auto v = mc_volume(spec, 200000, 3);
  CHECK(v.mean > 0.05);
}

TEST_CASE("Sp(1,1) volume") {
  const auto v = mc_volume(polytope_spec(Group::Sp, 1, 1), 1000000, kDefaultSeed);
  CHECK(std::abs(v.mean - 0.5) <= 3 * v.standard_error);
  CHECK(v.samples == 1000000);
  CHECK(v.rng == kRngName);
}

TEST_CASE("single accepted sample") {
  const auto spec = polytope_spec(Group::Sp, 1, 1);
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const auto v = mc_volume(spec, 1, seed);
    if (v.accepted == 1) {
      CHECK(v.mean == 1.0);
      CHECK(v.standard_error == 0.0);
      return;
    }
  }
  FAIL("no accepted first sample in 64 seeds");
}

TEST_CASE("volume estimates ignore the thread count") {
  const auto spec = polytope_spec(Group::Sp, 2, 1);
  const auto a = mc_volume(spec, 300000, 9, 1);
  const auto b = mc_volume(spec, 300000, 9, 3);
  CHECK(a.accepted == b.accepted);
  CHECK(a.mean == b.mean);
}

TEST_CASE("zero-dimensional pieces are refused") {
  CHECK_THROWS_AS(mc_volume(polytope_spec(Group::SO, 1, 1, SignVector{1, -1}), 10), InvalidArgument);
  CHECK_THROWS_AS(mc_volume(polytope_spec(Group::SO, 1, 1, SignVector{1, 1}), 10), InvalidArgument);
  CHECK_THROWS_AS(mc_volume(polytope_spec(Group::Sp, 1, 1), 0), InvalidArgument);
}

TEST_CASE("SO(2,1) volume summed over sign vectors") {
  const auto v = mc_volume_so_total(2, 1, 250000, kDefaultSeed);
  CHECK(std::abs(v.mean - 0.5) <= 3 * v.standard_error);
}

TEST_CASE("leading coefficient comparison") {
  const auto sp = mom_polynomial(Group::Sp, 1, 1);
  const auto rep = leading_coefficient_check(sp, mc_volume(polytope_spec(Group::Sp, 1, 1), 200000));
  CHECK(rep.pass());
  CHECK(rep.exact == "1/2");
  const auto so = mom_polynomial(Group::SO, 1, 1);
  const auto skip = leading_coefficient_check(so, std::nullopt);
  CHECK(skip.status == "SKIPPED");
  CHECK(skip.detail.find("dimension-0") != std::string::npos);
  VolumeEstimate off;
  off.mean = 0.6;
  off.standard_error = 0.01;
  CHECK(compare_to_estimate(ExactRational(1, 2), off).status == "FAIL");
  off.standard_error = 0.0;
  off.mean = 0.5;
  CHECK(compare_to_estimate(ExactRational(1, 2), off).status == "PASS");
}

TEST_CASE("double factorial") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK_THROWS_AS(double_factorial(-2), InvalidArgument);
}

TEST_CASE("half pattern volume") {
  CHECK(half_pattern_volume(1, {0.7}) == doctest::Approx(1.0));
  CHECK(half_pattern_volume(2, {0.7}) == doctest::Approx(0.7));
  CHECK(half_pattern_volume(3, {0.9, 0.4}) == doctest::Approx((0.81 - 0.16) / 2));
  CHECK(half_pattern_volume(3, {0.5, 0.5}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(half_pattern_volume(3, {0.5}), InvalidArgument);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int s = 1; s <= 4; ++s)
    for (int t = 0; t < 5; ++t) {
      std::vector<double> top(static_cast<std::size_t>((s + 1) / 2));
      for (auto& x : top) x = u(rng);
      std::sort(top.rbegin(), top.rend());
      const double q = quadrature_volume(s, top);
      CHECK(std::abs(half_pattern_volume(s, top) - q) <= 1e-8 * std::max(std::abs(q), 1e-300));
    }
}

TEST_CASE("symmetry point volumes") {
  CHECK(vol_symmetry_point(1) == 1);
  CHECK(vol_symmetry_point(2) == ExactRational(1, 3));
  CHECK(vol_symmetry_point(3) == ExactRational(1, 45));
  CHECK(vol_symmetry_point(4) == ExactRational(1, 4725));
  for (int s = 1; s <= 8; ++s) CHECK(vol_symmetry_point(s) == symmetry_point_closed_form(s));
  // The half pattern volume at the all-ones top row is the same quantity.
  CHECK(half_pattern_volume(2, {1.0}) == doctest::Approx(1.0));
}

TEST_CASE("symmetry point leading coefficients") {
  const auto s1 = symmetry_point_leading_check(1);
  CHECK(s1.polynomial.coefficients() == std::vector<ExactRational>{1, 1});
  const auto s2 = symmetry_point_leading_check(2);
  CHECK(s2.polynomial.degree() == 3);
  CHECK(evaluate(s2.polynomial, 0) == 1);
  CHECK(evaluate(s2.polynomial, 1) == 5);
  CHECK(s2.leading == ExactRational(1, 3));
  for (int s = 3; s <= 4; ++s) {
    const auto rep = symmetry_point_leading_check(s, {}, 2);
    CHECK(rep.pass);
    CHECK(rep.leading == symmetry_point_closed_form(s));
  }
}

TEST_CASE("random streams") {
  CHECK(stream_seed(1, 2) == stream_seed(1, 2));
  CHECK(stream_seed(1, 2) != stream_seed(1, 3));
  CHECK(stream_seed(1, 2) != stream_seed(2, 2));
  CHECK(unit_uniform(0) == 0.0);
  CHECK(unit_uniform(~0ull) < 1.0);
}

TEST_CASE("volume JSON") {
  const auto spec = polytope_spec(Group::SO, 2, 1, SignVector{1, -1, 1, -1});
  const auto v = mc_volume(spec, 1000, 4);
  const auto j = volume_to_json(spec, v);
  for (const char* key : {"group", "k", "beta", "epsilon", "dimension", "samples", "seed", "mean", "stderr"})
    CHECK(j.contains(key));
  CHECK_FALSE(volume_to_json(polytope_spec(Group::Sp, 1, 1), v).contains("epsilon"));
}

}  // TEST_SUITE
