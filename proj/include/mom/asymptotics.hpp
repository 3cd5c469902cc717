#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mom/constraints.hpp"
#include "mom/exact.hpp"
#include "mom/polynomials.hpp"

namespace mom {

/// Entry m of relabelled-array row n, both 1-based.
struct Coord {
  std::size_t m = 0;
  std::size_t n = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};


/// value(upper) >= value(lower); an absent side is the constant bound.
struct Inequality {
  std::optional<Coord> upper;
  std::optional<Coord> lower;
  double upper_value = 1.0;
  double lower_value = 0.0;
};

struct PolytopeSpec {
  Group group = Group::Sp;
  int k = 0;
  int beta = 0;
  SignVector epsilon;                // SO only
  std::vector<std::size_t> row_lengths;  // array rows 1..T
  std::vector<Coord> free_indices;
  // Solved from the constraints. These are the standard coordinates unless
  // the sign vector makes them dependent, in which case other rows are used.
  std::vector<Coord> determined;
  std::vector<std::vector<Entry>> constraint_rows;  // [constraint][row-1]
  std::vector<Inequality> inequalities;
  std::size_t dimension = 0;
  // Integer points of the constraint lattice project onto a sublattice of
  // this index in the free coordinates; volumes are divided by it so that
  // they give the leading term of the count.
  std::uint64_t lattice_index = 1;
  // The constraints have rank below k for this sign vector.
  bool degenerate = false;
  std::string note;
};

/// The standard coordinates solved from the constraints.
std::vector<Coord> determined_coordinates(Group group, int k, int beta);

PolytopeSpec polytope_spec(Group group, int k, int beta, const std::optional<SignVector>& epsilon = std::nullopt);

struct VolumeEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;
  std::uint64_t seed = 0;
  std::string rng;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr std::uint64_t kSamplesPerChunk = 1u << 16;
inline constexpr const char* kRngName = "mt19937_64/splitmix64-chunked-65536";

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of the independent stream used for chunk `index`.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);
/// Uniform double in [0,1) from the top 53 bits.
double unit_uniform(std::uint64_t bits);

/// Rejection sampling from the unit cube of free coordinates. The result
/// depends only on (spec, samples, seed), not on the thread count.
VolumeEstimate mc_volume(const PolytopeSpec& spec, std::uint64_t samples, std::uint64_t seed = kDefaultSeed,
                         unsigned threads = 1);

/// Sum of the SO volumes over every sign vector; stream seeds are derived per
/// sign vector from `seed`.
VolumeEstimate mc_volume_so_total(int k, int beta, std::uint64_t samples_per_sign, std::uint64_t seed = kDefaultSeed,
                                  unsigned threads = 1);

struct ComparisonReport {
  std::string status;  // PASS, FAIL or SKIPPED
  double z = 0.0;      // |exact - mean| / stderr
  std::string exact;
  double mean = 0.0;
  double standard_error = 0.0;
  std::string detail;
  bool pass() const { return status == "PASS"; }
};

ComparisonReport leading_coefficient_check(const MomResult& result, const std::optional<VolumeEstimate>& volume,
                                           double sigmas = 3.0);
ComparisonReport compare_to_estimate(const ExactRational& exact, const VolumeEstimate& volume, double sigmas = 3.0);

/// Continuous half pattern of length s with the given top row.
double half_pattern_volume(int s, const std::vector<double>& top);

/// (n)!! with (-1)!! = 0!! = 1.
mpz_class double_factorial(long n);

ExactRational vol_symmetry_point(int s);
/// 1 / prod_{j=1}^s (2j-1)!!
ExactRational symmetry_point_closed_form(int s);

struct SymmetryPointReport {
  int s = 0;
  ExactPolynomial polynomial;
  ExactRational leading;
  ExactRational volume;
  bool pass = false;
};

/// Interpolates count_sp_fixed_top over N = 0..s(s+1)/2, certifies at the
/// next node, and compares the leading coefficient with the volume exactly.
SymmetryPointReport symmetry_point_leading_check(int s, const CountLimits& limits = {}, unsigned threads = 1);

nlohmann::json volume_to_json(const PolytopeSpec& spec, const VolumeEstimate& v);

}  // namespace mom
