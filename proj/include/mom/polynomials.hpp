#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mom/exact.hpp"
#include "mom/lattice_count.hpp"

namespace mom {

/// k beta (2k beta + 1) - k for Sp; k beta (2k beta - 1) - k for SO, except
/// SO(1,1), which has degree 1.
int expected_degree(Group group, int k, int beta);

struct MomOptions {
  CountLimits limits;
  unsigned threads = 1;
  CountSide side = CountSide::Pattern;
  // Replaces the lattice counter when set; used to exercise certification.
  std::function<mpz_class(int n)> counter;
};

struct MomResult {
  Group group = Group::Sp;
  int k = 0;
  int beta = 0;
  ExactPolynomial polynomial;
  int expected_degree = 0;
  ExactRational leading;
  std::vector<mpz_class> counts;  // N = 0..D+1, the last one certifying
  double wall_seconds = 0.0;
};

/// Counts at N = 0..D interpolated exactly, then certified against a fresh
/// count at N = D+1 and the degree law. Any mismatch is an IntegrityError.
MomResult mom_polynomial(Group group, int k, int beta, const MomOptions& options = {});

struct GoldenEntry {
  Group group = Group::Sp;
  int k = 0;
  int beta = 0;
  ExactPolynomial polynomial;
};

std::vector<GoldenEntry> parse_golden_table(std::string_view json_text);
std::string_view embedded_golden_json();
const std::vector<GoldenEntry>& golden_table();

/// Published polynomial for the ten tabulated (group, k, beta), else nullopt.
std::optional<ExactPolynomial> reference_polynomial(Group group, int k, int beta);

std::uint64_t fnv1a64(std::string_view bytes);
/// FNV-1a-64 of data/golden_table.json as shipped; a table whose checksum
/// differs has been edited.
inline constexpr std::uint64_t kPinnedGoldenChecksum = 0x60611c166ff79a58ull;

nlohmann::json polynomial_to_json(const ExactPolynomial& p);
ExactPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace mom
