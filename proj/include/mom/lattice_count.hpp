#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "mom/constraints.hpp"
#include "mom/signature.hpp"

namespace mom {

struct CountLimits {
  // Cap on the number of DP states held in one layer. Exceeding it raises
  // ResourceLimitError; so does an up-front estimate that already exceeds it.
  std::uint64_t max_states = 100'000'000;
};

struct CountStats {
  std::uint64_t states_explored = 0;  // sum of layer sizes
  std::uint64_t peak_layer_states = 0;
  double wall_seconds = 0.0;
};

struct CountResult {
  mpz_class value;
  Group group = Group::Sp;
  int n = 0;
  int k = 0;
  int beta = 0;
  CountStats stats;
};

enum class CountSide { Pattern, Relabelled };

/// #GT_Sp(N;k;beta): patterns of length 4k beta, top row <N^{2k beta}>.
CountResult count_constrained_sp(int n, int k, int beta, const CountLimits& limits = {});

/// #GT_SO(N;k;beta), both top-row labels counted separately.
CountResult count_constrained_so(int n, int k, int beta, const CountLimits& limits = {});

/// Patterns whose odd-starter signs (sgn(0) = +1) are eps_1..eps_{2k beta - 1}
/// and whose top-row label is eps_{2k beta}.
CountResult count_constrained_so_signed(int n, int k, int beta, const SignVector& eps,
                                        const CountLimits& limits = {});

/// Dispatches to the pattern-side DP or the relabelled-array counter.
CountResult count_constrained(Group group, int n, int k, int beta, const CountLimits& limits = {},
                              CountSide side = CountSide::Pattern);

/// (2s)-symplectic patterns with top row <n^s>, no constraints.
CountResult count_sp_fixed_top(int n, int s, const CountLimits& limits = {});

/// Number of entries of row r pinned to N by a constant top row of length
/// `top_length` sitting on row `rows`.
constexpr std::size_t pinned_prefix(std::size_t r, std::size_t rows, std::size_t top_length) {
  return rows - r >= top_length ? 0 : top_length - (rows - r);
}

}  // namespace mom
