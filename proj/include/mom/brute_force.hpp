#pragma once

#include <cstdint>

#include "mom/lattice_count.hpp"

namespace mom {

struct BruteForceLimits {
  std::uint64_t max_nodes = 20'000'000;  // partial patterns visited
};

/// Naive depth-first enumeration of every pattern with the constant top
/// row, checking the constraints on the weight exponents at each leaf.
CountResult brute_force_count(Group group, int n, int k, int beta, const BruteForceLimits& limits = {});

}  // namespace mom
