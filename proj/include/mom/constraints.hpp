#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mom/signature.hpp"

namespace mom {

/// Odd-starter signs eps_1..eps_{2k beta}; eps_{2k beta} is the top-row label.
using SignVector = std::vector<int>;

void check_sign_vector(const SignVector& eps, std::size_t expected_length);

/// All 2^len sign vectors, eps_1 varying fastest, +1 before -1.
std::vector<SignVector> all_sign_vectors(std::size_t length);

struct RowTerm {
  std::size_t row;
  Entry coefficient;
  friend bool operator==(const RowTerm&, const RowTerm&) = default;
};

/// Rows touched by bracket j with their multiplicities.
/// Sp: 2j (+1), 2j-1 (-2), 2j-2 (+1).  SO: 2j-1 (+1), 2j-2 (-2), 2j-3 (+1).
/// Rows below 1 are dropped.
std::vector<RowTerm> bracket_rows(Group group, std::size_t j);

struct Constraint {
  // bracket j -> +1 on the left-hand side, -1 on the right.
  std::map<std::size_t, int> brackets;
  // Per-row coefficient after expanding the brackets and moving everything
  // left. For SO this is the coefficient when every sign product is +1.
  std::map<std::size_t, Entry> row_coefficients;
};

struct ConstraintSystem {
  Group group = Group::Sp;
  int k = 0;
  int beta = 0;
  std::size_t pattern_length = 0;  // 4k beta (Sp), 4k beta - 1 (SO)
  std::size_t top_length = 0;      // 2k beta
  std::vector<Constraint> constraints;
};

ConstraintSystem build_constraints(Group group, int k, int beta);

/// SO coefficients with the sign products eps_j eps_{j-1} (eps_0 = 1)
/// folded in, one row map per constraint, zero entries removed.
std::vector<std::map<std::size_t, Entry>> signed_row_coefficients(const ConstraintSystem& system,
                                                                  const SignVector& eps);

}  // namespace mom
