#pragma once

#include <optional>
#include <vector>

#include "mom/constraints.hpp"
#include "mom/lattice_count.hpp"
#include "mom/patterns.hpp"

namespace mom {

/// The free coordinates of a pattern with constant top row, renamed so that
/// rows 1..H copy the lower pattern and rows above H hold only the entries
/// not pinned to N. Sp: rows 1..4k beta - 1, H = 2k beta. SO: rows
/// 1..4k beta - 3, H = 2k beta - 1, entries are absolute values and `signs`
/// carries eps (the last entry being the top-row label).
struct RelabelledArray {
  Group group = Group::Sp;
  Entry n = 0;
  std::size_t top_length = 0;  // 2k beta
  PatternRows rows;
  SignVector signs;  // SO only
  friend bool operator==(const RelabelledArray&, const RelabelledArray&) = default;
};

/// Length of array row r (1-based).
std::size_t relabelled_row_length(Group group, std::size_t top_length, std::size_t r);
std::size_t relabelled_row_count(Group group, std::size_t top_length);

RelabelledArray relabel_sp(const SymplecticPattern& p);
SymplecticPattern unrelabel_sp(const RelabelledArray& a);

/// The top-row label is read from the top starter when N > 0. At N = 0 both
/// labels give the same rows, so it must be supplied (defaults to +1).
RelabelledArray relabel_so(const OrthogonalPattern& p, std::optional<int> top_label = std::nullopt);
OrthogonalPattern unrelabel_so(const RelabelledArray& a);

/// eps_a * eps_b * coefficient multiplies the row sum; index 0 stands for
/// eps_0 = 1 and Sp terms use 0 for both.
struct YTerm {
  std::size_t row;
  Entry coefficient;
  std::size_t eps_a;
  std::size_t eps_b;
};

/// The k homogeneous constraints on relabelled arrays.
std::vector<std::vector<YTerm>> relabelled_constraints(Group group, int k, int beta);

bool satisfies_relabelled_constraints(const RelabelledArray& a, int k, int beta);

/// Direct count of valid relabelled arrays.
CountResult count_relabelled(Group group, int n, int k, int beta, const CountLimits& limits = {});
CountResult count_relabelled_signed(int n, int k, int beta, const SignVector& eps, const CountLimits& limits = {});

}  // namespace mom
