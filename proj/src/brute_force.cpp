#include "mom/brute_force.hpp"

#include <chrono>
#include <functional>
#include <string>

#include "mom/errors.hpp"
#include "mom/patterns.hpp"

namespace mom {

namespace {

// Constraint i: exponents over brackets (2i-2)b+1..(2i-1)b sum to the same
// as those over (2i-1)b+1..2ib.
bool exponents_balanced(const WeightExponent& w, int k, int beta) {
  for (int i = 1; i <= k; ++i) {
    Entry left = 0, right = 0;
    for (int j = (2 * i - 2) * beta + 1; j <= (2 * i - 1) * beta; ++j) left += w.exponents[j - 1];
    for (int j = (2 * i - 1) * beta + 1; j <= 2 * i * beta; ++j) right += w.exponents[j - 1];
    if (left != right) return false;
  }
  return true;
}

}  // namespace

CountResult brute_force_count(Group group, int n, int k, int beta, const BruteForceLimits& limits) {
  if (n < 0) throw InvalidArgument("N must be >= 0");
  if (k < 1 || beta < 1) throw InvalidArgument("k and beta must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const auto M = static_cast<std::size_t>(2 * k * beta);
  const std::size_t R = group == Group::Sp ? 2 * M : 2 * M - 1;

  CountResult res;
  res.group = group;
  res.n = n;
  res.k = k;
  res.beta = beta;
  std::uint64_t nodes = 0;
  std::uint64_t hits = 0;

  PatternRows rows(R);
  rows[R - 1].assign(M, n);

  auto leaf = [&]() {
    if (group == Group::Sp) {
      if (exponents_balanced(sp_weight_exponents_unchecked(rows), k, beta)) ++hits;
      return;
    }
    // Signs: top label both ways, nonzero lower starters both ways.
    std::vector<std::size_t> free;
    for (std::size_t r = 1; r < R; r += 2)
      if (rows[r - 1].back() != 0) free.push_back(r);
    PatternRows signed_rows = rows;
    for (int label : {1, -1}) {
      signed_rows[R - 1].back() = label * n;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        for (std::size_t b = 0; b < free.size(); ++b) {
          const Entry a = rows[free[b] - 1].back();
          signed_rows[free[b] - 1].back() = (mask >> b & 1) ? -a : a;
        }
        if (++nodes > limits.max_nodes) throw ResourceLimitError("brute force exceeded its node cap");
        if (exponents_balanced(o_weight_exponents_unchecked(signed_rows), k, beta)) ++hits;
      }
    }
  };

  std::function<void(std::size_t)> descend = [&](std::size_t r) {
    if (++nodes > limits.max_nodes)
      throw ResourceLimitError("brute force exceeded its node cap of " + std::to_string(limits.max_nodes));
    if (r == 0) {
      leaf();
      return;
    }
    for (const auto& s : rows_below(Signature(rows[r]), half_pattern_row_length(r))) {
      rows[r - 1].assign(s.entries().begin(), s.entries().end());
      descend(r - 1);
    }
  };
  descend(R - 1);

  res.value = hits;
  res.stats.states_explored = nodes;
  res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace mom
