#pragma once

#include <functional>

#include "mom/patterns.hpp"

namespace mom::test {

// Every pattern of `length` rows with the given top row, bottom row first.
// Orthogonal patterns get both signs on each nonzero odd starter below the top.
inline void for_each_pattern(Group group, const Signature& top, std::size_t length,
                             const std::function<void(const PatternRows&)>& visit) {
  PatternRows rows(length);
  std::function<void(std::size_t)> signs = [&](std::size_t i) {
    if (i + 1 >= length) {
      visit(rows);
      return;
    }
    signs(i + 1);
    if (group == Group::SO && i % 2 == 0 && rows[i].back() != 0) {
      rows[i].back() = -rows[i].back();
      signs(i + 1);
      rows[i].back() = -rows[i].back();
    }
  };
  std::function<void(std::size_t, const Signature&)> down = [&](std::size_t r, const Signature& upper) {
    if (r == 0) {
      signs(0);
      return;
    }
    for (const auto& s : rows_below(upper, half_pattern_row_length(r))) {
      rows[r - 1].assign(s.entries().begin(), s.entries().end());
      down(r - 1, s);
    }
  };
  rows[length - 1].assign(top.entries().begin(), top.entries().end());
  std::vector<Entry> magnitudes(top.entries().begin(), top.entries().end());
  if (!magnitudes.empty() && magnitudes.back() < 0) magnitudes.back() = -magnitudes.back();
  down(length - 1, Signature(magnitudes));
}

}  // namespace mom::test
