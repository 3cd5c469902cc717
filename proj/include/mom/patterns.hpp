#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mom/signature.hpp"

namespace mom {

/// Rows of a candidate pattern, bottom row first. Rows are raw vectors so
/// that malformed input can be reported instead of rejected on the spot.
using PatternRows = std::vector<std::vector<Entry>>;

struct Violation {
  std::size_t row;     // 1-based row index
  std::size_t column;  // 1-based entry index, 0 when the whole row is at fault
  std::string what;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Required length of row i (1-based) in a half pattern: floor((i+1)/2).
constexpr std::size_t half_pattern_row_length(std::size_t i) { return (i + 1) / 2; }

ValidationReport validate_symplectic(const PatternRows& rows);
ValidationReport validate_orthogonal(const PatternRows& rows);

struct WeightExponent {
  std::vector<Entry> exponents;  // exponents[i-1] multiplies x_i
  friend bool operator==(const WeightExponent&, const WeightExponent&) = default;
};

/// A (2n)-symplectic Gelfand-Tsetlin pattern. Construction validates.
class SymplecticPattern {
 public:
  explicit SymplecticPattern(PatternRows rows);

  std::size_t length() const { return rows_.size(); }
  const Signature& row(std::size_t i) const { return rows_.at(i - 1); }  // 1-based
  const Signature& top() const { return rows_.back(); }
  const std::vector<Signature>& rows() const { return rows_; }
  PatternRows raw_rows() const;

  friend bool operator==(const SymplecticPattern&, const SymplecticPattern&) = default;

 private:
  std::vector<Signature> rows_;
};

/// A (2n-1)-orthogonal Gelfand-Tsetlin pattern with integer entries.
/// Odd starters lambda_i^(2i-1) (the last entry of each odd row) may be negative.
class OrthogonalPattern {
 public:
  explicit OrthogonalPattern(PatternRows rows);

  std::size_t length() const { return rows_.size(); }
  const Signature& row(std::size_t i) const { return rows_.at(i - 1); }
  const Signature& top() const { return rows_.back(); }
  const std::vector<Signature>& rows() const { return rows_; }
  PatternRows raw_rows() const;

  friend bool operator==(const OrthogonalPattern&, const OrthogonalPattern&) = default;

 private:
  std::vector<Signature> rows_;
};

/// sgn with sgn(0) = +1.
constexpr int sgn(Entry x) { return x >= 0 ? 1 : -1; }

WeightExponent sp_weight_exponents(const SymplecticPattern& p);
WeightExponent o_weight_exponents(const OrthogonalPattern& p);

// Unchecked forms over raw rows; callers guarantee validity. Used on hot
// enumeration paths where the typed wrappers would re-validate every leaf.
WeightExponent sp_weight_exponents_unchecked(const PatternRows& rows);
WeightExponent o_weight_exponents_unchecked(const PatternRows& rows);

}  // namespace mom
