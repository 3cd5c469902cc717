#include "mom/patterns.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "mom/errors.hpp"

namespace mom {

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (const auto& v : violations) {
    os << "row " << v.row;
    if (v.column) os << " col " << v.column;
    os << ": " << v.what << '\n';
  }
  return os.str();
}

namespace {

Entry row_sum(const PatternRows& rows, long i) {
  if (i < 1) return 0;
  Entry s = 0;
  for (Entry e : rows[static_cast<std::size_t>(i - 1)]) s += e;
  return s;
}

Entry row_abs_sum(const PatternRows& rows, long i) {
  if (i < 1) return 0;
  Entry s = 0;
  for (Entry e : rows[static_cast<std::size_t>(i - 1)]) s += std::llabs(e);
  return s;
}

// Sign of the odd starter lambda_i^(2i-1); +1 for i < 1.
int starter_sign(const PatternRows& rows, long i) {
  if (i < 1) return 1;
  return sgn(rows[static_cast<std::size_t>(2 * i - 2)].back());
}

bool check_shape(const PatternRows& rows, ValidationReport& report) {
  bool good = true;
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    if (rows[i - 1].size() != half_pattern_row_length(i)) {
      report.violations.push_back({i, 0,
                                   "row length " + std::to_string(rows[i - 1].size()) + ", expected " +
                                       std::to_string(half_pattern_row_length(i))});
      good = false;
    }
  }
  return good;
}

std::optional<std::size_t> first_unsorted(const std::vector<Entry>& row) {
  for (std::size_t j = 1; j < row.size(); ++j) {
    if (row[j - 1] < row[j]) return j + 1;
  }
  return std::nullopt;
}

// First failing column (1-based) of lower < upper, if any.
std::optional<std::size_t> first_interlace_failure(const std::vector<Entry>& lower, const std::vector<Entry>& upper) {
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (upper[j] < lower[j]) return j + 1;
    if (j + 1 < upper.size() && lower[j] < upper[j + 1]) return j + 1;
  }
  return std::nullopt;
}

std::string pair_label(std::size_t lower) {
  return "rows " + std::to_string(lower) + "-" + std::to_string(lower + 1) + " do not interlace";
}

}  // namespace

ValidationReport validate_symplectic(const PatternRows& rows) {
  ValidationReport report;
  if (rows.empty() || rows.size() % 2 != 0) {
    report.violations.push_back({0, 0, "symplectic patterns have even, positive length"});
    return report;
  }
  if (!check_shape(rows, report)) return report;
  for (std::size_t i = 1; i <= rows.size(); ++i) {
    const auto& row = rows[i - 1];
    if (auto c = first_unsorted(row)) {
      report.violations.push_back({i, *c, "entries are not non-increasing"});
      continue;
    }
    bool negative = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) {
        report.violations.push_back({i, j + 1, "negative entry"});
        negative = true;
        break;
      }
    }
    if (negative || i == 1) continue;
    if (auto c = first_interlace_failure(rows[i - 2], row)) {
      report.violations.push_back({i - 1, *c, pair_label(i - 1)});
    }
  }
  return report;
}

ValidationReport validate_orthogonal(const PatternRows& rows) {
  ValidationReport report;
  if (rows.empty() || rows.size() % 2 == 0) {
    report.violations.push_back({0, 0, "orthogonal patterns have odd length"});
    return report;
  }
  if (!check_shape(rows, report)) return report;
  const std::size_t n = (rows.size() + 1) / 2;

  // Absolute-value-adjusted rows: odd starters replaced by |starter|.
  PatternRows adjusted = rows;
  for (std::size_t i = 1; i <= rows.size(); i += 2) adjusted[i - 1].back() = std::llabs(adjusted[i - 1].back());

  for (std::size_t i = 1; i <= rows.size(); ++i) {
    const auto& row = rows[i - 1];
    const bool odd = i % 2 == 1;
    bool bad = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const bool starter = odd && j + 1 == row.size();
      if (!starter && row[j] < 0) {
        report.violations.push_back({i, j + 1, "negative entry outside an odd starter"});
        bad = true;
        break;
      }
    }
    if (bad) continue;
    if (odd && n > 1) {
      const std::size_t m = (i + 1) / 2;  // starter is lambda_m^(2m-1)
      const Entry mag = std::llabs(row.back());
      Entry bound = -1;
      if (m == 1) {
        bound = rows[1][0];
      } else if (m == n) {
        bound = rows[i - 2].back();
      } else {
        bound = std::min(rows[i - 2].back(), rows[i].back());
      }
      if (mag > bound) {
        report.violations.push_back({i, m, "odd starter magnitude " + std::to_string(mag) + " exceeds bound " +
                                               std::to_string(bound)});
        continue;
      }
    }
    if (auto c = first_unsorted(adjusted[i - 1])) {
      report.violations.push_back({i, *c, "entries are not non-increasing"});
      continue;
    }
    if (i == 1) continue;
    if (auto c = first_interlace_failure(adjusted[i - 2], adjusted[i - 1])) {
      report.violations.push_back({i - 1, *c, pair_label(i - 1)});
    }
  }
  return report;
}

namespace {

std::vector<Signature> to_signatures(const PatternRows& rows) {
  std::vector<Signature> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

PatternRows to_raw(const std::vector<Signature>& rows) {
  PatternRows out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.entries().begin(), r.entries().end());
  return out;
}

// Odd-row entries are stored raw, so an orthogonal row with a negative
// starter is still a valid (non-increasing) Signature.
}  // namespace

SymplecticPattern::SymplecticPattern(PatternRows rows) {
  auto report = validate_symplectic(rows);
  if (!report.ok()) throw InvalidArgument("invalid symplectic pattern: " + report.describe());
  rows_ = to_signatures(rows);
}

PatternRows SymplecticPattern::raw_rows() const { return to_raw(rows_); }

OrthogonalPattern::OrthogonalPattern(PatternRows rows) {
  auto report = validate_orthogonal(rows);
  if (!report.ok()) throw InvalidArgument("invalid orthogonal pattern: " + report.describe());
  rows_ = to_signatures(rows);
}

PatternRows OrthogonalPattern::raw_rows() const { return to_raw(rows_); }

WeightExponent sp_weight_exponents_unchecked(const PatternRows& rows) {
  const long n = static_cast<long>(rows.size() / 2);
  WeightExponent w;
  w.exponents.resize(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    w.exponents[static_cast<std::size_t>(i - 1)] =
        row_sum(rows, 2 * i) - 2 * row_sum(rows, 2 * i - 1) + row_sum(rows, 2 * i - 2);
  }
  return w;
}

WeightExponent o_weight_exponents_unchecked(const PatternRows& rows) {
  const long n = static_cast<long>((rows.size() + 1) / 2);
  WeightExponent w;
  w.exponents.resize(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    const Entry bracket = row_abs_sum(rows, 2 * i - 1) - 2 * row_abs_sum(rows, 2 * i - 2) + row_abs_sum(rows, 2 * i - 3);
    w.exponents[static_cast<std::size_t>(i - 1)] = starter_sign(rows, i) * starter_sign(rows, i - 1) * bracket;
  }
  return w;
}

WeightExponent sp_weight_exponents(const SymplecticPattern& p) { return sp_weight_exponents_unchecked(p.raw_rows()); }

WeightExponent o_weight_exponents(const OrthogonalPattern& p) { return o_weight_exponents_unchecked(p.raw_rows()); }

}  // namespace mom
