#include "mom/signature.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "mom/errors.hpp"

namespace mom {

const char* to_string(Group g) { return g == Group::Sp ? "sp" : "so"; }

Group parse_group(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "sp") return Group::Sp;
  if (t == "so") return Group::SO;
  throw InvalidArgument("unknown group '" + text + "' (expected sp or so)");
}

Signature::Signature(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1] < entries_[i]) {
      throw InvalidArgument("signature entries must be non-increasing");
    }
  }
}

Signature::Signature(std::initializer_list<Entry> entries) : Signature(std::vector<Entry>(entries)) {}

Signature Signature::constant(std::size_t length, Entry value) {
  return Signature(std::vector<Entry>(length, value));
}

Entry Signature::sum() const { return std::accumulate(entries_.begin(), entries_.end(), Entry{0}); }

Entry Signature::abs_sum() const {
  Entry s = 0;
  for (Entry e : entries_) s += e < 0 ? -e : e;
  return s;
}

Signature Signature::with_last_negated() const {
  if (!non_negative()) throw InvalidArgument("lambda^- is defined for non-negative signatures");
  auto e = entries_;
  if (!e.empty()) e.back() = -e.back();
  return Signature(std::move(e));
}

std::ostream& operator<<(std::ostream& os, const Signature& s) {
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << ')';
}

bool interlaces(std::span<const Entry> lower, std::span<const Entry> upper) {
  const std::size_t m = lower.size();
  if (upper.size() != m && upper.size() != m + 1) {
    throw InvalidArgument("interlacing needs len(upper) in {len(lower), len(lower)+1}");
  }
  // nu_1 >= lambda_1 >= nu_2 >= ... ; the trailing nu_{M+1} bound only
  // exists when the upper row is longer.
  for (std::size_t i = 0; i < m; ++i) {
    if (upper[i] < lower[i]) return false;
    if (i + 1 < upper.size() && lower[i] < upper[i + 1]) return false;
  }
  return true;
}

bool interlaces(const Signature& lower, const Signature& upper) {
  return interlaces(lower.entries(), upper.entries());
}

namespace {

// Cartesian product of [lo_j, hi_j], ascending lexicographic order.
std::vector<Signature> product_rows(const std::vector<Entry>& lo, const std::vector<Entry>& hi) {
  std::vector<Signature> out;
  const std::size_t n = lo.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (lo[j] > hi[j]) return out;
  }
  std::vector<Entry> cur = lo;
  while (true) {
    out.emplace_back(cur);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (cur[j] < hi[j]) {
        ++cur[j];
        break;
      }
      cur[j] = lo[j];
      if (j == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace

std::vector<Signature> iterate_interlacing_rows(const Signature& previous, std::size_t target_length,
                                                Entry ceiling) {
  const std::size_t m = previous.size();
  if (target_length != m && target_length != m + 1) {
    throw InvalidArgument("target length must be len(previous) or len(previous)+1");
  }
  std::vector<Entry> lo(target_length), hi(target_length);
  for (std::size_t j = 0; j < target_length; ++j) {
    lo[j] = std::max<Entry>(j < m ? previous[j] : 0, 0);
    hi[j] = j == 0 ? ceiling : std::min(ceiling, previous[j - 1]);
  }
  return product_rows(lo, hi);
}

std::vector<Signature> rows_below(const Signature& upper, std::size_t target_length) {
  const std::size_t t = upper.size();
  if (target_length != t && target_length + 1 != t) {
    throw InvalidArgument("target length must be len(upper) or len(upper)-1");
  }
  std::vector<Entry> lo(target_length), hi(target_length);
  for (std::size_t j = 0; j < target_length; ++j) {
    lo[j] = std::max<Entry>(j + 1 < t ? upper[j + 1] : 0, 0);
    hi[j] = upper[j];
  }
  return product_rows(lo, hi);
}

}  // namespace mom
