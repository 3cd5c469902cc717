#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace mom {

using Entry = std::int64_t;

enum class Group { Sp, SO };

const char* to_string(Group g);
Group parse_group(const std::string& text);

/// A non-increasing integer vector, stored most-significant first
/// (entries()[0] is lambda_1).
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Entry> entries);
  Signature(std::initializer_list<Entry> entries);

  /// <value^length>
  static Signature constant(std::size_t length, Entry value);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Entry> entries() const { return entries_; }

  bool non_negative() const { return entries_.empty() || entries_.back() >= 0; }
  Entry sum() const;
  Entry abs_sum() const;

  /// lambda^- : last entry negated. Requires a non-negative signature.
  Signature with_last_negated() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::vector<Entry> entries_;
};

std::ostream& operator<<(std::ostream& os, const Signature& s);

/// lower < upper in the interlacing order. Lengths must satisfy
/// len(upper) in {len(lower), len(lower)+1}; otherwise InvalidArgument.
bool interlaces(const Signature& lower, const Signature& upper);

/// Raw-vector form used by validators; entries need not be sorted.
bool interlaces(std::span<const Entry> lower, std::span<const Entry> upper);

/// Every non-negative signature of `target_length` that `previous`
/// interlaces into, with entries <= ceiling, in ascending lexicographic order.
std::vector<Signature> iterate_interlacing_rows(const Signature& previous, std::size_t target_length,
                                                Entry ceiling);

/// The rows directly below `upper`: non-negative signatures `lower` of
/// `target_length` with lower < upper, ascending lexicographic order.
std::vector<Signature> rows_below(const Signature& upper, std::size_t target_length);

}  // namespace mom
