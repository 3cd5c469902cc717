#include "mom/constraints.hpp"

#include <string>

#include "mom/errors.hpp"

namespace mom {

void check_sign_vector(const SignVector& eps, std::size_t expected_length) {
  if (eps.size() != expected_length)
    throw InvalidArgument("sign vector has length " + std::to_string(eps.size()) + ", expected " +
                          std::to_string(expected_length));
  for (int e : eps)
    if (e != 1 && e != -1) throw InvalidArgument("sign vector entries must be +1 or -1");
}

std::vector<SignVector> all_sign_vectors(std::size_t length) {
  std::vector<SignVector> out;
  out.reserve(std::size_t{1} << length);
  for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
    SignVector eps(length);
    for (std::size_t j = 0; j < length; ++j) eps[j] = (mask >> j & 1) ? -1 : 1;
    out.push_back(std::move(eps));
  }
  return out;
}

std::vector<RowTerm> bracket_rows(Group group, std::size_t j) {
  const long top = group == Group::Sp ? static_cast<long>(2 * j) : static_cast<long>(2 * j) - 1;
  std::vector<RowTerm> out;
  const long rows[3] = {top, top - 1, top - 2};
  const Entry mult[3] = {1, -2, 1};
  for (int t = 0; t < 3; ++t)
    if (rows[t] >= 1) out.push_back({static_cast<std::size_t>(rows[t]), mult[t]});
  return out;
}

ConstraintSystem build_constraints(Group group, int k, int beta) {
  if (k < 1 || beta < 1) throw InvalidArgument("k and beta must be >= 1");
  ConstraintSystem sys;
  sys.group = group;
  sys.k = k;
  sys.beta = beta;
  sys.top_length = static_cast<std::size_t>(2 * k * beta);
  sys.pattern_length = group == Group::Sp ? 2 * sys.top_length : 2 * sys.top_length - 1;
  const auto b = static_cast<std::size_t>(beta);
  for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) {
    Constraint c;
    for (std::size_t j = (2 * i - 2) * b + 1; j <= (2 * i - 1) * b; ++j) c.brackets[j] = 1;
    for (std::size_t j = (2 * i - 1) * b + 1; j <= 2 * i * b; ++j) c.brackets[j] = -1;
    for (const auto& [j, side] : c.brackets)
      for (const auto& t : bracket_rows(group, j)) c.row_coefficients[t.row] += side * t.coefficient;
    std::erase_if(c.row_coefficients, [](const auto& kv) { return kv.second == 0; });
    sys.constraints.push_back(std::move(c));
  }
  return sys;
}

std::vector<std::map<std::size_t, Entry>> signed_row_coefficients(const ConstraintSystem& system,
                                                                  const SignVector& eps) {
  if (system.group != Group::SO) throw InvalidArgument("signed coefficients apply to SO only");
  check_sign_vector(eps, system.top_length);
  std::vector<std::map<std::size_t, Entry>> out;
  for (const auto& c : system.constraints) {
    std::map<std::size_t, Entry> rows;
    for (const auto& [j, side] : c.brackets) {
      const int factor = eps[j - 1] * (j >= 2 ? eps[j - 2] : 1);
      for (const auto& t : bracket_rows(Group::SO, j)) rows[t.row] += side * factor * t.coefficient;
    }
    std::erase_if(rows, [](const auto& kv) { return kv.second == 0; });
    out.push_back(std::move(rows));
  }
  return out;
}

}  // namespace mom
