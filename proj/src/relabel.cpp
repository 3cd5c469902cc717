#include "mom/relabel.hpp"

#include <chrono>
#include <map>
#include <string>

#include "mom/errors.hpp"

namespace mom {

namespace {

std::size_t lower_height(Group group, std::size_t top_length) {
  return group == Group::Sp ? top_length : top_length - 1;
}

void require_constant_prefix(const Signature& row, std::size_t count, Entry n, std::size_t r) {
  for (std::size_t j = 0; j < count; ++j)
    if (row[j] != n) throw InternalError("row " + std::to_string(r) + " is not pinned to N as expected");
}

}  // namespace

std::size_t relabelled_row_count(Group group, std::size_t top_length) {
  return group == Group::Sp ? 2 * top_length - 1 : 2 * top_length - 3;
}

std::size_t relabelled_row_length(Group group, std::size_t top_length, std::size_t r) {
  const std::size_t h = lower_height(group, top_length);
  if (r <= h) return (r + 1) / 2;
  const std::size_t mirror = group == Group::Sp ? 2 * top_length - r : 2 * top_length - 2 - r;
  return (mirror + 1) / 2;
}

RelabelledArray relabel_sp(const SymplecticPattern& p) {
  const std::size_t R = p.length();
  const std::size_t M = R / 2;
  const Entry n = p.top()[0];
  if (p.top() != Signature::constant(M, n)) throw InvalidArgument("top row is not of the form <N^M>");
  RelabelledArray a;
  a.group = Group::Sp;
  a.n = n;
  a.top_length = M;
  for (std::size_t r = 1; r < R; ++r) {
    const auto& row = p.row(r);
    const std::size_t f = pinned_prefix(r, R, M);
    require_constant_prefix(row, f, n, r);
    a.rows.emplace_back(row.entries().begin() + static_cast<long>(f), row.entries().end());
  }
  return a;
}

SymplecticPattern unrelabel_sp(const RelabelledArray& a) {
  if (a.group != Group::Sp) throw InvalidArgument("array is not symplectic");
  const std::size_t M = a.top_length;
  const std::size_t R = 2 * M;
  if (a.rows.size() != R - 1) throw InvalidArgument("array has the wrong number of rows");
  PatternRows rows;
  for (std::size_t r = 1; r < R; ++r) {
    std::vector<Entry> row(pinned_prefix(r, R, M), a.n);
    row.insert(row.end(), a.rows[r - 1].begin(), a.rows[r - 1].end());
    rows.push_back(std::move(row));
  }
  rows.emplace_back(M, a.n);
  return SymplecticPattern(std::move(rows));
}

RelabelledArray relabel_so(const OrthogonalPattern& p, std::optional<int> top_label) {
  const std::size_t R = p.length();
  const std::size_t M = (R + 1) / 2;
  if (M < 2) throw InvalidArgument("orthogonal relabelling needs a top row of length >= 2");
  const Entry n = std::abs(p.top()[0]);
  std::vector<Entry> expect(M, n);
  expect.back() = std::abs(p.top()[M - 1]);
  const auto top = p.top().entries();
  if (std::vector<Entry>(top.begin(), top.end() - 1) != std::vector<Entry>(M - 1, n) || expect.back() != n)
    throw InvalidArgument("top row is not <N^M> or <N^M>^-");
  int label = 1;
  if (n > 0) {
    label = sgn(top.back());
    if (top_label && *top_label != label) throw InvalidArgument("top-row label disagrees with the top starter");
  } else if (top_label) {
    if (*top_label != 1 && *top_label != -1) throw InvalidArgument("label must be +1 or -1");
    label = *top_label;
  }
  RelabelledArray a;
  a.group = Group::SO;
  a.n = n;
  a.top_length = M;
  for (std::size_t r = 1; r + 2 <= R; ++r) {
    const auto& row = p.row(r);
    const std::size_t f = pinned_prefix(r, R, M);
    require_constant_prefix(row, f, n, r);
    std::vector<Entry> tail;
    for (std::size_t j = f; j < row.size(); ++j) tail.push_back(std::abs(row[j]));
    a.rows.push_back(std::move(tail));
  }
  for (std::size_t j = 1; j < M; ++j) a.signs.push_back(sgn(p.row(2 * j - 1)[j - 1]));
  a.signs.push_back(label);
  return a;
}

OrthogonalPattern unrelabel_so(const RelabelledArray& a) {
  if (a.group != Group::SO) throw InvalidArgument("array is not orthogonal");
  const std::size_t M = a.top_length;
  const std::size_t R = 2 * M - 1;
  if (a.rows.size() != R - 2) throw InvalidArgument("array has the wrong number of rows");
  check_sign_vector(a.signs, M);
  PatternRows rows;
  for (std::size_t r = 1; r + 2 <= R; ++r) {
    std::vector<Entry> row(pinned_prefix(r, R, M), a.n);
    row.insert(row.end(), a.rows[r - 1].begin(), a.rows[r - 1].end());
    if (r % 2 == 1) {
      const int e = a.signs[(r + 1) / 2 - 1];
      if (e == -1 && row.back() == 0) throw InvalidArgument("a zero odd starter cannot carry sign -1");
      row.back() *= e;
    }
    rows.push_back(std::move(row));
  }
  rows.emplace_back(M - 1, a.n);
  std::vector<Entry> top(M, a.n);
  top.back() *= a.signs.back();
  rows.push_back(std::move(top));
  return OrthogonalPattern(std::move(rows));
}

std::vector<std::vector<YTerm>> relabelled_constraints(Group group, int k, int beta) {
  if (k < 1 || beta < 1) throw InvalidArgument("k and beta must be >= 1");
  const auto M = static_cast<std::size_t>(2 * k * beta);
  const auto P = static_cast<long>(2 * M);
  const auto last_row = static_cast<long>(relabelled_row_count(group, M));
  const auto b = static_cast<std::size_t>(beta);

  auto lower = [&](std::size_t j, Entry side, std::vector<YTerm>& out) {
    const auto J = static_cast<long>(j);
    const long top = group == Group::Sp ? 2 * J : 2 * J - 1;
    const std::size_t ea = group == Group::Sp ? 0 : j;
    const std::size_t eb = group == Group::Sp ? 0 : j - 1;
    const long rows[3] = {top, top - 1, top - 2};
    const Entry mult[3] = {1, -2, 1};
    for (int t = 0; t < 3; ++t)
      if (rows[t] >= 1 && rows[t] <= last_row) out.push_back({static_cast<std::size_t>(rows[t]), side * mult[t], ea, eb});
  };
  auto upper = [&](std::size_t j, Entry side, std::vector<YTerm>& out) {
    const auto J = static_cast<long>(j);
    const long bottom = group == Group::Sp ? P - 2 * J : P - 2 * J - 1;
    const std::size_t ea = group == Group::Sp ? 0 : M - j + 1;
    const std::size_t eb = group == Group::Sp ? 0 : M - j;
    const long rows[3] = {bottom, bottom + 1, bottom + 2};
    const Entry mult[3] = {1, -2, 1};
    for (int t = 0; t < 3; ++t)
      if (rows[t] >= 1 && rows[t] <= last_row) out.push_back({static_cast<std::size_t>(rows[t]), side * mult[t], ea, eb});
  };

  std::vector<std::vector<YTerm>> out;
  const auto K = static_cast<std::size_t>(k);
  for (std::size_t i = 1; i <= K / 2; ++i) {
    std::vector<YTerm> lo, up;
    for (std::size_t j = (2 * i - 2) * b + 1; j <= (2 * i - 1) * b; ++j) {
      lower(j, 1, lo);
      upper(j, 1, up);
    }
    for (std::size_t j = (2 * i - 1) * b + 1; j <= 2 * i * b; ++j) {
      lower(j, -1, lo);
      upper(j, -1, up);
    }
    out.push_back(std::move(lo));
    out.push_back(std::move(up));
  }
  if (K % 2 == 1) {
    std::vector<YTerm> mid;
    for (std::size_t j = (K - 1) * b + 1; j <= K * b; ++j) {
      lower(j, 1, mid);
      upper(j, -1, mid);
    }
    out.push_back(std::move(mid));
  }
  return out;
}

namespace {

int eps_at(const SignVector& eps, std::size_t idx) { return idx == 0 ? 1 : eps[idx - 1]; }

// Numeric per-row coefficients for a fixed sign vector.
std::vector<std::vector<Entry>> row_coefficients(const std::vector<std::vector<YTerm>>& cons, std::size_t rows,
                                                 const SignVector& eps) {
  std::vector<std::vector<Entry>> coef(rows + 1, std::vector<Entry>(cons.size(), 0));
  for (std::size_t c = 0; c < cons.size(); ++c)
    for (const auto& t : cons[c]) coef[t.row][c] += t.coefficient * eps_at(eps, t.eps_a) * eps_at(eps, t.eps_b);
  return coef;
}

Entry sum_of(const std::vector<Entry>& v) {
  Entry s = 0;
  for (Entry e : v) s += e;
  return s;
}

mpz_class count_arrays(Group group, Entry n, std::size_t M, const std::vector<std::vector<Entry>>& coef,
                       const SignVector& eps, const CountLimits& limits, CountStats& stats) {
  const std::size_t T = relabelled_row_count(group, M);
  const std::size_t H = lower_height(group, M);
  const std::size_t nc = coef.empty() ? 0 : coef[0].size();
  // key: row entries followed by all accumulators
  std::map<std::vector<Entry>, mpz_class> cur;
  cur.emplace(std::vector<Entry>(nc, 0), mpz_class(1));
  std::size_t prev_len = 0;
  for (std::size_t r = 1; r <= T; ++r) {
    const std::size_t len = relabelled_row_length(group, M, r);
    std::map<std::vector<Entry>, mpz_class> next;
    for (const auto& [key, count] : cur) {
      Signature prev(std::vector<Entry>(key.begin(), key.begin() + static_cast<long>(prev_len)));
      auto candidates = r <= H ? iterate_interlacing_rows(prev, len, n) : rows_below(prev, len);
      for (const auto& cand : candidates) {
        if (group == Group::SO && r % 2 == 1 && eps[(r + 1) / 2 - 1] == -1 && cand[cand.size() - 1] == 0) continue;
        std::vector<Entry> nk(cand.entries().begin(), cand.entries().end());
        const Entry s = cand.sum();
        for (std::size_t c = 0; c < nc; ++c) nk.push_back(key[prev_len + c] + coef[r][c] * s);
        next[std::move(nk)] += count;
      }
    }
    stats.states_explored += next.size();
    stats.peak_layer_states = std::max<std::uint64_t>(stats.peak_layer_states, next.size());
    if (next.size() > limits.max_states)
      throw ResourceLimitError("relabelled counter exceeded the state cap at row " + std::to_string(r));
    cur = std::move(next);
    prev_len = len;
  }
  mpz_class total = 0;
  for (const auto& [key, count] : cur) {
    bool ok = true;
    for (std::size_t c = 0; c < nc; ++c) ok = ok && key[prev_len + c] == 0;
    if (ok) total += count;
  }
  return total;
}

}  // namespace

bool satisfies_relabelled_constraints(const RelabelledArray& a, int k, int beta) {
  const auto cons = relabelled_constraints(a.group, k, beta);
  const SignVector eps = a.group == Group::SO ? a.signs : SignVector{};
  for (const auto& c : cons) {
    Entry total = 0;
    for (const auto& t : c)
      total += t.coefficient * eps_at(eps, t.eps_a) * eps_at(eps, t.eps_b) * sum_of(a.rows[t.row - 1]);
    if (total != 0) return false;
  }
  return true;
}

CountResult count_relabelled_signed(int n, int k, int beta, const SignVector& eps, const CountLimits& limits) {
  if (n < 0) throw InvalidArgument("N must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  const auto M = static_cast<std::size_t>(2 * k * beta);
  check_sign_vector(eps, M);
  const auto cons = relabelled_constraints(Group::SO, k, beta);
  CountResult res;
  res.group = Group::SO;
  res.n = n;
  res.k = k;
  res.beta = beta;
  res.value = count_arrays(Group::SO, n, M, row_coefficients(cons, relabelled_row_count(Group::SO, M), eps), eps,
                           limits, res.stats);
  res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

CountResult count_relabelled(Group group, int n, int k, int beta, const CountLimits& limits) {
  if (n < 0) throw InvalidArgument("N must be >= 0");
  const auto start = std::chrono::steady_clock::now();
  const auto M = static_cast<std::size_t>(2 * k * beta);
  const auto cons = relabelled_constraints(group, k, beta);
  CountResult res;
  res.group = group;
  res.n = n;
  res.k = k;
  res.beta = beta;
  if (group == Group::Sp) {
    res.value = count_arrays(group, n, M, row_coefficients(cons, relabelled_row_count(group, M), {}), {}, limits,
                             res.stats);
  } else {
    for (const auto& eps : all_sign_vectors(M)) {
      res.value += count_arrays(group, n, M, row_coefficients(cons, relabelled_row_count(group, M), eps), eps, limits,
                                res.stats);
    }
  }
  res.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace mom
