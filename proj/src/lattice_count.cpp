#include "mom/lattice_count.hpp"

#include <chrono>
#include <cmath>
#include <string>
#include <unordered_map>

#include "mom/errors.hpp"
#include "mom/relabel.hpp"
#include "mom/state_hash.hpp"

namespace mom {

namespace {

// How a term's sign factor is obtained in the SO recurrence. Plain terms
// (Sp) have none. At odd row 2m-1 the starter sign a is known: Own terms
// belong to bracket m (factor a * s_{m-1}), Next terms to bracket m+1
// (factor g' * a with g' the guessed sign of the next starter). Even rows
// carry the bracket m+1 factor stored in the state.
enum class Kind : std::uint8_t { Plain, Own, Next, Carried };

struct Term {
  std::size_t constraint;
  Entry coef;
  Kind kind;
};

struct Layout {
  Group group = Group::Sp;
  std::size_t rows = 0;
  std::size_t top_length = 0;
  Entry n = 0;
  std::size_t num_constraints = 0;
  std::vector<std::vector<Term>> terms;  // terms[r], r = 1..rows
  std::vector<std::size_t> first, last;  // per constraint
  const SignVector* eps = nullptr;       // per-sign-vector mode when set
};

std::size_t row_len(std::size_t r) { return (r + 1) / 2; }

Layout sp_layout(const ConstraintSystem& sys, Entry n) {
  Layout lay;
  lay.group = Group::Sp;
  lay.rows = sys.pattern_length;
  lay.top_length = sys.top_length;
  lay.n = n;
  lay.num_constraints = sys.constraints.size();
  lay.terms.resize(lay.rows + 1);
  for (std::size_t i = 0; i < sys.constraints.size(); ++i)
    for (const auto& [row, coef] : sys.constraints[i].row_coefficients) lay.terms[row].push_back({i, coef, Kind::Plain});
  return lay;
}

Layout so_layout(const ConstraintSystem& sys, Entry n) {
  Layout lay;
  lay.group = Group::SO;
  lay.rows = sys.pattern_length;
  lay.top_length = sys.top_length;
  lay.n = n;
  lay.num_constraints = sys.constraints.size();
  lay.terms.resize(lay.rows + 1);
  for (std::size_t i = 0; i < sys.constraints.size(); ++i) {
    for (const auto& [j, side] : sys.constraints[i].brackets) {
      for (const auto& t : bracket_rows(Group::SO, j)) {
        Kind kind = t.row % 2 == 0 ? Kind::Carried : (t.row == 2 * j - 1 ? Kind::Own : Kind::Next);
        lay.terms[t.row].push_back({i, side * t.coefficient, kind});
      }
    }
  }
  return lay;
}

void compute_lifetimes(Layout& lay) {
  lay.first.assign(lay.num_constraints, lay.rows + 1);
  lay.last.assign(lay.num_constraints, 0);
  for (std::size_t r = 1; r <= lay.rows; ++r) {
    for (const auto& t : lay.terms[r]) {
      lay.first[t.constraint] = std::min(lay.first[t.constraint], r);
      lay.last[t.constraint] = std::max(lay.last[t.constraint], r);
    }
  }
}

void check_estimate(const Layout& lay, const CountLimits& limits) {
  const double log_cap = std::log(static_cast<double>(limits.max_states));
  const double n = static_cast<double>(lay.n);
  for (std::size_t r = 1; r <= lay.rows; ++r) {
    const double free = static_cast<double>(row_len(r) - pinned_prefix(r, lay.rows, lay.top_length));
    const double log_rows = std::lgamma(n + free + 1) - std::lgamma(free + 1) - std::lgamma(n + 1);
    if (log_rows > log_cap)
      throw ResourceLimitError("estimated " + std::to_string(std::exp(log_rows)) + " distinct rows at row " +
                               std::to_string(r) + " exceeds the state cap " + std::to_string(limits.max_states));
  }
}

using StateMap = std::unordered_map<StateKey, mpz_class, StateKeyHash>;

CountResult run(const Layout& lay, const CountLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  check_estimate(lay, limits);
  const std::size_t R = lay.rows;
  const std::size_t nc = lay.num_constraints;
  const Entry N = lay.n;
  const bool so = lay.group == Group::SO;

  // open[r]: constraints carried across the boundary between rows r and r+1.
  std::vector<std::vector<std::size_t>> open(R + 1);
  for (std::size_t r = 0; r <= R; ++r)
    for (std::size_t i = 0; i < nc; ++i)
      if (lay.first[i] <= r && r < lay.last[i]) open[r].push_back(i);

  // Bounds on what rows above r can still add to each constraint.
  std::vector<std::vector<Entry>> rem_lo(R + 1, std::vector<Entry>(nc, 0)), rem_hi = rem_lo;
  for (std::size_t r = R; r-- > 0;) {
    rem_lo[r] = rem_lo[r + 1];
    rem_hi[r] = rem_hi[r + 1];
    const std::size_t row = r + 1;
    const Entry lo_sum = static_cast<Entry>(pinned_prefix(row, R, lay.top_length)) * N;
    const Entry hi_sum = static_cast<Entry>(row_len(row)) * N;
    for (const auto& t : lay.terms[row]) {
      if (t.kind == Kind::Plain) {
        rem_lo[r][t.constraint] += std::min(t.coef * lo_sum, t.coef * hi_sum);
        rem_hi[r][t.constraint] += std::max(t.coef * lo_sum, t.coef * hi_sum);
      } else {
        const Entry mag = std::abs(t.coef) * hi_sum;
        rem_lo[r][t.constraint] -= mag;
        rem_hi[r][t.constraint] += mag;
      }
    }
  }

  CountResult result;
  result.n = static_cast<int>(N);

  StateMap cur;
  cur.emplace(StateKey{0, 0}, mpz_class(1));  // [g, p], no tail, no accumulators
  result.stats.states_explored = 1;
  result.stats.peak_layer_states = 1;

  std::vector<Entry> acc(nc), lower, lo, hi, u;
  for (std::size_t r = 1; r <= R; ++r) {
    StateMap next;
    const std::size_t f_prev = r == 1 ? 0 : pinned_prefix(r - 1, R, lay.top_length);
    const std::size_t len_prev = r == 1 ? 0 : row_len(r - 1);
    const std::size_t f = pinned_prefix(r, R, lay.top_length);
    const std::size_t len = row_len(r);
    const std::size_t tail_prev = len_prev - f_prev;
    const auto& before = open[r - 1];
    const auto& after = open[r];
    const bool odd = r % 2 == 1;
    const std::size_t m = (r + 1) / 2;

    for (const auto& [key, count] : cur) {
      lower.assign(f_prev, N);
      lower.insert(lower.end(), key.begin(), key.begin() + static_cast<long>(tail_prev));
      const Entry g = key[tail_prev];
      const Entry p = key[tail_prev + 1];
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t a = 0; a < before.size(); ++a) acc[before[a]] = key[tail_prev + 2 + a];

      lo.assign(len, 0);
      hi.assign(len, 0);
      bool empty = false;
      for (std::size_t j = 0; j < len; ++j) {
        lo[j] = j < lower.size() ? lower[j] : 0;
        hi[j] = j == 0 ? N : lower[j - 1];
        if (j < f) {
          lo[j] = std::max(lo[j], N);
          hi[j] = std::min(hi[j], N);
        }
        if (lo[j] > hi[j]) empty = true;
      }
      if (empty) continue;

      u = lo;
      while (true) {
        Entry A = 0;
        for (Entry e : u) A += e;

        auto emit = [&](Entry g_new, Entry p_new, auto factor_of) {
          std::vector<Entry> a2 = acc;
          for (const auto& t : lay.terms[r]) a2[t.constraint] += t.coef * factor_of(t.kind) * A;
          for (std::size_t i = 0; i < nc; ++i)
            if (lay.last[i] == r && a2[i] != 0) return;
          StateKey nk;
          nk.reserve(len - f + 2 + after.size());
          nk.insert(nk.end(), u.begin() + static_cast<long>(f), u.end());
          nk.push_back(g_new);
          nk.push_back(p_new);
          for (std::size_t i : after) {
            if (a2[i] + rem_lo[r][i] > 0 || a2[i] + rem_hi[r][i] < 0) return;
            nk.push_back(a2[i]);
          }
          next[std::move(nk)] += count;
        };

        if (!so) {
          emit(0, 0, [](Kind) { return Entry{1}; });
        } else if (!odd) {
          emit(g, p, [&](Kind) { return p; });
        } else {
          const Entry starter = u.back();
          Entry signs[2];
          int ns = 0;
          if (r == R) {
            if (lay.eps) {
              signs[ns++] = (*lay.eps)[m - 1];
            } else {
              signs[ns++] = 1;
              signs[ns++] = -1;
            }
          } else if (lay.eps) {
            const Entry s = (*lay.eps)[m - 1];
            if (!(s == -1 && starter == 0)) signs[ns++] = s;
          } else {
            signs[ns++] = 1;
            if (starter != 0) signs[ns++] = -1;
          }
          for (int si = 0; si < ns; ++si) {
            const Entry a = signs[si];
            if (g != 0 && a != g) continue;
            const Entry own = g != 0 ? p : a;
            if (m + 1 > lay.top_length) {
              emit(0, 0, [&](Kind k) { return k == Kind::Own ? own : Entry{0}; });
              continue;
            }
            Entry guesses[2];
            int ng = 0;
            if (lay.eps) {
              guesses[ng++] = (*lay.eps)[m];
            } else {
              guesses[ng++] = 1;
              guesses[ng++] = -1;
            }
            for (int gi = 0; gi < ng; ++gi) {
              const Entry nxt = guesses[gi] * a;
              emit(guesses[gi], nxt, [&](Kind k) { return k == Kind::Own ? own : nxt; });
            }
          }
        }

        // Odometer over the product of intervals, last position fastest.
        bool advanced = false;
        for (std::size_t pos = len; pos-- > 0;) {
          if (u[pos] < hi[pos]) {
            ++u[pos];
            for (std::size_t q = pos + 1; q < len; ++q) u[q] = lo[q];
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
    result.stats.states_explored += next.size();
    result.stats.peak_layer_states = std::max<std::uint64_t>(result.stats.peak_layer_states, next.size());
    if (next.size() > limits.max_states)
      throw ResourceLimitError("DP layer at row " + std::to_string(r) + " holds " + std::to_string(next.size()) +
                               " states, above the cap " + std::to_string(limits.max_states));
    cur = std::move(next);
  }

  for (const auto& [key, count] : cur) result.value += count;
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void check_params(int n, int k, int beta) {
  if (n < 0) throw InvalidArgument("N must be >= 0");
  if (k < 1 || beta < 1) throw InvalidArgument("k and beta must be >= 1");
}

}  // namespace

CountResult count_constrained_sp(int n, int k, int beta, const CountLimits& limits) {
  check_params(n, k, beta);
  Layout lay = sp_layout(build_constraints(Group::Sp, k, beta), n);
  compute_lifetimes(lay);
  CountResult r = run(lay, limits);
  r.group = Group::Sp;
  r.k = k;
  r.beta = beta;
  return r;
}

CountResult count_constrained_so(int n, int k, int beta, const CountLimits& limits) {
  check_params(n, k, beta);
  Layout lay = so_layout(build_constraints(Group::SO, k, beta), n);
  compute_lifetimes(lay);
  CountResult r = run(lay, limits);
  r.group = Group::SO;
  r.k = k;
  r.beta = beta;
  return r;
}

CountResult count_constrained_so_signed(int n, int k, int beta, const SignVector& eps, const CountLimits& limits) {
  check_params(n, k, beta);
  check_sign_vector(eps, static_cast<std::size_t>(2 * k * beta));
  Layout lay = so_layout(build_constraints(Group::SO, k, beta), n);
  lay.eps = &eps;
  compute_lifetimes(lay);
  CountResult r = run(lay, limits);
  r.group = Group::SO;
  r.k = k;
  r.beta = beta;
  return r;
}

CountResult count_constrained(Group group, int n, int k, int beta, const CountLimits& limits, CountSide side) {
  if (side == CountSide::Relabelled) return count_relabelled(group, n, k, beta, limits);
  return group == Group::Sp ? count_constrained_sp(n, k, beta, limits) : count_constrained_so(n, k, beta, limits);
}

CountResult count_sp_fixed_top(int n, int s, const CountLimits& limits) {
  if (n < 0) throw InvalidArgument("N must be >= 0");
  if (s < 1) throw InvalidArgument("s must be >= 1");
  Layout lay;
  lay.group = Group::Sp;
  lay.rows = static_cast<std::size_t>(2 * s);
  lay.top_length = static_cast<std::size_t>(s);
  lay.n = n;
  lay.terms.resize(lay.rows + 1);
  compute_lifetimes(lay);
  CountResult r = run(lay, limits);
  r.group = Group::Sp;
  return r;
}

}  // namespace mom
