// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "mom/asymptotics.hpp"
#include "mom/brute_force.hpp"
#include "mom/characters.hpp"
#include "mom/errors.hpp"
#include "mom/lattice_count.hpp"
#include "mom/parallel.hpp"
#include "mom/polynomials.hpp"
#include "mom/relabel.hpp"
#include "mom/rmt.hpp"
#include "support.hpp"

using namespace mom;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    pass = false;
    detail << " [" << why << "]";
  }
};

std::string name(Group g, int k, int b) {
  return std::string(to_string(g)) + "(" + std::to_string(k) + "," + std::to_string(b) + ")";
}

unsigned threads = 1;
bool large = false;
std::vector<MomResult> computed;

Outcome golden() {
  Outcome o;
  MomOptions opt;
  opt.threads = threads;
  auto run = [&](Group g, int k, int b) {
    const auto t = Clock::now();
    const auto r = mom_polynomial(g, k, b, opt);
    const double secs = since(t);
    computed.push_back(r);
    if (r.polynomial != *reference_polynomial(g, k, b)) o.fail(name(g, k, b) + " differs from table");
    return secs;
  };
  double first = 0;
  for (auto [g, k, b] : {std::tuple{Group::Sp, 1, 1}, {Group::SO, 1, 1}, {Group::SO, 2, 1}, {Group::Sp, 2, 1}})
    first += run(g, k, b);
  const double so12 = run(Group::SO, 1, 2);
  const double sp12 = run(Group::Sp, 1, 2);
  o.detail << "6 entries exact; first four " << first << "s, so(1,2) " << so12 << "s, sp(1,2) " << sp12 << "s";
  if (first > 60) o.fail("first four over 1 minute");
  if (so12 > 300) o.fail("so(1,2) over 5 minutes");
  if (sp12 > 1800) o.fail("sp(1,2) over 30 minutes");
  if (large) {
    for (auto [g, k, b] : {std::tuple{Group::Sp, 1, 3}, {Group::Sp, 3, 1}, {Group::SO, 1, 3}, {Group::SO, 3, 1}}) {
      const double s = run(g, k, b);
      o.detail << ", " << name(g, k, b) << " " << s << "s";
    }
  } else {
    o.detail << "; sp(1,3), sp(3,1), so(1,3), so(3,1) SKIPPED (budget)";
  }
  return o;
}

Outcome degree_law() {
  Outcome o;
  for (const auto& r : computed) {
    if (r.polynomial.degree() != expected_degree(r.group, r.k, r.beta)) o.fail(name(r.group, r.k, r.beta) + " degree");
    if (r.leading <= 0) o.fail(name(r.group, r.k, r.beta) + " leading not positive");
  }
  o.detail << computed.size() << " certified polynomials";
  return o;
}

Outcome spot_counts() {
  Outcome o;
  const ExactRational sp12 = evaluate(*reference_polynomial(Group::Sp, 1, 2), 1);
  auto expect = [&](const CountResult& r, const mpz_class& want, const std::string& label) {
    if (r.value != want) o.fail(label + " = " + r.value.get_str() + ", expected " + want.get_str());
  };
  expect(count_constrained_sp(1, 1, 2), sp12.get_num(), "sp N=1 (1,2)");
  expect(count_constrained_sp(1, 2, 1), 10, "sp N=1 (2,1)");
  expect(count_constrained_so(1, 2, 1), 18, "so N=1 (2,1)");
  expect(count_constrained_so(1, 1, 2), 36, "so N=1 (1,2)");
  int so_entries = 0;
  for (const auto& e : golden_table())
    if (e.group == Group::SO) {
      expect(count_constrained_so(0, e.k, e.beta), 2, "so N=0 " + name(e.group, e.k, e.beta));
      ++so_entries;
    }
  o.detail << "sp(N=1,1,2) = " << sp12 << " (tabulated polynomial at N=1), 10, 18, 36, and 2 at N=0 for " << so_entries
           << " SO entries";
  return o;
}

Outcome oracles() {
  Outcome o;
  int cases = 0, round_trips = 0;
  for (Group g : {Group::Sp, Group::SO})
    for (int k = 1; k <= 2; ++k)
      for (int b = 1; b <= 2; ++b)
        for (int n = 0; n <= 2; ++n) {
          const auto dp = count_constrained(g, n, k, b).value;
          const auto brute = brute_force_count(g, n, k, b).value;
          const auto rel = count_constrained(g, n, k, b, {}, CountSide::Relabelled).value;
          if (dp != brute || dp != rel) o.fail(name(g, k, b) + " N=" + std::to_string(n));
          ++cases;
        }
  for (auto [k, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}})
    for (Entry n = 0; n <= 2; ++n) {
      const std::size_t m = static_cast<std::size_t>(2 * k * b);
      test::for_each_pattern(Group::Sp, Signature::constant(m, n), 2 * m, [&](const PatternRows& rows) {
        const SymplecticPattern p(rows);
        if (!(unrelabel_sp(relabel_sp(p)) == p)) o.fail("sp round trip");
        ++round_trips;
      });
      for (int label : {1, -1}) {
        Signature top = Signature::constant(m, n);
        if (label < 0) top = top.with_last_negated();
        test::for_each_pattern(Group::SO, top, 2 * m - 1, [&](const PatternRows& rows) {
          const OrthogonalPattern p(rows);
          if (!(unrelabel_so(relabel_so(p, label)) == p)) o.fail("so round trip");
          ++round_trips;
        });
      }
    }
  o.detail << cases << " brute/DP/relabelled comparisons, " << round_trips << " round trips";
  return o;
}

Outcome symmetry_point() {
  Outcome o;
  const auto t = Clock::now();
  for (int s = 1; s <= 8; ++s)
    if (vol_symmetry_point(s) != symmetry_point_closed_form(s)) o.fail("volume s=" + std::to_string(s));
  for (int s = 1; s <= 4; ++s) {
    const auto rep = symmetry_point_leading_check(s, {}, threads);
    o.detail << "s=" << s << " " << rep.leading << "; ";
  }
  const double secs = since(t);
  if (secs > 120) o.fail("over 2 minutes");
  o.detail << secs << "s";
  return o;
}

Outcome characters() {
  Outcome o;
  const auto t = Clock::now();
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_real_distribution<double> mod(0.3, 3.0), arg(0.0, 2 * M_PI);
  auto point = [&] { return std::polar(mod(rng), arg(rng)); };
  auto rel = [](ComplexPoint a, ComplexPoint b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); };
  double worst_schur = 0, worst_avg = 0;
  int schur_cases = 0, avg_cases = 0;
  for (std::size_t m = 1; m <= 3; ++m) {
    std::vector<Entry> nu(m, 0);
    std::function<void(std::size_t, Entry)> each = [&](std::size_t i, Entry cap) {
      if (i == m) {
        for (int p = 0; p < 20; ++p) {
          EvaluationRequest req{Signature(nu), {}};
          for (std::size_t j = 0; j < m; ++j) req.points.push_back(point());
          worst_schur = std::max(worst_schur, rel(sp_schur_combinatorial(req), sp_schur_determinantal(req)));
          worst_schur = std::max(worst_schur, rel(o_schur_combinatorial(req), o_schur_determinantal(req)));
          ++schur_cases;
        }
        return;
      }
      for (Entry x = 0; x <= cap; ++x) {
        nu[i] = x;
        each(i + 1, x);
      }
    };
    each(0, 4);
  }
  for (std::size_t m = 1; m <= 4; ++m)
    for (int n = 0; n <= 3; ++n)
      for (int p = 0; p < 20; ++p) {
        std::vector<ComplexPoint> pts;
        for (std::size_t j = 0; j < m; ++j) pts.push_back(point());
        for (Group g : {Group::Sp, Group::SO})
          worst_avg = std::max(worst_avg, rel(bump_gamburd_average(g, n, pts), cfkrs_average(g, n, pts)));
        ++avg_cases;
      }
  const double secs = since(t);
  if (worst_schur > 1e-9) o.fail("Schur disagreement");
  if (worst_avg > 1e-9) o.fail("average disagreement");
  if (secs > 60) o.fail("over 1 minute");
  o.detail << schur_cases << " Schur points (worst rel " << worst_schur << "), " << avg_cases
           << " average points (worst rel " << worst_avg << "), " << secs << "s";
  return o;
}

void statistical(Outcome& o, const std::string& label, double exact, double mean, double se) {
  const double z = std::abs(exact - mean) / se;
  o.detail << label << " " << mean << " +- " << se << " vs " << exact << " (z=" << z << "); ";
  if (!(z <= 3)) o.fail(label);
}

Outcome volumes() {
  Outcome o;
  const auto t = Clock::now();
  const auto sp11 = mc_volume(polytope_spec(Group::Sp, 1, 1), 1000000, kDefaultSeed, threads);
  statistical(o, "sp(1,1)", 0.5, sp11.mean, sp11.standard_error);
  const auto so21 = mc_volume_so_total(2, 1, 1000000, kDefaultSeed, threads);
  statistical(o, "so(2,1) summed", 0.5, so21.mean, so21.standard_error);
  const auto sp21 = mc_volume(polytope_spec(Group::Sp, 2, 1), 10000000, kDefaultSeed, threads);
  statistical(o, "sp(2,1)", 1.0 / 3360, sp21.mean, sp21.standard_error);
  const double secs = since(t);
  if (secs > 600) o.fail("over 10 minutes");
  o.detail << secs << "s";
  return o;
}

Outcome rmt() {
  Outcome o;
  const auto t = Clock::now();
  for (auto [g, n, k, b] : {std::tuple{Group::Sp, 1, 1, 1}, {Group::SO, 1, 1, 1}, {Group::SO, 2, 2, 1}, {Group::Sp, 2, 1, 2}}) {
    const double exact = evaluate(*reference_polynomial(g, k, b), n).get_d();
    const auto e = mom_mc_estimate(g, n, k, b, 100000, kDefaultSeed, threads);
    statistical(o, name(g, k, b) + " N=" + std::to_string(n), exact, e.mean, e.standard_error);
  }
  const double secs = since(t);
  if (secs > 600) o.fail("over 10 minutes");
  o.detail << secs << "s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--budget=large") == 0) large = true;
    if (std::strncmp(argv[i], "--threads=", 10) == 0) threads = static_cast<unsigned>(std::atoi(argv[i] + 10));
  }
  if (threads == 0) threads = resolve_thread_count();

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden polynomial equality", golden},
      {"degree law and positivity", degree_law},
      {"spot counts", spot_counts},
      {"oracle equivalence", oracles},
      {"symmetry point", symmetry_point},
      {"character identities", characters},
      {"volume consistency", volumes},
      {"RMT end-to-end", rmt},
  };
  bool all = true;
  bool stat_ok = true, degree_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (i == 1) degree_ok = o.pass;
    if (i == 6) stat_ok = o.pass;
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail.str() << std::endl;
  }
  const bool nine = degree_ok && stat_ok;
  all = all && nine;
  std::cout << "criterion 9 (non-reproducible constants): " << (nine ? "PASS" : "FAIL")
            << " - no closed form to compare; covered by criteria 2 and 7" << std::endl;
  return all ? 0 : 1;
}
