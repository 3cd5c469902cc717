#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mom/asymptotics.hpp"
#include "mom/brute_force.hpp"
#include "mom/characters.hpp"
#include "mom/errors.hpp"
#include "mom/lattice_count.hpp"
#include "mom/parallel.hpp"
#include "mom/polynomials.hpp"
#include "mom/rmt.hpp"

namespace {

using nlohmann::json;
using namespace mom;

enum Exit { kOk = 0, kUsage = 1, kCap = 2, kIntegrity = 3 };

struct RunConfig {
  std::string group = "sp";
  int k = 1;
  int beta = 1;
  std::string n_range = "0";
  int n = 1;
  std::uint64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  std::optional<unsigned> threads;
  std::string format = "json";
  std::uint64_t max_states = CountLimits{}.max_states;
  std::string side = "pattern";
  bool brute = false;
  std::string budget = "default";
  std::string golden;
  std::string epsilon;
  int symmetry = 0;
  std::string raw_csv;
  std::string nu;
  std::vector<std::string> points;
};

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 0) throw InvalidArgument("bad N range: " + text);
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int a = to_int(std::string_view(text).substr(0, dots));
  const int b = to_int(std::string_view(text).substr(dots + 2));
  if (a > b) throw InvalidArgument("empty N range: " + text);
  return {a, b};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
  return out;
}

SignVector parse_signs(const std::string& text) {
  SignVector eps;
  for (char c : text) {
    if (c == '+') eps.push_back(1);
    else if (c == '-') eps.push_back(-1);
    else throw InvalidArgument("sign vector must be written with + and -");
  }
  return eps;
}

ComplexPoint parse_point(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad point '" + text + "', expected re or re:im");
  }
}

void emit(const RunConfig& cfg, const json& j, const std::string& csv, const std::string& text) {
  if (cfg.format == "json") std::cout << j.dump(2) << '\n';
  else if (cfg.format == "csv") std::cout << csv;
  else std::cout << text;
}

int cmd_count(const RunConfig& cfg) {
  const Group g = parse_group(cfg.group);
  const auto [lo, hi] = parse_range(cfg.n_range);
  const CountLimits limits{cfg.max_states};
  json arr = json::array();
  std::string csv = "N,value\n", text;
  for (int n = lo; n <= hi; ++n) {
    CountResult r;
    if (cfg.brute) r = brute_force_count(g, n, cfg.k, cfg.beta);
    else r = count_constrained(g, n, cfg.k, cfg.beta, limits,
                               cfg.side == "relabelled" ? CountSide::Relabelled : CountSide::Pattern);
    const std::string v = r.value.get_str();
    arr.push_back({{"group", to_string(g)},
                   {"N", n},
                   {"k", cfg.k},
                   {"beta", cfg.beta},
                   {"value", v},
                   {"states", r.stats.states_explored},
                   {"seconds", r.stats.wall_seconds}});
    csv += std::to_string(n) + "," + v + "\n";
    text += "N=" + std::to_string(n) + " " + v + "\n";
  }
  emit(cfg, arr, csv, text);
  return kOk;
}

json result_json(const MomResult& r) {
  json j = polynomial_to_json(r.polynomial);
  j["group"] = to_string(r.group);
  j["k"] = r.k;
  j["beta"] = r.beta;
  j["leading"] = to_string(r.leading);
  j["seconds"] = r.wall_seconds;
  return j;
}

int cmd_poly(const RunConfig& cfg) {
  const Group g = parse_group(cfg.group);
  MomOptions opt;
  opt.limits.max_states = cfg.max_states;
  opt.threads = resolve_thread_count(cfg.threads);
  const MomResult r = mom_polynomial(g, cfg.k, cfg.beta, opt);
  std::string csv = "power,coefficient\n";
  for (std::size_t i = 0; i < r.polynomial.coefficients().size(); ++i)
    csv += std::to_string(i) + "," + to_string(r.polynomial.coefficients()[i]) + "\n";
  emit(cfg, result_json(r), csv,
       to_string(r.polynomial) + "\ndegree " + std::to_string(r.polynomial.degree()) + ", leading " +
           to_string(r.leading) + "\n");
  return kOk;
}

bool in_default_budget(const GoldenEntry& e) {
  const int kb = e.k * e.beta;
  return kb <= 2 && !(e.k == 2 && e.beta == 2);
}

int cmd_verify(const RunConfig& cfg) {
  std::string table_text(embedded_golden_json());
  if (!cfg.golden.empty()) {
    std::ifstream in(cfg.golden, std::ios::binary);
    if (!in) throw InvalidArgument("cannot read " + cfg.golden);
    table_text.assign(std::istreambuf_iterator<char>(in), {});
  }
  if (fnv1a64(table_text) != kPinnedGoldenChecksum)
    std::cerr << "warning: golden table checksum differs from the pinned value\n";
  const auto table = parse_golden_table(table_text);
  MomOptions opt;
  opt.limits.max_states = cfg.max_states;
  opt.threads = resolve_thread_count(cfg.threads);

  json arr = json::array();
  std::string csv = "group,k,beta,status,detail\n", text;
  bool failed = false;
  for (const auto& e : table) {
    const std::string name = std::string(to_string(e.group)) + "(" + std::to_string(e.k) + "," +
                             std::to_string(e.beta) + ")";
    std::string status, detail;
    if (!in_default_budget(e) && cfg.budget != "large") {
      status = "SKIPPED";
      detail = "budget";
    } else {
      try {
        const MomResult r = mom_polynomial(e.group, e.k, e.beta, opt);
        if (r.polynomial == e.polynomial) {
          status = "PASS";
        } else {
          status = "FAIL";
          const std::size_t len = std::max(r.polynomial.coefficients().size(), e.polynomial.coefficients().size());
          for (std::size_t i = 0; i < len; ++i)
            if (r.polynomial.coefficient(i) != e.polynomial.coefficient(i))
              detail += "N^" + std::to_string(i) + ": computed " + to_string(r.polynomial.coefficient(i)) +
                        ", table " + to_string(e.polynomial.coefficient(i)) + "; ";
        }
      } catch (const ResourceLimitError& ex) {
        status = "SKIPPED";
        detail = std::string("cap: ") + ex.what();
      }
    }
    failed = failed || status == "FAIL";
    arr.push_back({{"entry", name}, {"status", status}, {"detail", detail}});
    csv += std::string(to_string(e.group)) + "," + std::to_string(e.k) + "," + std::to_string(e.beta) + "," +
           status + ",\"" + detail + "\"\n";
    text += status + " " + name + (detail.empty() ? "" : "  " + detail) + "\n";
  }
  emit(cfg, arr, csv, text);
  return failed ? kIntegrity : kOk;
}

int cmd_volume(const RunConfig& cfg) {
  const unsigned threads = resolve_thread_count(cfg.threads);
  if (cfg.symmetry > 0) {
    const auto rep = symmetry_point_leading_check(cfg.symmetry, CountLimits{cfg.max_states}, threads);
    const json j = {{"s", rep.s},
                    {"volume", to_string(rep.volume)},
                    {"closed_form", to_string(symmetry_point_closed_form(rep.s))},
                    {"leading", to_string(rep.leading)},
                    {"status", rep.pass ? "PASS" : "FAIL"}};
    emit(cfg, j, "s,volume,leading,status\n" + std::to_string(rep.s) + "," + to_string(rep.volume) + "," +
                     to_string(rep.leading) + "," + (rep.pass ? "PASS" : "FAIL") + "\n",
         (rep.pass ? "PASS" : "FAIL") + std::string(" s=") + std::to_string(rep.s) + " volume " +
             to_string(rep.volume) + " leading " + to_string(rep.leading) + "\n");
    return rep.pass ? kOk : kIntegrity;
  }
  const Group g = parse_group(cfg.group);
  if (g == Group::SO && cfg.k == 1 && cfg.beta == 1) {
    const std::string detail = "degenerate dimension-0 polytope; MoM is 2(N+1)";
    emit(cfg, {{"group", "so"}, {"k", 1}, {"beta", 1}, {"status", "SKIPPED"}, {"detail", detail}},
         "group,k,beta,status\nso,1,1,SKIPPED\n", "SKIPPED " + detail + "\n");
    return kOk;
  }
  json j;
  VolumeEstimate v;
  if (g == Group::SO && cfg.epsilon.empty()) {
    v = mc_volume_so_total(cfg.k, cfg.beta, cfg.samples, cfg.seed, threads);
    j = {{"group", "so"}, {"k", cfg.k},       {"beta", cfg.beta},  {"epsilon", "all"},
         {"samples", v.samples}, {"seed", v.seed}, {"mean", v.mean}, {"stderr", v.standard_error}};
  } else {
    std::optional<SignVector> eps;
    if (g == Group::SO) eps = parse_signs(cfg.epsilon);
    const auto spec = polytope_spec(g, cfg.k, cfg.beta, eps);
    v = mc_volume(spec, cfg.samples, cfg.seed, threads);
    j = volume_to_json(spec, v);
    if (!spec.note.empty()) j["note"] = spec.note;
  }
  if (auto ref = reference_polynomial(g, cfg.k, cfg.beta); ref && (g == Group::Sp || cfg.epsilon.empty())) {
    const auto cmp = compare_to_estimate(ref->leading(), v);
    j["exact"] = cmp.exact;
    j["z"] = cmp.z;
    j["status"] = cmp.status;
  }
  std::ostringstream text;
  text << "volume " << v.mean << " +- " << v.standard_error << " (" << v.samples << " samples, seed " << v.seed
       << ")\n";
  std::ostringstream csv;
  csv << "group,k,beta,samples,seed,mean,stderr\n"
      << to_string(g) << "," << cfg.k << "," << cfg.beta << "," << v.samples << "," << v.seed << "," << v.mean << ","
      << v.standard_error << "\n";
  emit(cfg, j, csv.str(), text.str());
  return kOk;
}

int cmd_rmt(const RunConfig& cfg) {
  const Group g = parse_group(cfg.group);
  std::vector<double> raw;
  const auto e = mom_mc_estimate(g, cfg.n, cfg.k, cfg.beta, cfg.samples, cfg.seed, resolve_thread_count(cfg.threads),
                                 cfg.raw_csv.empty() ? nullptr : &raw);
  if (!cfg.raw_csv.empty()) {
    std::ofstream out(cfg.raw_csv, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write " + cfg.raw_csv);
    out.precision(17);
    out << "inner_moment\n";
    for (double x : raw) out << x << '\n';
  }
  std::ostringstream csv, text;
  csv.precision(17);
  csv << "group,N,k,beta,samples,seed,mean,stderr\n"
      << to_string(g) << "," << e.n << "," << e.k << "," << e.beta << "," << e.samples << "," << e.seed << ","
      << e.mean << "," << e.standard_error << "\n";
  text << "MoM estimate " << e.mean << " +- " << e.standard_error << "\n";
  emit(cfg, estimate_to_json(e), csv.str(), text.str());
  return kOk;
}

int cmd_schur(const RunConfig& cfg) {
  const Group g = parse_group(cfg.group);
  std::vector<Entry> nu;
  for (const auto& s : split(cfg.nu, ',')) {
    try {
      nu.push_back(std::stoll(s));
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad signature entry '" + s + "'");
    }
  }
  EvaluationRequest req{Signature(nu), {}};
  for (const auto& p : cfg.points) req.points.push_back(parse_point(p));
  const ComplexPoint comb = g == Group::Sp ? sp_schur_combinatorial(req) : o_schur_combinatorial(req);
  std::optional<ComplexPoint> det;
  try {
    det = g == Group::Sp ? sp_schur_determinantal(req) : o_schur_determinantal(req);
  } catch (const NearSingularError&) {
  }
  json j = {{"group", to_string(g)}, {"nu", nu}, {"combinatorial", {comb.real(), comb.imag()}}};
  j["determinantal"] = det ? json{det->real(), det->imag()} : json(nullptr);
  std::ostringstream csv, text;
  csv.precision(17);
  text.precision(17);
  csv << "method,re,im\ncombinatorial," << comb.real() << "," << comb.imag() << "\n";
  if (det) csv << "determinantal," << det->real() << "," << det->imag() << "\n";
  text << "combinatorial " << comb << "\n";
  if (det) text << "determinantal " << *det << "\n";
  else text << "determinantal near-singular at these points\n";
  emit(cfg, j, csv.str(), text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moments of moments of characteristic polynomials over Sp(2N) and SO(2N)"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "Worker threads (else MOM_THREADS, else hardware)");
  app.add_option("--max-states", cfg.max_states, "Cap on DP states per layer")->capture_default_str();

  auto group_opt = [&](CLI::App* c) {
    c->add_option("--group", cfg.group, "sp or so")->check(CLI::IsMember({"sp", "so"}))->capture_default_str();
    c->add_option("--k", cfg.k, "Outer moment")->check(CLI::Range(1, 64))->capture_default_str();
    c->add_option("--beta", cfg.beta, "Inner moment")->check(CLI::Range(1, 64))->capture_default_str();
  };
  auto seed_opt = [&](CLI::App* c) {
    c->add_option("--samples", cfg.samples, "Monte Carlo samples")->check(CLI::PositiveNumber)->capture_default_str();
    c->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  };

  auto* count = app.add_subcommand("count", "Constrained pattern counts");
  group_opt(count);
  count->add_option("--n", cfg.n_range, "N or a..b")->capture_default_str();
  count->add_option("--side", cfg.side, "Counting side")
      ->check(CLI::IsMember({"pattern", "relabelled"}))
      ->capture_default_str();
  count->add_flag("--brute", cfg.brute, "Use naive enumeration");

  auto* poly = app.add_subcommand("poly", "Exact MoM polynomial");
  group_opt(poly);

  auto* verify = app.add_subcommand("verify", "Recompute and diff the golden table");
  verify->add_option("--budget", cfg.budget)->check(CLI::IsMember({"default", "large"}))->capture_default_str();
  verify->add_option("--golden", cfg.golden, "Alternative table file");

  auto* volume = app.add_subcommand("volume", "Polytope volume estimates");
  group_opt(volume);
  seed_opt(volume);
  volume->add_option("--eps", cfg.epsilon, "SO sign vector such as +-+-; omitted sums over all");
  volume->add_option("--symmetry", cfg.symmetry, "Exact symmetry-point check for half patterns of length s")
      ->check(CLI::Range(1, 8));

  auto* rmt = app.add_subcommand("rmt", "Haar Monte Carlo estimate of MoM");
  group_opt(rmt);
  seed_opt(rmt);
  rmt->add_option("--n", cfg.n, "Matrix size parameter N")->check(CLI::Range(1, 64))->capture_default_str();
  rmt->add_option("--raw-csv", cfg.raw_csv, "Write per-sample inner moments here");

  auto* schur = app.add_subcommand("schur", "Evaluate a symplectic or even orthogonal character");
  schur->add_option("--group", cfg.group)->check(CLI::IsMember({"sp", "so"}))->capture_default_str();
  schur->add_option("--nu", cfg.nu, "Signature, comma separated")->required();
  schur->add_option("--x", cfg.points, "Points as re or re:im")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return cmd_count(cfg);
    if (*poly) return cmd_poly(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*volume) return cmd_volume(cfg);
    if (*rmt) return cmd_rmt(cfg);
    return cmd_schur(cfg);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kCap;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity failure: " << e.what() << '\n';
    return kIntegrity;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
