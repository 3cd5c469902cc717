#include "mom/polynomials.hpp"

#include <chrono>
#include <string>

#include "mom/errors.hpp"
#include "mom/parallel.hpp"

namespace mom {

namespace detail {
extern const std::string_view kGoldenTableJson;
}

int expected_degree(Group group, int k, int beta) {
  if (k < 1 || beta < 1) throw InvalidArgument("k and beta must be >= 1");
  const int kb = k * beta;
  if (group == Group::Sp) return kb * (2 * kb + 1) - k;
  if (k == 1 && beta == 1) return 1;
  return kb * (2 * kb - 1) - k;
}

MomResult mom_polynomial(Group group, int k, int beta, const MomOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  MomResult res;
  res.group = group;
  res.k = k;
  res.beta = beta;
  res.expected_degree = expected_degree(group, k, beta);
  const int D = res.expected_degree;

  res.counts.assign(static_cast<std::size_t>(D + 2), mpz_class(0));
  // Largest N first so the slowest counts start early.
  parallel_for(res.counts.size(), options.threads, [&](std::size_t idx) {
    const int n = D + 1 - static_cast<int>(idx);
    res.counts[static_cast<std::size_t>(n)] =
        options.counter ? options.counter(n) : count_constrained(group, n, k, beta, options.limits, options.side).value;
  });

  std::vector<std::pair<long, mpz_class>> samples;
  for (int n = 0; n <= D; ++n) samples.emplace_back(n, res.counts[static_cast<std::size_t>(n)]);
  res.polynomial = interpolate(samples);
  res.leading = res.polynomial.leading();

  const std::string tag = std::string(to_string(group)) + "(" + std::to_string(k) + "," + std::to_string(beta) + ")";
  const ExactRational predicted = evaluate(res.polynomial, D + 1);
  if (predicted != ExactRational(res.counts.back()))
    throw IntegrityError(tag + ": interpolant predicts " + to_string(predicted) + " at N=" + std::to_string(D + 1) +
                         " but the count is " + res.counts.back().get_str());
  if (res.polynomial.degree() != D)
    throw IntegrityError(tag + ": degree " + std::to_string(res.polynomial.degree()) + ", expected " +
                         std::to_string(D));
  if (res.leading <= 0) throw IntegrityError(tag + ": leading coefficient " + to_string(res.leading) + " is not positive");
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

nlohmann::json polynomial_to_json(const ExactPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return {{"degree", p.degree()}, {"coefficients", coeffs}};
}

ExactPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
    throw InvalidArgument("polynomial JSON needs a coefficients array");
  std::vector<ExactRational> coeffs;
  for (const auto& c : j["coefficients"]) {
    if (!c.is_string()) throw InvalidArgument("coefficients must be strings of the form p/q");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  ExactPolynomial p(std::move(coeffs));
  if (j.contains("degree") && j["degree"].get<int>() != p.degree())
    throw InvalidArgument("stated degree " + j["degree"].dump() + " disagrees with the coefficients");
  return p;
}

std::vector<GoldenEntry> parse_golden_table(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("golden table is not valid JSON: ") + e.what());
  }
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw InvalidArgument("golden table needs an entries array");
  std::vector<GoldenEntry> out;
  for (const auto& e : doc["entries"]) {
    GoldenEntry g;
    g.group = parse_group(e.at("group").get<std::string>());
    g.k = e.at("k").get<int>();
    g.beta = e.at("beta").get<int>();
    g.polynomial = polynomial_from_json(e);
    out.push_back(std::move(g));
  }
  return out;
}

std::string_view embedded_golden_json() { return detail::kGoldenTableJson; }

const std::vector<GoldenEntry>& golden_table() {
  static const std::vector<GoldenEntry> table = parse_golden_table(detail::kGoldenTableJson);
  return table;
}

std::optional<ExactPolynomial> reference_polynomial(Group group, int k, int beta) {
  for (const auto& e : golden_table())
    if (e.group == group && e.k == k && e.beta == beta) return e.polynomial;
  return std::nullopt;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace mom
