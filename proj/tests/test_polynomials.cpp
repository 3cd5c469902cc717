#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mom/errors.hpp"
#include "mom/parallel.hpp"
#include "mom/polynomials.hpp"

using namespace mom;

namespace {

ExactPolynomial poly(std::initializer_list<const char*> coeffs) {
  std::vector<ExactRational> v;
  for (const char* c : coeffs) v.push_back(parse_rational(c));
  return ExactPolynomial(v);
}

}  // namespace

TEST_SUITE("polynomials") {

TEST_CASE("rationals") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
}

TEST_CASE("polynomial basics") {
  const ExactPolynomial zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.is_zero());
  CHECK(evaluate(zero, 9) == 0);
  CHECK(ExactPolynomial({1, 0, 0}).degree() == 0);
  const auto p = poly({"1", "3/2", "1/2"});
  CHECK(evaluate(p, 2) == 6);
  CHECK(evaluate(poly({"2", "2"}), 5) == 12);
  CHECK(p.leading() == ExactRational(1, 2));
  CHECK(to_string(p) == "1/2*N^2 + 3/2*N + 1");
}

TEST_CASE("interpolation") {
  CHECK(interpolate({{0, 1}, {1, 3}, {2, 6}}) == poly({"1", "3/2", "1/2"}));
  CHECK(interpolate({{0, 7}}) == poly({"7"}));
  CHECK(interpolate({{0, 2}, {1, 4}}) == poly({"2", "2"}));
  CHECK(interpolate({{3, 10}, {1, 3}, {0, 1}}) == poly({"1", "3/2", "1/2"}));
  CHECK(interpolate({{0, 0}, {1, 0}}).is_zero());
  CHECK_THROWS_AS(interpolate({{1, 2}, {1, 3}}), InvalidArgument);
}

TEST_CASE("degree law") {
  CHECK(expected_degree(Group::Sp, 1, 1) == 2);
  CHECK(expected_degree(Group::Sp, 1, 2) == 9);
  CHECK(expected_degree(Group::Sp, 2, 1) == 8);
  CHECK(expected_degree(Group::SO, 1, 1) == 1);
  CHECK(expected_degree(Group::SO, 2, 1) == 4);
  CHECK(expected_degree(Group::SO, 1, 2) == 5);
}

TEST_CASE("small MoM polynomials") {
  const auto sp = mom_polynomial(Group::Sp, 1, 1);
  CHECK(sp.polynomial == poly({"1", "3/2", "1/2"}));
  CHECK(sp.leading == ExactRational(1, 2));
  CHECK(mom_polynomial(Group::SO, 1, 1).polynomial == poly({"2", "2"}));
  const auto so = mom_polynomial(Group::SO, 2, 1);
  CHECK(so.polynomial == poly({"2", "6", "13/2", "3", "1/2"}));
  CHECK(so.counts.size() == 6);
  for (std::size_t n = 0; n < so.counts.size(); ++n)
    CHECK(evaluate(so.polynomial, static_cast<long>(n)) == ExactRational(so.counts[n]));
}

TEST_CASE("results do not depend on threads or counting side") {
  MomOptions one, four, relabelled;
  four.threads = 4;
  relabelled.side = CountSide::Relabelled;
  for (auto [g, k, b] : {std::tuple{Group::Sp, 2, 1}, std::tuple{Group::SO, 1, 2}}) {
    const auto a = mom_polynomial(g, k, b, one);
    CHECK(a.polynomial == mom_polynomial(g, k, b, four).polynomial);
    CHECK(a.polynomial == mom_polynomial(g, k, b, relabelled).polynomial);
    CHECK(a.polynomial == *reference_polynomial(g, k, b));
  }
}

TEST_CASE("certification catches corrupted counts") {
  MomOptions opt;
  opt.counter = [](int n) {
    mpz_class v = count_constrained_sp(n, 1, 1).value;
    if (n == 3) v += 1;
    return v;
  };
  CHECK_THROWS_AS(mom_polynomial(Group::Sp, 1, 1, opt), IntegrityError);
  opt.counter = [](int n) { return mpz_class(n * n * n); };
  CHECK_THROWS_AS(mom_polynomial(Group::Sp, 1, 1, opt), IntegrityError);
  opt.counter = [](int n) { return mpz_class(n + 1); };
  CHECK_THROWS_AS(mom_polynomial(Group::Sp, 1, 1, opt), IntegrityError);
  opt.counter = [](int) { return mpz_class(0); };
  CHECK_THROWS_AS(mom_polynomial(Group::SO, 1, 1, opt), IntegrityError);
}

TEST_CASE("golden table") {
  CHECK(golden_table().size() == 10);
  CHECK(evaluate(*reference_polynomial(Group::Sp, 1, 2), 1) == 20);
  CHECK(evaluate(*reference_polynomial(Group::SO, 1, 2), 0) == 2);
  CHECK_FALSE(reference_polynomial(Group::Sp, 2, 2).has_value());
  for (const auto& e : golden_table()) {
    CHECK(e.polynomial.degree() == expected_degree(e.group, e.k, e.beta));
    CHECK(e.polynomial.leading() > 0);
  }
}

TEST_CASE("shipped table matches the embedded copy and the pinned checksum") {
  std::ifstream in(MOM_SOURCE_DIR "/data/golden_table.json", std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == std::string(embedded_golden_json()));
  CHECK(fnv1a64(ss.str()) == kPinnedGoldenChecksum);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("polynomial JSON") {
  const auto p = poly({"2", "6", "13/2", "3", "1/2"});
  const auto j = polynomial_to_json(p);
  CHECK(j["degree"] == 4);
  CHECK(j["coefficients"][2] == "13/2");
  CHECK(polynomial_from_json(j) == p);
  CHECK(polynomial_to_json(ExactPolynomial{})["degree"] == -1);
  auto bad = j;
  bad["degree"] = 3;
  CHECK_THROWS_AS(polynomial_from_json(bad), InvalidArgument);
  CHECK_THROWS_AS(parse_golden_table("{\"entries\": [{\"group\": \"u\"}]}"), InvalidArgument);
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_thread_count(3u) == 3);
  CHECK_THROWS_AS(resolve_thread_count(0u), InvalidArgument);
  CHECK(resolve_thread_count() >= 1);
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  std::vector<int> hit(50, 0);
  parallel_for(50, 4, [&](std::size_t i) { hit[i] = 1; });
  CHECK(std::count(hit.begin(), hit.end(), 1) == 50);
  try {
    parallel_for(20, 4, [](std::size_t i) {
      if (i == 7 || i == 13) throw InvalidArgument(std::to_string(i));
    });
    CHECK(false);
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()) == "7");
  }
}

}  // TEST_SUITE
