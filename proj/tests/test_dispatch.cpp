#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <cstdio>

#include "hyperg/dispatch.hpp"
#include "hyperg/support.hpp"
#include "oracle_values.hpp"

using namespace hyperg;

namespace {
double rel(Cplx got, Cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
double digits(Cplx got, Cplx want) { return -std::log10(std::max(rel(got, want), 1e-18)); }
}  // namespace

TEST_CASE("estimate_digits contract") {
  MethodResult a = MethodResult::converged({1, 0}, 1, 1e-12);
  MethodResult b = MethodResult::converged({1, 0}, 1, 1e-12);
  CHECK(estimate_digits(a, &b) == 16);
  b.value = {1 + 1e-8, 0};
  CHECK(estimate_digits(a, &b) == 8);
  CHECK(estimate_digits(a, nullptr) == 11);
  MethodResult bad = MethodResult::failed(Status::Overflow);
  CHECK(estimate_digits(bad, nullptr) == 0);
}

TEST_CASE("eval_m: trivial z = 0 and simple series route") {
  EvalResult t = eval_m({2, 1}, {1.3, -0.4}, {0, 0});
  CHECK(t.status == Status::Converged);
  CHECK(t.trace.size() == 1);
  CHECK(rel(t.value, reciprocal_gamma({1.3, -0.4})) < 1e-14);

  EvalResult r = eval_m(0.1, 0.2, 0.5);
  CHECK(r.status == Status::Converged);
  CHECK(digits(r.value, oracle::M_0p1_0p2_0p5) >= 14);
  CHECK(r.est_digits >= 13);
}

TEST_CASE("eval_m: taylor route accurate over real z in [1,100]") {
  for (int zi = 1; zi <= 100; zi += 3) {
    double z = double(zi);
    EvalResult r = eval_m(2, 3, z);
    REQUIRE(r.status == Status::Converged);
    CHECK(r.est_digits >= 11);
    // closed form: 1F1(2;3;z) = 2((z-1)e^z + 1)/z^2, regularized by 1/Gamma(3)
    Cplx want = ((z - 1.0) * std::exp(z) + 1.0) / (z * z);
    CHECK(digits(r.value, want) >= 13);
  }
}

TEST_CASE("eval_m: cancellation and rescue routes") {
  // the showcase: direct Taylor is garbage, the dispatcher route must not be
  EvalResult r = eval_m(50, 20, -100);
  REQUIRE(r.status == Status::Converged);
  CHECK(digits(r.value, oracle::M_50_20_m100) >= 10);
  CHECK(r.est_digits >= 10);

  // Buchholz / Kummer territory
  EvalResult r13 = eval_m(-60, 1, 10);
  REQUIRE(r13.status == Status::Converged);
  CHECK(digits(r13.value, oracle::M_m60_1_10) >= 13);
}

TEST_CASE("Kummer consistency: eval_m(a,b,z) vs e^z eval_m(b-a,b,-z)") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> u(-6.0, 6.0), uz(-10.0, 10.0);
  int checked = 0;
  for (int i = 0; i < 500 && checked < 480; ++i) {
    Cplx a{u(rng), u(rng) * 0.25}, b{u(rng) * 0.8 + 7.0, u(rng) * 0.25};
    Cplx z{uz(rng), uz(rng) * 0.3};
    EvalResult lhs = eval_m(a, b, z);
    EvalResult rhs = eval_m(b - a, b, -z);
    if (lhs.status != Status::Converged || rhs.status != Status::Converged) continue;
    if (lhs.est_digits < 11 || rhs.est_digits < 11) continue;
    Cplx rv = std::exp(z) * rhs.value;
    CHECK(rel(lhs.value, rv) < 1e-11);
    ++checked;
  }
  CHECK(checked >= 400);
}

TEST_CASE("eval_f: trivial points and series route") {
  EvalResult t = eval_f(1, 2, {0.7, 0.3}, {0, 0});
  CHECK(t.status == Status::Converged);
  CHECK(rel(t.value, reciprocal_gamma({0.7, 0.3})) < 1e-14);

  EvalResult r3 = eval_f(0.1, 0.2, -0.3, {-0.5, 0.5});
  REQUIRE(r3.status == Status::Converged);
  CHECK(r3.est_digits >= 13);

  EvalResult r30 = eval_f(2.0 / 3.0, 1, 4.0 / 3.0, {0.5, 0.8660254037844386});
  REQUIRE(r30.status == Status::Converged);
  CHECK(digits(r30.value, oracle::F_case30) >= 12);
}

TEST_CASE("Euler consistency for eval_f") {
  std::mt19937 rng(59);
  std::uniform_real_distribution<double> u(-5.0, 5.0), uz(-0.8, 0.8);
  int checked = 0;
  for (int i = 0; i < 500 && checked < 450; ++i) {
    Cplx a{u(rng), u(rng) * 0.4}, b{u(rng), u(rng) * 0.4}, c{u(rng) + 6.5, u(rng) * 0.4};
    Cplx z{uz(rng), uz(rng) * 0.6};
    EvalResult lhs = eval_f(a, b, c, z);
    EvalResult rhs = eval_f(c - a, c - b, c, z);
    if (lhs.status != Status::Converged || rhs.status != Status::Converged) continue;
    if (lhs.est_digits < 12 || rhs.est_digits < 12) continue;
    Cplx rv = std::exp((c - a - b) * std::log(Cplx{1, 0} - z)) * rhs.value;
    CHECK(rel(lhs.value, rv) < 1e-11);
    ++checked;
  }
  CHECK(checked >= 400);
}

TEST_CASE("determinism and trace soundness") {
  EvalResult r1 = eval_m({3, 1}, {2, -1}, {4, 2});
  EvalResult r2 = eval_m({3, 1}, {2, -1}, {4, 2});
  CHECK(r1.value == r2.value);
  CHECK(r1.est_digits == r2.est_digits);
  REQUIRE(r1.trace.size() == r2.trace.size());
  for (std::size_t i = 0; i < r1.trace.size(); ++i) {
    MethodResult replay = replay_trace_entry(r1.trace[i]);
    CHECK(replay.value == r1.trace[i].result.value);
    CHECK(replay.status == r1.trace[i].result.status);
  }

  EvalResult f1 = eval_f(0.4, {1.2, 0.3}, 2.5, {-3.5, 0.5});
  for (const auto& e : f1.trace) {
    MethodResult replay = replay_trace_entry(e);
    CHECK(replay.value == e.result.value);
  }
}

TEST_CASE("policy file loading") {
  {
    std::FILE* f = std::fopen("/tmp/hyp_policy_test.txt", "w");
    std::fputs("rho = 0.6\nenable_ode = off\ntaylor_param_max = 40\n# comment\n", f);
    std::fclose(f);
  }
  Policy pol = load_policy_file("/tmp/hyp_policy_test.txt");
  CHECK(pol.rho == 0.6);
  CHECK(!pol.enable_ode);
  CHECK(pol.taylor_param_max == 40.0);
  {
    std::FILE* f = std::fopen("/tmp/hyp_policy_bad.txt", "w");
    std::fputs("nonsense = 1\n", f);
    std::fclose(f);
  }
  CHECK_THROWS(load_policy_file("/tmp/hyp_policy_bad.txt"));
}

TEST_CASE("truthfulness on a hostile case") {
  // everything the paper tried fails here; a Converged claim must not
  // pretend double-precision digits that are not there
  EvalResult r = eval_m(1000, 1, -1000);
  if (r.status == Status::Converged) {
    Cplx want{-3.4426641932785834787e-220, 0};
    if (r.est_digits >= 10) {
      CHECK(digits(r.value, want) >= 10);
    }
  }
  CHECK(r.trace.size() >= 1);
}
