#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperg/confluent.hpp"
#include "hyperg/support.hpp"
#include "oracle_values.hpp"

using namespace hyperg;

namespace {
double rel(Cplx got, Cplx want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
double digits(Cplx got, Cplx want) { return -std::log10(std::max(rel(got, want), 1e-18)); }
}  // namespace

TEST_CASE("taylor a: basics and reported accuracy") {
  MethodResult r = m_taylor_a({0.1, 0.2, 0.5});
  REQUIRE(r.ok());
  CHECK(digits(r.value, oracle::M_0p1_0p2_0p5) >= 15);

  // a = 0 gives 1F1 = 1 exactly
  MethodResult r0 = m_taylor_a({0, {3.7, 1.1}, {2, -5}}, {.regularized = false});
  REQUIRE(r0.ok());
  CHECK(r0.value == Cplx{1, 0});
  CHECK(r0.terms <= 2);

  // cancellation case: converges but to garbage
  MethodResult rc = m_taylor_a({50, 20, -100}, {.regularized = false});
  if (rc.ok()) {
    CHECK(digits(rc.value, oracle::F1F1_50_20_m100) <= 2);
  }
}

TEST_CASE("taylor a: terminating polynomial uses exactly n+1 terms") {
  for (int n : {0, 1, 2, 5, 17}) {
    MethodResult r = m_taylor_a({-double(n), 7.5, 1.25});
    REQUIRE(r.ok());
    CHECK(r.terms == n + 1);
  }
}

TEST_CASE("taylor b: small-parameter cases from the result tables") {
  MethodResult r6 = m_taylor_b({1e-8, 1e-12, {-1e-10, 1e-12}});
  REQUIRE(r6.ok());
  CHECK(digits(r6.value, oracle::M_1e8_1e12_c) >= 14);

  MethodResult re1 = m_taylor_b({1, 1, 1}, {.regularized = false});
  REQUIRE(re1.ok());
  CHECK(rel(re1.value, {std::exp(1.0), 0}) < 1e-14);

  MethodResult rb0 = m_taylor_b({1, 0, 1});
  CHECK(rb0.status == Status::NotApplicable);
}

TEST_CASE("single fraction: small |b| strengths and overflow label") {
  MethodResult r5 = m_single_fraction({1e-8, 1e-8, -1e-10});
  REQUIRE(r5.ok());
  CHECK(digits(r5.value, oracle::M_1e8_1e8_m1e10) >= 14);

  MethodResult r0 = m_single_fraction({0, {0.3, 0.4}, {2, 1}}, {.regularized = false});
  REQUIRE(r0.ok());
  CHECK(rel(r0.value, {1, 0}) < 1e-15);

  MethodResult r10 = m_single_fraction({8.1, 10.1, 100});
  CHECK((r10.status == Status::Overflow ||
         (r10.ok() && digits(r10.value, oracle::M_0p1_0p2_0p5) < 1)));
}

TEST_CASE("buchholz: sign-opposite regime and b=2a closed form") {
  MethodResult r13 = m_buchholz({-60, 1, 10});
  REQUIRE(r13.ok());
  CHECK(digits(r13.value, oracle::M_m60_1_10) >= 13);

  MethodResult r19 = m_buchholz({500, 1, -5});
  REQUIRE(r19.ok());
  CHECK(digits(r19.value, oracle::M_500_1_m5) >= 14);

  MethodResult r2a = m_buchholz({0.3, 0.6, 0.7});
  REQUIRE(r2a.ok());
  CHECK(digits(r2a.value, oracle::M_0p3_0p6_0p7) >= 13);
}

TEST_CASE("asymptotic: large |z|") {
  MethodResult r11 = m_asymptotic({1, 2, 600});
  REQUIRE(r11.ok());
  CHECK(digits(r11.value, oracle::M_1_2_600) >= 15);
  // elementary cross-check: 1F1(1;2;z) = (e^z - 1)/z
  MethodResult r11u = m_asymptotic({1, 2, 600}, AsymVariant::TermRecursion, {.regularized = false});
  REQUIRE(r11u.ok());
  Cplx closed = (std::exp(Cplx(600, 0)) - 1.0) / 600.0;
  CHECK(rel(r11u.value, closed) < 1e-14);

  MethodResult r18 = m_asymptotic({1e-3, 1, 700});
  REQUIRE(r18.ok());
  CHECK(digits(r18.value, oracle::M_1em3_1_700) >= 15);

  MethodResult rb = m_asymptotic({1e-3, 1, 700}, AsymVariant::IterativeSum);
  REQUIRE(rb.ok());
  CHECK(digits(rb.value, oracle::M_1em3_1_700) >= 15);

  // small |z|: the series never dips below tol
  MethodResult rs = m_asymptotic({0.1, 0.2, 0.5});
  CHECK(rs.status == Status::NoConvergence);
}

TEST_CASE("engines at z = 0 return 1/Gamma(b) after one term") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    Cplx a{u(rng), u(rng)}, b{u(rng), u(rng)};
    if (near_nonpos_integer(b, 1e-2)) continue;
    Cplx want = reciprocal_gamma(b);
    MethodResult ra = m_taylor_a({a, b, 0});
    REQUIRE(ra.ok());
    CHECK(rel(ra.value, want) < 1e-14);
    CHECK(ra.terms <= 2);
    MethodResult rsf = m_single_fraction({a, b, 0});
    REQUIRE(rsf.ok());
    CHECK(rel(rsf.value, want) < 1e-14);
  }
}

TEST_CASE("conjugate symmetry") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int i = 0; i < 200; ++i) {
    Cplx a{u(rng), u(rng)}, b{u(rng), u(rng)}, z{u(rng), u(rng)};
    if (near_nonpos_integer(b, 1e-2)) continue;
    MethodResult r1 = m_taylor_a({a, b, z});
    MethodResult r2 = m_taylor_a({std::conj(a), std::conj(b), std::conj(z)});
    if (!r1.ok() || !r2.ok()) continue;
    CHECK(rel(r2.value, std::conj(r1.value)) < 1e-13);
  }
}

TEST_CASE("taylor-a terms-to-converge is monotone over real z in [1,100]") {
  int prev = 0;
  for (int zi = 1; zi <= 100; ++zi) {
    MethodResult r = m_taylor_a({2, 3, double(zi)});
    REQUIRE(r.ok());
    CHECK(r.terms >= prev);
    prev = r.terms;
  }
}

TEST_CASE("cross-engine agreement on random safe points") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-20.0, 20.0);
  std::uniform_real_distribution<double> bpos(0.5, 20.0);
  int compared = 0;
  for (int i = 0; i < 500; ++i) {
    Cplx a{u(rng), u(rng) * 0.5};
    Cplx b{bpos(rng), u(rng) * 0.5};
    Cplx z{u(rng), u(rng) * 0.5};
    ParamsM p{a, b, z};
    MethodResult results[4] = {m_taylor_a(p), m_taylor_b(p), m_single_fraction(p),
                               m_buchholz(p)};
    for (int x = 0; x < 4; ++x) {
      for (int y = x + 1; y < 4; ++y) {
        if (!results[x].ok() || !results[y].ok()) continue;
        if (results[x].est_error > 1e-12 || results[y].est_error > 1e-12) continue;
        CHECK(rel(results[x].value, results[y].value) < 1e-11);
        ++compared;
      }
    }
  }
  CHECK(compared > 300);
}

TEST_CASE("direct regularized sum handles b at non-positive integers") {
  // M(1;0;1): first term vanishes, series sums to e
  MethodResult r = m_taylor_a({1, 0, 1});
  REQUIRE(r.ok());
  CHECK(digits(r.value, oracle::M_1_0_1) >= 14);

  MethodResult r34 = m_taylor_b({1, 1e-12, 1});
  REQUIRE(r34.ok());
  CHECK(rel(r34.value, Cplx{2.718281828459448888, 0}) < 1e-13);
}
