#include <doctest.h>

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "goebel/asymptotics.hpp"
#include "goebel/eulerian.hpp"
#include "goebel/exact.hpp"
#include "goebel/format.hpp"
#include "goebel/real.hpp"

using namespace goebel;

namespace {

mpq_class q(long num, long den = 1) { return mpq_class(num, den); }

double approx(const Real& x) { return mpfr_get_d(x.raw(), MPFR_RNDN); }

// |x - want| < tol, with x's own tracked error also under tol.
void check_close(const HighPrecReal& x, double want, double tol) {
  CHECK(approx(abs(x.value - Real::of_double(want, 64))) < tol);
  CHECK(approx(x.err) < tol);
}

}  // namespace

TEST_CASE("expansion coefficients for k = 2") {
  // a_0..a_8 = 1, 2, -1, 4, -21, 138, -1091, 10088, -106918.
  std::vector<mpq_class> want{q(1),    q(2),     q(-1),   q(4),    q(-21),
                              q(138),  q(-1091), q(10088), q(-106918)};
  for (std::uint32_t r = 0; r < want.size(); ++r)
    CHECK(asym_coeff(2, r) == want[r]);
}

TEST_CASE("partition sum and exponential recurrence agree") {
  for (std::uint32_t k = 2; k <= 5; ++k)
    for (std::uint32_t r = 0; r <= 10; ++r)
      CHECK(asym_coeff(k, r) == asym_coeff_recurrence(k, r));
}

TEST_CASE("closed forms in k for the first five orders") {
  for (std::uint32_t kk = 2; kk <= 10; ++kk) {
    mpq_class k(kk);
    mpq_class km1 = k - 1;
    mpq_class km1_2 = km1 * km1;
    mpq_class km1_4 = km1_2 * km1_2;
    mpq_class km1_6 = km1_4 * km1_2;
    mpq_class km1_8 = km1_4 * km1_4;
    mpq_class km1_10 = km1_8 * km1_2;
    mpq_class k2 = k * k, k3 = k2 * k, k4 = k3 * k, k5 = k4 * k, k6 = k5 * k,
              k7 = k6 * k, k8 = k7 * k;

    CHECK(asym_coeff(kk, 1) == k / km1_2);
    CHECK(asym_coeff(kk, 2) == -k * (k2 - k - 1) / (2 * km1_4));
    CHECK(asym_coeff(kk, 3) ==
          k * (2 * k4 + k3 - 11 * k2 + 7 * k + 2) / (6 * km1_6));
    CHECK(asym_coeff(kk, 4) ==
          -k *
              (6 * k6 + 37 * k5 - 124 * k4 + 53 * k3 + 92 * k2 - 59 * k - 6) /
              (24 * km1_8));
    CHECK(asym_coeff(kk, 5) ==
          k *
              (24 * k8 + 478 * k7 - 1013 * k6 - 1324 * k5 + 4411 * k4 -
               2724 * k3 - 453 * k2 + 578 * k + 24) /
              (120 * km1_10));
  }
}

TEST_CASE("coefficients are independent of l and finite at every order") {
  AsymptoticExpansion e22 = build_expansion(GoebelParams{2, 2}, 6, 25);
  AsymptoticExpansion e23 = build_expansion(GoebelParams{2, 3}, 6, 25);
  REQUIRE(e22.coeffs.size() == 7);
  CHECK(e22.coeffs == e23.coeffs);
  CHECK(e22.coeffs[0] == 1);
  for (std::uint32_t r = 0; r <= 6; ++r)
    CHECK(e22.coeffs[r] == asym_coeff(2, r));
  // The bundled constant matches the standalone computation.
  HighPrecReal c = goebel_constant(GoebelParams{2, 2}, 25);
  CHECK(e22.constant.consistent_with(c));
  // ... while the constants for different l differ beyond their bounds.
  HighPrecReal c23 = goebel_constant(GoebelParams{2, 3}, 25);
  CHECK_FALSE(e23.constant.consistent_with(c));
  CHECK(e23.constant.consistent_with(c23));
}

TEST_CASE("log-weighted geometric tail bound vs brute sums") {
  // geom_log_tail_upper(k, s) must bound sum_{m>=s} log(m)/k^m from
  // above without being vacuous.  The brute partial sum (a lower bound
  // of the true tail) must sit below it; 25% headroom above the partial
  // sum must sit above it.
  for (std::uint32_t k : {2u, 3u, 5u}) {
    for (std::uint64_t s : {2u, 5u, 10u, 30u}) {
      Real brute(256);
      mpfr_set_ui(brute.raw(), 0, MPFR_RNDN);
      Real kpow = pow_ui(Real::of_ui(k, 256), s);
      for (std::uint64_t m = s; m < s + 400; ++m) {
        brute = brute + log(Real::of_ui(static_cast<unsigned long>(m), 256)) / kpow;
        kpow = mul_z(kpow, mpz_class(k));
      }
      Real bound = geom_log_tail_upper(k, s);
      INFO("k=" << k << " s=" << s);
      CHECK(approx(bound) > approx(brute));
      CHECK(approx(bound) < 1.25 * approx(brute));
    }
  }
}

TEST_CASE("power-product constant: digit strings and companions") {
  // Ten fixed decimals of sigma_2.
  HighPrecReal s2 = somos_constant(2, 10);
  CHECK(fixed_decimals(s2.value, 10) == "1.6616879496");
  CHECK(approx(s2.err) < 5e-11);
  // Thirty fixed decimals, frozen from two staggered-precision runs.
  HighPrecReal s2_30 = somos_constant(2, 30);
  CHECK(fixed_decimals(s2_30.value, 30) == "1.661687949633594121295818922750");
  CHECK(s2.consistent_with(s2_30));
  // sigma_3 cubed.
  HighPrecReal s3 = somos_constant(3, 15);
  check_close(HighPrecReal{s3.value * s3.value * s3.value, s3.err},
              1.546258877, 2e-9);
  // The integer companion: s(n) = n s(n-1)^2.
  CHECK(somos_sequence(0) == 1);
  CHECK(somos_sequence(1) == 1);
  CHECK(somos_sequence(2) == 2);
  CHECK(somos_sequence(3) == 12);
  CHECK(somos_sequence(4) == 576);
  CHECK(somos_sequence(5) == 1658880);
  // s(n)^(1/2^n) converges to sigma_2 from below; by n = 20 the gap is
  // under 1e-4 (and it shrinks with n).
  for (std::uint32_t n : {12u, 20u}) {
    mpz_class sn = somos_sequence(n);
    Real root = exp(mul_2si(log(Real::of_mpz(sn, 256)), -static_cast<long>(n)));
    Real gap = s2_30.value - root;
    CHECK(approx(gap) > 0);
    CHECK(approx(gap) < (n == 12 ? 2e-3 : 1e-4));
  }
}

TEST_CASE("growth constants: digit strings, self-consistency, finite proxies") {
  GoebelParams g22{2, 2}, g32{3, 2}, g23{2, 3};
  HighPrecReal c22 = goebel_constant(g22, 22);
  CHECK(fixed_decimals(c22.value, 22) == "1.0478314475764112295599");
  HighPrecReal c22b = goebel_constant(g22, 45);
  CHECK(c22.consistent_with(c22b));
  CHECK(approx(abs(c22.value - c22b.value)) < 1e-22);

  CHECK(fixed_decimals(goebel_constant(g32, 17).value, 17) ==
        "1.12011573144667003");
  CHECK(fixed_decimals(goebel_constant(g23, 17).value, 17) ==
        "1.17557908016593377");

  // An explicit series split point must agree with the automatic one.
  HighPrecReal c22d = goebel_constant(g22, 22, 40);
  CHECK(c22d.consistent_with(c22));

  // C(1) = l^(1/k): for (2,2) that is sqrt(2).
  HighPrecReal c1 = C_of_n(g22, 1, 30);
  Real root2 = sqrt(Real::of_ui(2, 256));
  CHECK(approx(abs(c1.value - root2)) < 1e-29);

  // The finite proxy sits above the limit by about 1e-7 at n = 25.
  HighPrecReal c25 = C_of_n(g22, 25, 25);
  Real gap = c25.value - c22b.value;
  CHECK(approx(gap) > 9e-8);
  CHECK(approx(gap) < 1.2e-7);
}

TEST_CASE("finite proxies decrease strictly toward the limit") {
  for (GoebelParams params : {GoebelParams{2, 2}, GoebelParams{3, 2},
                              GoebelParams{2, 3}}) {
    HighPrecReal limit = goebel_constant(params, 25);
    HighPrecReal prev = C_of_n(params, 1, 25);
    for (std::uint32_t n = 2; n <= 15; ++n) {
      HighPrecReal cur = C_of_n(params, n, 25);
      INFO("k=" << params.k << " l=" << params.l << " n=" << n);
      // Strict decrease, by more than the tracked error bounds.
      CHECK(approx(prev.value - cur.value) >
            approx(prev.err) + approx(cur.err));
      // Strictly above both 1 and the limit.
      CHECK(approx(cur.value - limit.value) > 0);
      prev = cur;
    }
    CHECK(approx(limit.value) > 1.0);
    CHECK(approx(limit.value - Real::of_ui(1, 64) - limit.err) > 0);
  }
}

TEST_CASE("log-space evaluation: seam and scale") {
  GoebelParams g22{2, 2};
  // Exact-value route up to the internal seed cap, recurrence beyond.
  CHECK(log_g_is_exact(g22, 28));
  CHECK_FALSE(log_g_is_exact(g22, 29));
  // Against the exact rational where one exists.
  for (std::uint32_t n : {5u, 12u, 20u}) {
    auto [lv, le] = log_of_mpq(eval_exact(g22, n), 256);
    HighPrecReal lg = log_g(g22, n, 40);
    CHECK(approx(abs(lg.value - lv)) <
          approx(lg.err) + approx(le) + 1e-38);
  }
  // Across the seam the recurrence keeps a tight bound.
  HighPrecReal big = log_g(g22, 100, 12);
  check_close(big, 5.92281100374e+28, 2e+17);  // 12 significant digits
  CHECK(approx(big.err) / 5.9e28 < 1e-11);
}

TEST_CASE("defect epsilon: frozen value, defining identity, rigorous bound") {
  GoebelParams g22{2, 2};
  HighPrecReal eps8 = epsilon_defect(g22, 8, 30);
  check_close(eps8, 2.577520645e-6, 1e-15);

  // Identity: log g(n) + eps(n) = k^n log C + sum_{j>=0} k^-(j+1)
  // log(n+1+j).  Assemble the right side with a rigorously bounded tail
  // and compare within the tracked errors.
  for (std::uint32_t n : {5u, 8u}) {
    auto [lg, lg_err] = log_of_mpq(eval_exact(g22, n), 512);
    HighPrecReal eps = epsilon_defect(g22, n, 40);
    HighPrecReal logc = goebel_log_constant(g22, 50);
    Real lhs = lg + eps.value;

    Real series(512);
    mpfr_set_ui(series.raw(), 0, MPFR_RNDN);
    const std::uint32_t J = 220;
    Real kpow = Real::of_ui(2, 512);  // k^(j+1) at j = 0
    for (std::uint32_t j = 0; j < J; ++j) {
      series = series + log(Real::of_ui(n + 1 + j, 512)) / kpow;
      kpow = mul_2si(kpow, 1);
    }
    // sum_{j>=J} 2^-(j+1) log(n+1+j) = 2^n sum_{m>=n+1+J} log(m)/2^m.
    Real tail = mul_2si(geom_log_tail_upper(2, n + 1 + J), n);
    Real rhs = mul_2si(logc.value, n) + series;

    Real slack = eps.err + Real::of_double(1e-100, 64) + tail + lg_err +
                 mul_2si(logc.err, n);
    CHECK(approx(abs(lhs - rhs)) <= approx(slack));
  }

  // eps(n) is positive and below n g(n)^(1-k) k/(k-1)^2: every series
  // term k^-(j+1) log1p((n+j) g(n+j)^(1-k)) is at most
  // k^-(j+1) (n+j) g(n)^(1-k), and the affine-geometric sum closes.
  // The quantities underflow double almost immediately, so the whole
  // comparison stays in exact-rational / multiprecision arithmetic.
  for (GoebelParams params : {GoebelParams{2, 2}, GoebelParams{3, 2},
                              GoebelParams{2, 3}}) {
    for (std::uint32_t n = 5; n <= 10; ++n) {
      HighPrecReal eps = epsilon_defect(params, n, 25);
      CHECK(eps.value.sign() > 0);
      mpq_class gn = eval_exact(params, n);
      mpq_class gpow = 1;
      for (std::uint32_t i = 1; i < params.k; ++i) gpow *= gn;
      mpq_class km1(params.k - 1);
      mpq_class bound_q =
          mpq_class(n) * params.k / (gpow * km1 * km1);
      Real bound = Real::of_mpq(bound_q, 128);
      INFO("k=" << params.k << " l=" << params.l << " n=" << n);
      CHECK(eps.value + eps.err < bound);
    }
  }
}

TEST_CASE("scaled residuals stay bounded at order 5") {
  GoebelParams g22{2, 2};
  std::vector<std::uint32_t> ns;
  for (std::uint32_t n = 14; n <= 22; ++n) ns.push_back(n);
  auto rows = convergence_report(g22, ns, 5, 25);
  REQUIRE(rows.size() == 9);
  for (const auto& row : rows) CHECK(row.exact_source);
  // Frozen anchor for the first row.
  check_close(rows.front().rho, -671.500086853857446, 1e-9);
  // Bounded, not growing: the late window exceeds the early one by
  // well under a factor two.
  double early = 0, late = 0;
  for (int i = 0; i < 4; ++i)
    early = std::max(early, std::abs(approx(rows[i].rho.value)));
  for (int i = 5; i < 9; ++i)
    late = std::max(late, std::abs(approx(rows[i].rho.value)));
  CHECK(late <= 2.0 * early);
}

TEST_CASE("scaled residuals approach the next coefficient") {
  GoebelParams g22{2, 2};
  // rho_R(n) -> a_{R+1}; at n = 70 every order 0..3 is within 10%.
  for (std::uint32_t R = 0; R <= 3; ++R) {
    HighPrecReal rho = residual_coeff(g22, 70, R, 40);
    double want = mpq_class(asym_coeff(2, R + 1)).get_d();
    INFO("R=" << R);
    CHECK(std::abs(approx(rho.value) / want - 1.0) < 0.10);
  }
  // Same shape for k = 3 at order 2: toward a_{3,3} = 113/128.
  HighPrecReal rho32 = residual_coeff(GoebelParams{3, 2}, 40, 2, 30);
  CHECK(std::abs(approx(rho32.value) / (113.0 / 128.0) - 1.0) < 0.10);
  // And the convergence is visible: n = 40 sits closer than n = 20.
  HighPrecReal rho32_20 = residual_coeff(GoebelParams{3, 2}, 20, 2, 30);
  CHECK(std::abs(approx(rho32.value) - 113.0 / 128.0) <
        std::abs(approx(rho32_20.value) - 113.0 / 128.0));
}

TEST_CASE("model comparison at a single index") {
  GoebelParams g22{2, 2};
  ExpansionEval ev = expansion_eval(g22, 20, 6, 30);
  CHECK(ev.n == 20);
  CHECK(ev.order == 6);
  CHECK(ev.exact_source);
  // |g / model - 1| is below 2 |a_7| / 20^7.
  double dev = std::abs(approx(ev.ratio.value) - 1.0);
  CHECK(dev < 2 * 10088.0 / 1.28e9);
  CHECK(dev > 1e-7);  // and the deviation is genuine, not zero
  // Far beyond the exact range the recurrence route takes over.
  ExpansionEval far = expansion_eval(g22, 70, 3, 30);
  CHECK_FALSE(far.exact_source);
  CHECK(std::abs(approx(far.ratio.value) - 1.0) < 1e-5);
}

TEST_CASE("seed certificates for the growth lower bound") {
  GoebelParams g22{2, 2}, g32{3, 2}, g23{2, 3};

  // (3,2) seeded at 5/4: conclusive, lambda = log(5/4) - log sigma_3.
  LowerBoundReport lb = check_lower_bound(g32, q(5, 4), 12, 30);
  CHECK(lb.precondition_ok);
  CHECK(lb.domination_ok);
  CHECK(lb.checked_to == 12);
  CHECK(lb.conclusive);
  check_close(lb.lambda, 0.07786408949850862, 1e-15);

  // (2,3) seeded at 17/10: conclusive.
  lb = check_lower_bound(g23, q(17, 10), 12, 30);
  CHECK(lb.conclusive);
  check_close(lb.lambda, 0.02279432819373200, 1e-15);

  // (2,2) rebased at n = 3 with seed 5 = g(3): conclusive, tiny margin.
  lb = check_lower_bound(g22, q(5), 12, 30, 3);
  CHECK(lb.precondition_ok);
  CHECK(lb.conclusive);
  check_close(lb.lambda, 0.003959147409324193, 1e-15);
  CHECK(approx(lb.lambda.value - lb.lambda.err) > 0);

  // (2,2) seeded at 7/5: domination holds but the limit is negative,
  // so the certificate is honestly inconclusive.
  lb = check_lower_bound(g22, q(7, 5), 12, 30);
  CHECK(lb.precondition_ok);
  CHECK(lb.domination_ok);
  CHECK_FALSE(lb.conclusive);
  check_close(lb.lambda, -0.1713616862472255, 1e-15);

  // A seed too large for the entry condition fails the precondition.
  lb = check_lower_bound(g22, q(3, 2), 12, 30);  // (3/2)^2 = 9/4 > 2
  CHECK_FALSE(lb.precondition_ok);
  CHECK_FALSE(lb.conclusive);

  // When the companion values outgrow the internal size budget the
  // report says how far it actually checked instead of overclaiming.
  lb = check_lower_bound(g32, q(5, 4), 40, 30);
  CHECK(lb.checked_to >= 10);
  CHECK(lb.checked_to < 40);
  CHECK(lb.conclusive);  // lambda and the checked range still certify
}
