#include <doctest.h>

#include <gmpxx.h>

#include <cstdint>
#include <optional>

#include "goebel/exact.hpp"
#include "goebel/numtheory.hpp"
#include "goebel/padic.hpp"
#include "goebel/rational.hpp"

using namespace goebel;

namespace {

// Residue of an exact rational mod p^b (b >= 1), defined whenever the
// denominator is a p-adic unit.
mpz_class exact_residue(const mpq_class& x, std::uint64_t p, std::int64_t b) {
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), p, static_cast<unsigned long>(b));
  mpz_class num = x.get_num() % mod;
  if (num < 0) num += mod;
  return num * mod_inverse(x.get_den() % mod, mod) % mod;
}

}  // namespace

TEST_CASE("residue machine agrees with the exact oracle") {
  // Beyond-doubt ground truth on a small box: every verdict and every
  // residue the machine reports must match the exact rational reduced
  // mod p^b(n), b(n) = r - nu_p(n!).
  for (std::uint32_t k : {2u, 3u, 4u, 7u}) {
    for (std::uint32_t l : {2u, 3u, 5u}) {
      GoebelParams params{k, l};
      // Clamp the horizon to what the exact oracle can represent: the
      // values grow like C^(k^n), so large k caps out early.
      std::uint32_t top = max_feasible_n(params, 10);
      REQUIRE(top >= 7);
      auto xs = eval_prefix(params, top);
      for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        std::uint32_t r = static_cast<std::uint32_t>(
            std::max<std::uint64_t>(2, nu_p_factorial(p, top) + 1));
        PrimePowerContext ctx(p, r);
        PadicRun run(params, ctx);
        for (std::uint32_t n = 1; n <= top; ++n) {
          if (n > 1) run.advance();
          const PadicState& st = run.state();
          bool integral = nu_p(p, xs[n - 1]) >= 0;
          CHECK(st.failed == !integral);
          if (!st.failed && st.budget > 0)
            CHECK(st.residue == exact_residue(xs[n - 1], p, st.budget));
        }
      }
    }
  }
}

TEST_CASE("budget drains by the factorial valuation") {
  // b(n) = r - nu_p(n!) while no failure occurs.
  GoebelParams params{2, 2};
  PrimePowerContext ctx(3, 5);
  PadicRun run(params, ctx);
  for (std::uint32_t n = 1; n <= 12; ++n) {
    if (n > 1) run.advance();
    CHECK(run.state().budget ==
          5 - static_cast<std::int64_t>(nu_p_factorial(3, n)));
    CHECK_FALSE(run.state().failed);
  }
}

TEST_CASE("worked single states") {
  // g(3) = 5 for k=4, l=4?  Evaluate one specific residue directly:
  // k=4, l=4: g(2) = 4 (1 + 4^3) / 2 = 130, g(3) = 130 (2 + 130^3) / 3.
  GoebelParams params{4, 4};
  auto xs = eval_prefix(params, 3);
  CHECK(xs[1] == 130);
  PrimePowerContext ctx(13, 2);
  PadicState st = padic_eval(ctx, params, 2);
  CHECK_FALSE(st.failed);
  CHECK(st.budget == 2);
  CHECK(st.residue == 130 % 169);
}

TEST_CASE("failure is absorbing") {
  GoebelParams params{2, 3};  // first failure at n = 7, at p = 7
  PrimePowerContext ctx(7, 3);
  PadicRun run(params, ctx);
  for (std::uint32_t n = 2; n <= 6; ++n) run.advance();
  CHECK_FALSE(run.state().failed);
  run.advance();
  CHECK(run.state().failed);
  for (std::uint32_t n = 8; n <= 20; ++n) {
    run.advance();
    CHECK(run.state().failed);
    CHECK(run.state().residue == 0);
    CHECK(run.state().budget == 0);
  }
}

TEST_CASE("no failure can start below p") {
  // nu_p(n!) = 0 for n < p, so the machine keeps full budget and a
  // clean verdict there.
  GoebelParams params{2, 2};
  PrimePowerContext ctx(43, 2);
  PadicRun run(params, ctx);
  for (std::uint32_t n = 2; n < 43; ++n) {
    run.advance();
    CHECK_FALSE(run.state().failed);
    CHECK(run.state().budget == 2);
  }
  run.advance();  // the step into n = 43
  CHECK(run.state().failed);
}

TEST_CASE("first non-integral indices match the published anchors") {
  CHECK(compute_N(GoebelParams{2, 2}) == 43);
  CHECK(compute_N(GoebelParams{3, 2}) == 89);
  CHECK(compute_N(GoebelParams{2, 3}) == 7);
  CHECK(compute_N(GoebelParams{17, 17}) == 59);
  CHECK(compute_N(GoebelParams{11, 15}) == 1097);
  CHECK(compute_N(GoebelParams{6, 10}) == 347);
  // Cap semantics: never-failing parameters report exceeds-cap.
  CHECK(compute_N(GoebelParams{2, 2}, 42) == std::nullopt);
  CHECK(compute_N(GoebelParams{1, 9}, 100) == std::nullopt);
}

TEST_CASE("naive and residue-machine scans agree where both reach") {
  DigitBudget budget{1u << 22};
  for (std::uint32_t k : {2u, 3u, 4u}) {
    for (std::uint32_t l : {3u, 4u, 6u, 9u}) {
      GoebelParams params{k, l};
      std::uint32_t horizon = max_feasible_n(params, 25, budget);
      REQUIRE(horizon >= 7);
      auto fast = compute_N(params, horizon);
      auto slow = naive_N(params, horizon, budget);
      INFO("k=" << k << " l=" << l << " horizon=" << horizon);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("localization laws hold on a small box") {
  for (std::uint64_t p : {2u, 5u, 11u}) {
    LemmaRanges ranges;
    ranges.k_lo = 1;
    ranges.k_hi = 6;
    ranges.l_lo = 1;
    ranges.l_hi = 6;
    ranges.n_hi = 7;
    std::uint32_t r = static_cast<std::uint32_t>(
        std::max<std::uint64_t>(1, nu_p_factorial(p, ranges.n_hi)));
    auto reports = check_key_lemma(ranges, p, r);
    REQUIRE(reports.size() == 4);
    for (const auto& rep : reports) {
      INFO(rep.claim);
      CHECK(rep.pass);
      CHECK(rep.counterexamples.empty());
    }
  }
}
