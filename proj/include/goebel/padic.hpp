#pragma once

// Residue-with-budget state machine for deciding p-integrality of g(n)
// without ever forming the (astronomically large) exact values.
//
// Fix a prime p and an initial budget r >= 1.  The state after step n is
// either the failure mark (g(n) is not p-integral -- absorbing), or a residue
//
//     a(n) = g(n) mod p^b(n),   b(n) = r - nu_p(n!),
//
// i.e. we know g(n) in Z_(p) to b(n) remaining p-adic digits.  One step:
// writing v = nu_p(n), the recurrence (n) g(n) = g(n-1) ((n-1) + g(n-1)^(k-1))
// forces
//
//     u = a(n-1) ((n-1) + a(n-1)^(k-1))  mod p^(b(n-1));
//     if p^v does not divide u            -> failure mark,
//     else a(n) = (u / p^v) (n / p^v)^(-1) mod p^(b(n)),  b(n) = b(n-1) - v.
//
// With r = nu_p(n!) the state at n is the failure mark exactly when
// g(n) is not in Z_(p), which yields
//
//     N(k,l) = min { n : some prime p <= n fails at n }.
//
// Running with any budget >= nu_p(n!) gives the same verdicts at every step
// up to n (each divisibility test is mod p^v with v <= the remaining budget
// on either run), which is what lets compute_N reuse runs across growing n,
// re-running a prime only when its required budget outgrows the current one.

#include "goebel/rational.hpp"
#include "goebel/report.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace goebel {

struct PrimePowerContext {
    std::uint64_t p;
    std::uint32_t r;

    PrimePowerContext(std::uint64_t p_, std::uint32_t r_);
};

struct PadicState {
    bool failed = false;
    mpz_class residue = 0;     // canonical, in [0, p^budget); 0 once failed
    std::int64_t budget = 0;   // b(n) = r - nu_p(n!); 0 once failed

    static PadicState failure() { return {true, 0, 0}; }
    static PadicState make(mpz_class a, std::int64_t b) {
        return {false, std::move(a), b};
    }
    bool operator==(const PadicState&) const = default;
};

class budget_underflow : public std::logic_error {
public:
    budget_underflow(std::uint64_t p, std::uint32_t r, std::uint32_t n)
        : std::logic_error("p-adic budget underflow: nu_" + std::to_string(p) +
                           "(" + std::to_string(n) + "!) exceeds r = " +
                           std::to_string(r)),
          offending_n(n) {}
    std::uint32_t offending_n;
};

// One transition, taking the state at n-1 to the state at n (n >= 2).
// Failure is absorbing and exempt from budget accounting; a Residue state
// whose budget would drop below zero raises budget_underflow.
PadicState padic_step(const PrimePowerContext& ctx, const GoebelParams& params,
                      std::uint32_t n, const PadicState& prev);

// State after n steps from a(1) = l mod p^r.  Memoized per (k,l,p,r).
PadicState padic_eval(const PrimePowerContext& ctx, const GoebelParams& params,
                      std::uint32_t n);

// Incremental runner used by the scans; not memoized.
class PadicRun {
public:
    PadicRun(const GoebelParams& params, const PrimePowerContext& ctx);

    std::uint32_t n() const { return n_; }
    const PadicState& state() const { return state_; }
    void advance();                    // one step
    void advance_to(std::uint32_t n);  // forward only

private:
    GoebelParams params_;
    PrimePowerContext ctx_;
    std::vector<mpz_class> pw_;  // pw_[i] = p^i, i = 0..r
    std::uint32_t n_ = 1;
    PadicState state_;
};

// N(k,l) = smallest n <= cap with g(n) not an integer, or nullopt
// ("exceeds-cap").  For k = 1 or l = 1 the sequence is constant and integral,
// so the result is always nullopt.
std::optional<std::uint32_t> compute_N(const GoebelParams& params,
                                       std::uint32_t cap = 5000);

// Parameter box for check_key_lemma.
struct LemmaRanges {
    std::uint32_t k_lo = 1, k_hi = 6;
    std::uint32_t l_lo = 1, l_hi = 6;
    std::uint32_t n_hi = 7;
};

// Verifies, against the exact oracle, the four localization properties the
// index scans rely on, at prime p and exponent r (callers pass r = nu_p(N!)
// for the horizon N = ranges.n_hi):
//   1. n < p implies g(n) is p-integral;
//   2. once g(n) is not p-integral, neither is g(n+1);
//   3. k1, k2 >= r with k1 = k2 mod phi(p^r): same p-integrality verdict at
//      every n, and nu_p(difference) >= r - nu_p(n!) while integral;
//   4. l1 = l2 mod p^r: same verdicts, same difference bound.
// Returns one report per claim.
std::vector<VerdictReport> check_key_lemma(const LemmaRanges& ranges,
                                           std::uint64_t p, std::uint32_t r,
                                           const DigitBudget& budget = {});

}  // namespace goebel
