#pragma once

// Exact evaluation of the (k,l) recurrence
//
//     g(1) = l,   (n+1) g(n+1) = g(n) (n + g(n)^(k-1)),
//
// over the rationals.  This is the ground-truth oracle the rest of the
// library is validated against; no floating point is used here.  Values grow
// doubly exponentially (roughly C^(k^n) for a constant C > 1), so every entry
// point takes a DigitBudget and raises budget_exceeded once a value's bit
// size passes it.  Results per (k,l) are memoized behind a lock; all
// functions are safe to call concurrently.

#include "goebel/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace goebel {

// g(n) for n >= 1.
mpq_class eval_exact(const GoebelParams& params, std::uint32_t n,
                     const DigitBudget& budget = {});

// [g(1), ..., g(n_max)].
std::vector<mpq_class> eval_prefix(const GoebelParams& params,
                                   std::uint32_t n_max,
                                   const DigitBudget& budget = {});

// Largest n <= n_max whose value fits the budget (0 if none).  Never throws
// budget_exceeded; used to size oracle comparisons.
std::uint32_t max_feasible_n(const GoebelParams& params, std::uint32_t n_max,
                             const DigitBudget& budget = {});

// Smallest n <= cap with g(n) not an integer, or nullopt ("exceeds-cap") if
// every g(n), n <= cap, is integral.  Requires k, l >= 2 (for k = 1 or l = 1
// the sequence is constant and every index is integral).
std::optional<std::uint32_t> naive_N(const GoebelParams& params,
                                     std::uint32_t cap,
                                     const DigitBudget& budget = {});

// Companion sequence t(base) = t0, t(m+1) = t(m)^k / (m+1), used for lower
// bounds on g.  Requires k >= 2, t0 > 1, n >= base.
mpq_class t_sequence(std::uint32_t k, const mpq_class& t0, std::uint32_t n,
                     const DigitBudget& budget = {}, std::uint32_t base = 0);

}  // namespace goebel
