#pragma once

// Growth analysis for the (k,l) recurrence.  The sequence satisfies
//
//   g(n) = C^(k^n) * n^(1/(k-1)) * (1 + a_1/n + a_2/n^2 + ...) * (1 - delta(n))
//
// for a growth constant C = C(k,l) > 1, rational coefficients a_r that
// depend only on k, and an exponentially small defect delta(n).  This
// header provides:
//
//   * exact rational computation of the expansion coefficients a_r,
//   * the k-th power-product constant sigma_k (the k = 2 case is the
//     classical quadratic recurrence constant),
//   * rigorously bounded evaluation of log g(n), C, C(n) = g(n)^(1/k^n),
//     the defect, and the expansion residuals.
//
// Every floating-point result is returned as a HighPrecReal carrying an
// absolute error bound that accounts for series truncation and for
// floating-point rounding.  Headline constants are computed twice at
// staggered precision; a disagreement beyond the combined bounds raises
// precision_failure.

#include "goebel/rational.hpp"
#include "goebel/real.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace goebel {

// ---------------------------------------------------------------------
// Exact expansion coefficients.
//
// The polynomial factor B(n) = 1 + sum_{r>=1} a_r n^-r obeys
// log B(n) = sum_{i>=1} c_i n^-i with c_i = (-1)^(i+1) S_i(k) / i, where
// S_i(k) = sum_{m>=1} m^i k^-m is the geometric power sum evaluated by
// power_sum_geometric().  The coefficients depend on k only.

// a_{k,r}; r = 0 gives 1.  Requires k >= 2.  Cached, thread-safe.
// Computed by the defining partition-multiplicity sum
//   a_r = sum over partitions r = sum_i i*m_i of prod_i c_i^(m_i) / m_i!
// in exact rational arithmetic.
mpq_class asym_coeff(std::uint32_t k, std::uint32_t r);

// Same value through the formal exp of log B(n): the Cauchy-product
// recurrence r a_r = sum_{i=1}^{r} i c_i a_{r-i}.  An independent route
// used to cross-check asym_coeff.
mpq_class asym_coeff_recurrence(std::uint32_t k, std::uint32_t r);

// The order-R growth model bundled for serialization: the constant C
// and the coefficients a_0..a_R.  The coefficients depend on k only;
// the constant depends on both k and l.
struct AsymptoticExpansion {
  std::uint32_t k = 2;
  std::uint32_t l = 2;
  HighPrecReal constant;          // C
  std::vector<mpq_class> coeffs;  // a_0..a_R, a_0 = 1
};
AsymptoticExpansion build_expansion(const GoebelParams& params,
                                    std::uint32_t order, std::size_t digits);

// ---------------------------------------------------------------------
// Power-product constants.

// s(0) = 1, s(n) = n * s(n-1)^2: exact integer companion sequence whose
// growth is governed by sigma_2.
mpz_class somos_sequence(std::uint32_t n, const DigitBudget& budget = {});

// sigma_k = exp( sum_{m>=2} log(m) / k^m ), k >= 2.
HighPrecReal somos_constant(std::uint32_t k, std::size_t digits);

// Rigorous upper bound for the log-weighted geometric tail
// sum_{m >= s} log(m) / k^m (s clamped up to 2), the truncation bound
// every series split in this module relies on.  Derived from
// log(m) <= log(s) + (m - s)/s for m >= s >= 2.
Real geom_log_tail_upper(std::uint32_t k, std::uint64_t s);

// ---------------------------------------------------------------------
// Log-space evaluation of g.

// log g(n) with a rigorous absolute error bound.  Uses the exact
// rational value whenever it fits a fixed internal budget and otherwise
// advances the log-space recurrence
//
//   L(n+1) = k L(n) + log1p(n e^(-(k-1) L(n))) - log(n+1)
//
// from the largest exact seed.  Requires k, l >= 2.
HighPrecReal log_g(const GoebelParams& params, std::uint32_t n,
                   std::size_t digits);

// True when log_g(params, n, ...) is evaluated directly from the exact
// rational value rather than through the log-space recurrence.
bool log_g_is_exact(const GoebelParams& params, std::uint32_t n);

// ---------------------------------------------------------------------
// The growth constant.

// log C computed by truncating the telescoped limit
//   log C = L(N)/k^N + sum_{m>=N} k^-(m+1) [log1p(m g(m)^(1-k)) - log(m+1)]
// at index N ("depth"), with analytic bounds for both dropped tails.
// depth = 0 picks N automatically from the digit target; an explicit
// depth is honoured by both staggered-precision runs.
HighPrecReal goebel_log_constant(const GoebelParams& params,
                                 std::size_t digits, std::uint32_t depth = 0);

// C itself (exp of the above).
HighPrecReal goebel_constant(const GoebelParams& params, std::size_t digits,
                             std::uint32_t depth = 0);

// C(n) = g(n)^(1/k^n).  Strictly decreasing in n with limit C.
HighPrecReal C_of_n(const GoebelParams& params, std::uint32_t n,
                    std::size_t digits);

// ---------------------------------------------------------------------
// Defect and expansion residuals.

// The exponentially small defect
//   eps(n) = sum_{j>=0} k^-(j+1) log1p( (n+j) g(n+j)^(1-k) ),
// which measures how far log g(n) sits below the smooth model
//   k^n log C + sum_{j>=0} k^-(j+1) log(n+1+j).
// Truncation is driven by the requested digits relative to the leading
// term; every dropped tail is covered by the returned error bound.
HighPrecReal epsilon_defect(const GoebelParams& params, std::uint32_t n,
                            std::size_t digits);

// rho_R(n) = (g(n) C^(-k^n) n^(-1/(k-1)) - sum_{r=0}^R a_r n^-r) * n^(R+1).
// As n grows this tends to a_{R+1}; it is the standard empirical check
// that the expansion coefficients are right.
HighPrecReal residual_coeff(const GoebelParams& params, std::uint32_t n,
                            std::uint32_t order, std::size_t digits);

// Side-by-side comparison of log g(n) with the order-R model
//   log model = k^n log C + log(n)/(k-1) + log(sum_{r=0}^R a_r n^-r).
struct ExpansionEval {
  std::uint32_t n = 0;
  std::uint32_t order = 0;
  bool exact_source = false;  // log g from exact value vs. recurrence
  HighPrecReal log_actual;
  HighPrecReal log_model;
  HighPrecReal ratio;  // g(n) / model, i.e. exp(log_actual - log_model)
};
ExpansionEval expansion_eval(const GoebelParams& params, std::uint32_t n,
                             std::uint32_t order, std::size_t digits);

// Scaled-residual table for a list of indices: row n carries rho_R(n)
// at the single requested order R and records whether log g(n) came
// from the exact value.  Boundedness of rho_R over a growing range is
// the empirical signature that the order-R model is correct.
struct ConvergenceRow {
  std::uint32_t n = 0;
  bool exact_source = false;
  HighPrecReal rho;
};
std::vector<ConvergenceRow> convergence_report(
    const GoebelParams& params, const std::vector<std::uint32_t>& ns,
    std::uint32_t order, std::size_t digits);

// ---------------------------------------------------------------------
// Elementary lower bound on the growth rate.
//
// The companion sequence t(base) = t0, t(m+1) = t(m)^k / (m+1) drops the
// additive n term of the main recurrence, so once it sits below g it
// stays below: t(n) <= g(n) for all n >= max(base, 1).  With the default
// base = 0 the entry condition is l >= t0^k (then t(1) = t0^k <= g(1));
// for a rebased run with base >= 1 it is t0 <= g(base).  The rebased
// limit
//
//   lambda = log(t0)/k^base - sum_{m>=base} log(m+1)/k^(m+1)
//
// equals lim log t(n) / k^n; when lambda > 0 this certifies that g(n)
// grows at least like exp(lambda)^(k^n), i.e. C >= exp(lambda) > 1.
// For base = 0 this reads lambda = log t0 - log sigma_k, which is why
// the constants sigma_k decide which seeds are strong enough.
struct LowerBoundReport {
  bool precondition_ok = false;  // l >= t0^k (base 0) / t0 <= g(base),
                                 // checked in exact arithmetic
  bool domination_ok = false;    // t(n) <= g(n) for max(base,1) <= n <= checked_to
  std::uint32_t checked_to = 0;
  HighPrecReal lambda;
  bool conclusive = false;  // precondition, domination, and lambda - err > 0
};
LowerBoundReport check_lower_bound(const GoebelParams& params,
                                   const mpq_class& t0, std::uint32_t n_max,
                                   std::size_t digits, std::uint32_t base = 0);

}  // namespace goebel
