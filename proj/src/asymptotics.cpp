#include "goebel/asymptotics.hpp"

#include "goebel/eulerian.hpp"
#include "goebel/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace goebel {

namespace {

constexpr std::uint64_t kSeedBudgetBits = 1ull << 25;
constexpr std::uint32_t kExactSeedCap = 28;

mpz_class ui_pow(std::uint32_t base, std::uint32_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Multiplicative head-room factor applied to every error bound that is
// assembled from round-to-nearest 64-bit operations: the handful of
// rounding steps involved stay far below one part in 10^12, so scaling
// by 1 + 1e-6 keeps the result a true upper bound.
const Real& slop() {
  static const Real* s = new Real(Real::of_double(1.000001, 64));
  return *s;
}

Real two_pow(long e) {
  Real r(64);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

Real log_ui(unsigned long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_log_ui(r.raw(), v, MPFR_RNDN);
  return r;
}

}  // namespace

// Upper bound for sum_{m >= s} log(m) / k^m, s >= 2, from
// log(m) <= log(s) + (m - s)/s.
Real geom_log_tail_upper(std::uint32_t k, std::uint64_t s) {
  if (s < 2) s = 2;
  const double km1 = static_cast<double>(k) - 1.0;
  Real inv = Real::of_ui(1, 64) / pow_ui(Real::of_ui(k, 64), s);
  Real main = log(Real::of_ui(s, 64)) * Real::of_double(k / km1, 64);
  Real corr = Real::of_double(k / (static_cast<double>(s) * km1 * km1), 64);
  return inv * (main + corr) * slop();
}

namespace {

// Upper bound for sum_{t >= 0} (c + t) k^-t = c k/(k-1) + k/(k-1)^2.
Real geom_affine_sum_upper(std::uint32_t k, double c) {
  const double km1 = static_cast<double>(k) - 1.0;
  return Real::of_double(c * k / km1 + k / (km1 * km1), 64) * slop();
}

// Upper bound for exp(-scale * max(low, 0))-style decay terms: computes
// exp(-scale * (L - errL)) and, if that underflows, substitutes a tiny
// representable ceiling (the true value is below the underflow
// threshold, so any representable value at the floor works as a bound).
Real upper_exp_neg(const Real& L, const Real& errL, std::uint32_t scale) {
  Real x = (L - errL) * Real::of_ui(scale, 64);
  mpfr_clear_flags();
  Real g = exp(-x);
  if (g.is_zero() || mpfr_underflow_p()) {
    Real floor_bound(64);
    mpfr_set_ui_2exp(floor_bound.raw(), 1, mpfr_get_emin() + 8, MPFR_RNDN);
    return floor_bound;
  }
  return g * slop();
}

// ---------------------------------------------------------------------
// Expansion coefficients.

// c_i = (-1)^(i+1) S_i(k) / i, the i-th coefficient of log B as a series
// in 1/n.
mpq_class log_series_coeff(std::uint32_t k, std::uint32_t i) {
  mpq_class c = power_sum_geometric(k, i) / mpz_class(i);
  if (i % 2 == 0) c = -c;
  c.canonicalize();
  return c;
}

std::mutex coeff_mutex;
std::map<std::uint32_t, std::vector<mpq_class>>& coeff_cache() {
  static auto* m = new std::map<std::uint32_t, std::vector<mpq_class>>;
  return *m;
}

}  // namespace

namespace {

// The partition-multiplicity sum for a_r: over all multiplicity vectors
// (m_1..m_r) >= 0 with sum_i i*m_i = r, the product over parts p used
// with multiplicity m of c_p^m / m!.  Parts are enumerated in
// decreasing order.
mpq_class coeff_by_partition(std::uint32_t k, std::uint32_t r) {
  if (r == 0) return mpq_class(1);
  std::vector<mpq_class> c(r + 1);
  for (std::uint32_t i = 1; i <= r; ++i) c[i] = log_series_coeff(k, i);
  std::function<mpq_class(std::uint32_t, std::uint32_t)> walk =
      [&](std::uint32_t rem, std::uint32_t max_part) -> mpq_class {
    if (rem == 0) return mpq_class(1);
    mpq_class total(0);
    for (std::uint32_t p = std::min(rem, max_part); p >= 1; --p) {
      mpq_class pw(1);
      mpz_class mfact(1);
      for (std::uint32_t m = 1; m * p <= rem; ++m) {
        pw *= c[p];
        mfact *= m;
        total += pw / mfact * walk(rem - m * p, p - 1);
      }
    }
    total.canonicalize();
    return total;
  };
  return walk(r, r);
}

std::map<std::uint32_t, std::vector<mpq_class>>& recurrence_cache() {
  static auto* m = new std::map<std::uint32_t, std::vector<mpq_class>>;
  return *m;
}

}  // namespace

mpq_class asym_coeff(std::uint32_t k, std::uint32_t r) {
  if (k < 2) throw std::domain_error("asym_coeff: requires k >= 2");
  std::lock_guard<std::mutex> lock(coeff_mutex);
  auto& a = coeff_cache()[k];
  while (a.size() <= r)
    a.push_back(coeff_by_partition(k, static_cast<std::uint32_t>(a.size())));
  return a[r];
}

mpq_class asym_coeff_recurrence(std::uint32_t k, std::uint32_t r) {
  if (k < 2) throw std::domain_error("asym_coeff_recurrence: requires k >= 2");
  std::lock_guard<std::mutex> lock(coeff_mutex);
  auto& a = recurrence_cache()[k];
  if (a.empty()) a.push_back(mpq_class(1));
  // exp of the log-series: R a_R = sum_{i=1}^{R} i c_i a_{R-i}.
  while (a.size() <= r) {
    const std::uint32_t R = static_cast<std::uint32_t>(a.size());
    mpq_class acc(0);
    for (std::uint32_t i = 1; i <= R; ++i)
      acc += mpz_class(i) * log_series_coeff(k, i) * a[R - i];
    acc /= mpz_class(R);
    acc.canonicalize();
    a.push_back(acc);
  }
  return a[r];
}

// ---------------------------------------------------------------------
// Power-product constants.

mpz_class somos_sequence(std::uint32_t n, const DigitBudget& budget) {
  mpz_class s(1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::uint64_t next_bits = 2 * mpz_sizeinbase(s.get_mpz_t(), 2) + 64;
    if (next_bits > budget.max_bits)
      throw budget_exceeded(i - 1, budget.max_bits);
    s = mpz_class(i) * s * s;
  }
  return s;
}

namespace {

HighPrecReal somos_once(std::uint32_t k, std::size_t digits_eff) {
  const mpfr_prec_t prec = bits_for_digits(digits_eff);
  const std::uint64_t M = static_cast<std::uint64_t>(std::ceil(
                              (static_cast<double>(digits_eff) + 10.0) *
                              std::log(10.0) / std::log(k))) +
                          4;
  Real S(prec);
  mpz_class kp(k);
  for (std::uint64_t m = 2; m <= M; ++m) {
    kp *= k;  // k^m
    S += div_z(log_ui(m, prec), kp);
  }
  Real tail = geom_log_tail_upper(k, M + 1);
  Real round_err = (abs(S) + Real::of_ui(2, 64)) *
                   Real::of_ui(static_cast<unsigned long>(M + 4), 64) *
                   two_pow(2 - static_cast<long>(prec));
  Real err_s = (tail + round_err) * slop();
  Real sigma = exp(S);
  Real err = Real::of_double(sigma.to_double() * 1.001, 64) * expm1(err_s) +
             sigma.ulp() * Real::of_ui(2, 64);
  return {std::move(sigma), err * slop()};
}

}  // namespace

HighPrecReal somos_constant(std::uint32_t k, std::size_t digits) {
  if (k < 2) throw std::domain_error("somos_constant: requires k >= 2");
  HighPrecReal a = somos_once(k, digits + 30);
  HighPrecReal b = somos_once(k, digits + 60);
  if (!a.consistent_with(b))
    throw precision_failure(
        "somos_constant: staggered-precision runs disagree beyond bounds");
  Real gap = abs(a.value - b.value);
  return {b.value, max(b.err, gap)};
}

// ---------------------------------------------------------------------
// Log-space ladder.

namespace {

struct Ladder {
  GoebelParams params;
  mpfr_prec_t prec = 64;
  std::uint32_t n = 1;
  Real L;    // log g(n) at prec
  Real err;  // absolute error bound
};

Ladder seed_ladder(const GoebelParams& p, mpfr_prec_t prec,
                   std::uint32_t want_n) {
  if (p.k < 2 || p.l < 2)
    throw std::domain_error(
        "log-space pipeline requires k >= 2 and l >= 2 (the sequence is "
        "constant otherwise)");
  std::uint32_t cap = std::min(want_n, kExactSeedCap);
  if (cap == 0) cap = 1;
  std::uint32_t n0 = max_feasible_n(p, cap, DigitBudget{kSeedBudgetBits});
  if (n0 == 0) n0 = 1;
  mpq_class g = eval_exact(p, n0, DigitBudget{kSeedBudgetBits});
  auto seeded = log_of_mpq(g, prec);
  Ladder lad;
  lad.params = p;
  lad.prec = prec;
  lad.n = n0;
  lad.L = std::move(seeded.first);
  lad.err = std::move(seeded.second);
  return lad;
}

// One step of L(n+1) = k L(n) + log1p(n e^(-(k-1)L(n))) - log(n+1).
// The derivative of the right-hand side with respect to L(n) lies in
// [1, k], so the propagated error grows by at most a factor k per step;
// rounding adds a few ulps of the result.
void ladder_advance(Ladder& lad) {
  const std::uint32_t n = lad.n;
  const std::uint32_t k = lad.params.k;
  Real t(lad.prec);
  mpfr_mul_ui(t.raw(), lad.L.raw(), k - 1, MPFR_RNDN);
  mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
  mpfr_clear_flags();
  Real u = exp(t);
  mpfr_mul_ui(u.raw(), u.raw(), n, MPFR_RNDN);
  const bool underflowed = mpfr_underflow_p() != 0;
  Real next(lad.prec);
  mpfr_mul_ui(next.raw(), lad.L.raw(), k, MPFR_RNDN);
  next += log1p(u);
  Real ln1(lad.prec);
  mpfr_log_ui(ln1.raw(), n + 1, MPFR_RNDN);
  next -= ln1;

  lad.err = Real::of_ui(k, 64) * lad.err +
            (abs(next) + Real::of_ui(16, 64)) *
                two_pow(5 - static_cast<long>(lad.prec));
  if (underflowed) {
    // The correction term was flushed to zero; its true value is below
    // (n + 1) times the smallest positive representable number.
    Real floor_bound(64);
    mpfr_set_ui_2exp(floor_bound.raw(), n + 1, mpfr_get_emin() + 4, MPFR_RNDN);
    lad.err += floor_bound;
  }
  lad.err = lad.err * slop();
  lad.L = std::move(next);
  lad.n = n + 1;
}

}  // namespace

HighPrecReal log_g(const GoebelParams& params, std::uint32_t n,
                   std::size_t digits) {
  if (n == 0) throw std::domain_error("log_g: index starts at 1");
  const mpfr_prec_t prec = bits_for_digits(digits + 30);
  Ladder lad = seed_ladder(params, prec, n);
  while (lad.n < n) ladder_advance(lad);
  return {lad.L, lad.err};
}

bool log_g_is_exact(const GoebelParams& params, std::uint32_t n) {
  if (n == 0 || n > kExactSeedCap) return false;
  return max_feasible_n(params, n, DigitBudget{kSeedBudgetBits}) == n;
}

// ---------------------------------------------------------------------
// Growth constant.

namespace {

std::uint32_t auto_depth(std::uint32_t k, std::size_t digits_eff,
                         std::uint32_t seed_n) {
  double steps = (static_cast<double>(digits_eff) + 15.0) * std::log(10.0) /
                 std::log(k);
  return seed_n + 8 + static_cast<std::uint32_t>(std::ceil(steps));
}

HighPrecReal growth_log_once(const GoebelParams& p, std::size_t digits_eff,
                             std::uint32_t depth) {
  const mpfr_prec_t prec = bits_for_digits(digits_eff);
  Ladder lad =
      seed_ladder(p, prec, depth == 0 ? 12u : std::min(depth, 12u));
  std::uint32_t N = depth == 0 ? auto_depth(p.k, digits_eff, lad.n) : depth;
  if (N < lad.n) N = lad.n;  // a depth below the exact seed cuts there
  while (lad.n < N) ladder_advance(lad);

  mpz_class kN = ui_pow(p.k, N);
  Real D = div_z(lad.L, kN);
  Real errD = lad.err / Real::of_mpz(kN, 64) +
              (abs(D) + Real::of_ui(1, 64)) * two_pow(1 - static_cast<long>(prec));

  // Dropped tails: sum_{m >= N} k^-(m+1) log(m+1) realigns to
  // sum_{m >= N+1} k^-m log m, and the log1p sum is bounded via
  // g(m) >= g(N) together with sum (N + t) k^-t.
  Real t2 = geom_log_tail_upper(p.k, static_cast<std::uint64_t>(N) + 1);
  Real g_bound = upper_exp_neg(lad.L, lad.err, p.k - 1);
  Real t1 = g_bound *
            (geom_affine_sum_upper(p.k, static_cast<double>(N)) /
             pow_ui(Real::of_ui(p.k, 64), static_cast<std::uint64_t>(N) + 1));
  return {std::move(D), (errD + t1 + t2) * slop()};
}

}  // namespace

HighPrecReal goebel_log_constant(const GoebelParams& params,
                                 std::size_t digits, std::uint32_t depth) {
  HighPrecReal a = growth_log_once(params, digits + 30, depth);
  HighPrecReal b = growth_log_once(params, digits + 60, depth);
  if (!a.consistent_with(b))
    throw precision_failure(
        "goebel_log_constant: staggered-precision runs disagree beyond "
        "bounds");
  Real gap = abs(a.value - b.value);
  return {b.value, max(b.err, gap)};
}

HighPrecReal goebel_constant(const GoebelParams& params, std::size_t digits,
                             std::uint32_t depth) {
  HighPrecReal lg = goebel_log_constant(params, digits, depth);
  Real c = exp(lg.value);
  // The growth constant never exceeds l^(1/k) <= 17^(1/2)-ish for table
  // parameters, and in general exp(log l / k); to_double is safe.
  Real err = Real::of_double(c.to_double() * 1.001 + 0.001, 64) *
                 expm1(lg.err) +
             c.ulp() * Real::of_ui(2, 64);
  return {std::move(c), err * slop()};
}

HighPrecReal C_of_n(const GoebelParams& params, std::uint32_t n,
                    std::size_t digits) {
  HighPrecReal lg = log_g(params, n, digits + 10);
  mpz_class kn = ui_pow(params.k, n);
  Real D = div_z(lg.value, kn);
  Real errD = lg.err / Real::of_mpz(kn, 64) +
              (abs(D) + Real::of_ui(1, 64)) *
                  two_pow(1 - static_cast<long>(D.prec()));
  Real c = exp(D);
  Real err = Real::of_double(c.to_double() * 1.001 + 0.001, 64) *
                 expm1(errD * slop()) +
             c.ulp() * Real::of_ui(2, 64);
  return {std::move(c), err * slop()};
}

// ---------------------------------------------------------------------
// Defect and residuals.

HighPrecReal epsilon_defect(const GoebelParams& params, std::uint32_t n,
                            std::size_t digits) {
  if (n == 0) throw std::domain_error("epsilon_defect: index starts at 1");
  const mpfr_prec_t prec = bits_for_digits(digits + 30);
  const std::uint32_t k = params.k;
  Ladder lad = seed_ladder(params, prec, n);
  while (lad.n < n) ladder_advance(lad);

  Real sum(prec);
  Real err(64);
  Real tail_bound(64);
  for (std::uint32_t j = 0;; ++j) {
    const std::uint32_t idx = n + j;
    // term = log1p(idx * e^(-(k-1) L(idx))) / k^(j+1)
    Real t(prec);
    mpfr_mul_ui(t.raw(), lad.L.raw(), k - 1, MPFR_RNDN);
    mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);
    mpfr_clear_flags();
    Real u = exp(t);
    mpfr_mul_ui(u.raw(), u.raw(), idx, MPFR_RNDN);
    const bool underflowed = mpfr_underflow_p() != 0;
    Real term = log1p(u) / pow_ui(Real::of_ui(k, prec), j + 1);
    sum += term;

    // Per-term error, kept relative to the term itself.  The exp argument
    // carries the ladder error scaled by (k - 1) plus |t| ulps of its own
    // rounding; that reaches u as a factor exp(arg_err), and since
    // log1p(u) >= min(u, 1) / 2 the induced shift in log1p is at most
    // 2 * u_rel * term.  A few half-ulps cover log1p, the division, and
    // the accumulation into sum.  True underflow is handled below.
    Real arg_err = (Real::of_ui(k - 1, 64) * lad.err +
                    (abs(t) + Real::of_ui(4, 64)) *
                        two_pow(2 - static_cast<long>(prec))) *
                   slop();
    Real term_rel = (expm1(arg_err) * Real::of_ui(2, 64) +
                     two_pow(4 - static_cast<long>(prec))) *
                    slop();
    err += abs(term) * term_rel;
    if (underflowed) {
      Real floor_bound(64);
      mpfr_set_ui_2exp(floor_bound.raw(), idx + 1, mpfr_get_emin() + 4,
                       MPFR_RNDN);
      err += floor_bound;
    }

    ladder_advance(lad);  // L(idx + 1), used by the tail bound

    // tail over i > j: bounded by g(idx+1)^(1-k) sum_{i>j} k^-(i+1)(n+i).
    Real g_bound = upper_exp_neg(lad.L, lad.err, k - 1);
    tail_bound = g_bound *
                 (geom_affine_sum_upper(k, static_cast<double>(idx) + 1.0) /
                  pow_ui(Real::of_ui(k, 64),
                         static_cast<std::uint64_t>(j) + 2));
    // Stop once the remaining tail is negligible at the digit target,
    // both relative to the accumulated value and on an absolute floor.
    Real target = abs(sum) * pow_ui(Real::of_double(0.1, 64),
                                    static_cast<unsigned long>(digits) + 8);
    if (j >= 2 && (tail_bound <= target || tail_bound <= two_pow(-40000)))
      break;
    if (j > 4000)
      throw precision_failure("epsilon_defect: truncation did not settle");
  }
  return {std::move(sum), (err + tail_bound) * slop()};
}

namespace {

// Exact partial sum sum_{r=0}^{R} a_r n^-r.
mpq_class expansion_partial_sum(std::uint32_t k, std::uint32_t n,
                                std::uint32_t order) {
  mpq_class inv_n(1, n);
  mpq_class acc(0);
  for (std::uint32_t r = order + 1; r-- > 0;)
    acc = acc * inv_n + asym_coeff(k, r);
  acc.canonicalize();
  return acc;
}

struct ScaledModel {
  Real x;       // g(n) C^(-k^n) n^(-1/(k-1)), the polynomial factor
  Real err_x;   // absolute bound
  HighPrecReal log_actual;
  Real log_model_linear;  // k^n log C + log(n)/(k-1)
};

ScaledModel scaled_polynomial_factor(const GoebelParams& params,
                                     std::uint32_t n, std::size_t digits) {
  // k^n scales the constant's error, so sharpen its digit target by the
  // decimal size of k^n.
  const std::size_t extra =
      static_cast<std::size_t>(std::ceil(n * std::log10(params.k))) + 10;
  HighPrecReal lc = goebel_log_constant(params, digits + extra);
  HighPrecReal lg = log_g(params, n, digits + extra);
  const mpfr_prec_t prec = bits_for_digits(digits + extra + 30);

  mpz_class kn = ui_pow(params.k, n);
  Real linear = mul_z(lc.value, kn) +
                div_ui(log_ui(n, prec), params.k - 1);
  Real w = lg.value - linear;
  Real x = exp(w);
  Real err_w = lg.err + Real::of_mpz(kn, 64) * lc.err +
               (abs(w) + Real::of_ui(8, 64)) *
                   two_pow(4 - static_cast<long>(prec));
  Real err_x = Real::of_double(x.to_double() * 1.001 + 0.001, 64) *
                   expm1(err_w * slop()) +
               x.ulp() * Real::of_ui(2, 64);
  ScaledModel m{std::move(x), err_x * slop(), std::move(lg),
                std::move(linear)};
  return m;
}

}  // namespace

HighPrecReal residual_coeff(const GoebelParams& params, std::uint32_t n,
                            std::uint32_t order, std::size_t digits) {
  if (n < 2)
    throw std::domain_error("residual_coeff: needs n >= 2 for a 1/n scale");
  ScaledModel m = scaled_polynomial_factor(params, n, digits);
  mpq_class partial = expansion_partial_sum(params.k, n, order);
  Real p = Real::of_mpq(partial, m.x.prec());
  mpz_class scale = ui_pow(n, order + 1);
  Real rho = mul_z(m.x - p, scale);
  Real err = (m.err_x + (abs(m.x - p) + Real::of_ui(1, 64)) *
                            two_pow(2 - static_cast<long>(m.x.prec()))) *
             Real::of_mpz(scale, 64);
  return {std::move(rho), err * slop()};
}

ExpansionEval expansion_eval(const GoebelParams& params, std::uint32_t n,
                             std::uint32_t order, std::size_t digits) {
  if (n == 0) throw std::domain_error("expansion_eval: index starts at 1");
  ScaledModel m = scaled_polynomial_factor(params, n, digits);
  mpq_class partial = expansion_partial_sum(params.k, n, order);
  ExpansionEval ev;
  ev.n = n;
  ev.order = order;
  ev.exact_source = log_g_is_exact(params, n);
  ev.log_actual = m.log_actual;

  Real lp = Real::of_mpq(partial, m.x.prec());
  Real log_model = m.log_model_linear + log(lp);
  // The linear part's error is the same one already folded into err_x;
  // reconstruct a direct bound instead: err(log model) <= err(linear)
  // + 0 (partial sum is exact) + rounding.
  Real err_model = m.log_actual.err + m.err_x / lp +
                   (abs(log_model) + Real::of_ui(4, 64)) *
                       two_pow(3 - static_cast<long>(log_model.prec()));
  ev.log_model = {log_model, err_model * slop()};

  Real w = m.log_actual.value - log_model;
  Real ratio = exp(w);
  Real err_ratio = Real::of_double(ratio.to_double() * 1.001 + 0.001, 64) *
                       expm1((m.log_actual.err + ev.log_model.err) * slop()) +
                   ratio.ulp() * Real::of_ui(2, 64);
  ev.ratio = {std::move(ratio), err_ratio * slop()};
  return ev;
}

std::vector<ConvergenceRow> convergence_report(
    const GoebelParams& params, const std::vector<std::uint32_t>& ns,
    std::uint32_t order, std::size_t digits) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(ns.size());
  for (std::uint32_t n : ns) {
    ConvergenceRow row;
    row.n = n;
    row.exact_source = log_g_is_exact(params, n);
    row.rho = residual_coeff(params, n, order, digits);
    rows.push_back(std::move(row));
  }
  return rows;
}

AsymptoticExpansion build_expansion(const GoebelParams& params,
                                    std::uint32_t order, std::size_t digits) {
  AsymptoticExpansion exp;
  exp.k = params.k;
  exp.l = params.l;
  exp.constant = goebel_constant(params, digits);
  exp.coeffs.reserve(order + 1);
  for (std::uint32_t r = 0; r <= order; ++r)
    exp.coeffs.push_back(asym_coeff(params.k, r));
  return exp;
}

// ---------------------------------------------------------------------
// Elementary lower bound.

LowerBoundReport check_lower_bound(const GoebelParams& params,
                                   const mpq_class& t0, std::uint32_t n_max,
                                   std::size_t digits, std::uint32_t base) {
  if (params.k < 2 || params.l < 2)
    throw std::domain_error("check_lower_bound: requires k >= 2 and l >= 2");
  if (n_max < base) throw std::domain_error("check_lower_bound: n_max >= base");
  if (t0 <= 1) throw std::domain_error("check_lower_bound: t0 > 1 required");
  const std::uint32_t k = params.k;
  const DigitBudget budget{kSeedBudgetBits};

  LowerBoundReport rep;
  if (base == 0) {
    // Entry condition for the induction: t(1) = t0^k <= g(1) = l.
    rep.precondition_ok = pow_q(t0, k) <= mpq_class(params.l);
  } else {
    rep.precondition_ok = t0 <= eval_exact(params, base, budget);
  }
  const std::uint32_t first = std::max(base, 1u);
  std::uint32_t check_to = max_feasible_n(params, std::max(n_max, first), budget);
  if (check_to < first) check_to = first;
  rep.domination_ok = rep.precondition_ok;
  rep.checked_to = check_to;
  if (rep.precondition_ok) {
    for (std::uint32_t n = first; n <= check_to; ++n) {
      mpq_class tn;
      try {
        tn = t_sequence(k, t0, n, budget, base);
      } catch (const budget_exceeded& e) {
        rep.checked_to = e.last_complete;
        break;
      }
      if (tn > eval_exact(params, n, budget)) {
        rep.domination_ok = false;
        rep.checked_to = n;
        break;
      }
    }
  }

  // lambda = log(t0)/k^base - sum_{m >= base} log(m+1)/k^(m+1).
  const mpfr_prec_t prec = bits_for_digits(digits + 30);
  const std::uint64_t M =
      base + 4 +
      static_cast<std::uint64_t>(std::ceil(
          (static_cast<double>(digits) + 40.0) * std::log(10.0) / std::log(k)));
  auto lt = log_of_mpq(t0, prec);
  Real lambda = div_z(lt.first, ui_pow(k, base));
  mpz_class kp = ui_pow(k, base);
  for (std::uint64_t m = base; m <= M; ++m) {
    kp *= k;  // k^(m+1)
    lambda -= div_z(log_ui(m + 1, prec), kp);
  }
  Real tail = geom_log_tail_upper(k, M + 2);
  Real round_err = (abs(lambda) + abs(lt.first) + Real::of_ui(4, 64)) *
                   Real::of_ui(static_cast<unsigned long>(M + 8), 64) *
                   two_pow(2 - static_cast<long>(prec));
  rep.lambda = {std::move(lambda), (lt.second + tail + round_err) * slop()};
  rep.conclusive = rep.precondition_ok && rep.domination_ok &&
                   rep.lambda.value > rep.lambda.err;
  return rep;
}

}  // namespace goebel
