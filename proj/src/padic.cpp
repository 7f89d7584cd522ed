#include "goebel/padic.hpp"

#include "goebel/exact.hpp"
#include "goebel/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace goebel {

namespace {

std::uint64_t nu_of(std::uint64_t p, std::uint64_t n) {
    std::uint64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// pw[i] must hold p^i for 0 <= i <= prev.budget.
PadicState step_impl(const GoebelParams& params, std::uint64_t p,
                     std::uint32_t r, const std::vector<mpz_class>& pw,
                     std::uint32_t n, const PadicState& prev) {
    if (prev.failed) return PadicState::failure();

    const std::uint64_t v = nu_of(p, n);
    const std::int64_t b = prev.budget - static_cast<std::int64_t>(v);
    if (b < 0) throw budget_underflow(p, r, n);

    const mpz_class& mod_prev = pw[static_cast<std::size_t>(prev.budget)];
    const mpz_class& mod_new = pw[static_cast<std::size_t>(b)];

    // u = a ((n-1) + a^(k-1)) mod p^b(n-1)
    mpz_class t;
    mpz_powm_ui(t.get_mpz_t(), prev.residue.get_mpz_t(), params.k - 1,
                mod_prev.get_mpz_t());
    t += n - 1;
    mpz_class u = prev.residue * t;
    u %= mod_prev;

    std::uint64_t n_unit = n;
    if (v > 0) {
        const mpz_class& pv = pw[static_cast<std::size_t>(v)];
        if (!mpz_divisible_p(u.get_mpz_t(), pv.get_mpz_t()))
            return PadicState::failure();
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), pv.get_mpz_t());
        for (std::uint64_t i = 0; i < v; ++i) n_unit /= p;
    }

    mpz_class a = u * mod_inverse(mpz_class(static_cast<unsigned long>(n_unit)),
                                  mod_new);
    a %= mod_new;
    return PadicState::make(std::move(a), b);
}

std::vector<mpz_class> make_powers(std::uint64_t p, std::uint32_t r) {
    std::vector<mpz_class> pw(r + 1);
    pw[0] = 1;
    for (std::uint32_t i = 1; i <= r; ++i)
        pw[i] = pw[i - 1] * static_cast<unsigned long>(p);
    return pw;
}

PadicState initial_state(const GoebelParams& params,
                         const PrimePowerContext& ctx,
                         const std::vector<mpz_class>& pw) {
    mpz_class a = mpz_class(params.l) % pw[ctx.r];
    return PadicState::make(std::move(a), ctx.r);
}

}  // namespace

PrimePowerContext::PrimePowerContext(std::uint64_t p_, std::uint32_t r_)
    : p(p_), r(r_) {
    if (!is_prime(p)) throw std::invalid_argument("PrimePowerContext: p must be prime");
    if (r < 1) throw std::invalid_argument("PrimePowerContext: r must be >= 1");
}

PadicState padic_step(const PrimePowerContext& ctx, const GoebelParams& params,
                      std::uint32_t n, const PadicState& prev) {
    if (n < 2) throw std::invalid_argument("padic_step: n must be >= 2");
    if (!prev.failed &&
        (prev.budget < 0 || prev.budget > static_cast<std::int64_t>(ctx.r)))
        throw std::invalid_argument("padic_step: state budget out of range");
    return step_impl(params, ctx.p, ctx.r, make_powers(ctx.p, ctx.r), n, prev);
}

PadicRun::PadicRun(const GoebelParams& params, const PrimePowerContext& ctx)
    : params_(params), ctx_(ctx), pw_(make_powers(ctx.p, ctx.r)),
      state_(initial_state(params, ctx, pw_)) {}

void PadicRun::advance() {
    ++n_;
    state_ = step_impl(params_, ctx_.p, ctx_.r, pw_, n_, state_);
}

void PadicRun::advance_to(std::uint32_t n) {
    if (n < n_) throw std::invalid_argument("PadicRun: cannot rewind");
    while (n_ < n) advance();
}

namespace {

struct EvalKey {
    std::uint32_t k, l;
    std::uint64_t p;
    std::uint32_t r;
    bool operator<(const EvalKey& o) const {
        return std::tie(k, l, p, r) < std::tie(o.k, o.l, o.p, o.r);
    }
};

std::mutex eval_mutex;
std::map<EvalKey, std::pair<PadicRun, std::vector<PadicState>>> eval_cache;

}  // namespace

PadicState padic_eval(const PrimePowerContext& ctx, const GoebelParams& params,
                      std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("padic_eval: n must be >= 1");
    std::lock_guard<std::mutex> lock(eval_mutex);
    EvalKey key{params.k, params.l, ctx.p, ctx.r};
    auto it = eval_cache.find(key);
    if (it == eval_cache.end()) {
        PadicRun run(params, ctx);
        std::vector<PadicState> states{run.state()};
        it = eval_cache.emplace(key, std::make_pair(std::move(run),
                                                    std::move(states))).first;
    }
    auto& [run, states] = it->second;
    while (states.size() < n) {
        run.advance();
        states.push_back(run.state());
    }
    return states[n - 1];
}

namespace {

struct PrimeTrack {
    std::uint64_t p;
    std::uint32_t r;        // initial budget of the current run
    std::uint64_t nu_fact;  // nu_p(n!) at the current n
    PadicRun run;
};

}  // namespace

std::optional<std::uint32_t> compute_N(const GoebelParams& params,
                                       std::uint32_t cap) {
    if (params.k == 1 || params.l == 1) return std::nullopt;  // constant sequence
    std::vector<PrimeTrack> tracks;
    for (std::uint32_t n = 2; n <= cap; ++n) {
        if (is_prime(n)) {
            std::uint32_t r0 = static_cast<std::uint32_t>(nu_p_factorial(
                n, std::min<std::uint64_t>(cap, 2 * std::uint64_t{n})));
            PrimeTrack t{n, r0, 0, PadicRun(params, PrimePowerContext(n, r0))};
            t.run.advance_to(n - 1);  // nu_p(m) = 0 for every m < p: no budget spent
            tracks.push_back(std::move(t));
        }
        for (auto& t : tracks) {
            const std::uint64_t v = nu_of(t.p, n);
            if (t.nu_fact + v > t.r) {
                // The required budget outgrew this run; re-run the prime with
                // a budget sized for a doubled horizon so each prime rebuilds
                // only O(log cap) times.  Verdicts are unchanged: any budget
                // >= nu_p(n!) yields the same failure pattern through n.
                t.r = static_cast<std::uint32_t>(nu_p_factorial(
                    t.p, std::min<std::uint64_t>(cap, 2 * std::uint64_t{n})));
                t.run = PadicRun(params, PrimePowerContext(t.p, t.r));
                t.run.advance_to(n);
            } else {
                t.run.advance();
            }
            t.nu_fact += v;
        }
        for (const auto& t : tracks)
            if (t.run.state().failed) return n;
    }
    return std::nullopt;  // exceeds-cap
}

std::vector<VerdictReport> check_key_lemma(const LemmaRanges& ranges,
                                           std::uint64_t p, std::uint32_t r,
                                           const DigitBudget& budget) {
    if (!is_prime(p)) throw std::invalid_argument("check_key_lemma: p must be prime");
    if (r < 1) throw std::invalid_argument("check_key_lemma: r must be >= 1");
    if (ranges.k_lo < 1 || ranges.k_lo > ranges.k_hi || ranges.l_lo < 1 ||
        ranges.l_lo > ranges.l_hi || ranges.n_hi < 1)
        throw std::invalid_argument("check_key_lemma: bad ranges");
    if (nu_p_factorial(p, ranges.n_hi) > r)
        throw std::invalid_argument(
            "check_key_lemma: r must be >= nu_p(n_hi!) for the claims to apply");

    std::vector<VerdictReport> reports{
        {"integral-below-p", true, {}},
        {"non-integrality-persists", true, {}},
        {"k-shift-periodicity", true, {}},
        {"l-shift-periodicity", true, {}},
    };

    auto pr_k = [&](std::uint32_t k, std::uint32_t l) {
        return eval_prefix(GoebelParams(k, l), ranges.n_hi, budget);
    };

    // Claims 1 and 2, per (k,l).
    for (std::uint32_t k = ranges.k_lo; k <= ranges.k_hi; ++k) {
        for (std::uint32_t l = ranges.l_lo; l <= ranges.l_hi; ++l) {
            auto seq = pr_k(k, l);
            for (std::uint32_t n = 1; n <= ranges.n_hi; ++n) {
                bool integral_here = nu_p(p, seq[n - 1]) >= 0;
                if (n < p && !integral_here)
                    reports[0].fail({k, l, n, p, ""});
                if (n < ranges.n_hi && !integral_here &&
                    nu_p(p, seq[n]) >= 0)
                    reports[1].fail({k, l, n + 1, p, ""});
            }
        }
    }

    // p^r and phi(p^r) = (p-1) p^(r-1) as machine words (ranges are small).
    std::uint64_t pr = 1;
    for (std::uint32_t i = 0; i < r; ++i) pr *= p;
    const std::uint64_t phi = (p - 1) * (pr / p);

    auto diff_ok = [&](const mpq_class& a, const mpq_class& b,
                       std::uint32_t n) {
        mpq_class d = a - b;
        if (d == 0) return true;
        std::int64_t need = static_cast<std::int64_t>(r) -
                            static_cast<std::int64_t>(nu_p_factorial(p, n));
        return nu_p(p, d) >= need;
    };

    // Claim 3: k-shift pairs at fixed l.
    for (std::uint32_t k1 = std::max(ranges.k_lo, r); k1 <= ranges.k_hi; ++k1) {
        for (std::uint32_t k2 = k1 + 1; k2 <= ranges.k_hi; ++k2) {
            if (k2 < r || (k2 - k1) % phi != 0) continue;
            for (std::uint32_t l = ranges.l_lo; l <= ranges.l_hi; ++l) {
                auto s1 = pr_k(k1, l), s2 = pr_k(k2, l);
                for (std::uint32_t n = 1; n <= ranges.n_hi; ++n) {
                    bool i1 = nu_p(p, s1[n - 1]) >= 0;
                    bool i2 = nu_p(p, s2[n - 1]) >= 0;
                    if (i1 != i2)
                        reports[2].fail({k1, l, n, p,
                                         "verdict differs from k = " +
                                             std::to_string(k2)});
                    else if (i1 && !diff_ok(s1[n - 1], s2[n - 1], n))
                        reports[2].fail({k1, l, n, p,
                                         "difference from k = " +
                                             std::to_string(k2) +
                                             " too shallow"});
                }
            }
        }
    }

    // Claim 4: l-shift pairs at fixed k.
    for (std::uint32_t l1 = ranges.l_lo; l1 <= ranges.l_hi; ++l1) {
        for (std::uint64_t l2 = l1 + pr; l2 <= ranges.l_hi; l2 += pr) {
            for (std::uint32_t k = ranges.k_lo; k <= ranges.k_hi; ++k) {
                auto s1 = pr_k(k, l1), s2 = pr_k(k, static_cast<std::uint32_t>(l2));
                for (std::uint32_t n = 1; n <= ranges.n_hi; ++n) {
                    bool i1 = nu_p(p, s1[n - 1]) >= 0;
                    bool i2 = nu_p(p, s2[n - 1]) >= 0;
                    if (i1 != i2)
                        reports[3].fail({k, l1, n, p,
                                         "verdict differs from l = " +
                                             std::to_string(l2)});
                    else if (i1 && !diff_ok(s1[n - 1], s2[n - 1], n))
                        reports[3].fail({k, l1, n, p,
                                         "difference from l = " +
                                             std::to_string(l2) +
                                             " too shallow"});
                }
            }
        }
    }

    return reports;
}

}  // namespace goebel
