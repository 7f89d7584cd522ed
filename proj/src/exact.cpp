#include "goebel/exact.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace goebel {

namespace {

// Shared prefix cache, one vector per (k,l).  cache[p][i] = g(i+1).
std::mutex cache_mutex;
std::map<GoebelParams, std::vector<mpq_class>> prefix_cache;

mpq_class step(const GoebelParams& params, const mpq_class& g,
               std::uint32_t n) {
    // g(n+1) = g(n) * (n + g(n)^(k-1)) / (n+1)
    mpq_class t = pow_q(g, params.k - 1);
    t += n;
    t *= g;
    t /= mpq_class(n + 1);
    return t;
}

// Extends the cached prefix for params to n values (or throws).  Returns a
// copy of the first n entries.
std::vector<mpq_class> prefix(const GoebelParams& params, std::uint32_t n,
                              const DigitBudget& budget) {
    if (n < 1) throw std::invalid_argument("eval: n must be >= 1");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& seq = prefix_cache[params];
    if (seq.empty()) seq.emplace_back(params.l);
    // A smaller budget than in previous calls must behave as if the cache
    // were cold: validate what we already hold before extending, so the
    // reported frontier is the first over-budget index, cached or not.
    const auto have =
        std::min<std::size_t>(seq.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < have; ++i)
        if (bit_size(seq[i]) > budget.max_bits)
            throw budget_exceeded(static_cast<std::uint32_t>(i),
                                  budget.max_bits);
    while (seq.size() < n) {
        auto m = static_cast<std::uint32_t>(seq.size());  // have g(1..m)
        mpq_class next = step(params, seq.back(), m);
        if (bit_size(next) > budget.max_bits) throw budget_exceeded(m, budget.max_bits);
        seq.push_back(std::move(next));
    }
    return {seq.begin(), seq.begin() + n};
}

}  // namespace

mpq_class eval_exact(const GoebelParams& params, std::uint32_t n,
                     const DigitBudget& budget) {
    return prefix(params, n, budget).back();
}

std::vector<mpq_class> eval_prefix(const GoebelParams& params,
                                   std::uint32_t n_max,
                                   const DigitBudget& budget) {
    return prefix(params, n_max, budget);
}

std::uint32_t max_feasible_n(const GoebelParams& params, std::uint32_t n_max,
                             const DigitBudget& budget) {
    try {
        prefix(params, n_max, budget);
        return n_max;
    } catch (const budget_exceeded& e) {
        return e.last_complete;
    }
}

std::optional<std::uint32_t> naive_N(const GoebelParams& params,
                                     std::uint32_t cap,
                                     const DigitBudget& budget) {
    if (params.k < 2 || params.l < 2)
        throw std::invalid_argument("naive_N: need k >= 2 and l >= 2");
    for (std::uint32_t n = 1; n <= cap; ++n)
        if (!is_integral(eval_exact(params, n, budget))) return n;
    return std::nullopt;  // exceeds-cap
}

mpq_class t_sequence(std::uint32_t k, const mpq_class& t0, std::uint32_t n,
                     const DigitBudget& budget, std::uint32_t base) {
    if (k < 2) throw std::invalid_argument("t_sequence: k must be >= 2");
    if (t0 <= 1) throw std::invalid_argument("t_sequence: t0 must be > 1");
    if (n < base) throw std::invalid_argument("t_sequence: n must be >= base");
    mpq_class t = t0;
    for (std::uint32_t m = base; m < n; ++m) {
        t = pow_q(t, k);
        t /= mpq_class(m + 1);
        if (bit_size(t) > budget.max_bits) throw budget_exceeded(m, budget.max_bits);
    }
    return t;
}

}  // namespace goebel
