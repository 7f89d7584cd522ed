#pragma once

// Exact rational scaffolding shared by the whole library.  Values are GMP
// rationals (mpq_class), always kept canonical by GMP itself: numerator and
// denominator coprime, denominator >= 1.  A DigitBudget caps how large any
// computed value may grow; exceeding it raises budget_exceeded with the last
// index that was still completed, so callers can fall back to p-adic or
// log-space routes.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goebel {

struct GoebelParams {
    std::uint32_t k = 2;
    std::uint32_t l = 2;

    GoebelParams() = default;
    GoebelParams(std::uint32_t k_, std::uint32_t l_) : k(k_), l(l_) {
        if (k < 1 || l < 1)
            throw std::invalid_argument("GoebelParams: need k >= 1 and l >= 1");
    }
    bool operator==(const GoebelParams&) const = default;
    bool operator<(const GoebelParams& o) const {
        return k != o.k ? k < o.k : l < o.l;
    }
};

struct DigitBudget {
    // Combined bit size (numerator + denominator) a single value may reach.
    std::uint64_t max_bits = std::uint64_t{1} << 23;

    DigitBudget() = default;
    explicit DigitBudget(std::uint64_t bits) : max_bits(bits) {
        if (bits < 64)
            throw std::invalid_argument("DigitBudget: max_bits must be >= 64");
    }
};

class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(std::uint32_t last_complete_n, std::uint64_t max_bits)
        : std::runtime_error("value size exceeds budget of " +
                             std::to_string(max_bits) +
                             " bits; last index completed: n = " +
                             std::to_string(last_complete_n)),
          last_complete(last_complete_n) {}

    // Largest n whose value was fully computed before the cap was hit.
    std::uint32_t last_complete;
};

class precision_failure : public std::runtime_error {
public:
    explicit precision_failure(const std::string& what)
        : std::runtime_error(what) {}
};

inline std::uint64_t bit_size(const mpz_class& z) {
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

inline std::uint64_t bit_size(const mpq_class& q) {
    return bit_size(mpq_class(q).get_num()) + bit_size(mpq_class(q).get_den());
}

inline bool is_integral(const mpq_class& q) {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

// q^e with the numerator/denominator powered separately (stays canonical).
inline mpq_class pow_q(const mpq_class& q, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), e);
    return r;  // num,den coprime => num^e,den^e coprime
}

}  // namespace goebel
