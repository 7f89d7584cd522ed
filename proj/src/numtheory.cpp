#include "goebel/numtheory.hpp"

#include <stdexcept>

namespace goebel {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t nu_p(std::uint64_t p, const mpz_class& x) {
    if (p < 2) throw std::domain_error("nu_p: p must be >= 2");
    if (x == 0) throw std::domain_error("nu_p: valuation of 0 is undefined");
    mpz_class rem, pz(static_cast<unsigned long>(p));
    return mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
}

std::int64_t nu_p(std::uint64_t p, const mpq_class& x) {
    if (x == 0) throw std::domain_error("nu_p: valuation of 0 is undefined");
    return static_cast<std::int64_t>(nu_p(p, x.get_num())) -
           static_cast<std::int64_t>(nu_p(p, x.get_den()));
}

std::uint64_t nu_p_factorial(std::uint64_t p, std::uint64_t n) {
    if (p < 2) throw std::domain_error("nu_p_factorial: p must be >= 2");
    std::uint64_t s = 0;
    while (n > 0) {
        n /= p;
        s += n;
    }
    return s;
}

std::uint64_t totient(std::uint64_t m) {
    if (m == 0) throw std::domain_error("totient: m must be >= 1");
    std::uint64_t result = m;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        while (m % d == 0) m /= d;
        result -= result / d;
    }
    if (m > 1) result -= result / m;
    return result;
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
    if (m < 1) throw std::domain_error("mod_inverse: modulus must be >= 1");
    if (m == 1) return 1;
    mpz_class inv;
    if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("mod_inverse: argument not invertible");
    return inv;
}

}  // namespace goebel
