#pragma once

// Small number-theoretic helpers: primality by trial division (inputs stay
// below ~10^7 here), p-adic valuations, Legendre's factorial valuation,
// Euler's totient, and modular inverses.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace goebel {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_upto(std::uint64_t n);

// nu_p(x) for a nonzero integer; throws std::domain_error on x = 0.
std::uint64_t nu_p(std::uint64_t p, const mpz_class& x);
// nu_p of a nonzero rational: nu(num) - nu(den).
std::int64_t nu_p(std::uint64_t p, const mpq_class& x);

// nu_p(n!) = sum_{i>=1} floor(n/p^i)  (Legendre).
std::uint64_t nu_p_factorial(std::uint64_t p, std::uint64_t n);

std::uint64_t totient(std::uint64_t m);

// Inverse of a modulo m (m >= 1).  By convention the inverse modulo 1 is 1,
// which is harmless since every residue modulo 1 is 0.  Throws
// std::domain_error when a is not invertible.
mpz_class mod_inverse(const mpz_class& a, const mpz_class& m);

}  // namespace goebel
