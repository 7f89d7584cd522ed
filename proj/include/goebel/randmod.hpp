#pragma once

// Residue statistics of the sequence below its first prime hurdle.
//
// Fix a prime p and an exponent r >= 2, and look at the indices
// n in [1, p) whose value is divisible by p^(r-1).  Because the
// recurrence multiplies by (n + g(n)^(k-1)) / (n+1) and g(n)^(k-1) is
// divisible by p^(2(r-1)) = 0 mod p^r there, membership in that index
// set persists up to n = p-1 (the set is a suffix of [1, p)), and
// n * g(n) mod p^r is constant on it.  Writing a = min index and
// g(a) = b p^(r-1) mod p^r, every member has g(n) = a b p^(r-1) n^(-1),
// so the residues mod p^r are either all zero (p | b) or pairwise
// distinct and nonzero.  residue_set() computes the data; the verifiers
// check the dichotomy, the suffix shape, and the invariant over
// parameter boxes.

#include "goebel/rational.hpp"
#include "goebel/report.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace goebel {

struct ResidueSetReport {
  std::uint32_t k = 0, l = 0;
  std::uint64_t p = 0;
  std::uint32_t r = 0;
  // Indices n in [1, p) with g(n) = 0 mod p^(r-1), increasing.
  std::vector<std::uint32_t> index_set;
  // g(n) mod p^r for those indices, in the same order.
  std::vector<mpz_class> residues;
  // "singleton-zero" (all residues 0), "all-distinct" (pairwise distinct
  // and nonzero; vacuously true when the index set is empty), or
  // "violation".
  std::string verdict;
  std::string note;  // detail when verdict == "violation"
};

// Computes the report for one (k, l, p, r).  Requires k >= 2 (the
// constant k = 1 sequence does not satisfy the invariance argument) and
// r >= 2.  Works entirely mod p^r; never forms exact values.
ResidueSetReport residue_set(const GoebelParams& params, std::uint64_t p,
                             std::uint32_t r);

// Checks dichotomy + suffix shape + the n*g(n) invariant (the latter
// over every n in [min index, p), not just index-set members) for every
// k in [2, k_hi], l in [2, l_hi], prime p <= p_hi and r in rs (each
// r >= 2).  One counterexample per failing tuple.
VerdictReport verify_random_theorem(std::uint32_t k_hi, std::uint32_t l_hi,
                                    std::uint64_t p_hi,
                                    const std::vector<std::uint32_t>& rs);

// Primes p <= p_max for which g(p) -- the value at index p itself -- is
// not p-integral.  One residue machine per prime at exponent r = 1
// decides the verdict: failures start only at multiples of p, so the
// question is settled exactly at the step into n = p, where the machine
// still certifies integral-or-not even as its budget reaches zero.
std::vector<std::uint32_t> scan_nonintegral_primes(const GoebelParams& params,
                                                   std::uint32_t p_max);

}  // namespace goebel
