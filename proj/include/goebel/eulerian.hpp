#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace goebel {

// The descent polynomial of order r:
//
//   A_0(t) = 1,   A_r(t) = sum_{j=1}^{r} E(r, j-1) t^j   for r >= 1,
//
// where E(n, m) counts the permutations of {1, ..., n} with exactly m
// descents.  E satisfies the triangle recurrence
//
//   E(0, 0) = 1,
//   E(n, m) = (m + 1) E(n-1, m) + (n - m) E(n-1, m-1).
//
// These polynomials package the power sums that drive the polynomial
// part of the growth expansion: for |x| < 1,
//
//   sum_{m >= 1} m^r x^m = A_r(x) / (1 - x)^(r+1).
struct EulerianPolynomial {
  std::uint32_t order = 0;
  // coeff[j] multiplies t^j; size order + 1.  For order 0 this is {1};
  // for order >= 1, coeff[0] == 0 and the nonzero entries form a
  // palindrome that sums to order!.
  std::vector<mpz_class> coeff;

  mpz_class eval_ui(unsigned long t) const;
  mpq_class eval_q(const mpq_class& t) const;
};

// Cached, thread-safe accessor.  The reference stays valid for the
// lifetime of the process.
const EulerianPolynomial& eulerian_polynomial(std::uint32_t r);

// Exact value of sum_{m >= 1} m^r / k^m for integer k >= 2, via the
// closed form A_r(1/k) * (k / (k-1))^(r+1).
mpq_class power_sum_geometric(std::uint32_t k, std::uint32_t r);

}  // namespace goebel
