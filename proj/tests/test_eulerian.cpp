#include <doctest.h>

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "goebel/eulerian.hpp"

using namespace goebel;

namespace {

mpz_class factorial(std::uint32_t n) {
  mpz_class f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("small descent polynomials by hand") {
  // A_0 = 1; A_1 = t; A_2 = t^2 + t; A_3 = t^3 + 4 t^2 + t;
  // A_4 = t^4 + 11 t^3 + 11 t^2 + t; A_5 = t^5 + 26 t^4 + 66 t^3
  //       + 26 t^2 + t.
  CHECK(eulerian_polynomial(0).coeff == std::vector<mpz_class>{1});
  CHECK(eulerian_polynomial(1).coeff == std::vector<mpz_class>{0, 1});
  CHECK(eulerian_polynomial(2).coeff == std::vector<mpz_class>{0, 1, 1});
  CHECK(eulerian_polynomial(3).coeff == std::vector<mpz_class>{0, 1, 4, 1});
  CHECK(eulerian_polynomial(4).coeff ==
        std::vector<mpz_class>{0, 1, 11, 11, 1});
  CHECK(eulerian_polynomial(5).coeff ==
        std::vector<mpz_class>{0, 1, 26, 66, 26, 1});
}

TEST_CASE("palindrome and factorial-sum structure") {
  for (std::uint32_t r = 1; r <= 12; ++r) {
    const auto& poly = eulerian_polynomial(r);
    REQUIRE(poly.coeff.size() == r + 1);
    CHECK(poly.coeff[0] == 0);
    mpz_class sum = 0;
    for (std::uint32_t j = 1; j <= r; ++j) {
      CHECK(poly.coeff[j] == poly.coeff[r + 1 - j]);
      CHECK(poly.coeff[j] > 0);
      sum += poly.coeff[j];
    }
    CHECK(sum == factorial(r));  // A_r(1) counts all permutations
  }
}

TEST_CASE("evaluation helpers") {
  const auto& a3 = eulerian_polynomial(3);
  CHECK(a3.eval_ui(2) == 8 + 16 + 2);
  CHECK(a3.eval_q(mpq_class(1, 2)) == mpq_class(1, 8) + 1 + mpq_class(1, 2));
}

TEST_CASE("power sums against brute-force partial sums") {
  // sum_{m>=1} m^r / k^m = A_r(1/k) (k/(k-1))^(r+1).  The series
  // converges geometrically, so a long partial sum brackets the closed
  // form: partial < closed < partial + tail, with the tail dominated by
  // 2 * M^r / k^M at truncation M once k^(1/r) >= 2^(1/(r... )) -- use
  // exact rationals and a generous M so the bracket is decisive.
  for (std::uint32_t k : {2u, 3u, 5u}) {
    for (std::uint32_t r = 0; r <= 8; ++r) {
      mpq_class closed = power_sum_geometric(k, r);
      const std::uint32_t M = 200;
      mpq_class partial = 0;
      mpz_class km = 1;  // k^m
      for (std::uint32_t m = 1; m <= M; ++m) {
        km *= k;
        mpz_class mr = 1;
        for (std::uint32_t i = 0; i < r; ++i) mr *= m;
        partial += mpq_class(mr) / mpq_class(km);
      }
      CHECK(partial < closed);
      // Tail bound: for m > M, m^r <= M^r * 2^(m-M) when M >= 2r (since
      // (1+1/m)^r <= 2 term by term), so the tail is at most
      // (M+1)^r / k^M * sum 2^j/k^j ... keep it simple: the tail is less
      // than 2 (M+1)^r / k^(M+1) * k/(k-2+1).  Cheaper and still exact:
      // compare against the partial sum with one extra huge block.
      mpq_class block = 0;
      mpz_class km2 = km;
      for (std::uint32_t m = M + 1; m <= M + 60; ++m) {
        km2 *= k;
        mpz_class mr = 1;
        for (std::uint32_t i = 0; i < r; ++i) mr *= m;
        block += mpq_class(mr) / mpq_class(km2);
      }
      // The closed form sits between the two partial sums extended by a
      // crude remainder: remainder after M + 60 terms is microscopic
      // compared to the last included term, so closed - partial must be
      // below twice the block.
      CHECK(closed - partial < 2 * block + mpq_class(1, 1000000));
      CHECK(closed - partial > block);  // block misses only a positive tail
    }
  }
}

TEST_CASE("palindromy identity behind the two closed forms") {
  // The coefficient palindrome gives A_r(1/k) k^(r+1) = A_r(k) for
  // r >= 1, which is exactly why the two expressions
  // A_r(1/k) (k/(k-1))^(r+1) and A_r(k) / (k-1)^(r+1) agree.
  for (std::uint32_t r = 1; r <= 10; ++r) {
    const auto& poly = eulerian_polynomial(r);
    for (std::uint32_t k : {2u, 3u, 7u}) {
      mpq_class lhs = poly.eval_q(mpq_class(1, k));
      mpz_class kr1 = 1;
      for (std::uint32_t i = 0; i <= r; ++i) kr1 *= k;
      CHECK(lhs * kr1 == poly.eval_ui(k));
    }
  }
}
