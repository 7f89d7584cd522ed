#include "goebel/eulerian.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace goebel {

mpz_class EulerianPolynomial::eval_ui(unsigned long t) const {
  mpz_class tt(t), acc(0);
  // Horner evaluation from the top coefficient down.
  for (std::size_t j = coeff.size(); j-- > 0;) acc = acc * tt + coeff[j];
  return acc;
}

mpq_class EulerianPolynomial::eval_q(const mpq_class& t) const {
  mpq_class acc(0);
  for (std::size_t j = coeff.size(); j-- > 0;) acc = acc * t + coeff[j];
  return acc;
}

namespace {

std::mutex cache_mutex;
// Grows monotonically; elements are never modified once published.  A deque
// never relocates existing elements on push_back, so a returned reference
// stays valid forever.
std::deque<EulerianPolynomial>& cache() {
  static std::deque<EulerianPolynomial>* c = [] {
    auto* v = new std::deque<EulerianPolynomial>;
    EulerianPolynomial a0;
    a0.order = 0;
    a0.coeff = {mpz_class(1)};
    v->push_back(std::move(a0));
    return v;
  }();
  return *c;
}

}  // namespace

const EulerianPolynomial& eulerian_polynomial(std::uint32_t r) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& c = cache();
  while (c.size() <= r) {
    const std::uint32_t n = static_cast<std::uint32_t>(c.size());
    // Descent counts for the previous order: prev[m] = E(n-1, m).
    // For n = 1 the previous row is the order-0 polynomial, whose
    // single descent count is E(0, 0) = 1.
    std::vector<mpz_class> prev;
    if (n == 1) {
      prev = {mpz_class(1)};
    } else {
      prev.reserve(n - 1);
      for (std::uint32_t m = 0; m < n - 1; ++m) prev.push_back(c[n - 1].coeff[m + 1]);
    }
    std::vector<mpz_class> row(n);
    for (std::uint32_t m = 0; m < n; ++m) {
      mpz_class v = 0;
      if (m < prev.size()) v += mpz_class(m + 1) * prev[m];
      if (m >= 1) v += mpz_class(n - m) * prev[m - 1];
      row[m] = v;
    }
    EulerianPolynomial poly;
    poly.order = n;
    poly.coeff.resize(n + 1);
    poly.coeff[0] = 0;
    for (std::uint32_t m = 0; m < n; ++m) poly.coeff[m + 1] = row[m];
    c.push_back(std::move(poly));
  }
  return c[r];
}

mpq_class power_sum_geometric(std::uint32_t k, std::uint32_t r) {
  if (k < 2) throw std::domain_error("power_sum_geometric: requires k >= 2");
  // At r = 0 the generating identity A_r(x)/(1-x)^(r+1) counts the m = 0
  // term as well; the sum over m >= 1 is just the geometric series.
  if (r == 0) return mpq_class(1, k - 1);
  const EulerianPolynomial& a = eulerian_polynomial(r);
  mpq_class x(1, k);
  mpq_class ratio(k, k - 1);
  mpq_class factor = 1;
  for (std::uint32_t i = 0; i <= r; ++i) factor *= ratio;
  mpq_class result = a.eval_q(x) * factor;
  result.canonicalize();
  return result;
}

}  // namespace goebel
