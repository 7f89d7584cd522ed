#include "goebel/randmod.hpp"

#include "goebel/numtheory.hpp"
#include "goebel/padic.hpp"

#include <set>
#include <stdexcept>

namespace goebel {

ResidueSetReport residue_set(const GoebelParams& params, std::uint64_t p,
                             std::uint32_t r) {
  if (params.k < 2)
    throw std::domain_error("residue_set: requires k >= 2");
  if (r < 2) throw std::domain_error("residue_set: requires r >= 2");
  PrimePowerContext ctx(p, r);  // validates primality

  ResidueSetReport rep;
  rep.k = params.k;
  rep.l = params.l;
  rep.p = p;
  rep.r = r;

  mpz_class pr_1, pr;
  mpz_ui_pow_ui(pr_1.get_mpz_t(), static_cast<unsigned long>(p), r - 1);
  pr = pr_1 * static_cast<unsigned long>(p);

  PadicRun run(params, ctx);
  for (std::uint32_t n = 1; n < p; ++n) {
    if (n > 1) run.advance();
    // Below p no budget has been spent and no failure is possible (the
    // first failure of the p-machine sits at a multiple of p).
    const PadicState& st = run.state();
    if (st.failed)
      throw std::logic_error("residue_set: unexpected failure below p");
    if (st.residue % pr_1 == 0) {
      rep.index_set.push_back(n);
      rep.residues.push_back(st.residue % pr);
    }
  }

  bool all_zero = true;
  bool any_zero = false;
  for (const mpz_class& a : rep.residues) {
    if (a == 0)
      any_zero = true;
    else
      all_zero = false;
  }
  std::set<mpz_class> uniq(rep.residues.begin(), rep.residues.end());
  const bool distinct = uniq.size() == rep.residues.size();

  if (rep.residues.empty() || (!any_zero && distinct)) {
    rep.verdict = "all-distinct";
  } else if (all_zero) {
    rep.verdict = "singleton-zero";
  } else {
    rep.verdict = "violation";
    rep.note = any_zero ? "mixed zero and nonzero residues"
                        : "repeated nonzero residues";
  }
  return rep;
}

VerdictReport verify_random_theorem(std::uint32_t k_hi, std::uint32_t l_hi,
                                    std::uint64_t p_hi,
                                    const std::vector<std::uint32_t>& rs) {
  VerdictReport rep{"residue-set-dichotomy", true, {}};
  for (std::uint32_t r : rs)
    if (r < 2)
      throw std::domain_error("verify_random_theorem: every r must be >= 2");

  std::vector<std::uint32_t> ps;
  for (std::uint32_t p = 2; p <= p_hi; ++p)
    if (is_prime(p)) ps.push_back(p);

  for (std::uint32_t k = 2; k <= k_hi; ++k) {
    for (std::uint32_t l = 2; l <= l_hi; ++l) {
      GoebelParams params{k, l};
      for (std::uint32_t p : ps) {
        for (std::uint32_t r : rs) {
          ResidueSetReport rs_rep = residue_set(params, p, r);
          if (rs_rep.verdict == "violation") {
            rep.fail({k, l, rs_rep.index_set.empty() ? 0u
                                                     : rs_rep.index_set[0],
                      p, "dichotomy: " + rs_rep.note});
            continue;
          }
          if (rs_rep.index_set.empty()) continue;

          // Suffix shape: the index set must be a contiguous run ending
          // at p - 1.  (This already follows from the invariant below,
          // but check it independently.)
          const std::uint32_t lo = rs_rep.index_set.front();
          bool suffix = rs_rep.index_set.back() == p - 1 &&
                        rs_rep.index_set.size() == p - lo;
          if (!suffix) {
            rep.fail({k, l, lo, p, "index set is not a suffix of [1, p)"});
            continue;
          }

          // Invariant: with a = min index and g(a) = b p^(r-1) mod p^r,
          // every n in [a, p) -- member of the index set or not --
          // satisfies n g(n) = a b p^(r-1) mod p^r.
          mpz_class pr;
          mpz_ui_pow_ui(pr.get_mpz_t(), p, r);
          mpz_class expected = mpz_class(lo) * rs_rep.residues.front() % pr;
          PrimePowerContext ctx(p, r);
          PadicRun run(params, ctx);
          bool bad = false;
          for (std::uint32_t n = 1; n < p && !bad; ++n) {
            if (n > 1) run.advance();
            if (n < lo) continue;
            if (run.state().failed) {
              rep.fail({k, l, n, p, "unexpected failure below p"});
              bad = true;
              break;
            }
            mpz_class got = mpz_class(n) * (run.state().residue % pr) % pr;
            if (got != expected) {
              rep.fail({k, l, n, p, "n*g(n) invariant broken"});
              bad = true;
            }
          }
        }
      }
    }
  }
  return rep;
}

std::vector<std::uint32_t> scan_nonintegral_primes(const GoebelParams& params,
                                                   std::uint32_t p_max) {
  std::vector<std::uint32_t> out;
  if (params.k == 1 || params.l == 1) return out;  // constant sequence
  for (std::uint32_t p = 2; p <= p_max; ++p) {
    if (!is_prime(p)) continue;
    // Budget r = 1 = nu_p(p!) certifies the verdict at n = p either way:
    // below p no budget is spent, and at the step into p the machine
    // either sees a unit numerator (valuation drops negative: failure)
    // or a multiple of p (valuation stays >= 0: p-integral).
    PrimePowerContext ctx(p, 1);
    if (padic_eval(ctx, params, p).failed) out.push_back(p);
  }
  return out;
}

}  // namespace goebel
