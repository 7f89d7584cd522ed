// goebel: command-line front end for the quadratic-recurrence toolkit.
//
// One subcommand per library operation.  Exit codes: 0 on success, 1 when
// a verification ran and found violations (or a certificate came back
// inconclusive), 2 on usage errors, 3 when a computation hit its size
// budget or failed its precision self-check.
//
// Output is deterministic: the same argument vector always produces the
// same bytes on stdout.  Diagnostics (and --verbose chatter) go to stderr.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "goebel/asymptotics.hpp"
#include "goebel/eulerian.hpp"
#include "goebel/exact.hpp"
#include "goebel/format.hpp"
#include "goebel/ntable.hpp"
#include "goebel/numtheory.hpp"
#include "goebel/padic.hpp"
#include "goebel/randmod.hpp"
#include "goebel/rational.hpp"

namespace {

using namespace goebel;

// Thrown for well-formed flags whose values violate a precondition the
// parser cannot see (maps to exit 2, like any other usage problem).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Options shared by every subcommand.
struct CommonOpts {
  std::string format = "plain";
  std::string out;
  bool verbose = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "Output format: plain, csv, or json")
      ->default_str("plain");
  cmd->add_option("--out", c.out, "Write output to this file instead of stdout");
  cmd->add_flag("--verbose", c.verbose, "Log run details to stderr");
}

OutputFormat fmt_of(const CommonOpts& c) {
  auto f = parse_format(c.format);
  if (!f) throw usage_error("unknown format: " + c.format);
  return *f;
}

// Writes the exact bytes to --out (or stdout).  stdout stays line-buffered
// text; files are written binary so the bytes match stdout exactly.
void emit(const std::string& text, const CommonOpts& c) {
  if (c.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw usage_error("cannot open output file: " + c.out);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw usage_error("not a rational: " + text);
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw usage_error("zero denominator: " + text);
  q.canonicalize();
  return q;
}

GoebelParams params_of(std::uint32_t k, std::uint32_t l) {
  if (k < 2 || l < 2) throw usage_error("need k >= 2 and l >= 2");
  return GoebelParams{k, l};
}

bool any_fail(const std::vector<VerdictReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return true;
  return false;
}

int run_verdicts(const std::vector<VerdictReport>& reports,
                 const CommonOpts& c) {
  emit(render_verdicts(reports, fmt_of(c)), c);
  return any_fail(reports) ? 1 : 0;
}

// ---------------------------------------------------------------------
// Subcommand wiring.  Each setup_* registers one subcommand and stores a
// callback that performs the work and records the exit code.

struct Cli {
  CLI::App app{
      "Exact, modular, and asymptotic tools for the family of sequences\n"
      "g(1) = l, (n+1) g(n+1) = g(n) (n + g(n)^(k-1))."};
  int exit_code = 0;
};

void setup_eval(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto l = std::make_shared<std::uint32_t>(2);
  auto n = std::make_shared<std::uint32_t>(1);
  auto bits = std::make_shared<std::uint64_t>(DigitBudget{}.max_bits);
  auto digits = std::make_shared<std::size_t>(30);
  auto want_log = std::make_shared<bool>(false);

  CLI::App* cmd = cli.app.add_subcommand(
      "eval", "Exact value g(n), or its natural log with --log");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
  cmd->add_option("--n", *n, "Index (n >= 1)")->required();
  cmd->add_option("--budget-bits", *bits,
                  "Size cap in bits for exact values");
  cmd->add_option("--digits", *digits, "Significant digits for --log");
  cmd->add_flag("--log", *want_log,
                "Print log g(n) (works far beyond the exact range)");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, l, n, bits, digits, want_log] {
    auto params = params_of(*k, *l);
    if (*n < 1) throw usage_error("need n >= 1");
    ValueContext ctx{*k, *l, *n};
    if (*want_log) {
      HighPrecReal x = log_g(params, *n, *digits);
      emit(render_real(x, *digits, /*fixed_point=*/false, ctx, fmt_of(*c)),
           *c);
      return;
    }
    mpq_class g = eval_exact(params, *n, DigitBudget{*bits});
    emit(render_scalar(q_to_string(g), "g", ctx, fmt_of(*c)), *c);
  });
}

void setup_prefix(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto l = std::make_shared<std::uint32_t>(2);
  auto n = std::make_shared<std::uint32_t>(10);
  auto bits = std::make_shared<std::uint64_t>(DigitBudget{}.max_bits);

  CLI::App* cmd = cli.app.add_subcommand(
      "prefix", "Exact values g(1), ..., g(n) as one list");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
  cmd->add_option("--n", *n, "Last index to print")->required();
  cmd->add_option("--budget-bits", *bits,
                  "Size cap in bits for exact values");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, l, n, bits] {
    auto params = params_of(*k, *l);
    if (*n < 1) throw usage_error("need n >= 1");
    auto xs = eval_prefix(params, *n, DigitBudget{*bits});
    emit(render_rational_list(xs, "n", "g", 1, fmt_of(*c)), *c);
  });
}

void setup_nkl(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto l = std::make_shared<std::uint32_t>(2);
  auto cap = std::make_shared<std::uint32_t>(5000);
  auto naive = std::make_shared<bool>(false);
  auto bits = std::make_shared<std::uint64_t>(DigitBudget{}.max_bits);

  CLI::App* cmd = cli.app.add_subcommand(
      "nkl", "First index where g(n) is not an integer");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
  cmd->add_option("--cap", *cap, "Give up after this index");
  cmd->add_flag("--naive", *naive,
                "Scan exact rationals instead of prime-power residues");
  cmd->add_option("--budget-bits", *bits,
                  "Size cap in bits for exact values (--naive only)");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, l, cap, naive, bits] {
    auto params = params_of(*k, *l);
    std::optional<std::uint32_t> result =
        *naive ? naive_N(params, *cap, DigitBudget{*bits})
               : compute_N(params, *cap);
    ValueContext ctx{*k, *l, std::nullopt};
    std::string value =
        result ? std::to_string(*result) : std::string("exceeds-cap");
    emit(render_scalar(value, "N", ctx, fmt_of(*c)), *c);
  });
}

void setup_table(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto kmin = std::make_shared<std::uint32_t>(2);
  auto kmax = std::make_shared<std::uint32_t>(17);
  auto lmin = std::make_shared<std::uint32_t>(2);
  auto lmax = std::make_shared<std::uint32_t>(17);
  auto cap = std::make_shared<std::uint32_t>(5000);
  auto jobs = std::make_shared<unsigned>(0);

  CLI::App* cmd = cli.app.add_subcommand(
      "table", "Grid of first non-integral indices over a (k, l) range");
  cmd->add_option("--kmin", *kmin, "Smallest k");
  cmd->add_option("--kmax", *kmax, "Largest k");
  cmd->add_option("--lmin", *lmin, "Smallest l");
  cmd->add_option("--lmax", *lmax, "Largest l");
  cmd->add_option("--cap", *cap, "Per-cell index cap");
  cmd->add_option("--jobs", *jobs,
                  "Worker threads (0 = all cores; GOEBEL_JOBS overrides)");
  add_common(cmd, *c);

  cmd->callback([&cli, c, kmin, kmax, lmin, lmax, cap, jobs] {
    if (*kmin < 2 || *lmin < 2) throw usage_error("need kmin, lmin >= 2");
    if (*kmax < *kmin || *lmax < *lmin)
      throw usage_error("empty range: need kmax >= kmin and lmax >= lmin");
    NTable table = build_table(*kmin, *kmax, *lmin, *lmax, *cap, *jobs);
    emit(render_table(table, fmt_of(*c)), *c);
  });
}

void setup_const(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto l = std::make_shared<std::uint32_t>(2);
  auto n = std::make_shared<std::uint32_t>(0);
  auto depth = std::make_shared<std::uint32_t>(0);
  auto digits = std::make_shared<std::size_t>(30);
  auto want_log = std::make_shared<bool>(false);

  CLI::App* cmd = cli.app.add_subcommand(
      "const",
      "Growth constant C with lim g(n) = (C^(k^n) n^(1/(k-1)))(1+o(1)); "
      "--n prints the finite-level proxy C(n) = g(n)^(1/k^n)");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
  cmd->add_option("--n", *n, "Print C(n) instead of the limit (n >= 1)");
  cmd->add_option("--depth", *depth,
                  "Series split point (0 = choose automatically)");
  cmd->add_option("--digits", *digits, "Decimal digits after the point");
  cmd->add_flag("--log", *want_log, "Print log C instead of C");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, l, n, depth, digits, want_log] {
    auto params = params_of(*k, *l);
    ValueContext ctx{*k, *l,
                     *n > 0 ? std::optional<std::uint32_t>(*n) : std::nullopt};
    HighPrecReal x;
    if (*n > 0) {
      if (*want_log) throw usage_error("--log applies to the limit only");
      x = C_of_n(params, *n, *digits);
    } else if (*want_log) {
      x = goebel_log_constant(params, *digits, *depth);
    } else {
      x = goebel_constant(params, *digits, *depth);
    }
    emit(render_real(x, *digits, /*fixed_point=*/true, ctx, fmt_of(*c)), *c);
  });
}

void setup_somos(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto digits = std::make_shared<std::size_t>(30);
  auto seq = std::make_shared<std::uint32_t>(0);
  auto bits = std::make_shared<std::uint64_t>(DigitBudget{}.max_bits);

  CLI::App* cmd = cli.app.add_subcommand(
      "somos",
      "Constant sigma_k = exp(sum over m of log(m) / k^m); with --seq, "
      "terms of the k = 2 companion recurrence s(n) = n s(n-1)^2");
  cmd->add_option("--k", *k, "Base of the weights (k >= 2)");
  cmd->add_option("--digits", *digits, "Decimal digits after the point");
  cmd->add_option("--seq", *seq, "Print s(1), ..., s(seq) instead");
  cmd->add_option("--budget-bits", *bits,
                  "Size cap in bits for sequence terms");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, digits, seq, bits] {
    if (*seq > 0) {
      if (*k != 2)
        throw usage_error("--seq is defined for k = 2 only");
      std::vector<mpz_class> terms;
      terms.reserve(*seq);
      DigitBudget budget{*bits};
      for (std::uint32_t n = 1; n <= *seq; ++n)
        terms.push_back(somos_sequence(n, budget));
      emit(render_integer_list(terms, "n", "s", 1, fmt_of(*c)), *c);
      return;
    }
    if (*k < 2) throw usage_error("need k >= 2");
    HighPrecReal x = somos_constant(*k, *digits);
    ValueContext ctx{*k, std::nullopt, std::nullopt};
    emit(render_real(x, *digits, /*fixed_point=*/true, ctx, fmt_of(*c)), *c);
  });
}

void setup_coeffs(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto rmax = std::make_shared<std::uint32_t>(6);

  CLI::App* cmd = cli.app.add_subcommand(
      "coeffs",
      "Exact expansion coefficients a_0, ..., a_rmax of the correction "
      "series B(n) = sum of a_r n^-r");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--rmax", *rmax, "Highest order to print");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, rmax] {
    if (*k < 2) throw usage_error("need k >= 2");
    std::vector<mpq_class> xs;
    xs.reserve(*rmax + 1);
    for (std::uint32_t r = 0; r <= *rmax; ++r)
      xs.push_back(asym_coeff(*k, r));
    emit(render_rational_list(xs, "r", "a", 0, fmt_of(*c)), *c);
  });
}

void setup_eulerian(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto r = std::make_shared<std::uint32_t>(1);

  CLI::App* cmd = cli.app.add_subcommand(
      "eulerian", "Descent polynomial A_r(t) of order r");
  cmd->add_option("--r", *r, "Order (r >= 0)")->required();
  add_common(cmd, *c);

  cmd->callback([&cli, c, r] {
    emit(render_eulerian(eulerian_polynomial(*r), fmt_of(*c)), *c);
  });
}

void setup_epsilon(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto l = std::make_shared<std::uint32_t>(2);
  auto n = std::make_shared<std::uint32_t>(5);
  auto digits = std::make_shared<std::size_t>(30);

  CLI::App* cmd = cli.app.add_subcommand(
      "epsilon",
      "Defect eps(n) separating log g(n) from its smooth model");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
  cmd->add_option("--n", *n, "Index (n >= 1)")->required();
  cmd->add_option("--digits", *digits, "Significant digits");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, l, n, digits] {
    auto params = params_of(*k, *l);
    if (*n < 1) throw usage_error("need n >= 1");
    HighPrecReal x = epsilon_defect(params, *n, *digits);
    ValueContext ctx{*k, *l, *n};
    emit(render_real(x, *digits, /*fixed_point=*/false, ctx, fmt_of(*c)), *c);
  });
}

void setup_expand(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto l = std::make_shared<std::uint32_t>(2);
  auto n = std::make_shared<std::uint32_t>(10);
  auto order = std::make_shared<std::uint32_t>(6);
  auto digits = std::make_shared<std::size_t>(30);

  CLI::App* cmd = cli.app.add_subcommand(
      "expand",
      "Compare log g(n) against the order-R asymptotic model at one index");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
  cmd->add_option("--n", *n, "Index (n >= 1)")->required();
  cmd->add_option("--order", *order, "Model order R");
  cmd->add_option("--digits", *digits, "Significant digits");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, l, n, order, digits] {
    auto params = params_of(*k, *l);
    if (*n < 1) throw usage_error("need n >= 1");
    ExpansionEval ev = expansion_eval(params, *n, *order, *digits);
    emit(render_expansion_eval(params, ev, *digits, fmt_of(*c)), *c);
  });
}

void setup_converge(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto l = std::make_shared<std::uint32_t>(2);
  auto nmin = std::make_shared<std::uint32_t>(14);
  auto nmax = std::make_shared<std::uint32_t>(22);
  auto order = std::make_shared<std::uint32_t>(5);
  auto digits = std::make_shared<std::size_t>(30);

  CLI::App* cmd = cli.app.add_subcommand(
      "converge",
      "Scaled residuals rho_R(n) over an index range; boundedness is the "
      "empirical sign that the order-R model is right");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
  cmd->add_option("--nmin", *nmin, "First index");
  cmd->add_option("--nmax", *nmax, "Last index");
  cmd->add_option("--order", *order, "Model order R");
  cmd->add_option("--digits", *digits, "Significant digits");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, l, nmin, nmax, order, digits] {
    auto params = params_of(*k, *l);
    if (*nmin < 1 || *nmax < *nmin)
      throw usage_error("need 1 <= nmin <= nmax");
    std::vector<std::uint32_t> ns;
    for (std::uint32_t n = *nmin; n <= *nmax; ++n) ns.push_back(n);
    auto rows = convergence_report(params, ns, *order, *digits);
    emit(render_convergence(params, rows, *order, *digits, fmt_of(*c)), *c);
  });
}

void setup_random(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto l = std::make_shared<std::uint32_t>(2);
  auto p = std::make_shared<std::uint64_t>(13);
  auto r = std::make_shared<std::uint32_t>(2);

  CLI::App* cmd = cli.app.add_subcommand(
      "random",
      "Residues g(n) mod p^r over the indices n < p with "
      "g(n) = 0 mod p^(r-1), plus the distinctness verdict");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
  cmd->add_option("--p", *p, "Prime modulus base")->required();
  cmd->add_option("--r", *r, "Prime-power exponent (r >= 2)");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, l, p, r] {
    auto params = params_of(*k, *l);
    if (!is_prime(*p)) throw usage_error("p must be prime");
    if (*r < 2) throw usage_error("need r >= 2");
    ResidueSetReport rep = residue_set(params, *p, *r);
    emit(render_residue_report(rep, fmt_of(*c)), *c);
    if (rep.verdict == "violation") cli.exit_code = 1;
  });
}

void setup_scan(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto l = std::make_shared<std::uint32_t>(2);
  auto pmax = std::make_shared<std::uint32_t>(50);

  CLI::App* cmd = cli.app.add_subcommand(
      "scan-primes",
      "Primes p <= pmax whose own index value g(p) is not p-integral");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
  cmd->add_option("--pmax", *pmax, "Largest prime to test")->required();
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, l, pmax] {
    auto params = params_of(*k, *l);
    auto ps = scan_nonintegral_primes(params, *pmax);
    emit(render_uint_list(ps, "i", "p", 1, fmt_of(*c)), *c);
  });
}

void setup_tseq(Cli& cli) {
  auto c = std::make_shared<CommonOpts>();
  auto k = std::make_shared<std::uint32_t>(2);
  auto t0_text = std::make_shared<std::string>("2");
  auto n = std::make_shared<std::uint32_t>(1);
  auto base = std::make_shared<std::uint32_t>(0);
  auto bits = std::make_shared<std::uint64_t>(DigitBudget{}.max_bits);

  CLI::App* cmd = cli.app.add_subcommand(
      "tseq",
      "Companion lower-bound sequence t(base) = t0, "
      "t(m+1) = t(m)^k / (m+1)");
  cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
  cmd->add_option("--t0", *t0_text, "Seed value (rational, e.g. 5/4)")
      ->required();
  cmd->add_option("--n", *n, "Index to evaluate")->required();
  cmd->add_option("--base", *base, "Index the seed is attached to");
  cmd->add_option("--budget-bits", *bits,
                  "Size cap in bits for exact values");
  add_common(cmd, *c);

  cmd->callback([&cli, c, k, t0_text, n, base, bits] {
    if (*k < 2) throw usage_error("need k >= 2");
    mpq_class t0 = parse_rational(*t0_text);
    if (t0 <= 0) throw usage_error("need t0 > 0");
    if (*n < *base) throw usage_error("need n >= base");
    mpq_class t = t_sequence(*k, t0, *n, DigitBudget{*bits}, *base);
    ValueContext ctx{*k, std::nullopt, *n};
    emit(render_scalar(q_to_string(t), "t", ctx, fmt_of(*c)), *c);
  });
}

void setup_verify(Cli& cli) {
  CLI::App* verify = cli.app.add_subcommand(
      "verify", "Exhaustive checks of the structural theorems");
  verify->require_subcommand(1);

  {  // verify main1: the four finite claims behind the minimum-7 result.
    auto c = std::make_shared<CommonOpts>();
    CLI::App* cmd = verify->add_subcommand(
        "main1",
        "Four finite residue claims that force every first non-integral "
        "index to be at least 7");
    add_common(cmd, *c);
    cmd->callback([&cli, c] {
      cli.exit_code = run_verdicts(verify_min7_reduction(), *c);
    });
  }

  {  // verify n7: classify exactly where the minimum 7 is attained.
    auto c = std::make_shared<CommonOpts>();
    auto kmax = std::make_shared<std::uint32_t>(200);
    auto lmax = std::make_shared<std::uint32_t>(200);
    auto jobs = std::make_shared<unsigned>(0);
    CLI::App* cmd = verify->add_subcommand(
        "n7",
        "First non-integral index equals 7 exactly on the residue "
        "classes k = 2 mod 6, l = 3 mod 7");
    cmd->add_option("--kmax", *kmax, "Largest k");
    cmd->add_option("--lmax", *lmax, "Largest l");
    cmd->add_option("--jobs", *jobs,
                    "Worker threads (0 = all cores; GOEBEL_JOBS overrides)");
    add_common(cmd, *c);
    cmd->callback([&cli, c, kmax, lmax, jobs] {
      cli.exit_code = run_verdicts({classify_N7(*kmax, *lmax, *jobs)}, *c);
    });
  }

  {  // verify lemma21: localization properties of the residue machine.
    auto c = std::make_shared<CommonOpts>();
    auto p = std::make_shared<std::uint64_t>(2);
    auto r = std::make_shared<std::uint32_t>(0);
    auto ranges = std::make_shared<LemmaRanges>();
    CLI::App* cmd = verify->add_subcommand(
        "lemma21",
        "Residue-machine localization laws against the exact oracle");
    cmd->add_option("--p", *p, "Prime")->required();
    cmd->add_option("--r", *r,
                    "Exponent (0 = the p-adic valuation of n_hi!)");
    cmd->add_option("--kmin", ranges->k_lo, "Smallest k");
    cmd->add_option("--kmax", ranges->k_hi, "Largest k");
    cmd->add_option("--lmin", ranges->l_lo, "Smallest l");
    cmd->add_option("--lmax", ranges->l_hi, "Largest l");
    cmd->add_option("--nmax", ranges->n_hi, "Index horizon");
    add_common(cmd, *c);
    cmd->callback([&cli, c, p, r, ranges] {
      if (!is_prime(*p)) throw usage_error("p must be prime");
      std::uint32_t rr = *r;
      if (rr == 0)
        rr = std::max<std::uint32_t>(
            1, static_cast<std::uint32_t>(nu_p_factorial(*p, ranges->n_hi)));
      cli.exit_code = run_verdicts(check_key_lemma(*ranges, *p, rr), *c);
    });
  }

  {  // verify random: distinct-residue dichotomy over a parameter box.
    auto c = std::make_shared<CommonOpts>();
    auto kmax = std::make_shared<std::uint32_t>(10);
    auto lmax = std::make_shared<std::uint32_t>(10);
    auto pmax = std::make_shared<std::uint64_t>(50);
    auto rs = std::make_shared<std::vector<std::uint32_t>>();
    CLI::App* cmd = verify->add_subcommand(
        "random",
        "Residue sets are all-zero or pairwise distinct, and "
        "n g(n) is constant mod p^r along the low range");
    cmd->add_option("--kmax", *kmax, "Largest k");
    cmd->add_option("--lmax", *lmax, "Largest l");
    cmd->add_option("--pmax", *pmax, "Largest prime");
    cmd->add_option("--r", *rs, "Exponents to test (repeatable)");
    add_common(cmd, *c);
    cmd->callback([&cli, c, kmax, lmax, pmax, rs] {
      std::vector<std::uint32_t> use = *rs;
      if (use.empty()) use = {2, 3};
      for (std::uint32_t r : use)
        if (r < 2) throw usage_error("need every r >= 2");
      cli.exit_code =
          run_verdicts({verify_random_theorem(*kmax, *lmax, *pmax, use)}, *c);
    });
  }

  {  // verify table: recompute a grid and compare against a CSV.
    auto c = std::make_shared<CommonOpts>();
    auto against = std::make_shared<std::string>();
    auto cap = std::make_shared<std::uint32_t>(5000);
    auto jobs = std::make_shared<unsigned>(0);
    CLI::App* cmd = verify->add_subcommand(
        "table", "Recompute the grid a CSV file describes and compare");
    cmd->add_option("--against", *against, "CSV file to check")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--cap", *cap, "Per-cell index cap");
    cmd->add_option("--jobs", *jobs,
                    "Worker threads (0 = all cores; GOEBEL_JOBS overrides)");
    add_common(cmd, *c);
    cmd->callback([&cli, c, against, cap, jobs] {
      std::ifstream f(*against, std::ios::binary);
      if (!f) throw usage_error("cannot read: " + *against);
      std::ostringstream buf;
      buf << f.rdbuf();
      NTable want = table_from_csv(buf.str());
      NTable got = build_table(want.k_lo, want.k_hi, want.l_lo, want.l_hi,
                               *cap, *jobs);
      cli.exit_code = run_verdicts({compare_table(got, want)}, *c);
    });
  }

  {  // verify lowerbound: seed certificate for doubly exponential growth.
    auto c = std::make_shared<CommonOpts>();
    auto k = std::make_shared<std::uint32_t>(2);
    auto l = std::make_shared<std::uint32_t>(2);
    auto t0_text = std::make_shared<std::string>("2");
    auto nmax = std::make_shared<std::uint32_t>(15);
    auto base = std::make_shared<std::uint32_t>(0);
    auto digits = std::make_shared<std::size_t>(30);
    CLI::App* cmd = verify->add_subcommand(
        "lowerbound",
        "Certify g(n) >= t(n) for the companion sequence seeded at t0 "
        "and check its growth limit is positive");
    cmd->add_option("--k", *k, "Exponent parameter (k >= 2)")->required();
    cmd->add_option("--l", *l, "Initial value g(1) = l (l >= 2)")->required();
    cmd->add_option("--t0", *t0_text, "Seed value (rational, e.g. 5/4)")
        ->required();
    cmd->add_option("--nmax", *nmax, "Domination horizon");
    cmd->add_option("--base", *base, "Index the seed is attached to");
    cmd->add_option("--digits", *digits, "Significant digits for the limit");
    add_common(cmd, *c);
    cmd->callback([&cli, c, k, l, t0_text, nmax, base, digits] {
      auto params = params_of(*k, *l);
      mpq_class t0 = parse_rational(*t0_text);
      if (t0 <= 1) throw usage_error("need t0 > 1");
      LowerBoundReport rep =
          check_lower_bound(params, t0, *nmax, *digits, *base);
      emit(render_lower_bound(params, t0, *base, rep, *digits, fmt_of(*c)),
           *c);
      if (!rep.conclusive) cli.exit_code = 1;
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  cli.app.require_subcommand(1);
  setup_eval(cli);
  setup_prefix(cli);
  setup_nkl(cli);
  setup_table(cli);
  setup_const(cli);
  setup_somos(cli);
  setup_coeffs(cli);
  setup_eulerian(cli);
  setup_epsilon(cli);
  setup_expand(cli);
  setup_converge(cli);
  setup_random(cli);
  setup_scan(cli);
  setup_tseq(cli);
  setup_verify(cli);

  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = cli.app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const budget_exceeded& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return 3;
  } catch (const precision_failure& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return cli.exit_code;
}
