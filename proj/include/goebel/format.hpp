#pragma once

// Deterministic serialization of every result family to plain text, CSV
// (RFC-style quoting, header row, one record per element), or JSON (one
// well-formed document per call).  Identical inputs always produce
// identical bytes: decimal values are rendered as strings at the
// requested digit count and no run metadata is embedded.

#include "goebel/asymptotics.hpp"
#include "goebel/eulerian.hpp"
#include "goebel/ntable.hpp"
#include "goebel/randmod.hpp"
#include "goebel/rational.hpp"
#include "goebel/real.hpp"
#include "goebel/report.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace goebel {

enum class OutputFormat { plain, csv, json };

// "plain" | "csv" | "json"; anything else -> nullopt.
std::optional<OutputFormat> parse_format(std::string_view name);
std::string format_name(OutputFormat fmt);

// RFC-style CSV field quoting: wraps in double quotes when the value
// contains a comma, quote, or newline; embedded quotes are doubled.
std::string csv_escape(const std::string& field);

// "28", "-21", or "6/5" (lowest terms, denominator omitted when 1).
std::string q_to_string(const mpq_class& x);

// Fixed-point rendering with exactly `decimals` digits after the point,
// round-to-nearest.
std::string fixed_decimals(const Real& x, std::size_t decimals);

// Optional (k, l, n, ...) context attached to JSON scalar documents.
struct ValueContext {
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> l;
  std::optional<std::uint32_t> n;
};

// One high-precision value with its error bound.  `fixed_point` renders
// the plain/value string with `digits` decimals after the point (used
// for the named constants); otherwise `digits` significant digits with
// automatic fixed/scientific choice.
std::string render_real(const HighPrecReal& x, std::size_t digits,
                        bool fixed_point, const ValueContext& ctx,
                        OutputFormat fmt);

// A list of exact rationals under a named value column with a named,
// running index column starting at `index_start`.
std::string render_rational_list(const std::vector<mpq_class>& xs,
                                 const std::string& index_name,
                                 const std::string& value_name,
                                 std::uint32_t index_start, OutputFormat fmt);
std::string render_integer_list(const std::vector<mpz_class>& xs,
                                const std::string& index_name,
                                const std::string& value_name,
                                std::uint32_t index_start, OutputFormat fmt);
std::string render_uint_list(const std::vector<std::uint32_t>& xs,
                             const std::string& index_name,
                             const std::string& value_name,
                             std::uint32_t index_start, OutputFormat fmt);

// Single exact value (integer index results, exact rationals).
std::string render_scalar(const std::string& value, const std::string& name,
                          const ValueContext& ctx, OutputFormat fmt);

// N-table; plain and csv both use the canonical CSV grid (the byte
// format of the bundled fixture), json a structured document.
std::string render_table(const NTable& table, OutputFormat fmt);

// Pass/fail reports with counterexamples.
std::string render_verdicts(const std::vector<VerdictReport>& reports,
                            OutputFormat fmt);

// Residue-set report (index set, residues, verdict).
std::string render_residue_report(const ResidueSetReport& rep,
                                  OutputFormat fmt);

// Scaled-residual table.
std::string render_convergence(const GoebelParams& params,
                               const std::vector<ConvergenceRow>& rows,
                               std::uint32_t order, std::size_t digits,
                               OutputFormat fmt);

// Model-versus-actual comparison at one index.
std::string render_expansion_eval(const GoebelParams& params,
                                  const ExpansionEval& ev, std::size_t digits,
                                  OutputFormat fmt);

// Lower-bound certificate.
std::string render_lower_bound(const GoebelParams& params, const mpq_class& t0,
                               std::uint32_t base, const LowerBoundReport& rep,
                               std::size_t digits, OutputFormat fmt);

// Descent polynomial: plain prints the descending monomial form.
std::string render_eulerian(const EulerianPolynomial& poly, OutputFormat fmt);

}  // namespace goebel
