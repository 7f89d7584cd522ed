#include "goebel/format.hpp"

#include <json.hpp>
#include <mpfr.h>

#include <sstream>

namespace goebel {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// Short scientific rendering for error bounds.
std::string err_string(const Real& err) {
  if (err.is_zero()) return "0";
  return err.to_decimal(3, RenderStyle::scientific);
}

std::string real_string(const HighPrecReal& x, std::size_t digits,
                        bool fixed_point) {
  return fixed_point ? fixed_decimals(x.value, digits)
                     : x.value.to_decimal(digits);
}

ordered_json real_json(const HighPrecReal& x, std::size_t digits,
                       bool fixed_point) {
  ordered_json j;
  j["value"] = real_string(x, digits, fixed_point);
  j["err"] = err_string(x.err);
  return j;
}

void put_context(ordered_json& j, const ValueContext& ctx) {
  if (ctx.k) j["k"] = *ctx.k;
  if (ctx.l) j["l"] = *ctx.l;
  if (ctx.n) j["n"] = *ctx.n;
}

ordered_json verdict_json(const VerdictReport& rep) {
  ordered_json j;
  j["claim"] = rep.claim;
  j["pass"] = rep.pass;
  ordered_json cxs = ordered_json::array();
  for (const Counterexample& c : rep.counterexamples) {
    ordered_json cx;
    cx["k"] = c.k;
    cx["l"] = c.l;
    cx["n"] = c.n;
    cx["p"] = c.p;
    cx["note"] = c.note;
    cxs.push_back(std::move(cx));
  }
  j["counterexamples"] = std::move(cxs);
  return j;
}

template <typename T, typename ToString>
std::string render_list(const std::vector<T>& xs, const std::string& index_name,
                        const std::string& value_name,
                        std::uint32_t index_start, OutputFormat fmt,
                        ToString to_string) {
  switch (fmt) {
    case OutputFormat::plain: {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += to_string(xs[i]);
      }
      out += "\n";
      return out;
    }
    case OutputFormat::csv: {
      std::string out =
          csv_escape(index_name) + "," + csv_escape(value_name) + "\n";
      for (std::size_t i = 0; i < xs.size(); ++i)
        out += std::to_string(index_start + i) + "," +
               csv_escape(to_string(xs[i])) + "\n";
      return out;
    }
    case OutputFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const T& x : xs) arr.push_back(to_string(x));
      return dump(arr);
    }
  }
  return {};
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string format_name(OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::plain: return "plain";
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
  }
  return "plain";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string q_to_string(const mpq_class& x) { return x.get_str(); }

std::string fixed_decimals(const Real& x, std::size_t decimals) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RNf", static_cast<int>(decimals), x.raw());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string render_real(const HighPrecReal& x, std::size_t digits,
                        bool fixed_point, const ValueContext& ctx,
                        OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::plain:
      return real_string(x, digits, fixed_point) + "\n";
    case OutputFormat::csv:
      return "value,err\n" + csv_escape(real_string(x, digits, fixed_point)) +
             "," + csv_escape(err_string(x.err)) + "\n";
    case OutputFormat::json: {
      ordered_json j;
      put_context(j, ctx);
      j["value"] = real_string(x, digits, fixed_point);
      j["err"] = err_string(x.err);
      return dump(j);
    }
  }
  return {};
}

std::string render_rational_list(const std::vector<mpq_class>& xs,
                                 const std::string& index_name,
                                 const std::string& value_name,
                                 std::uint32_t index_start, OutputFormat fmt) {
  return render_list(xs, index_name, value_name, index_start, fmt,
                     [](const mpq_class& x) { return q_to_string(x); });
}

std::string render_integer_list(const std::vector<mpz_class>& xs,
                                const std::string& index_name,
                                const std::string& value_name,
                                std::uint32_t index_start, OutputFormat fmt) {
  return render_list(xs, index_name, value_name, index_start, fmt,
                     [](const mpz_class& x) { return x.get_str(); });
}

std::string render_uint_list(const std::vector<std::uint32_t>& xs,
                             const std::string& index_name,
                             const std::string& value_name,
                             std::uint32_t index_start, OutputFormat fmt) {
  return render_list(xs, index_name, value_name, index_start, fmt,
                     [](std::uint32_t x) { return std::to_string(x); });
}

std::string render_scalar(const std::string& value, const std::string& name,
                          const ValueContext& ctx, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::plain:
      return value + "\n";
    case OutputFormat::csv:
      return csv_escape(name) + "\n" + csv_escape(value) + "\n";
    case OutputFormat::json: {
      ordered_json j;
      put_context(j, ctx);
      j[name] = value;
      return dump(j);
    }
  }
  return {};
}

std::string render_table(const NTable& table, OutputFormat fmt) {
  if (fmt == OutputFormat::plain || fmt == OutputFormat::csv)
    return table_to_csv(table);
  ordered_json j;
  j["k_lo"] = table.k_lo;
  j["k_hi"] = table.k_hi;
  j["l_lo"] = table.l_lo;
  j["l_hi"] = table.l_hi;
  j["cap"] = table.cap;
  ordered_json rows = ordered_json::array();
  for (std::uint32_t l = table.l_lo; l <= table.l_hi; ++l) {
    ordered_json row = ordered_json::array();
    for (std::uint32_t k = table.k_lo; k <= table.k_hi; ++k) {
      const auto& cell = table.at(k, l);
      if (cell)
        row.push_back(*cell);
      else
        row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return dump(j);
}

std::string render_verdicts(const std::vector<VerdictReport>& reports,
                            OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::plain: {
      std::string out;
      for (const VerdictReport& rep : reports) {
        out += (rep.pass ? "PASS: " : "FAIL: ") + rep.claim;
        if (!rep.pass)
          out += " (" + std::to_string(rep.counterexamples.size()) +
                 " counterexample" +
                 (rep.counterexamples.size() == 1 ? "" : "s") + ")";
        out += "\n";
        std::size_t shown = 0;
        for (const Counterexample& c : rep.counterexamples) {
          if (shown++ == 10) {
            out += "  ...\n";
            break;
          }
          out += "  k=" + std::to_string(c.k) + " l=" + std::to_string(c.l) +
                 " n=" + std::to_string(c.n) + " p=" + std::to_string(c.p);
          if (!c.note.empty()) out += " " + c.note;
          out += "\n";
        }
      }
      return out;
    }
    case OutputFormat::csv: {
      std::string out = "claim,pass,k,l,n,p,note\n";
      for (const VerdictReport& rep : reports) {
        if (rep.counterexamples.empty()) {
          out += csv_escape(rep.claim) + "," + (rep.pass ? "1" : "0") +
                 ",,,,,\n";
          continue;
        }
        for (const Counterexample& c : rep.counterexamples)
          out += csv_escape(rep.claim) + "," + (rep.pass ? "1" : "0") + "," +
                 std::to_string(c.k) + "," + std::to_string(c.l) + "," +
                 std::to_string(c.n) + "," + std::to_string(c.p) + "," +
                 csv_escape(c.note) + "\n";
      }
      return out;
    }
    case OutputFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const VerdictReport& rep : reports)
        arr.push_back(verdict_json(rep));
      return dump(arr);
    }
  }
  return {};
}

std::string render_residue_report(const ResidueSetReport& rep,
                                  OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::plain: {
      std::string out = "k=" + std::to_string(rep.k) +
                        " l=" + std::to_string(rep.l) +
                        " p=" + std::to_string(rep.p) +
                        " r=" + std::to_string(rep.r) + "\n";
      out += "index_set:";
      for (std::size_t i = 0; i < rep.index_set.size(); ++i)
        out += (i ? ", " : " ") + std::to_string(rep.index_set[i]);
      out += "\nresidues:";
      for (std::size_t i = 0; i < rep.residues.size(); ++i)
        out += (i ? ", " : " ") + rep.residues[i].get_str();
      out += "\nverdict: " + rep.verdict + "\n";
      if (!rep.note.empty()) out += "note: " + rep.note + "\n";
      return out;
    }
    case OutputFormat::csv: {
      std::string out = "n,residue,verdict\n";
      for (std::size_t i = 0; i < rep.index_set.size(); ++i)
        out += std::to_string(rep.index_set[i]) + "," +
               csv_escape(rep.residues[i].get_str()) + "," +
               csv_escape(rep.verdict) + "\n";
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["k"] = rep.k;
      j["l"] = rep.l;
      j["p"] = rep.p;
      j["r"] = rep.r;
      j["verdict"] = rep.verdict;
      if (!rep.note.empty()) j["note"] = rep.note;
      ordered_json idx = ordered_json::array();
      for (std::uint32_t n : rep.index_set) idx.push_back(n);
      j["index_set"] = std::move(idx);
      ordered_json res = ordered_json::array();
      for (const mpz_class& a : rep.residues) res.push_back(a.get_str());
      j["residues"] = std::move(res);
      return dump(j);
    }
  }
  return {};
}

std::string render_convergence(const GoebelParams& params,
                               const std::vector<ConvergenceRow>& rows,
                               std::uint32_t order, std::size_t digits,
                               OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::plain: {
      std::string out;
      for (const ConvergenceRow& row : rows)
        out += "n=" + std::to_string(row.n) + " rho_" +
               std::to_string(order) + " = " + row.rho.value.to_decimal(digits) +
               (row.exact_source ? "" : " (log-space source)") + "\n";
      return out;
    }
    case OutputFormat::csv: {
      std::string out = "n,exact,rho\n";
      for (const ConvergenceRow& row : rows)
        out += std::to_string(row.n) + "," + (row.exact_source ? "1" : "0") +
               "," + csv_escape(row.rho.value.to_decimal(digits)) + "\n";
      return out;
    }
    case OutputFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const ConvergenceRow& row : rows) {
        ordered_json j;
        j["k"] = params.k;
        j["l"] = params.l;
        j["n"] = row.n;
        j["order"] = order;
        j["exact"] = row.exact_source;
        j["value"] = row.rho.value.to_decimal(digits);
        j["err"] = err_string(row.rho.err);
        arr.push_back(std::move(j));
      }
      return dump(arr);
    }
  }
  return {};
}

std::string render_expansion_eval(const GoebelParams& params,
                                  const ExpansionEval& ev, std::size_t digits,
                                  OutputFormat fmt) {
  const std::string log_actual = ev.log_actual.value.to_decimal(digits);
  const std::string log_model = ev.log_model.value.to_decimal(digits);
  const std::string ratio = ev.ratio.value.to_decimal(digits);
  switch (fmt) {
    case OutputFormat::plain:
      return "n: " + std::to_string(ev.n) + "\norder: " +
             std::to_string(ev.order) +
             "\nexact: " + (ev.exact_source ? "yes" : "no") +
             "\nlog_actual: " + log_actual + "\nlog_model: " + log_model +
             "\nratio: " + ratio + "\n";
    case OutputFormat::csv:
      return "n,order,exact,log_actual,log_model,ratio,ratio_err\n" +
             std::to_string(ev.n) + "," + std::to_string(ev.order) + "," +
             (ev.exact_source ? "1" : "0") + "," + csv_escape(log_actual) +
             "," + csv_escape(log_model) + "," + csv_escape(ratio) + "," +
             csv_escape(err_string(ev.ratio.err)) + "\n";
    case OutputFormat::json: {
      ordered_json j;
      j["k"] = params.k;
      j["l"] = params.l;
      j["n"] = ev.n;
      j["order"] = ev.order;
      j["exact"] = ev.exact_source;
      j["log_actual"] = real_json(ev.log_actual, digits, false);
      j["log_model"] = real_json(ev.log_model, digits, false);
      j["ratio"] = real_json(ev.ratio, digits, false);
      return dump(j);
    }
  }
  return {};
}

std::string render_lower_bound(const GoebelParams& params, const mpq_class& t0,
                               std::uint32_t base, const LowerBoundReport& rep,
                               std::size_t digits, OutputFormat fmt) {
  const std::string lambda = rep.lambda.value.to_decimal(digits);
  switch (fmt) {
    case OutputFormat::plain: {
      std::string out;
      out += "precondition: ";
      out += rep.precondition_ok ? "ok" : "failed";
      out += "\ndomination: ";
      out += rep.domination_ok
                 ? "ok through n=" + std::to_string(rep.checked_to)
                 : "failed by n=" + std::to_string(rep.checked_to);
      out += "\nlambda: " + lambda + "\nlambda_err: " +
             err_string(rep.lambda.err) + "\nconclusive: " +
             (rep.conclusive ? "yes" : "no") + "\n";
      return out;
    }
    case OutputFormat::csv:
      return "precondition,domination,checked_to,lambda,lambda_err,"
             "conclusive\n" +
             std::string(rep.precondition_ok ? "1" : "0") + "," +
             (rep.domination_ok ? "1" : "0") + "," +
             std::to_string(rep.checked_to) + "," + csv_escape(lambda) + "," +
             csv_escape(err_string(rep.lambda.err)) + "," +
             (rep.conclusive ? "1" : "0") + "\n";
    case OutputFormat::json: {
      ordered_json j;
      j["k"] = params.k;
      j["l"] = params.l;
      j["t0"] = q_to_string(t0);
      j["base"] = base;
      j["precondition_ok"] = rep.precondition_ok;
      j["domination_ok"] = rep.domination_ok;
      j["checked_to"] = rep.checked_to;
      j["lambda"] = real_json(rep.lambda, digits, false);
      j["conclusive"] = rep.conclusive;
      return dump(j);
    }
  }
  return {};
}

std::string render_eulerian(const EulerianPolynomial& poly, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::plain: {
      if (poly.order == 0) return "1\n";
      std::string out;
      for (std::size_t j = poly.coeff.size(); j-- > 0;) {
        if (poly.coeff[j] == 0) continue;
        if (!out.empty()) out += " + ";
        const bool unit = poly.coeff[j] == 1;
        if (!unit) out += poly.coeff[j].get_str();
        if (j >= 1) {
          if (!unit) out += "*";
          out += "t";
          if (j >= 2) out += "^" + std::to_string(j);
        } else if (unit) {
          out += "1";
        }
      }
      return out + "\n";
    }
    case OutputFormat::csv: {
      std::string out = "j,coefficient\n";
      for (std::size_t j = 0; j < poly.coeff.size(); ++j)
        out += std::to_string(j) + "," + poly.coeff[j].get_str() + "\n";
      return out;
    }
    case OutputFormat::json: {
      ordered_json j;
      j["r"] = poly.order;
      ordered_json coeffs = ordered_json::array();
      for (const mpz_class& c : poly.coeff) coeffs.push_back(c.get_str());
      j["coefficients"] = std::move(coeffs);
      return dump(j);
    }
  }
  return {};
}

}  // namespace goebel
