#include <doctest.h>

#include <gmpxx.h>
#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "goebel/format.hpp"
#include "goebel/ntable.hpp"
#include "goebel/randmod.hpp"
#include "goebel/real.hpp"
#include "goebel/report.hpp"

using namespace goebel;
using nlohmann::json;

TEST_CASE("format names round-trip") {
  CHECK(parse_format("plain") == OutputFormat::plain);
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_FALSE(parse_format("yaml").has_value());
  CHECK_FALSE(parse_format("JSON").has_value());
  CHECK_FALSE(parse_format("").has_value());
  for (OutputFormat f :
       {OutputFormat::plain, OutputFormat::csv, OutputFormat::json})
    CHECK(parse_format(format_name(f)) == f);
}

TEST_CASE("csv field quoting") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("") == "");
  CHECK(csv_escape("with space") == "with space");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
  CHECK(csv_escape(",") == "\",\"");
  CHECK(csv_escape("\"") == "\"\"\"\"");
}

TEST_CASE("rational and fixed-point rendering") {
  CHECK(q_to_string(mpq_class(28)) == "28");
  CHECK(q_to_string(mpq_class(-21)) == "-21");
  mpq_class q(6, 4);
  q.canonicalize();
  CHECK(q_to_string(q) == "3/2");
  CHECK(q_to_string(mpq_class(113, 128)) == "113/128");
  CHECK(q_to_string(mpq_class(0)) == "0");

  CHECK(fixed_decimals(Real::of_ui(2, 64), 3) == "2.000");
  CHECK(fixed_decimals(Real::of_ui(0, 64), 2) == "0.00");
  // Ties round to even: 0.375, 1.5, 0.5, 2.5 are all exact in binary.
  CHECK(fixed_decimals(Real::of_double(0.375, 64), 2) == "0.38");
  CHECK(fixed_decimals(Real::of_double(-0.375, 64), 2) == "-0.38");
  CHECK(fixed_decimals(Real::of_double(1.5, 64), 0) == "2");
  CHECK(fixed_decimals(Real::of_double(0.5, 64), 0) == "0");
  CHECK(fixed_decimals(Real::of_double(2.5, 64), 0) == "2");
  CHECK(fixed_decimals(Real::of_ui(1, 128) / Real::of_ui(3, 128), 6) ==
        "0.333333");
}

TEST_CASE("significant-digit rendering picks fixed or scientific") {
  CHECK(Real::of_ui(42, 64).to_decimal(5) == "42.000");
  CHECK(Real::of_ui(12345, 64).to_decimal(3) == "1.23e+4");
  CHECK(Real::of_double(0.00001, 64).to_decimal(3) == "0.0000100");
  CHECK(Real::of_si(-42, 64).to_decimal(2) == "-42");
  CHECK(Real(64).to_decimal(10) == "0");
  CHECK(Real::of_double(2.5e-25, 64).to_decimal(3, RenderStyle::scientific) ==
        "2.50e-25");
  CHECK(Real::of_ui(42, 64).to_decimal(2, RenderStyle::scientific) ==
        "4.2e+1");
}

TEST_CASE("high-precision value rendering") {
  const HighPrecReal x{Real::of_str("1.25", 256), Real(64)};  // err = 0

  CHECK(render_real(x, 3, true, {}, OutputFormat::plain) == "1.250\n");
  CHECK(render_real(x, 3, false, {}, OutputFormat::plain) == "1.25\n");
  CHECK(render_real(x, 3, true, {}, OutputFormat::csv) ==
        "value,err\n1.250,0\n");

  ValueContext ctx;
  ctx.k = 2;
  ctx.l = 3;
  const std::string doc = render_real(x, 4, false, ctx, OutputFormat::json);
  const json j = json::parse(doc);
  CHECK(j["k"] == 2);
  CHECK(j["l"] == 3);
  CHECK_FALSE(j.contains("n"));
  CHECK(j["value"] == "1.250");
  CHECK(j["err"] == "0");

  // A nonzero error bound renders as 3 significant scientific digits.
  const HighPrecReal y{Real::of_str("1.25", 256),
                       Real::of_double(2.5e-25, 64)};
  const json jy =
      json::parse(render_real(y, 4, false, {}, OutputFormat::json));
  CHECK(jy["err"] == "2.50e-25");
}

TEST_CASE("list rendering in all three formats") {
  const std::vector<mpq_class> qs{mpq_class(1), mpq_class(-21),
                                  mpq_class(113, 128)};
  CHECK(render_rational_list(qs, "r", "a", 0, OutputFormat::plain) ==
        "1, -21, 113/128\n");
  CHECK(render_rational_list(qs, "r", "a", 0, OutputFormat::csv) ==
        "r,a\n0,1\n1,-21\n2,113/128\n");
  const json arr =
      json::parse(render_rational_list(qs, "r", "a", 0, OutputFormat::json));
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 3);
  CHECK(arr[2] == "113/128");

  const std::vector<std::uint32_t> us{43, 61, 67};
  CHECK(render_uint_list(us, "i", "p", 1, OutputFormat::plain) ==
        "43, 61, 67\n");
  CHECK(render_uint_list(us, "i", "p", 1, OutputFormat::csv) ==
        "i,p\n1,43\n2,61\n3,67\n");
  CHECK(render_uint_list({}, "i", "p", 1, OutputFormat::plain) == "\n");
  CHECK(json::parse(render_uint_list({}, "i", "p", 1, OutputFormat::json))
            .empty());

  const std::vector<mpz_class> zs{mpz_class(130), mpz_class(143)};
  CHECK(render_integer_list(zs, "n", "residue", 2, OutputFormat::csv) ==
        "n,residue\n2,130\n3,143\n");

  // A value containing a comma is quoted in the CSV body.
  CHECK(render_scalar("a,b", "name", {}, OutputFormat::csv) ==
        "name\n\"a,b\"\n");
  CHECK(render_scalar("43", "N", {}, OutputFormat::plain) == "43\n");
  const json sj = json::parse(render_scalar("43", "N", {}, OutputFormat::json));
  CHECK(sj["N"] == "43");
}

TEST_CASE("table rendering shares the canonical grid bytes") {
  const NTable t = build_table(2, 4, 2, 5, 100);
  const std::string grid = table_to_csv(t);
  CHECK(render_table(t, OutputFormat::plain) == grid);
  CHECK(render_table(t, OutputFormat::csv) == grid);

  const json j = json::parse(render_table(t, OutputFormat::json));
  CHECK(j["k_lo"] == 2);
  CHECK(j["k_hi"] == 4);
  CHECK(j["cap"] == 100);
  REQUIRE(j["rows"].is_array());
  CHECK(j["rows"].size() == 4);       // l = 2..5
  CHECK(j["rows"][0].size() == 3);    // k = 2..4
  CHECK(j["rows"][0][0] == 43);       // N(2,2)
  CHECK(j["rows"][1][0] == 7);        // N(2,3)

  // An unset cell (cap too small for the value) renders as null.
  const NTable small = build_table(2, 2, 2, 2, 42);
  const json js = json::parse(render_table(small, OutputFormat::json));
  CHECK(js["rows"][0][0].is_null());
}

TEST_CASE("verdict rendering") {
  VerdictReport ok{"sample-claim", true, {}};
  CHECK(render_verdicts({ok}, OutputFormat::plain) == "PASS: sample-claim\n");
  CHECK(render_verdicts({ok}, OutputFormat::csv) ==
        "claim,pass,k,l,n,p,note\nsample-claim,1,,,,,\n");

  VerdictReport bad{"other-claim", true, {}};
  for (std::uint32_t i = 0; i < 12; ++i)
    bad.fail({2, 3, i, 7, i == 0 ? "detail, with comma" : ""});
  CHECK_FALSE(bad.pass);

  const std::string plain = render_verdicts({ok, bad}, OutputFormat::plain);
  CHECK(plain.find("PASS: sample-claim\n") == 0);
  CHECK(plain.find("FAIL: other-claim (12 counterexamples)") !=
        std::string::npos);
  // Only ten counterexamples are listed, then an ellipsis.
  std::size_t shown = 0;
  for (std::size_t at = plain.find("  k="); at != std::string::npos;
       at = plain.find("  k=", at + 1))
    ++shown;
  CHECK(shown == 10);
  CHECK(plain.find("  ...\n") != std::string::npos);

  const std::string csv = render_verdicts({bad}, OutputFormat::csv);
  CHECK(csv.find("other-claim,0,2,3,0,7,\"detail, with comma\"\n") !=
        std::string::npos);

  const json j = json::parse(render_verdicts({ok, bad}, OutputFormat::json));
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0]["pass"] == true);
  CHECK(j[0]["counterexamples"].empty());
  CHECK(j[1]["pass"] == false);
  CHECK(j[1]["counterexamples"].size() == 12);
  CHECK(j[1]["counterexamples"][0]["note"] == "detail, with comma");
}

TEST_CASE("residue report rendering") {
  const ResidueSetReport rep = residue_set({4, 4}, 13, 2);
  const std::string plain = render_residue_report(rep, OutputFormat::plain);
  CHECK(plain.find("k=4 l=4 p=13 r=2\n") == 0);
  CHECK(plain.find("index_set: 2, 3, 4") != std::string::npos);
  CHECK(plain.find("residues: 130, 143, 65") != std::string::npos);
  CHECK(plain.find("verdict: all-distinct\n") != std::string::npos);

  const std::string csv = render_residue_report(rep, OutputFormat::csv);
  CHECK(csv.find("n,residue,verdict\n") == 0);
  CHECK(csv.find("2,130,all-distinct\n") != std::string::npos);

  const json j = json::parse(render_residue_report(rep, OutputFormat::json));
  CHECK(j["p"] == 13);
  CHECK(j["verdict"] == "all-distinct");
  CHECK_FALSE(j.contains("note"));
  CHECK(j["index_set"].size() == 11);
  CHECK(j["residues"][0] == "130");  // residues are strings: arbitrary size

  // Empty index set: arrays are present and empty, not missing.
  const ResidueSetReport empty = residue_set({2, 4}, 3, 2);
  const json je =
      json::parse(render_residue_report(empty, OutputFormat::json));
  REQUIRE(je["index_set"].is_array());
  REQUIRE(je["residues"].is_array());
  CHECK(je["index_set"].empty());
  CHECK(je["residues"].empty());
  CHECK(render_residue_report(empty, OutputFormat::csv) ==
        "n,residue,verdict\n");
}

TEST_CASE("identical inputs produce identical bytes") {
  const NTable t1 = build_table(2, 5, 2, 5, 200);
  const NTable t2 = build_table(2, 5, 2, 5, 200);
  for (OutputFormat f :
       {OutputFormat::plain, OutputFormat::csv, OutputFormat::json})
    CHECK(render_table(t1, f) == render_table(t2, f));

  const ResidueSetReport r1 = residue_set({3, 2}, 13, 2);
  const ResidueSetReport r2 = residue_set({3, 2}, 13, 2);
  for (OutputFormat f :
       {OutputFormat::plain, OutputFormat::csv, OutputFormat::json})
    CHECK(render_residue_report(r1, f) == render_residue_report(r2, f));
}
