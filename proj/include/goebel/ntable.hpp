#pragma once

// Tables of N(k,l) -- the first non-integral index per parameter pair -- and
// the finite verifications behind the "minimum is 7" classification:
//
//   * min over k,l >= 2 of N(k,l) is 7, attained exactly when
//     k = 2 (mod 6) and l = 3 (mod 7);
//   * the reduction of that statement to four finite residue scans at
//     p = 2, 3, 5, 7 with exponent r = nu_p(7!).

#include "goebel/rational.hpp"
#include "goebel/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace goebel {

struct NTable {
    std::uint32_t k_lo = 2, k_hi = 17;
    std::uint32_t l_lo = 2, l_hi = 17;
    std::uint32_t cap = 5000;
    // Row-major by l, then k; nullopt = "exceeds-cap".
    std::vector<std::optional<std::uint32_t>> cells;

    std::uint32_t width() const { return k_hi - k_lo + 1; }
    std::uint32_t height() const { return l_hi - l_lo + 1; }
    const std::optional<std::uint32_t>& at(std::uint32_t k,
                                           std::uint32_t l) const {
        return cells[(l - l_lo) * std::size_t{width()} + (k - k_lo)];
    }
};

// Fills every cell with compute_N(k, l, cap).  jobs = 0 means one worker per
// hardware thread; results are identical for any jobs value.
NTable build_table(std::uint32_t k_lo, std::uint32_t k_hi, std::uint32_t l_lo,
                   std::uint32_t l_hi, std::uint32_t cap = 5000,
                   unsigned jobs = 0);

// CSV with header "l\k,<k values>" and one row per l; "exceeds-cap" marks
// cells whose scan was exhausted.  Trailing newline included.
std::string table_to_csv(const NTable& table);

// Parses the format written by table_to_csv (cap is not recoverable from the
// file and is left at its default).
NTable table_from_csv(const std::string& csv);

// Cell-by-cell comparison; counterexamples carry both values in the note.
VerdictReport compare_table(const NTable& a, const NTable& b);

// The four finite claims that reduce the minimum-is-7 statement to residue
// scans (horizon n = 7, exponent r = nu_p(7!) for p = 2, 3, 5, 7):
//   1. g(7) is 2-integral for 2 <= k <= 11, 1 <= l <= 16;
//   2. g(7) is 3-integral for 2 <= k <= 7,  1 <= l <= 9;
//   3. g(7) is 5-integral for 1 <= k <= 4,  1 <= l <= 5;
//   4. for 1 <= k <= 6, 1 <= l <= 7, g(7) fails 7-integrality iff (k,l) = (2,3).
std::vector<VerdictReport> verify_min7_reduction();

// Scans 2 <= k <= k_hi, 2 <= l <= l_hi and checks N(k,l) = 7 exactly when
// k = 2 (mod 6) and l = 3 (mod 7), plus N(k,l) >= 7 everywhere (all cells are
// scanned literally; no periodicity shortcut).
VerdictReport classify_N7(std::uint32_t k_hi = 200, std::uint32_t l_hi = 200,
                          unsigned jobs = 0);

}  // namespace goebel
