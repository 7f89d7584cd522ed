#include "goebel/ntable.hpp"

#include "goebel/numtheory.hpp"
#include "goebel/padic.hpp"
#include "goebel/parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace goebel {

NTable build_table(std::uint32_t k_lo, std::uint32_t k_hi, std::uint32_t l_lo,
                   std::uint32_t l_hi, std::uint32_t cap, unsigned jobs) {
    if (k_lo < 2 || k_lo > k_hi || l_lo < 2 || l_lo > l_hi)
        throw std::invalid_argument("build_table: bad ranges (need 2 <= lo <= hi)");
    NTable t;
    t.k_lo = k_lo;
    t.k_hi = k_hi;
    t.l_lo = l_lo;
    t.l_hi = l_hi;
    t.cap = cap;
    t.cells.resize(std::size_t{t.width()} * t.height());
    parallel_for(t.cells.size(), jobs, [&](std::size_t i) {
        std::uint32_t k = k_lo + static_cast<std::uint32_t>(i % t.width());
        std::uint32_t l = l_lo + static_cast<std::uint32_t>(i / t.width());
        t.cells[i] = compute_N(GoebelParams(k, l), cap);
    });
    return t;
}

std::string table_to_csv(const NTable& table) {
    std::ostringstream out;
    out << "l\\k";
    for (std::uint32_t k = table.k_lo; k <= table.k_hi; ++k) out << ',' << k;
    out << '\n';
    for (std::uint32_t l = table.l_lo; l <= table.l_hi; ++l) {
        out << l;
        for (std::uint32_t k = table.k_lo; k <= table.k_hi; ++k) {
            const auto& cell = table.at(k, l);
            out << ',';
            if (cell)
                out << *cell;
            else
                out << "exceeds-cap";
        }
        out << '\n';
    }
    return out.str();
}

NTable table_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line.rfind("l\\k,", 0) != 0)
        throw std::invalid_argument("table_from_csv: missing l\\k header");

    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t start = 0;
        for (;;) {
            std::size_t pos = s.find(',', start);
            out.push_back(s.substr(start, pos - start));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        return out;
    };

    auto header = split(line);
    std::vector<std::uint32_t> ks;
    for (std::size_t i = 1; i < header.size(); ++i)
        ks.push_back(static_cast<std::uint32_t>(std::stoul(header[i])));
    if (ks.empty()) throw std::invalid_argument("table_from_csv: no k columns");

    NTable t;
    t.k_lo = ks.front();
    t.k_hi = ks.back();
    std::vector<std::uint32_t> ls;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != ks.size() + 1)
            throw std::invalid_argument("table_from_csv: ragged row");
        ls.push_back(static_cast<std::uint32_t>(std::stoul(fields[0])));
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (fields[i] == "exceeds-cap")
                t.cells.push_back(std::nullopt);
            else
                t.cells.push_back(
                    static_cast<std::uint32_t>(std::stoul(fields[i])));
        }
    }
    if (ls.empty()) throw std::invalid_argument("table_from_csv: no rows");
    t.l_lo = ls.front();
    t.l_hi = ls.back();
    if (t.cells.size() != std::size_t{t.width()} * t.height())
        throw std::invalid_argument("table_from_csv: size mismatch");
    return t;
}

VerdictReport compare_table(const NTable& a, const NTable& b) {
    VerdictReport report{"table-equality", true, {}};
    if (a.k_lo != b.k_lo || a.k_hi != b.k_hi || a.l_lo != b.l_lo ||
        a.l_hi != b.l_hi)
        throw std::invalid_argument("compare_table: range mismatch");
    auto show = [](const std::optional<std::uint32_t>& c) {
        return c ? std::to_string(*c) : std::string("exceeds-cap");
    };
    for (std::uint32_t l = a.l_lo; l <= a.l_hi; ++l)
        for (std::uint32_t k = a.k_lo; k <= a.k_hi; ++k)
            if (a.at(k, l) != b.at(k, l))
                report.fail({k, l, 0, 0,
                             show(a.at(k, l)) + " vs " + show(b.at(k, l))});
    return report;
}

std::vector<VerdictReport> verify_min7_reduction() {
    struct Claim {
        std::uint64_t p;
        std::uint32_t k_lo, k_hi, l_lo, l_hi;
    };
    // Horizon 7: exponents r = nu_p(7!) are 4, 2, 1, 1 at p = 2, 3, 5, 7.
    const Claim claims[] = {
        {2, 2, 11, 1, 16},
        {3, 2, 7, 1, 9},
        {5, 1, 4, 1, 5},
        {7, 1, 6, 1, 7},
    };
    std::vector<VerdictReport> reports;
    for (const auto& c : claims) {
        PrimePowerContext ctx(c.p, static_cast<std::uint32_t>(
                                       nu_p_factorial(c.p, 7)));
        VerdictReport rep{"integral-at-7-mod-" + std::to_string(c.p), true, {}};
        if (c.p == 7) rep.claim = "non-integral-at-7-mod-7-iff-k2-l3";
        for (std::uint32_t k = c.k_lo; k <= c.k_hi; ++k) {
            for (std::uint32_t l = c.l_lo; l <= c.l_hi; ++l) {
                bool failed = padic_eval(ctx, GoebelParams(k, l), 7).failed;
                bool want_failed = (c.p == 7) && k == 2 && l == 3;
                if (failed != want_failed)
                    rep.fail({k, l, 7, c.p,
                              failed ? "unexpectedly non-integral"
                                     : "unexpectedly integral"});
            }
        }
        reports.push_back(std::move(rep));
    }
    return reports;
}

VerdictReport classify_N7(std::uint32_t k_hi, std::uint32_t l_hi,
                          unsigned jobs) {
    if (k_hi < 2 || l_hi < 2)
        throw std::invalid_argument("classify_N7: need k_hi, l_hi >= 2");
    VerdictReport report{"minimum-N-is-7-classification", true, {}};
    const std::size_t width = k_hi - 1;
    std::vector<std::optional<std::uint32_t>> first(width * (l_hi - 1));
    parallel_for(first.size(), jobs, [&](std::size_t i) {
        std::uint32_t k = 2 + static_cast<std::uint32_t>(i % width);
        std::uint32_t l = 2 + static_cast<std::uint32_t>(i / width);
        first[i] = compute_N(GoebelParams(k, l), 7);  // min(N, 8), capped scan
    });
    for (std::size_t i = 0; i < first.size(); ++i) {
        std::uint32_t k = 2 + static_cast<std::uint32_t>(i % width);
        std::uint32_t l = 2 + static_cast<std::uint32_t>(i / width);
        bool is_seven = first[i].has_value() && *first[i] == 7;
        bool congruent = (k % 6 == 2) && (l % 7 == 3);
        if (first[i].has_value() && *first[i] < 7)
            report.fail({k, l, *first[i], 0, "non-integral before 7"});
        else if (is_seven != congruent)
            report.fail({k, l, 7, 0,
                         is_seven ? "N = 7 off the residue classes"
                                  : "expected N = 7 on the residue classes"});
    }
    return report;
}

}  // namespace goebel
