#include "nwalk/appendix.hpp"

#include <stdexcept>

#include "nwalk/count.hpp"

namespace nwalk {

namespace {

Int binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Int pow_int(std::int64_t base, std::int64_t e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return r;
}

// [x^k] (1 + x + x^2)^n
Int trinomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > 2 * n) return 0;
    std::vector<Int> row{1};
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<Int> next(row.size() + 2, Int(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
            next[j + 2] += row[j];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace

const std::vector<AppendixRow>& appendix_rows() {
    static const std::vector<AppendixRow> rows = [] {
        std::vector<AppendixRow> r;
        auto add = [&r](std::string id, std::string oeis, bool meander,
                        std::array<int, 7> w, std::string formula) {
            r.push_back({std::move(id), std::move(oeis), meander, true, w,
                         std::move(formula)});
        };
        auto dump = [&r](std::string id, std::string oeis, bool meander,
                         std::array<int, 7> w) {
            r.push_back({std::move(id), std::move(oeis), meander, false, w,
                         "(conjectural OEIS match; DP dump only)"});
        };
        // excursions
        add("A1", "A126869", false, {1, 0, 0, 0, 0, 1, 0}, "binom(n, n/2) for even n, else 0");
        add("A2", "A126869", false, {0, 1, 0, 0, 0, 1, 0}, "binom(n, n/2) for even n, else 0");
        add("B1", "A002426", false, {1, 0, 1, 0, 0, 1, 0}, "[x^n](1+x+x^2)^n");
        add("B2", "A002426", false, {0, 1, 1, 0, 0, 1, 0}, "[x^n](1+x+x^2)^n");
        add("C1", "A084174", false, {0, 0, 0, 1, 0, 1, 0}, "2^n - (2n+1-(-1)^n)/4");
        add("C2", "A084174", false, {0, 0, 0, 0, 1, 1, 0}, "2^n - (2n+1-(-1)^n)/4");
        add("D", "A051049", false, {0, 0, 0, 0, 0, 1, 1}, "2^n - (1-(-1)^n)/2");
        add("E", "A083313", false, {0, 0, 1, 0, 0, 1, 1},
            "3^n - 2^(n-1) for n>=1, 1 at n=0");
        add("F1", "A001405", false, {1, 0, 0, 1, 0, 0, 0}, "binom(n, floor(n/2))");
        add("F2", "A001405", false, {0, 1, 0, 0, 1, 0, 0}, "binom(n, floor(n/2))");
        add("F3", "A001405", false, {1, 0, 0, 0, 0, 0, 1}, "binom(n, floor(n/2))");
        add("F4", "A001405", false, {0, 1, 0, 0, 0, 0, 1}, "binom(n, floor(n/2))");
        add("G1", "A001700", false, {1, 0, 1, 1, 1, 0, 0}, "binom(2n+1, n+1)");
        add("G2", "A001700", false, {1, 0, 1, 0, 1, 0, 1}, "binom(2n+1, n+1)");
        add("G3", "A001700", false, {0, 1, 1, 1, 1, 0, 0}, "binom(2n+1, n+1)");
        add("G4", "A001700", false, {0, 1, 1, 1, 0, 0, 1}, "binom(2n+1, n+1)");
        add("H1", "A000244", false, {0, 0, 1, 1, 1, 0, 0}, "3^n");
        add("H2", "A000244", false, {0, 0, 1, 1, 0, 0, 1}, "3^n");
        add("H3", "A000244", false, {0, 0, 1, 0, 1, 0, 1}, "3^n");
        add("H4", "A000244", false, {0, 0, 0, 1, 1, 0, 1}, "3^n");
        const char* i_formula = "[x^(n-1)](1+x+x^2)^n + [x^n](1+x+x^2)^n";
        add("I1", "A005773", false, {1, 0, 1, 1, 0, 0, 0}, i_formula);
        add("I2", "A005773", false, {0, 1, 1, 0, 1, 0, 0}, i_formula);
        add("I3", "A005773", false, {1, 0, 0, 1, 1, 0, 0}, i_formula);
        add("I4", "A005773", false, {0, 1, 0, 1, 1, 0, 0}, i_formula);
        add("I5", "A005773", false, {1, 0, 1, 0, 0, 0, 1}, i_formula);
        add("I6", "A005773", false, {0, 1, 1, 0, 0, 0, 1}, i_formula);
        add("I7", "A005773", false, {0, 1, 0, 1, 0, 0, 1}, i_formula);
        add("I8", "A005773", false, {1, 0, 0, 0, 1, 0, 1}, i_formula);
        // meanders
        add("M1", "A001405", true, {0, 1, 0, 0, 0, 1, 0}, "binom(n, floor(n/2))");
        add("M2", "A001405", true, {0, 1, 0, 0, 0, 0, 1}, "binom(n, floor(n/2))");
        add("M3", "A001700", true, {1, 1, 1, 1, 0, 0, 0}, "binom(2n+1, n+1)");
        add("M4", "A001700", true, {0, 1, 1, 1, 1, 0, 0}, "binom(2n+1, n+1)");
        add("M5", "A001700", true, {0, 1, 1, 1, 0, 1, 0}, "binom(2n+1, n+1)");
        add("M6", "A001700", true, {0, 1, 1, 1, 0, 0, 1}, "binom(2n+1, n+1)");
        add("M7", "A005773", true, {1, 1, 0, 1, 0, 0, 0}, i_formula);
        add("M8", "A005773", true, {0, 1, 1, 0, 1, 0, 0}, i_formula);
        add("M9", "A005773", true, {0, 1, 0, 1, 1, 0, 0}, i_formula);
        add("M10", "A005773", true, {0, 1, 1, 0, 0, 1, 0}, i_formula);
        add("M11", "A005773", true, {0, 1, 0, 1, 0, 1, 0}, i_formula);
        add("M12", "A005773", true, {0, 1, 1, 0, 0, 0, 1}, i_formula);
        add("M13", "A005773", true, {0, 1, 0, 1, 0, 0, 1}, i_formula);
        // rows whose OEIS matches describe other lattice models; no printed
        // elementary formula, so they are DP-only
        dump("J1", "A151281", false, {1, 0, 0, 1, 0, 0, 1});
        dump("J2", "A151281", false, {0, 1, 0, 0, 1, 0, 1});
        dump("K1", "A129637", false, {1, 0, 1, 1, 0, 0, 1});
        dump("K2", "A129637", false, {0, 1, 1, 0, 1, 0, 1});
        dump("K3", "A129637", false, {1, 0, 0, 1, 1, 0, 1});
        dump("K4", "A129637", false, {0, 1, 0, 1, 1, 0, 1});
        dump("L1", "A151251", false, {1, 0, 1, 1, 1, 0, 1});
        dump("L2", "A151251", false, {0, 1, 1, 1, 1, 0, 1});
        dump("N1", "A151281", true, {1, 1, 0, 0, 1, 0, 0});
        dump("N2", "A151281", true, {1, 1, 0, 0, 0, 1, 0});
        dump("N3", "A151281", true, {0, 1, 0, 0, 1, 1, 0});
        dump("N4", "A151281", true, {1, 1, 0, 0, 0, 0, 1});
        dump("N5", "A151281", true, {0, 1, 0, 0, 1, 0, 1});
        dump("N6", "A151281", true, {0, 1, 0, 0, 0, 1, 1});
        dump("P1", "A151162", true, {1, 1, 0, 0, 1, 1, 0});
        dump("P2", "A151162", true, {1, 1, 0, 0, 1, 0, 1});
        dump("P3", "A151162", true, {1, 1, 0, 0, 0, 1, 1});
        dump("P4", "A151162", true, {0, 1, 0, 0, 1, 1, 1});
        dump("Q1", "A151251", true, {1, 1, 1, 1, 1, 0, 0});
        dump("Q2", "A151251", true, {1, 1, 1, 1, 0, 1, 0});
        dump("Q3", "A151251", true, {0, 1, 1, 1, 1, 1, 0});
        dump("Q4", "A151251", true, {1, 1, 1, 1, 0, 0, 1});
        dump("Q5", "A151251", true, {0, 1, 1, 1, 1, 0, 1});
        dump("Q6", "A151251", true, {0, 1, 1, 1, 0, 1, 1});
        dump("R1", "A151253", true, {1, 1, 1, 0, 1, 1, 0});
        dump("R2", "A151253", true, {1, 1, 0, 1, 1, 1, 0});
        dump("R3", "A151253", true, {1, 1, 1, 0, 1, 0, 1});
        dump("R4", "A151253", true, {1, 1, 0, 1, 1, 0, 1});
        dump("R5", "A151253", true, {1, 1, 1, 0, 0, 1, 1});
        dump("R6", "A151253", true, {1, 1, 0, 1, 0, 1, 1});
        dump("R7", "A151253", true, {0, 1, 1, 0, 1, 1, 1});
        dump("R8", "A151253", true, {0, 1, 0, 1, 1, 1, 1});
        dump("S1", "A151254", true, {1, 1, 0, 0, 1, 1, 1});
        return r;
    }();
    return rows;
}

NStepSet appendix_step_set(const AppendixRow& row) {
    std::vector<Rat> w(row.weights.begin(), row.weights.end());
    return NStepSet::motzkin(w);
}

Int appendix_formula(const AppendixRow& row, std::int64_t n) {
    const std::string& s = row.oeis;
    if (s == "A126869") return n % 2 == 0 ? binom(n, n / 2) : Int(0);
    if (s == "A002426") return trinomial(n, n);
    if (s == "A084174") {
        std::int64_t sign = n % 2 == 0 ? 1 : -1;
        return pow_int(2, n) - Int(2 * n + 1 - sign) / 4;
    }
    if (s == "A051049") return pow_int(2, n) - (n % 2 == 0 ? 0 : 1);
    if (s == "A083313")
        return n == 0 ? Int(1) : Int(pow_int(3, n) - pow_int(2, n - 1));
    if (s == "A001405") return binom(n, n / 2);
    if (s == "A001700") return binom(2 * n + 1, n + 1);
    if (s == "A000244") return pow_int(3, n);
    if (s == "A005773") return trinomial(n, n - 1) + trinomial(n, n);
    throw std::logic_error("no formula for " + s);
}

std::vector<OracleCheckResult> oracle_check(const std::string& pattern,
                                            std::int64_t n_max) {
    std::vector<OracleCheckResult> out;
    for (const auto& row : appendix_rows()) {
        if (pattern != "all" && pattern != row.id && pattern != row.oeis) continue;
        std::vector<Rat> dp =
            count_by_dp(appendix_step_set(row), n_max,
                        row.meander ? WalkFamily::Meander : WalkFamily::Excursion);
        OracleCheckResult res{row.id, row.oeis, row.has_formula, true, -1, {}};
        for (std::int64_t n = 0; n <= n_max; ++n)
            res.counts.push_back(dp[static_cast<std::size_t>(n)].get_num());
        if (row.has_formula) {
            for (std::int64_t n = 0; n <= n_max; ++n) {
                if (dp[static_cast<std::size_t>(n)] != Rat(appendix_formula(row, n))) {
                    res.pass = false;
                    res.first_mismatch = n;
                    break;
                }
            }
        }
        out.push_back(res);
    }
    if (out.empty())
        throw std::invalid_argument("oracle_check: unknown pattern '" + pattern + "'");
    return out;
}

}  // namespace nwalk
