#ifndef NWALK_APPENDIX_HPP
#define NWALK_APPENDIX_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nwalk/rational.hpp"
#include "nwalk/step_set.hpp"

namespace nwalk {

// One 0/1-weight Motzkin subclass with a conjectured OEIS match; rows with
// an elementary closed formula are checked against the DP, the rest are
// exposed as DP-only dumps. The registry backs the oracle-check command.
struct AppendixRow {
    std::string id;    // registry key, e.g. "A1"
    std::string oeis;  // OEIS tag of the matching sequence
    bool meander;      // otherwise excursions
    bool has_formula;
    // weights in the order p1, p_m1, p0, p_m10, p_01, p_m11, p_m101
    std::array<int, 7> weights;
    std::string formula_text;
};

const std::vector<AppendixRow>& appendix_rows();

NStepSet appendix_step_set(const AppendixRow& row);
Int appendix_formula(const AppendixRow& row, std::int64_t n);

struct OracleCheckResult {
    std::string id;
    std::string oeis;
    bool has_formula = true;
    bool pass = false;            // always true for DP-only rows
    std::int64_t first_mismatch = -1;
    std::vector<Int> counts;      // the DP sequence 0..n_max
};

// Compares DP counts against the row formulas for n = 0..n_max (rows without
// a formula just carry their DP counts); pattern is a row id, an OEIS tag,
// or "all". Throws std::invalid_argument for an unknown pattern.
std::vector<OracleCheckResult> oracle_check(const std::string& pattern,
                                            std::int64_t n_max);

}  // namespace nwalk

#endif
