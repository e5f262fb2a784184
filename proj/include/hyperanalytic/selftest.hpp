#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hyperanalytic::selftest {

struct Options {
    std::uint64_t seed = 0x5eed2010;
    /// Fault injection for negative controls: conjugates the complex-FFT
    /// route's output before the cross-method comparison.
    bool conjugate_fft_route = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

CriterionResult cross_method_equivalence(const Options& opts);
CriterionResult one_sided_spectrum(const Options& opts);
CriterionResult orthogonality(const Options& opts);
CriterionResult simplex_perplex_recovery(const Options& opts);
CriterionResult qft_correctness(const Options& opts);
CriterionResult cd_polar_form(const Options& opts);
CriterionResult modulation_recovery(const Options& opts);
CriterionResult properness_patterns(const Options& opts);

/// Runs every criterion; with `log` set, prints one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_all(const Options& opts = {}, std::ostream* log = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_line(const CriterionResult& r);

}  // namespace hyperanalytic::selftest
