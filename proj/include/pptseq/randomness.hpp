#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "pptseq/baudhayana.hpp"
#include "pptseq/residue.hpp"

namespace pptseq {

struct TestReport {
    std::string name;
    double statistic = 0.0;
    int degrees_of_freedom = 0;
    double threshold = 0.0;
    bool pass = false;  // statistic <= threshold
};

/// 99th percentile of the chi-square distribution, df in [1, 30].
double chi_square_critical_99(int df);

/// Class counts against 2/(p+1) for residue 0 and 1/(p+1) elsewhere, with p-1
/// degrees of freedom. Requires at least 50*p labels.
TestReport chi_square_frequencies(const ClassSequence& cs);

/// Pearson correlation of gaps[i] with gaps[i+lag]. The reported statistic is
/// |r|; the threshold is 3/sqrt(number of gaps). Requires lag >= 1, at least
/// lag + 30 gaps, and non-zero variance in both windows.
TestReport serial_correlation(const GapSequence& gaps, std::size_t lag);

/// Signed correlation behind serial_correlation().
double lag_correlation(std::span<const u64> values, std::size_t lag);

}  // namespace pptseq
