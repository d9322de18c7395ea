#pragma once

/**
 * @file autocorr.hpp
 * @brief Non-normalised autocorrelation of gap sequences.
 *
 *     C(k) = 1/(n+1) * sum_{i=0}^{n} a(i) a(i+k)
 *
 * Boundary handling for i+k past the end is a choice:
 *   - circular: indices wrap mod N and every lag averages N products;
 *   - windowed: the first n+1 = N - k_max terms are used for every lag, so
 *     all lags share one denominator and never read past the end.
 *
 * Sums are accumulated exactly in integers and divided once at the end.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pptseq/baudhayana.hpp"
#include "pptseq/rational.hpp"

namespace pptseq {

enum class BoundaryMode { circular, windowed };

std::string_view to_string(BoundaryMode mode);
BoundaryMode parse_boundary_mode(std::string_view text);

struct AutocorrResult {
    BoundaryMode mode = BoundaryMode::circular;
    std::size_t n_products = 0;   // products averaged per lag
    std::vector<Rational> values; // values[k] = C(k), k = 0..k_max

    std::size_t k_max() const { return values.size() - 1; }
    Rational peak() const { return values.front(); }
    /// Mean of C(1..k_max); zero when k_max == 0.
    Rational offpeak_mean() const;
};

/// Throws InvalidArgument for an empty sequence, a non-positive element, or a
/// k_max the mode cannot serve (circular: k_max < N; windowed: N >= k_max+2).
AutocorrResult compute(std::span<const u64> seq, std::size_t k_max,
                       BoundaryMode mode = BoundaryMode::circular);

/// Off-peak prediction E[gap]^2.
Rational expected_offpeak(u64 p, ClassLabel label);

/// Probability model for the gap between successive class members: explicit
/// P(1..m) followed, optionally, by a geometric tail P(k) = P(k-1) * ratio.
struct GapModel {
    std::vector<double> head;   // head[i] = P(gap = i + 1)
    double tail_ratio = 0.0;    // 0 means no tail

    /// P(1) = 1/4, P(2) = 1/2, P(k) = 2^-k for k >= 3: the halving model
    /// proposed for class A mod 3.
    static GapModel halving_mod3();
};

/// E[gap^2] under the model, i.e. the model's estimate of C(0). Terms are
/// summed until a bound on the remaining tail drops below 1e-9. Throws
/// InvalidArgument if the probabilities do not sum to 1 within 1e-9.
double c0_series_estimate(const GapModel& model);

struct AutocorrSummary {
    double peak = 0.0;
    double offpeak_mean = 0.0;
    double offpeak_min = 0.0;
    double offpeak_max = 0.0;
    double expected = 0.0;
    double deviation = 0.0;  // (offpeak_mean - expected) / expected
};

/// Requires k_max >= 1.
AutocorrSummary summarize(const AutocorrResult& r, const Rational& expected);

}  // namespace pptseq
