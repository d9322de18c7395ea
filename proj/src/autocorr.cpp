#include "pptseq/autocorr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pptseq {

std::string_view to_string(BoundaryMode mode) {
    return mode == BoundaryMode::circular ? "circular" : "windowed";
}

BoundaryMode parse_boundary_mode(std::string_view text) {
    if (text == "circular") return BoundaryMode::circular;
    if (text == "windowed") return BoundaryMode::windowed;
    throw InvalidArgument("unknown boundary mode '" + std::string(text) + "'");
}

Rational AutocorrResult::offpeak_mean() const {
    if (values.size() < 2) return Rational(0);
    // All values share the denominator n_products, so summing numerators is exact.
    Rational sum(0);
    for (std::size_t k = 1; k < values.size(); ++k) sum += values[k];
    return sum / static_cast<std::int64_t>(values.size() - 1);
}

AutocorrResult compute(std::span<const u64> seq, std::size_t k_max, BoundaryMode mode) {
    const std::size_t n = seq.size();
    if (n == 0) throw InvalidArgument("autocorrelation of an empty sequence");
    if (std::any_of(seq.begin(), seq.end(), [](u64 v) { return v == 0; })) {
        throw InvalidArgument("autocorrelation input must be positive integers");
    }

    AutocorrResult r;
    r.mode = mode;
    r.values.reserve(k_max + 1);

    if (mode == BoundaryMode::circular) {
        if (k_max >= n) {
            throw InvalidArgument("k_max " + std::to_string(k_max) +
                                  " must be below the sequence length " + std::to_string(n) +
                                  " in circular mode");
        }
        r.n_products = n;
        for (std::size_t k = 0; k <= k_max; ++k) {
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t j = i + k;
                if (j >= n) j -= n;
                acc += static_cast<std::int64_t>(seq[i] * seq[j]);
            }
            r.values.emplace_back(acc, static_cast<std::int64_t>(n));
        }
    } else {
        if (n < k_max + 2) {
            throw InvalidArgument("windowed mode needs at least k_max + 2 = " +
                                  std::to_string(k_max + 2) + " elements, got " +
                                  std::to_string(n));
        }
        const std::size_t window = n - k_max;
        r.n_products = window;
        for (std::size_t k = 0; k <= k_max; ++k) {
            std::int64_t acc = 0;
            for (std::size_t i = 0; i < window; ++i) {
                acc += static_cast<std::int64_t>(seq[i] * seq[i + k]);
            }
            r.values.emplace_back(acc, static_cast<std::int64_t>(window));
        }
    }
    return r;
}

Rational expected_offpeak(u64 p, ClassLabel label) {
    const Rational m = expected_mean_gap(p, label);
    return m * m;
}

GapModel GapModel::halving_mod3() {
    return GapModel{{0.25, 0.5, 0.125}, 0.5};
}

double c0_series_estimate(const GapModel& model) {
    if (model.head.empty()) throw InvalidArgument("gap model has no probabilities");
    if (model.tail_ratio < 0.0 || model.tail_ratio >= 1.0) {
        throw InvalidArgument("gap model tail ratio must lie in [0, 1)");
    }
    if (std::any_of(model.head.begin(), model.head.end(), [](double q) { return q < 0.0; })) {
        throw InvalidArgument("gap model has a negative probability");
    }
    const double last = model.head.back();
    const double r = model.tail_ratio;
    const double mass = std::accumulate(model.head.begin(), model.head.end(), 0.0) +
                        (r > 0.0 ? last * r / (1.0 - r) : 0.0);
    if (std::fabs(mass - 1.0) > 1e-9) {
        throw InvalidArgument("gap model probabilities sum to " + std::to_string(mass) +
                              ", not 1");
    }

    double moment = 0.0;
    for (std::size_t i = 0; i < model.head.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        moment += k * k * model.head[i];
    }
    if (r == 0.0 || last == 0.0) return moment;

    // Tail terms k^2 P(k) with P(k) = last * r^(k - m). Once the term ratio
    // q = ((k+1)/k)^2 r is below 1, the remainder is at most term * q / (1 - q).
    double prob = last;
    double k = static_cast<double>(model.head.size());
    for (;;) {
        prob *= r;
        k += 1.0;
        const double term = k * k * prob;
        moment += term;
        const double q = ((k + 1.0) / k) * ((k + 1.0) / k) * r;
        if (q < 1.0 && term * q / (1.0 - q) < 1e-9) break;
    }
    return moment;
}

AutocorrSummary summarize(const AutocorrResult& r, const Rational& expected) {
    if (r.values.size() < 2) throw InvalidArgument("summarize needs k_max >= 1");
    AutocorrSummary s;
    s.peak = to_double(r.peak());
    s.offpeak_mean = to_double(r.offpeak_mean());
    const auto [lo, hi] = std::minmax_element(r.values.begin() + 1, r.values.end());
    s.offpeak_min = to_double(*lo);
    s.offpeak_max = to_double(*hi);
    s.expected = to_double(expected);
    s.deviation = s.expected != 0.0 ? (s.offpeak_mean - s.expected) / s.expected : 0.0;
    return s;
}

}  // namespace pptseq
