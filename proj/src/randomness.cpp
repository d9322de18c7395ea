#include "pptseq/randomness.hpp"

#include <array>
#include <cmath>

namespace pptseq {

namespace {

constexpr std::array<double, 30> kChiSquare99 = {
    6.6349,  9.2103,  11.3449, 13.2767, 15.0863, 16.8119, 18.4753, 20.0902, 21.6660, 23.2093,
    24.7250, 26.2170, 27.6882, 29.1412, 30.5779, 31.9999, 33.4087, 34.8053, 36.1909, 37.5662,
    38.9322, 40.2894, 41.6384, 42.9798, 44.3141, 45.6417, 46.9629, 48.2782, 49.5879, 50.8922,
};

}  // namespace

double chi_square_critical_99(int df) {
    if (df < 1 || df > static_cast<int>(kChiSquare99.size())) {
        throw InvalidArgument("no chi-square critical value for df=" + std::to_string(df));
    }
    return kChiSquare99[static_cast<std::size_t>(df - 1)];
}

TestReport chi_square_frequencies(const ClassSequence& cs) {
    const u64 p = cs.modulus;
    require_odd_prime(p);
    if (cs.size() < 50 * p) {
        throw InvalidArgument("chi-square needs at least " + std::to_string(50 * p) +
                              " labels, got " + std::to_string(cs.size()));
    }
    const auto counts = class_frequencies(cs);
    const double n = static_cast<double>(cs.size());
    const double unit = n / static_cast<double>(p + 1);

    double stat = 0.0;
    for (std::size_t r = 0; r < counts.size(); ++r) {
        const double expected = r == 0 ? 2.0 * unit : unit;
        const double d = static_cast<double>(counts[r]) - expected;
        stat += d * d / expected;
    }

    TestReport rep;
    rep.name = "chi_square_frequencies(p=" + std::to_string(p) + ")";
    rep.statistic = stat;
    rep.degrees_of_freedom = static_cast<int>(p - 1);
    rep.threshold = chi_square_critical_99(rep.degrees_of_freedom);
    rep.pass = rep.statistic <= rep.threshold;
    return rep;
}

double lag_correlation(std::span<const u64> values, std::size_t lag) {
    if (lag == 0) throw InvalidArgument("lag must be positive");
    if (values.size() < lag + 30) {
        throw InvalidArgument("serial correlation at lag " + std::to_string(lag) + " needs at least " +
                              std::to_string(lag + 30) + " values, got " +
                              std::to_string(values.size()));
    }
    const std::size_t m = values.size() - lag;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += static_cast<double>(values[i]);
        my += static_cast<double>(values[i + lag]);
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double dx = static_cast<double>(values[i]) - mx;
        const double dy = static_cast<double>(values[i + lag]) - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) throw InvalidArgument("serial correlation of zero-variance data");
    return sxy / std::sqrt(sxx * syy);
}

TestReport serial_correlation(const GapSequence& gaps, std::size_t lag) {
    const double r = lag_correlation(gaps.gaps, lag);
    TestReport rep;
    rep.name = "serial_correlation(p=" + std::to_string(gaps.modulus) +
               ",class=" + gaps.label.name(gaps.modulus) + ",lag=" + std::to_string(lag) + ")";
    rep.statistic = std::fabs(r);
    rep.degrees_of_freedom = static_cast<int>(gaps.gaps.size() - lag - 2);
    rep.threshold = 3.0 / std::sqrt(static_cast<double>(gaps.gaps.size()));
    rep.pass = rep.statistic <= rep.threshold;
    return rep;
}

}  // namespace pptseq
