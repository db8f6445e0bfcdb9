#ifndef CRIBRA_STATS_HPP
#define CRIBRA_STATS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "cribra/common.hpp"

namespace cribra {

enum class DisorderConvention {
    Paper, // 1 - 1/(1 + mu/sigma), as printed
    Cv     // 1 - 1/(1 + sigma/mu), the coefficient-of-variation form
};

// (mu, sigma, disorder, min/max) summary of a value list. Population sigma.
struct StatVector {
    double mean = 0;
    double std = 0;
    double disorder = 0;
    double minmax_ratio = 0;
};

inline double disorder_stat(double mean, double std,
                            DisorderConvention conv = DisorderConvention::Paper) {
    const double num = conv == DisorderConvention::Paper ? mean : std;
    const double den = conv == DisorderConvention::Paper ? std : mean;
    if (den > 0) return 1.0 - 1.0 / (1.0 + num / den);
    // den = 0 limits, frozen: ratio -> inf gives 1, 0/0 gives 0.
    return num > 0 ? 1.0 : 0.0;
}

inline StatVector aggregate(const std::vector<double>& values,
                            DisorderConvention conv = DisorderConvention::Paper) {
    if (values.empty()) throw EmptyInput("aggregate: empty value list");
    StatVector s;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(values.size());
    double var = 0;
    for (double v : values) var += (v - s.mean) * (v - s.mean);
    var /= static_cast<double>(values.size());
    s.std = std::sqrt(var);
    s.disorder = disorder_stat(s.mean, s.std, conv);

    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    if (*mx > 0) s.minmax_ratio = *mn / *mx;
    else if (*mn == *mx) s.minmax_ratio = 1.0; // all equal (incl. all zero)
    else s.minmax_ratio = 0.0;                 // max = 0 with negatives present
    return s;
}

} // namespace cribra

#endif
