#pragma once

#include <stdexcept>
#include <vector>

namespace laura::bench {

struct Summary {
    double mean = 0.0;
    double variance = 0.0; ///< population variance, divide by n
};

/// Arithmetic mean and population variance of a non-empty sample.
inline Summary summarize(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty value list");
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (const double v : values) sum += v;
    const double mean = sum / n;
    double squared = 0.0;
    for (const double v : values) squared += (v - mean) * (v - mean);
    return {mean, squared / n};
}

} // namespace laura::bench
