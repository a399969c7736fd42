#include "focalforge/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace focalforge {

double quantile(const std::vector<double>& sorted, double p) {
    const double h = (static_cast<double>(sorted.size()) - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Summary summarize(std::vector<double> values) {
    Summary s;
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    s.n = values.size();
    s.min = values.front();
    s.max = values.back();
    s.q1 = quantile(values, 0.25);
    s.median = quantile(values, 0.5);
    s.q3 = quantile(values, 0.75);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    return s;
}

void to_json(nlohmann::json& j, const Summary& s) {
    j = nlohmann::json{{"n", s.n},       {"min", s.min},   {"q1", s.q1}, {"median", s.median},
                       {"mean", s.mean}, {"q3", s.q3},     {"max", s.max}};
}

}  // namespace focalforge
