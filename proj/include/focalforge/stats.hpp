#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <vector>

namespace focalforge {

struct Summary {
    std::size_t n{0};
    double min{0};
    double q1{0};
    double median{0};
    double mean{0};
    double q3{0};
    double max{0};
};

/// Linear-interpolation quantile (the R type 7 definition). `sorted` must be ascending and non-empty.
double quantile(const std::vector<double>& sorted, double p);

/// All zeros for an empty sample.
Summary summarize(std::vector<double> values);

void to_json(nlohmann::json& j, const Summary& s);

}  // namespace focalforge
