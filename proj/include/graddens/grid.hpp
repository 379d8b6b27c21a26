#pragma once

#include <cstddef>
#include <vector>

namespace graddens {

/// Uniform sampling of a closed interval [b1, b2]. Samples sit at cell
/// midpoints, x_i = b1 + (i + 1/2) dx, so no sample ever coincides with an
/// endpoint of the interval.
struct GridSpec {
    double b1 = 0.0;
    double b2 = 0.0;
    std::size_t n = 0;
    double dx = 0.0;
    double length = 0.0;

    double x(std::size_t i) const { return b1 + (static_cast<double>(i) + 0.5) * dx; }

    std::vector<double> points() const;

    bool operator==(const GridSpec&) const = default;
};

/// Builds a midpoint grid. Throws invalid_input unless b2 > b1 and n >= 2.
GridSpec make_grid(double b1, double b2, std::size_t n);

}  // namespace graddens
