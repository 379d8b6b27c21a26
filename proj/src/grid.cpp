#include "graddens/grid.hpp"

#include <cmath>
#include <iostream>

#include "graddens/errors.hpp"
#include "graddens/field.hpp"

namespace graddens {

void diag(const std::string& message) { std::cerr << "graddens: " << message << "\n"; }

GridSpec make_grid(double b1, double b2, std::size_t n) {
    if (!(b2 > b1)) throw invalid_input("invalid domain: b2 must exceed b1");
    if (n < 2) throw invalid_input("invalid domain: need at least 2 samples");
    GridSpec g;
    g.b1 = b1;
    g.b2 = b2;
    g.n = n;
    g.length = b2 - b1;
    g.dx = g.length / static_cast<double>(n);
    return g;
}

std::vector<double> GridSpec::points() const {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = x(i);
    return xs;
}

ScalarField make_scalar_field(GridSpec grid, std::vector<double> values) {
    if (values.size() != grid.n) throw invalid_input("field length does not match grid");
    for (double v : values) {
        if (!std::isfinite(v)) throw invalid_input("field contains a non-finite value");
    }
    return ScalarField{grid, std::move(values)};
}

}  // namespace graddens
