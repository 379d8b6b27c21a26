#pragma once

#include <complex>
#include <vector>

#include "graddens/grid.hpp"

namespace graddens {

/// Real-valued samples on a grid (a sampled function or its derivative).
struct ScalarField {
    GridSpec grid;
    std::vector<double> values;
};

/// Complex-valued samples on a grid. A wave field built from a phase is
/// unimodular everywhere.
struct ComplexField {
    GridSpec grid;
    std::vector<std::complex<double>> values;
};

/// Validates values.size() == grid.n and that every entry is finite.
/// Throws invalid_input otherwise.
ScalarField make_scalar_field(GridSpec grid, std::vector<double> values);

}  // namespace graddens
