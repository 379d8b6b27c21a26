#pragma once

#include <functional>
#include <map>
#include <string>

#include "graddens/field.hpp"
#include "graddens/grid.hpp"

namespace graddens {

/// An analytic test function with exact first and second derivatives,
/// scaled so that max |s| over the domain is 1.
struct TestFunction {
    std::string name;
    double b1 = 0.0;
    double b2 = 0.0;
    double scale = 1.0;  // normalization factor already folded into S, s, S2
    std::function<double(double)> S;
    std::function<double(double)> s;   // S'
    std::function<double(double)> S2;  // S''
};

/// Known members: quadratic, sinusoid, exponential, sum_of_sinusoids,
/// linear_degenerate. Default domain is [-0.125, 0.125]; params may
/// override it ("b1", "b2") or member shape parameters ("freq", "freq2",
/// "lambda"). Unknown names or invalid parameter values throw
/// invalid_input.
TestFunction catalog_lookup(const std::string& name,
                            const std::map<std::string, double>& params = {});

/// Exact analytic samples of S and s at the grid points. The grid must
/// match the function's domain (throws invalid_input otherwise).
std::pair<ScalarField, ScalarField> sample(const TestFunction& tf, const GridSpec& grid);

/// Central differences in the interior, second-order one-sided stencils at
/// the two boundary samples. Requires n >= 3.
ScalarField discrete_derivative(const ScalarField& S);

}  // namespace graddens
