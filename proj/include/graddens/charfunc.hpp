#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "graddens/density.hpp"
#include "graddens/field.hpp"

namespace graddens {

/// Characteristic function psi(w) = E[exp(i w s(X))] tabulated on the
/// symmetric integer frequency grid w in {-(m-1)/2, ..., (m-1)/2}.
/// psi(0) is exactly 1 and psi(-w) = conj(psi(w)) for real input fields.
struct CharFuncTable {
    std::vector<double> omegas;
    std::vector<std::complex<double>> psi;

    std::size_t size() const { return omegas.size(); }
};

/// Direct O(n*m) evaluation of psi_j = (1/n) sum_i exp(i w_j s_i). This is
/// the deliberate quadratic baseline; m must be odd. Rows for distinct w
/// may be computed in parallel, each with a fixed ascending-i summation
/// order, so the output is identical for every worker count.
CharFuncTable characteristic_function(const ScalarField& s, std::size_t m);

/// Density via the truncated inverse transform p(u_j) = (1/2 pi) sum_w
/// psi(w) exp(-i w u_j) on u_j = -pi + 2 pi j / m, evaluated with one FFT.
/// Residual imaginary mass above 1e-6 throws excess_imaginary; below that
/// it is discarded. Negative values are clipped at zero and the clipped
/// mass is logged before renormalization.
DensityEstimate density_from_charfunc(const CharFuncTable& table);

/// Composition of the two operations with the frequency count tied to the
/// sample count: m = n for odd n, m = n + 1 for even n (the symmetric
/// integer grid -n/2..n/2).
DensityEstimate estimate_density_charfunc(const ScalarField& s);

/// Number of estimate_density_charfunc invocations in this process.
std::uint64_t charfunc_invocation_count();

}  // namespace graddens
