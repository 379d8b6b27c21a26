#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "graddens/density.hpp"
#include "graddens/field.hpp"

namespace graddens {

/// The free small parameter of the wave-function estimator. Spectral bin
/// width scales linearly with it (du = 2 pi tau / L). Values larger than
/// the grid spacing under-resolve the resonance widths; that condition is
/// reported as a diagnostic at estimation time, not here.
struct TauParameter {
    double value;

    explicit TauParameter(double tau);
};

/// Centered DFT of a wave field. coefficients[idx] holds the coefficient
/// for frequency index k = idx - n/2; the corresponding derivative value
/// is u_k = 2 pi tau k / L with bin width du = 2 pi tau / L.
struct SpectrumRaw {
    GridSpec grid;
    TauParameter tau;
    std::vector<std::complex<double>> coefficients;

    double bin_width() const;
    long k_at(std::size_t idx) const { return static_cast<long>(idx) - static_cast<long>(grid.n / 2); }
    double u_at(std::size_t idx) const { return bin_width() * static_cast<double>(k_at(idx)); }
};

/// phi_i = exp(i S_i / tau). Every output value is unimodular.
ComplexField build_wavefunction(const ScalarField& S, const TauParameter& tau);

/// Centered DFT of the wave field. The continuous normalization
/// 1/sqrt(2 pi tau L) and the measure dx are folded in when converting to
/// a density, not stored in the coefficients.
SpectrumRaw scaled_transform(const ComplexField& phi, const TauParameter& tau);

/// Normalized power spectrum as a density of S': p_k = |c_k|^2 dx^2 /
/// (2 pi tau L) on u_k = 2 pi tau k / L. The discrete Parseval identity
/// makes sum p du = 1 up to rounding before the final renormalization;
/// a deviation over 1e-9 at that point throws internal_error. Throws
/// invalid_input when du spans less than an eighth of the derivative
/// range (the estimate would be meaningless at that resolution).
DensityEstimate estimate_density_wave(const ScalarField& S, const TauParameter& tau);

/// Number of estimate_density_wave invocations in this process.
std::uint64_t wave_invocation_count();

}  // namespace graddens
