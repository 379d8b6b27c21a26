#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "graddens/catalog.hpp"
#include "graddens/density.hpp"
#include "graddens/field.hpp"
#include "graddens/wave.hpp"

namespace graddens {

/// Absolute tolerance on u for membership in the excluded set C
/// (derivative values are normalized to max |s| = 1, so an absolute
/// threshold is scale-free).
inline constexpr double kEpsC = 1e-6;

/// The finite set of locations where s(x) = u0, with the curvature
/// S''(x_k) at each root.
struct LevelSet {
    double u0 = 0.0;
    std::vector<double> roots;       // strictly increasing, inside (b1, b2)
    std::vector<double> curvatures;  // S'' at each root, |.| above the degeneracy threshold
};

/// Roots of S'' (set B), their images under s plus the endpoint derivative
/// values (set C), and the half-width of a clean interval around the
/// queried u when one exists.
struct DegeneracyReport {
    std::vector<double> b_points;
    std::vector<double> c_values;  // sorted, deduplicated within kEpsC
    double queried_u = 0.0;
    bool clean = false;
    double eta = 0.0;  // half the distance from queried_u to C; 0 when not clean
};

/// Brackets sign changes of s(x) - u0 on a probe_n-point grid and refines
/// each bracket by bisection to |interval| < 1e-13 L. Throws
/// degenerate_error when a root's curvature is below the threshold
/// (u0 was in or too near C) and probe_too_coarse when two roots share
/// adjacent probe cells (retry with 4x probe_n).
LevelSet find_level_set(const TestFunction& tf, double u0, std::size_t probe_n);

/// Closed-form density (1/L) sum_k 1 / |S''(x_k)| over the level set;
/// 0 when the level set is empty. Retries coarse probes internally.
double analytic_density_at(const TestFunction& tf, double u0, std::size_t probe_n = 4096);

/// Locates B and C and reports whether u0 keeps a clean distance (> kEpsC)
/// from C. Throws degenerate_error when S'' vanishes on more than half of
/// the probe points (the density exists nowhere).
DegeneracyReport detect_degenerate(const TestFunction& tf, double u0,
                                   std::size_t probe_n = 32768);

/// Brute-force oracle: uniform-width histogram of the sampled derivative
/// values, normalized to unit mass. bins >= 8.
DensityEstimate histogram_oracle(const ScalarField& s, std::size_t bins);

/// Closed-form stationary-phase value of the scaled transform:
/// (1/sqrt(L)) sum_k exp(i [S(x_k) - u0 x_k] / tau) exp(sgn(S''(x_k)) i pi/4)
///            / sqrt(|S''(x_k)|).
/// Returns 0 for an empty level set.
std::complex<double> stationary_phase_transform(const TestFunction& tf, double u0,
                                                const TauParameter& tau,
                                                std::size_t probe_n = 4096);

}  // namespace graddens
