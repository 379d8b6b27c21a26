#pragma once

#include <string>
#include <vector>

#include "graddens/catalog.hpp"
#include "graddens/density.hpp"
#include "graddens/grid.hpp"

namespace graddens {

/// l1 error between the two estimators per tau value, taus descending.
struct SweepResult {
    std::vector<double> taus;
    std::vector<double> errors;
    std::string function_name;
    std::size_t n = 0;
};

/// Wall-clock seconds per estimator per grid size; minimum over reps.
struct TimingTable {
    std::vector<std::size_t> ns;
    std::vector<double> wave_seconds;
    std::vector<double> charfunc_seconds;
    int repetitions = 0;
};

struct CompareOutcome {
    DensityEstimate wave;      // on the common comparison grid
    DensityEstimate charfunc;  // on the common comparison grid
    double l1_error = 0.0;
};

/// Number of bins of the fixed comparison grid on [-pi, pi). Fine enough
/// to resolve the densities the catalog produces, coarse enough that each
/// bin integrates over many spectral bins (interval averaging is what
/// removes the cross-term oscillation of the wave estimate).
inline constexpr std::size_t kCompareBins = 128;

/// Centers of the comparison grid.
std::vector<double> common_comparison_grid();

/// Mass-aggregating rebin of an estimate onto the comparison grid.
DensityEstimate to_comparison_grid(const DensityEstimate& d);

/// For each tau (strictly descending, each > dx/pi unless
/// allow_undersampled): wave estimate vs the tau-independent charfunc
/// estimate (computed once), both on the comparison grid; records the l1
/// error. A tau whose estimate fails is logged and omitted from the
/// result; the sweep continues.
SweepResult tau_sweep(const TestFunction& tf, const GridSpec& grid,
                      const std::vector<double>& taus, bool allow_undersampled = false);

/// Single-tau comparison: both estimates on the comparison grid plus the
/// l1 error between them.
CompareOutcome compare_methods(const TestFunction& tf, const GridSpec& grid, double tau);

/// Times estimate_density_wave and estimate_density_charfunc at each n
/// (ascending powers of two), minimum over reps >= 3, serial execution.
TimingTable benchmark_scaling(const TestFunction& tf, const std::vector<std::size_t>& ns,
                              double tau, int reps);

/// Least-squares slope of log2(seconds) against log2(n).
double log2_slope(const std::vector<std::size_t>& ns, const std::vector<double>& seconds);

/// CSV schemas: "tau,l1_error" and "n,wave_seconds,charfunc_seconds",
/// 17 significant digits, lossless round-trip.
void export_sweep(const SweepResult& result, const std::string& path);
SweepResult import_sweep(const std::string& path);
void export_timing(const TimingTable& table, const std::string& path);
TimingTable import_timing(const std::string& path);

}  // namespace graddens
