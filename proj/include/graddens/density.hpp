#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graddens {

/// Half-open interval [u0, u0 + alpha) used for mass queries.
struct IntervalQuery {
    double u0 = 0.0;
    double alpha = 0.0;
};

/// A discrete probability density: uniform bin centers u, nonnegative
/// values p, bin width du, unit total mass (sum p * du == 1 within 1e-9).
class DensityEstimate {
  public:
    /// Validates the invariants (uniform strictly increasing u, p >= 0,
    /// unit mass within 1e-9) and throws invalid_input on violation.
    static DensityEstimate create(std::vector<double> u, std::vector<double> p, double du);

    /// Rescales p to exact unit mass first, then validates. Throws
    /// invalid_input when the total mass is not strictly positive.
    static DensityEstimate create_normalized(std::vector<double> u, std::vector<double> p,
                                             double du);

    const std::vector<double>& u() const { return u_; }
    const std::vector<double>& p() const { return p_; }
    double du() const { return du_; }
    std::size_t size() const { return u_.size(); }

    double u_front() const { return u_.front(); }
    double u_back() const { return u_.back(); }

    /// Total mass, sum p * du.
    double mass() const;

  private:
    DensityEstimate(std::vector<double> u, std::vector<double> p, double du);

    std::vector<double> u_;
    std::vector<double> p_;
    double du_;
};

enum class ResamplePolicy {
    Auto,    // resample b onto a's grid when the grids differ
    Strict,  // throw grid_mismatch when the grids differ
};

/// l1 error between two estimates on the same grid: sum_k |a.p_k - b.p_k|
/// (raw bin-value sum, no du factor). With ResamplePolicy::Auto, b is
/// resampled onto a's grid first when the grids differ.
double l1_distance(const DensityEstimate& a, const DensityEstimate& b,
                   ResamplePolicy policy = ResamplePolicy::Auto);

/// Linear interpolation of d onto the uniform grid target_u, renormalized
/// to unit mass. Target points at most one source bin outside d's range
/// are padded with zeros; beyond that, throws query_out_of_range.
DensityEstimate resample_density(const DensityEstimate& d, const std::vector<double>& target_u);

/// Mass-aggregating rebinning: each target bin receives the integral of d
/// over the target cell, divided by the target bin width; the result is
/// renormalized. Unlike resample_density this averages sub-bin detail
/// instead of point-sampling it, so it is the right tool for putting a
/// fine oscillatory estimate onto a coarse comparison grid.
DensityEstimate bin_density(const DensityEstimate& d, const std::vector<double>& target_u);

/// Integral of d over [q.u0, q.u0 + q.alpha]: full bins contribute
/// p_k * du, edge bins are weighted by their fractional overlap.
/// Throws query_out_of_range when the query exceeds d's bin range.
double interval_mass(const DensityEstimate& d, const IntervalQuery& q);

/// CSV with header "u,p", one row per bin, 17 significant digits.
void write_density_csv(const DensityEstimate& d, const std::string& path);
DensityEstimate read_density_csv(const std::string& path);

}  // namespace graddens
