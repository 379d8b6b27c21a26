#include "graddens/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "graddens/errors.hpp"

namespace graddens {

namespace {

constexpr double kMassTol = 1e-9;

double checked_sum_mass(const std::vector<double>& p, double du) {
    double total = 0.0;
    for (double v : p) total += v;
    return total * du;
}

void validate_uniform_grid(const std::vector<double>& u, double du) {
    if (u.empty()) throw invalid_input("density grid is empty");
    if (!(du > 0.0)) throw invalid_input("density bin width must be positive");
    const double tol = 1e-9 * du;
    for (std::size_t k = 1; k < u.size(); ++k) {
        const double step = u[k] - u[k - 1];
        if (!(step > 0.0)) throw invalid_input("density grid must be strictly increasing");
        if (std::abs(step - du) > tol) throw invalid_input("density grid must be uniform");
    }
}

}  // namespace

DensityEstimate::DensityEstimate(std::vector<double> u, std::vector<double> p, double du)
    : u_(std::move(u)), p_(std::move(p)), du_(du) {}

DensityEstimate DensityEstimate::create(std::vector<double> u, std::vector<double> p, double du) {
    validate_uniform_grid(u, du);
    if (p.size() != u.size()) throw invalid_input("density value count does not match grid");
    for (double v : p) {
        if (!std::isfinite(v) || v < 0.0) throw invalid_input("density values must be finite and nonnegative");
    }
    const double mass = checked_sum_mass(p, du);
    if (std::abs(mass - 1.0) > kMassTol) {
        std::ostringstream msg;
        msg << "density mass " << mass << " deviates from 1 beyond " << kMassTol;
        throw invalid_input(msg.str());
    }
    return DensityEstimate(std::move(u), std::move(p), du);
}

DensityEstimate DensityEstimate::create_normalized(std::vector<double> u, std::vector<double> p,
                                                   double du) {
    validate_uniform_grid(u, du);
    if (p.size() != u.size()) throw invalid_input("density value count does not match grid");
    double mass = checked_sum_mass(p, du);
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw invalid_input("cannot normalize a density with nonpositive mass");
    }
    for (double& v : p) v /= mass;
    return create(std::move(u), std::move(p), du);
}

double DensityEstimate::mass() const { return checked_sum_mass(p_, du_); }

double l1_distance(const DensityEstimate& a, const DensityEstimate& b, ResamplePolicy policy) {
    const bool same_grid = a.size() == b.size() && std::abs(a.du() - b.du()) <= 1e-12 &&
                           std::abs(a.u_front() - b.u_front()) <= 1e-12;
    if (!same_grid) {
        if (policy == ResamplePolicy::Strict) {
            throw grid_mismatch("density estimates live on different u grids");
        }
        return l1_distance(a, resample_density(b, a.u()), ResamplePolicy::Strict);
    }
    double total = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) total += std::abs(a.p()[k] - b.p()[k]);
    return total;
}

DensityEstimate resample_density(const DensityEstimate& d, const std::vector<double>& target_u) {
    if (target_u.size() < 2) throw invalid_input("resample target needs at least 2 bins");
    const double du_t = target_u[1] - target_u[0];
    validate_uniform_grid(target_u, du_t);

    const double lo = d.u_front() - d.du();
    const double hi = d.u_back() + d.du();
    if (target_u.front() < lo - 1e-12 || target_u.back() > hi + 1e-12) {
        throw query_out_of_range("resample target extends beyond the source range by more than one bin");
    }

    std::vector<double> p(target_u.size(), 0.0);
    for (std::size_t j = 0; j < target_u.size(); ++j) {
        const double t = target_u[j];
        if (t < d.u_front() || t > d.u_back()) continue;  // within the one-bin margin: zero pad
        const double pos = (t - d.u_front()) / d.du();
        const std::size_t k = std::min(static_cast<std::size_t>(pos), d.size() - 2);
        const double w = pos - static_cast<double>(k);
        p[j] = (1.0 - w) * d.p()[k] + w * d.p()[k + 1];
    }
    return DensityEstimate::create_normalized(target_u, std::move(p), du_t);
}

namespace {

/// Integral of d over [lo, hi], clamped to d's bin range (no throw).
double clamped_mass(const DensityEstimate& d, double lo, double hi) {
    double total = 0.0;
    const double half = 0.5 * d.du();
    for (std::size_t k = 0; k < d.size(); ++k) {
        const double a = d.u()[k] - half;
        const double b = d.u()[k] + half;
        const double overlap = std::min(b, hi) - std::max(a, lo);
        if (overlap > 0.0) total += d.p()[k] * overlap;
    }
    return total;
}

}  // namespace

DensityEstimate bin_density(const DensityEstimate& d, const std::vector<double>& target_u) {
    if (target_u.size() < 2) throw invalid_input("rebin target needs at least 2 bins");
    const double du_t = target_u[1] - target_u[0];
    validate_uniform_grid(target_u, du_t);
    std::vector<double> p(target_u.size(), 0.0);
    for (std::size_t j = 0; j < target_u.size(); ++j) {
        p[j] = clamped_mass(d, target_u[j] - 0.5 * du_t, target_u[j] + 0.5 * du_t) / du_t;
    }
    return DensityEstimate::create_normalized(target_u, std::move(p), du_t);
}

double interval_mass(const DensityEstimate& d, const IntervalQuery& q) {
    if (!(q.alpha > 0.0)) throw invalid_input("interval width must be positive");
    const double half = 0.5 * d.du();
    const double lo = d.u_front() - half;
    const double hi = d.u_back() + half;
    const double tol = 1e-9 * d.du();
    if (q.u0 < lo - tol || q.u0 + q.alpha > hi + tol) {
        throw query_out_of_range("interval query exceeds the density's u range");
    }
    return clamped_mass(d, q.u0, q.u0 + q.alpha);
}

void write_density_csv(const DensityEstimate& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << "u,p\n";
    char line[128];
    for (std::size_t k = 0; k < d.size(); ++k) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g\n", d.u()[k], d.p()[k]);
        out << line;
    }
    if (!out) throw io_error("write failed: " + path);
}

DensityEstimate read_density_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open for reading: " + path);
    std::string header;
    std::getline(in, header);
    if (header != "u,p") throw io_error("unexpected density CSV header in " + path);
    std::vector<double> u, p;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw io_error("malformed density CSV row in " + path);
        u.push_back(std::stod(line.substr(0, comma)));
        p.push_back(std::stod(line.substr(comma + 1)));
    }
    if (u.size() < 2) throw io_error("density CSV has fewer than 2 rows: " + path);
    const double du = u[1] - u[0];
    return DensityEstimate::create(std::move(u), std::move(p), du);
}

}  // namespace graddens
