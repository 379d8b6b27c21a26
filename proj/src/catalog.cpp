#include "graddens/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "graddens/errors.hpp"

namespace graddens {

namespace {

constexpr std::size_t kProbePoints = 1u << 15;

double param_or(const std::map<std::string, double>& params, const std::string& key,
                double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

/// Peak of |f| over [b1, b2]: dense inclusive probe, then golden-section
/// refinement of the best cell.
double probe_max_abs(const std::function<double(double)>& f, double b1, double b2) {
    const double step = (b2 - b1) / static_cast<double>(kProbePoints - 1);
    double best = 0.0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < kProbePoints; ++i) {
        const double v = std::abs(f(b1 + static_cast<double>(i) * step));
        if (v > best) {
            best = v;
            best_idx = i;
        }
    }
    double lo = b1 + (best_idx > 0 ? static_cast<double>(best_idx - 1) : 0.0) * step;
    double hi = b1 + static_cast<double>(std::min(best_idx + 1, kProbePoints - 1)) * step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = std::abs(f(c)), fd = std::abs(f(d));
    for (int it = 0; it < 80; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = std::abs(f(c));
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = std::abs(f(d));
        }
    }
    return std::max({best, fc, fd});
}

struct RawMember {
    std::function<double(double)> S, s, S2;
};

RawMember make_raw(const std::string& name, const std::map<std::string, double>& params) {
    using std::numbers::pi;
    if (name == "quadratic") {
        return {[](double x) { return 4.0 * x * x; },
                [](double x) { return 8.0 * x; },
                [](double) { return 8.0; }};
    }
    if (name == "sinusoid") {
        const double f = param_or(params, "freq", 8.0 * pi);
        if (!(f > 0.0)) throw invalid_input("invalid params: freq must be positive");
        return {[f](double x) { return -std::cos(f * x) / f; },
                [f](double x) { return std::sin(f * x); },
                [f](double x) { return f * std::cos(f * x); }};
    }
    if (name == "exponential") {
        const double lam = param_or(params, "lambda", 8.0);
        if (lam == 0.0) throw invalid_input("invalid params: lambda must be nonzero");
        return {[lam](double x) { return std::exp(lam * x); },
                [lam](double x) { return lam * std::exp(lam * x); },
                [lam](double x) { return lam * lam * std::exp(lam * x); }};
    }
    if (name == "sum_of_sinusoids") {
        const double f1 = param_or(params, "freq", 8.0 * pi);
        const double f2 = param_or(params, "freq2", 8.0 * std::numbers::sqrt2 * pi);
        if (!(f1 > 0.0) || !(f2 > 0.0)) throw invalid_input("invalid params: frequencies must be positive");
        return {[f1, f2](double x) { return -std::cos(f1 * x) / f1 - std::cos(f2 * x) / f2; },
                [f1, f2](double x) { return std::sin(f1 * x) + std::sin(f2 * x); },
                [f1, f2](double x) { return f1 * std::cos(f1 * x) + f2 * std::cos(f2 * x); }};
    }
    if (name == "linear_degenerate") {
        return {[](double x) { return x; }, [](double) { return 1.0; }, [](double) { return 0.0; }};
    }
    throw invalid_input("unknown catalog function: " + name);
}

}  // namespace

TestFunction catalog_lookup(const std::string& name, const std::map<std::string, double>& params) {
    static const std::set<std::string> known_keys = {"b1", "b2", "freq", "freq2", "lambda"};
    for (const auto& [key, value] : params) {
        (void)value;
        if (!known_keys.count(key)) throw invalid_input("invalid params: unknown key '" + key + "'");
    }

    const double b1 = param_or(params, "b1", -0.125);
    const double b2 = param_or(params, "b2", 0.125);
    if (!(b2 > b1)) throw invalid_input("invalid params: b2 must exceed b1");

    RawMember raw = make_raw(name, params);
    const double peak = probe_max_abs(raw.s, b1, b2);
    if (!(peak > 0.0)) throw invalid_input("invalid params: derivative vanishes identically");
    const double scale = 1.0 / peak;

    TestFunction tf;
    tf.name = name;
    tf.b1 = b1;
    tf.b2 = b2;
    tf.scale = scale;
    tf.S = [S = raw.S, scale](double x) { return scale * S(x); };
    tf.s = [s = raw.s, scale](double x) { return scale * s(x); };
    tf.S2 = [S2 = raw.S2, scale](double x) { return scale * S2(x); };
    return tf;
}

std::pair<ScalarField, ScalarField> sample(const TestFunction& tf, const GridSpec& grid) {
    const double tol = 1e-12 * (tf.b2 - tf.b1);
    if (std::abs(grid.b1 - tf.b1) > tol || std::abs(grid.b2 - tf.b2) > tol) {
        throw invalid_input("grid interval does not match the function domain");
    }
    std::vector<double> S(grid.n), s(grid.n);
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        S[i] = tf.S(x);
        s[i] = tf.s(x);
    }
    return {ScalarField{grid, std::move(S)}, ScalarField{grid, std::move(s)}};
}

ScalarField discrete_derivative(const ScalarField& S) {
    const std::size_t n = S.grid.n;
    if (n < 3) throw invalid_input("discrete derivative needs at least 3 samples");
    const double inv2dx = 1.0 / (2.0 * S.grid.dx);
    const auto& v = S.values;
    std::vector<double> d(n);
    d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) * inv2dx;
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) * inv2dx;
    d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) * inv2dx;
    return ScalarField{S.grid, std::move(d)};
}

}  // namespace graddens
