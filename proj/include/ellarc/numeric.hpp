#pragma once

// Floating-point engines: ellipse perimeter by AGM and by the lambda^2
// series, the excess h, the closed-form inverse approximation, error sweeps
// and inversion from a measured perimeter.
//
// The engines are templates over the real type. Public defaults are double;
// error sweeps run in a 50-digit binary float because the quantity they
// measure, lambda^2 - approx(h), is of size h^6/32 and cancels every digit
// a double carries once lambda drops below about 0.1.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ellarc/error.hpp"

namespace ellarc {

using SweepReal = boost::multiprecision::cpp_bin_float_50;

struct PrecisionConfig {
    double abs_tol = 1e-14;
    std::optional<std::size_t> max_iter; // engine default when unset: 64 for AGM, 10000 for the series

    static constexpr std::size_t agm_default_max_iter = 64;
    static constexpr std::size_t series_default_max_iter = 10000;

    void validate() const
    {
        if (!(abs_tol > 0)) {
            throw error(errc::domain_error, "abs_tol must be positive");
        }
        if (max_iter && *max_iter < 1) {
            throw error(errc::domain_error, "max_iter must be at least 1");
        }
    }
};

template <typename Real = double>
struct Ellipse {
    Real a;
    Real b;
};

namespace detail {

template <typename Real>
Real pi()
{
    if constexpr (std::is_floating_point_v<Real>) {
        return std::numbers::pi_v<Real>;
    } else {
        return boost::math::constants::pi<Real>();
    }
}

template <typename Real>
double to_double(const Real &x)
{
    if constexpr (std::is_floating_point_v<Real>) {
        return static_cast<double>(x);
    } else {
        return x.template convert_to<double>();
    }
}

template <typename Real>
void validate(const Ellipse<Real> &e)
{
    if (!(e.a > 0) || !(e.b >= 0) || !(e.a >= e.b)) {
        throw error(errc::domain_error, "ellipse needs a >= b >= 0 and a > 0");
    }
}

} // namespace detail

/// (a - b) / (a + b)
template <typename Real>
Real lambda_of(const Ellipse<Real> &e)
{
    if (!(e.a + e.b > 0)) {
        throw error(errc::domain_error, "a + b must be positive");
    }
    return (e.a - e.b) / (e.a + e.b);
}

/// pi (a+b) sum_n binom(1/2, n)^2 lambda^(2n), summed until the last term and the
/// geometric bound term x/(1 - x) on the remaining tail both drop below abs_tol.
template <typename Real>
Real perimeter_series(const Ellipse<Real> &e, const PrecisionConfig &cfg = {})
{
    cfg.validate();
    detail::validate(e);
    const Real lam = lambda_of(e);
    if (!(lam < 1)) {
        throw error(errc::domain_error, "the series engine needs lambda < 1");
    }
    const Real x = lam * lam;
    const Real tol(cfg.abs_tol);
    const std::size_t max_iter = cfg.max_iter.value_or(PrecisionConfig::series_default_max_iter);
    Real sum(1);
    Real term(1);
    for (std::size_t n = 1;; ++n) {
        if (n > max_iter) {
            throw error(errc::no_convergence, "series did not reach abs_tol in " + std::to_string(max_iter) + " terms");
        }
        // binom(1/2, n) / binom(1/2, n-1) = (3/2 - n) / n
        const Real ratio = (Real(3) / 2 - Real(n)) / Real(n);
        term *= ratio * ratio * x;
        sum += term;
        if (term < tol && term * x < tol * (1 - x)) {
            break;
        }
    }
    return detail::pi<Real>() * (e.a + e.b) * sum;
}

/// L = 2 pi (a^2 - sum_n 2^(n-1) c_n^2) / M(a, b), the Gauss AGM form of 4a E(e).
template <typename Real>
Real perimeter_agm(const Ellipse<Real> &e, const PrecisionConfig &cfg = {})
{
    using std::abs;
    using std::sqrt;
    cfg.validate();
    detail::validate(e);
    if (e.b == 0) {
        return 4 * e.a;
    }
    const Real tol(cfg.abs_tol);
    const std::size_t max_iter = cfg.max_iter.value_or(PrecisionConfig::agm_default_max_iter);
    Real an = e.a;
    Real bn = e.b;
    Real weight(0.5);
    Real sum = weight * (e.a - e.b) * (e.a + e.b);
    for (std::size_t i = 0;; ++i) {
        if (i >= max_iter) {
            throw error(errc::no_convergence, "AGM did not converge in " + std::to_string(max_iter) + " steps");
        }
        const Real c = (an - bn) / 2;
        weight *= 2;
        sum += weight * c * c;
        const Real next_a = (an + bn) / 2;
        bn = sqrt(an * bn);
        an = next_a;
        // Convergence is quadratic: the first neglected term is O(tol^4).
        if (abs(c) <= tol * an) {
            break;
        }
    }
    return 2 * detail::pi<Real>() * (e.a * e.a - sum) / an;
}

/// L / (pi (a+b)) - 1, with L from the AGM engine.
template <typename Real>
Real h_of(const Ellipse<Real> &e, const PrecisionConfig &cfg = {})
{
    return perimeter_agm(e, cfg) / (detail::pi<Real>() * (e.a + e.b)) - 1;
}

/// 4h - 3h^2 / (2 + sqrt(1 - 3h)) for 0 <= h <= 1/3.
template <typename Real>
Real ramanujan_lambda_sq(const Real &h)
{
    using std::sqrt;
    if (!(h >= 0) || h > Real(1) / 3) {
        throw error(errc::domain_error, "h must lie in [0, 1/3]");
    }
    Real radicand = 1 - 3 * h;
    if (radicand < 0) {
        radicand = 0;
    }
    return 4 * h - 3 * h * h / (2 + sqrt(radicand));
}

struct ErrorRow {
    double lambda;
    double h;
    double lambda_sq_true;
    double lambda_sq_approx;
    double diff;       // true - approx
    double normalized; // 32 diff / h^6, defined as -1 at h = 0
};

/// One row per lambda, in input order, computed on the ellipse (1 + lambda, 1 - lambda).
template <typename Real = SweepReal>
std::vector<ErrorRow> error_sweep(const std::vector<double> &lambda_grid, const PrecisionConfig &cfg = {})
{
    cfg.validate();
    // The engine tolerance is tightened to the working precision of Real.
    PrecisionConfig engine = cfg;
    engine.abs_tol = std::min(cfg.abs_tol, detail::to_double(Real(10) * std::numeric_limits<Real>::epsilon()));
    std::vector<ErrorRow> rows;
    rows.reserve(lambda_grid.size());
    for (double lambda : lambda_grid) {
        if (!(lambda >= 0 && lambda < 1)) {
            throw error(errc::domain_error, "sweep lambda must lie in [0, 1)");
        }
        const Real lam(lambda);
        const Real h = h_of(Ellipse<Real>{1 + lam, 1 - lam}, engine);
        const Real exact = lam * lam;
        const Real approx = ramanujan_lambda_sq(h);
        const Real diff = exact - approx;
        const Real h3 = h * h * h;
        const Real normalized = h == 0 ? Real(-1) : 32 * diff / (h3 * h3);
        rows.push_back({lambda, detail::to_double(h), detail::to_double(exact), detail::to_double(approx),
                        detail::to_double(diff), detail::to_double(normalized)});
    }
    return rows;
}

/// lambda_min + i (lambda_max - lambda_min) / steps for i = 0 .. steps.
inline std::vector<double> uniform_grid(double lambda_min, double lambda_max, std::size_t steps)
{
    if (steps < 1 || !(lambda_min < lambda_max)) {
        throw error(errc::domain_error, "grid needs lambda_min < lambda_max and steps >= 1");
    }
    std::vector<double> out(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        out[i] = lambda_min + (lambda_max - lambda_min) * static_cast<double>(i) / static_cast<double>(steps);
    }
    out.back() = lambda_max;
    return out;
}

inline constexpr double asymptotic_tol_near = 0.02;  // lambda <= 0.05
inline constexpr double asymptotic_tol_far = 0.15;   // lambda <= 0.2
inline constexpr double overestimate_margin = -1e-15;

/// Rows breaking |normalized + 1| <= 0.02 (0 < lambda <= 0.05) or <= 0.15 (0 < lambda <= 0.2).
inline std::vector<ErrorRow> asymptotic_violations(const std::vector<ErrorRow> &rows)
{
    std::vector<ErrorRow> out;
    for (const auto &r : rows) {
        if (r.lambda <= 0 || r.lambda > 0.2) {
            continue;
        }
        const double tol = r.lambda <= 0.05 ? asymptotic_tol_near : asymptotic_tol_far;
        if (!(std::abs(r.normalized + 1) <= tol)) {
            out.push_back(r);
        }
    }
    return out;
}

/// Rows where the approximation falls below the true value by more than the float-noise margin.
inline std::vector<ErrorRow> overestimate_violations(const std::vector<ErrorRow> &rows)
{
    std::vector<ErrorRow> out;
    for (const auto &r : rows) {
        if (!(-r.diff >= overestimate_margin)) {
            out.push_back(r);
        }
    }
    return out;
}

inline std::string sweep_tsv(const std::vector<ErrorRow> &rows)
{
    std::ostringstream os;
    os << "lambda\th\tlambda_sq_true\tlambda_sq_approx\tdiff\tnormalized\n";
    os << std::setprecision(17);
    for (const auto &r : rows) {
        os << r.lambda << '\t' << r.h << '\t' << r.lambda_sq_true << '\t' << r.lambda_sq_approx << '\t' << r.diff
           << '\t' << r.normalized << '\n';
    }
    return os.str();
}

struct Inversion {
    Ellipse<double> ellipse;
    double h;
    double lambda_sq; // closed-form value, may exceed 1 near the degenerate end
    double lambda;    // sqrt(lambda_sq) clamped to [0, 1]
};

/// Recovers (a, b) from a perimeter L and the axis sum s = a + b through the
/// closed-form approximation. Requires pi s <= L <= 4 s.
inline Inversion invert_from_measurements(double perimeter, double axis_sum)
{
    using std::sqrt;
    if (!(axis_sum > 0)) {
        throw error(errc::domain_error, "axis sum must be positive");
    }
    const double pi = std::numbers::pi;
    if (!(perimeter >= pi * axis_sum)) {
        throw error(errc::out_of_range, "perimeter is below the circle bound pi*s");
    }
    if (!(perimeter <= 4 * axis_sum)) {
        throw error(errc::out_of_range, "perimeter is above the degenerate bound 4*s");
    }
    double h = perimeter / (pi * axis_sum) - 1;
    if (h < 0) {
        h = 0;
    }
    const double lambda_sq = ramanujan_lambda_sq(h);
    const double lambda = std::min(sqrt(lambda_sq), 1.0);
    return {{axis_sum * (1 + lambda) / 2, axis_sum * (1 - lambda) / 2}, h, lambda_sq, lambda};
}

} // namespace ellarc
