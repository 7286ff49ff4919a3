#pragma once

// The exact pipeline from the perimeter series to the inverse approximation:
//
//   perimeter  L = pi (a+b) * sum_n binom(1/2, n)^2 x^n,    x = lambda^2
//   excess     h(x) = L / (pi (a+b)) - 1
//   true       x(h) = reversion of h(x)
//   approx     x(h) ~ 4h - 3h^2 / (2 + sqrt(1 - 3h))
//
// Everything here is exact; the indeterminate of the perimeter and excess
// series is x = lambda^2, the indeterminate of the others is h.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ellarc/cfrac.hpp"
#include "ellarc/error.hpp"
#include "ellarc/power_series.hpp"
#include "ellarc/rational.hpp"

namespace ellarc {

inline constexpr std::size_t default_working_order = 12;

/// sum_n binom(1/2, n)^2 x^n through x^order.
inline PowerSeries ivory_series(std::size_t order)
{
    std::vector<Rational> c(order + 1);
    const Rational half(1, 2);
    Rational b(1);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            b *= (half - Rational(static_cast<std::int64_t>(n - 1))) / Rational(static_cast<std::int64_t>(n));
        }
        c[n] = b * b;
    }
    return PowerSeries(std::move(c));
}

/// h as a series in x = lambda^2.
inline PowerSeries h_series(std::size_t order)
{
    if (order < 1) {
        throw error(errc::insufficient_order, "the excess series needs order >= 1");
    }
    return ivory_series(order) - Rational(1);
}

/// lambda^2 as a series in h, by reverting h_series.
inline PowerSeries true_inverse_series(std::size_t order) { return revert(h_series(order)); }

/// Expansion of 4h - 3h^2 / (2 + sqrt(1 - 3h)).
inline PowerSeries ramanujan_series(std::size_t order)
{
    if (order < 2) {
        throw error(errc::insufficient_order, "the closed-form expansion needs order >= 2");
    }
    const PowerSeries den = sqrt(PowerSeries::polynomial({1, -3}, order)) + Rational(2);
    return PowerSeries::polynomial({0, 4}, order) - divide(PowerSeries::polynomial({0, 0, 3}, order), den);
}

/// true_inverse_series - ramanujan_series.
inline PowerSeries difference_series(std::size_t order)
{
    if (order < 6) {
        throw error(errc::insufficient_order, "the difference is first nonzero at h^6");
    }
    return true_inverse_series(order) - ramanujan_series(order);
}

struct DerivationReport {
    PowerSeries ivory;
    PowerSeries h_series;
    PowerSeries true_series;
    PowerSeries approx_series;
    PowerSeries difference;
    CFraction cfrac_true;
    std::size_t working_order = 0;
};

/// Builds every series at `order`; the C-fraction gets min(order - 2, depth) coefficients.
inline DerivationReport full_report(std::size_t order = default_working_order,
                                    std::optional<std::size_t> depth = std::nullopt)
{
    if (order < 8) {
        throw error(errc::insufficient_order, "order " + std::to_string(order) +
                                                  " cannot certify the h^6..h^8 difference coefficients");
    }
    DerivationReport r;
    r.working_order = order;
    r.ivory = ivory_series(order);
    r.h_series = r.ivory - Rational(1);
    r.true_series = revert(r.h_series);
    r.approx_series = ramanujan_series(order);
    r.difference = r.true_series - r.approx_series;
    r.cfrac_true = cfrac_expand(r.true_series, std::min(order - 2, depth.value_or(order - 2)));
    return r;
}

namespace detail {

inline std::string joined(const PowerSeries &s)
{
    std::string out;
    for (std::size_t k = 0; k <= s.order(); ++k) {
        out += (k == 0 ? "" : ", ") + s[k].to_string();
    }
    return out;
}

} // namespace detail

/// Structured text, one "key: value, value, ..." line per field.
inline std::string to_text(const DerivationReport &r)
{
    std::ostringstream os;
    os << "working_order: " << r.working_order << '\n'
       << "ivory: " << detail::joined(r.ivory) << '\n'
       << "h_series: " << detail::joined(r.h_series) << '\n'
       << "true_series: " << detail::joined(r.true_series) << '\n'
       << "approx_series: " << detail::joined(r.approx_series) << '\n'
       << "difference: " << detail::joined(r.difference) << '\n';
    os << "cfrac_true.leading: " << r.cfrac_true.leading << '\n'
       << "cfrac_true.head: " << r.cfrac_true.head << '\n'
       << "cfrac_true.partial_coeffs: ";
    for (std::size_t k = 0; k < r.cfrac_true.depth(); ++k) {
        os << (k == 0 ? "" : ", ") << r.cfrac_true.partial_coeffs[k];
    }
    os << '\n' << "cfrac_true.terminated: " << (r.cfrac_true.terminated ? "true" : "false") << '\n';
    return os.str();
}

/// "power\tcoefficient" rows under a header.
inline std::string to_tsv(const PowerSeries &s)
{
    std::string out = "power\tcoefficient\n";
    for (std::size_t k = 0; k <= s.order(); ++k) {
        out += std::to_string(k) + "\t" + s[k].to_string() + "\n";
    }
    return out;
}

} // namespace ellarc
