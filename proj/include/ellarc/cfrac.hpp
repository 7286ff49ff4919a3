#pragma once

// C-fractions of the form
//
//     leading*h - head*h^2 / (1 - a1*h / (1 - a2*h / (1 - a3*h / ...)))
//
// together with their series expansion, tail freezing, and the closed form
// of a constant (periodic) tail.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellarc/error.hpp"
#include "ellarc/power_series.hpp"
#include "ellarc/rational.hpp"

namespace ellarc {

struct CFraction {
    Rational leading;                     // coefficient of h
    Rational head;                        // coefficient of h^2 in the first numerator
    std::vector<Rational> partial_coeffs; // a1, a2, ...
    bool terminated = false;              // the expansion ended exactly (a_{depth+1} = 0)
    std::optional<std::size_t> periodic_from; // 1-based k with a_j = periodic_value for all j >= k
    Rational periodic_value;

    [[nodiscard]] std::size_t depth() const noexcept { return partial_coeffs.size(); }
    [[nodiscard]] bool is_periodic() const noexcept { return periodic_from.has_value(); }

    /// Number of partial coefficients that are actually determined: the stored
    /// ones for a plain truncation, unbounded for terminated or periodic fractions.
    [[nodiscard]] std::size_t known_length() const noexcept
    {
        return (terminated || is_periodic()) ? std::numeric_limits<std::size_t>::max() : depth();
    }

    /// a_k for 1-based k.
    [[nodiscard]] Rational coefficient(std::size_t k) const
    {
        if (k == 0) {
            throw error(errc::index_out_of_range, "partial coefficients are numbered from 1");
        }
        if (k <= depth()) {
            return partial_coeffs[k - 1];
        }
        if (is_periodic()) {
            return periodic_value;
        }
        if (terminated) {
            return Rational(0);
        }
        throw error(errc::insufficient_depth,
                    "a" + std::to_string(k) + " requested from a fraction of depth " + std::to_string(depth()));
    }

    [[nodiscard]] std::vector<std::string> coeff_strings() const
    {
        std::vector<std::string> out;
        for (const auto &a : partial_coeffs) {
            out.push_back(a.to_string());
        }
        return out;
    }
};

/// Expands s = c1*h + c2*h^2 + ... into `depth` partial coefficients.
///
/// With D1 = head*h^2 / (c1*h - s), each step reads a_k off the linear term
/// of 1 - D_k and continues with D_{k+1} = a_k*h / (1 - D_k). Every step
/// costs one order of the input, hence the requirement order >= depth + 2.
inline CFraction cfrac_expand(const PowerSeries &s, std::size_t depth)
{
    if (s.order() < depth + 2 || s.order() < 2) {
        throw error(errc::insufficient_order, "depth " + std::to_string(depth) + " needs a series of order " +
                                                  std::to_string(depth + 2) + ", got " +
                                                  std::to_string(s.order()));
    }
    if (!s[0].is_zero()) {
        throw error(errc::not_centered, "series has constant term " + s[0].to_string());
    }
    if (s[1].is_zero()) {
        throw error(errc::zero_linear_term, "series has no linear term");
    }
    if (s[2].is_zero()) {
        throw error(errc::not_normalizable, "series has no quadratic term");
    }

    CFraction cf;
    cf.leading = s[1];
    cf.head = -s[2];

    const std::size_t n = s.order();
    const PowerSeries h = PowerSeries::identity(n);
    PowerSeries d = divide(PowerSeries::polynomial({0, 0, cf.head}, n), cf.leading * h - s);
    for (std::size_t k = 1; k <= depth; ++k) {
        const PowerSeries rest = Rational(1) - d;
        if (!rest.valuation()) {
            cf.terminated = true;
            break;
        }
        const Rational a = rest[1];
        if (a.is_zero()) {
            throw error(errc::not_normalizable,
                        "a" + std::to_string(k) + " vanishes but the remainder does not");
        }
        cf.partial_coeffs.push_back(a);
        d = divide(PowerSeries::polynomial({0, a}, rest.order()), rest);
    }
    if (!cf.terminated && d.order() >= 1 && !(Rational(1) - d).valuation()) {
        cf.terminated = true;
    }
    return cf;
}

/// Expands the fraction back into a power series through h^order, bottom-up.
/// A plain depth-d truncation certifies only h^0 .. h^(d+2).
inline PowerSeries cfrac_to_series(const CFraction &cf, std::size_t order)
{
    const std::size_t d = cf.depth();
    if (!cf.terminated && !cf.is_periodic() && order > d + 2) {
        throw error(errc::insufficient_depth, "a fraction of depth " + std::to_string(d) +
                                                  " certifies only order " + std::to_string(d + 2));
    }
    // a_k first influences h^(k+2); periodic tails are unrolled that far.
    const std::size_t levels = cf.is_periodic() ? std::max(d, order) : d;
    const PowerSeries h = PowerSeries::identity(order);
    PowerSeries t = PowerSeries::constant(1, order);
    for (std::size_t k = levels; k >= 1; --k) {
        t = Rational(1) - divide(cf.coefficient(k) * h, t);
    }
    const PowerSeries h2 = PowerSeries::polynomial({0, 0, 1}, order);
    return cf.leading * h - divide(cf.head * h2, t);
}

/// Replaces a_k for k >= from_index (1-based) by `value` and marks the tail periodic.
inline CFraction freeze_tail(const CFraction &cf, std::size_t from_index, const Rational &value)
{
    if (from_index == 0 || from_index > cf.depth()) {
        throw error(errc::index_out_of_range, "freeze index " + std::to_string(from_index) +
                                                  " outside 1.." + std::to_string(cf.depth()));
    }
    CFraction out = cf;
    std::fill(out.partial_coeffs.begin() + static_cast<std::ptrdiff_t>(from_index - 1), out.partial_coeffs.end(),
              value);
    out.terminated = false;
    out.periodic_from = from_index;
    out.periodic_value = value;
    return out;
}

namespace detail {

// "4h", "h", "-h", "(1/2)h"
inline std::string scaled(const Rational &c, const std::string &var)
{
    if (c == Rational(1)) {
        return var;
    }
    if (c == Rational(-1)) {
        return "-" + var;
    }
    if (c.denominator() == 1) {
        return c.to_string() + var;
    }
    return "(" + c.to_string() + ")" + var;
}

inline std::string radical(const Rational &coeff)
{
    if (coeff.is_zero()) {
        return "1";
    }
    return std::string("sqrt(1 ") + (coeff.sign() > 0 ? "- " : "+ ") +
           scaled(coeff.sign() > 0 ? coeff : -coeff, "h") + ")";
}

} // namespace detail

/// B(h) = (1 + sqrt(1 - 4ch)) / 2, the root of B^2 - B + c*h = 0 with B(0) = 1.
struct TailClosedForm {
    Rational numerator_coeff;
    Rational branch_value_at_zero{1};

    [[nodiscard]] Rational radicand_coeff() const { return Rational(4) * numerator_coeff; }

    [[nodiscard]] PowerSeries series(std::size_t order) const
    {
        const PowerSeries root = sqrt(PowerSeries::polynomial({1, -radicand_coeff()}, order));
        return (root + Rational(1)) * Rational(1, 2);
    }

    template <typename Real>
    [[nodiscard]] Real evaluate(const Real &h) const
    {
        using std::sqrt;
        return (Real(1) + sqrt(Real(1) - radicand_coeff().template to<Real>() * h)) / Real(2);
    }

    [[nodiscard]] std::string to_string() const
    {
        if (numerator_coeff.is_zero()) {
            return "1";
        }
        return "(1 + " + detail::radical(radicand_coeff()) + ")/2";
    }
};

inline TailClosedForm solve_periodic_tail(const Rational &c) { return TailClosedForm{c, Rational(1)}; }

/// affine*h - quotient*h^2 / (offset + sqrt(1 - radicand*h))
struct ClosedFormExpr {
    Rational affine;
    Rational quotient;
    Rational offset;
    Rational radicand;

    [[nodiscard]] PowerSeries series(std::size_t order) const
    {
        const PowerSeries den = sqrt(PowerSeries::polynomial({1, -radicand}, order)) + offset;
        return PowerSeries::polynomial({0, affine}, order) -
               divide(PowerSeries::polynomial({0, 0, quotient}, order), den);
    }

    template <typename Real>
    [[nodiscard]] Real evaluate(const Real &h) const
    {
        using std::sqrt;
        const Real den = offset.template to<Real>() + sqrt(Real(1) - radicand.template to<Real>() * h);
        return affine.template to<Real>() * h - quotient.template to<Real>() * h * h / den;
    }

    [[nodiscard]] std::string to_string() const
    {
        std::string out = detail::scaled(affine, "h");
        out += quotient.sign() < 0 ? " + " : " - ";
        out += detail::scaled(quotient.sign() < 0 ? -quotient : quotient, "h^2");
        out += "/(";
        if (!offset.is_zero()) {
            out += offset.to_string() + " + ";
        }
        out += detail::radical(radicand) + ")";
        return out;
    }
};

/// Collapses a fraction whose tail is constant from a2 on.
///
/// Substituting the tail B into leading*h - head*h^2 / (1 - a1*h/B) and using
/// B^2 = B - c*h gives leading*h - head*K*h^2 / (K - 1 + sqrt(1 - 4ch)) with
/// K = 2c/a1. The result is checked against the fraction's own expansion
/// through `verify_order`.
inline ClosedFormExpr collapse_to_closed_form(const CFraction &cf, std::size_t verify_order = 12)
{
    if (!cf.is_periodic() || *cf.periodic_from != 2) {
        throw error(errc::not_in_ramanujan_shape, "the tail must be constant from a2 on");
    }
    const Rational a1 = cf.coefficient(1);
    const Rational c = cf.periodic_value;
    if (a1.is_zero() || c.is_zero()) {
        throw error(errc::not_in_ramanujan_shape, "a1 and the tail value must be nonzero");
    }
    const Rational k = Rational(2) * c / a1;
    ClosedFormExpr expr{cf.leading, cf.head * k, k - Rational(1), solve_periodic_tail(c).radicand_coeff()};

    const auto check = compare(expr.series(verify_order), cfrac_to_series(cf, verify_order));
    if (!check.equal) {
        throw std::logic_error("closed form disagrees with the fraction at h^" +
                               std::to_string(check.first_mismatch.value_or(0)));
    }
    return expr;
}

/// Number of leading convergents shared by two fractions. The first
/// convergent is leading*h - head*h^2; each further agreeing partial
/// coefficient adds one. Fractions with different leading or head terms share none.
inline std::size_t convergent_agreement_order(const CFraction &a, const CFraction &b)
{
    if (a.leading != b.leading || a.head != b.head) {
        return 0;
    }
    const std::size_t limit = std::min({a.known_length(), b.known_length(), std::max(a.depth(), b.depth())});
    std::size_t shared = 1;
    for (std::size_t k = 1; k <= limit && a.coefficient(k) == b.coefficient(k); ++k) {
        ++shared;
    }
    return shared;
}

/// "leading: 4\nhead: 1\npartial_coeffs: 1/2, 3/4, ..." plus flags.
inline std::string to_text(const CFraction &cf)
{
    std::string out = "leading: " + cf.leading.to_string() + "\nhead: " + cf.head.to_string() + "\npartial_coeffs: ";
    for (std::size_t k = 0; k < cf.depth(); ++k) {
        out += (k == 0 ? "" : ", ") + cf.partial_coeffs[k].to_string();
    }
    out += "\nterminated: ";
    out += cf.terminated ? "true" : "false";
    if (cf.is_periodic()) {
        out += "\nperiodic_from: " + std::to_string(*cf.periodic_from) + "\nperiodic_value: " +
               cf.periodic_value.to_string();
    }
    return out + "\n";
}

} // namespace ellarc
