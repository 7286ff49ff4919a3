#pragma once

// Truncated formal power series in one indeterminate over exact rationals.
//
// A PowerSeries of order N knows the coefficients of x^0 .. x^N; everything
// beyond x^N is unknown, never implicitly zero. Binary operations return the
// smallest order that both operands certify, and operations that lose
// information (division by a series of positive valuation) lower it further.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ellarc/error.hpp"
#include "ellarc/rational.hpp"

namespace ellarc {

class PowerSeries {
public:
    /// The zero series through x^0.
    PowerSeries() : coeffs_(1) {}

    /// Takes coefficients c_0 .. c_N; the order is N.
    explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw error(errc::insufficient_order, "a power series needs at least the constant coefficient");
        }
    }

    /// A polynomial known exactly, viewed through `order`: coefficients past the
    /// list are exact zeros, coefficients past `order` are dropped.
    static PowerSeries polynomial(std::initializer_list<Rational> coeffs, std::size_t order)
    {
        return polynomial(std::vector<Rational>(coeffs), order);
    }
    static PowerSeries polynomial(std::vector<Rational> coeffs, std::size_t order)
    {
        coeffs.resize(order + 1);
        return PowerSeries(std::move(coeffs));
    }
    static PowerSeries zero(std::size_t order) { return PowerSeries(std::vector<Rational>(order + 1)); }
    static PowerSeries constant(const Rational &c, std::size_t order) { return polynomial({c}, order); }
    /// The identity series x.
    static PowerSeries identity(std::size_t order) { return polynomial({0, 1}, order); }

    [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    [[nodiscard]] const Rational &operator[](std::size_t k) const { return coeff(k); }
    [[nodiscard]] const Rational &coeff(std::size_t k) const
    {
        if (k > order()) {
            throw error(errc::truncated_coefficient,
                        "coefficient " + std::to_string(k) + " of a series of order " + std::to_string(order()));
        }
        return coeffs_[k];
    }

    /// Index of the first nonzero coefficient, or nullopt when the series is
    /// zero through its order.
    [[nodiscard]] std::optional<std::size_t> valuation() const
    {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!coeffs_[k].is_zero()) {
                return k;
            }
        }
        return std::nullopt;
    }

    [[nodiscard]] PowerSeries truncate(std::size_t new_order) const
    {
        if (new_order > order()) {
            throw error(errc::insufficient_order, "cannot extend a series of order " + std::to_string(order()) +
                                                      " to order " + std::to_string(new_order));
        }
        return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
    }

    /// Divides by x^k; the k leading coefficients must be zero.
    [[nodiscard]] PowerSeries shift_down(std::size_t k) const
    {
        if (k > order()) {
            throw error(errc::insufficient_order, "shift exceeds the truncation order");
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (!coeffs_[i].is_zero()) {
                throw error(errc::zero_constant_term, "series is not divisible by x^" + std::to_string(k));
            }
        }
        return PowerSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
    }

    /// Multiplies by x^k; the order grows by k.
    [[nodiscard]] PowerSeries shift_up(std::size_t k) const
    {
        std::vector<Rational> out(k);
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return PowerSeries(std::move(out));
    }

    /// Horner evaluation of the known prefix.
    template <typename Real>
    [[nodiscard]] Real evaluate(const Real &x) const
    {
        Real acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + it->template to<Real>();
        }
        return acc;
    }

    [[nodiscard]] std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            out.push_back(c.to_string());
        }
        return out;
    }

    PowerSeries &operator+=(const PowerSeries &o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        return *this;
    }
    PowerSeries &operator-=(const PowerSeries &o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            coeffs_[k] -= o.coeffs_[k];
        }
        return *this;
    }
    PowerSeries &operator*=(const Rational &c)
    {
        for (auto &v : coeffs_) {
            v *= c;
        }
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries &b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries &b) { return a -= b; }
    friend PowerSeries operator-(PowerSeries a)
    {
        for (auto &v : a.coeffs_) {
            v = -v;
        }
        return a;
    }
    friend PowerSeries operator*(PowerSeries a, const Rational &c) { return a *= c; }
    friend PowerSeries operator*(const Rational &c, PowerSeries a) { return a *= c; }

    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        std::vector<Rational> out(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return PowerSeries(std::move(out));
    }

    /// Series plus a constant.
    friend PowerSeries operator+(PowerSeries a, const Rational &c)
    {
        a.coeffs_[0] += c;
        return a;
    }
    friend PowerSeries operator+(const Rational &c, PowerSeries a) { return std::move(a) + c; }
    friend PowerSeries operator-(PowerSeries a, const Rational &c)
    {
        a.coeffs_[0] -= c;
        return a;
    }
    friend PowerSeries operator-(const Rational &c, PowerSeries a) { return (-std::move(a)) + c; }

    friend std::ostream &operator<<(std::ostream &os, const PowerSeries &s)
    {
        os << '[';
        for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
            os << (k == 0 ? "" : ", ") << s.coeffs_[k];
        }
        return os << "] + O(x^" << s.order() + 1 << ')';
    }

private:
    std::vector<Rational> coeffs_;
};

/// Result of comparing two series over the prefix both of them know.
struct SeriesComparison {
    bool equal = false;
    std::size_t certified_order = 0;          // highest power that was compared
    std::optional<std::size_t> first_mismatch; // lowest power that differs
};

inline SeriesComparison compare(const PowerSeries &a, const PowerSeries &b)
{
    SeriesComparison out;
    out.certified_order = std::min(a.order(), b.order());
    for (std::size_t k = 0; k <= out.certified_order; ++k) {
        if (a[k] != b[k]) {
            out.first_mismatch = k;
            return out;
        }
    }
    out.equal = true;
    return out;
}

/// True when a and b agree on x^0 .. x^n and both know that far.
inline bool agrees_through(const PowerSeries &a, const PowerSeries &b, std::size_t n)
{
    if (a.order() < n || b.order() < n) {
        return false;
    }
    for (std::size_t k = 0; k <= n; ++k) {
        if (a[k] != b[k]) {
            return false;
        }
    }
    return true;
}

/// num / den. When den(0) == 0 the common factor x^v (v the valuation of den)
/// is cancelled first, which costs v orders of certainty.
inline PowerSeries divide(const PowerSeries &num, const PowerSeries &den)
{
    const auto v = den.valuation();
    if (!v) {
        throw error(errc::division_by_zero_series, "divisor is zero through order " + std::to_string(den.order()));
    }
    PowerSeries n = num;
    PowerSeries d = den;
    if (*v > 0) {
        const auto nv = num.valuation();
        if (nv && *nv < *v) {
            throw error(errc::zero_constant_term, "divisor has valuation " + std::to_string(*v) +
                                                      " but dividend only " + std::to_string(*nv));
        }
        if (*v > num.order()) {
            throw error(errc::insufficient_order, "dividend is too short to cancel x^" + std::to_string(*v));
        }
        n = num.shift_down(*v);
        d = den.shift_down(*v);
    }
    const std::size_t order = std::min(n.order(), d.order());
    const Rational inv0 = Rational(1) / d[0];
    std::vector<Rational> q(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = n[k];
        for (std::size_t j = 1; j <= k; ++j) {
            acc -= d[j] * q[k - j];
        }
        q[k] = acc * inv0;
    }
    return PowerSeries(std::move(q));
}

inline PowerSeries operator/(const PowerSeries &num, const PowerSeries &den) { return divide(num, den); }

/// Principal square root of a series with constant term 1.
inline PowerSeries sqrt(const PowerSeries &s)
{
    if (s[0] != Rational(1)) {
        throw error(errc::non_unit_constant, "square root needs constant term 1, got " + s[0].to_string());
    }
    const std::size_t n = s.order();
    std::vector<Rational> r(n + 1);
    r[0] = 1;
    const Rational half(1, 2);
    // 2 r_k = s_k - sum_{i=1}^{k-1} r_i r_{k-i}
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = s[k];
        for (std::size_t i = 1; i < k; ++i) {
            acc -= r[i] * r[k - i];
        }
        r[k] = acc * half;
    }
    return PowerSeries(std::move(r));
}

/// outer(inner(x)). inner must have zero constant term.
inline PowerSeries compose(const PowerSeries &outer, const PowerSeries &inner)
{
    if (!inner[0].is_zero()) {
        throw error(errc::nonzero_inner_constant, "inner series has constant term " + inner[0].to_string());
    }
    const std::size_t order = std::min(outer.order(), inner.order());
    const PowerSeries in = inner.truncate(order);
    PowerSeries acc = PowerSeries::constant(outer[order], order);
    for (std::size_t k = order; k-- > 0;) {
        acc = acc * in + outer[k];
    }
    return acc;
}

/// Compositional inverse g of s, i.e. s(g(x)) = g(s(x)) = x, computed by
/// Lagrange inversion: [x^n] g = (1/n) [x^(n-1)] (x / s(x))^n.
inline PowerSeries revert(const PowerSeries &s)
{
    if (!s[0].is_zero()) {
        throw error(errc::not_centered, "series to revert has constant term " + s[0].to_string());
    }
    if (s.order() < 1) {
        throw error(errc::insufficient_order, "reversion needs at least the linear coefficient");
    }
    if (s[1].is_zero()) {
        throw error(errc::zero_linear_term, "series to revert has no linear term");
    }
    const std::size_t n = s.order();
    // x / s(x) is known through x^(n-1).
    const PowerSeries phi = divide(PowerSeries::constant(1, n - 1), s.shift_down(1));
    std::vector<Rational> g(n + 1);
    PowerSeries power = PowerSeries::constant(1, n - 1);
    for (std::size_t k = 1; k <= n; ++k) {
        power = power * phi;
        g[k] = power[k - 1] / Rational(static_cast<std::int64_t>(k));
    }
    return PowerSeries(std::move(g));
}

} // namespace ellarc
