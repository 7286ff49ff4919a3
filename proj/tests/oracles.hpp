#pragma once

// Test-only reference routines. They work on plain coefficient vectors and
// share no code path with the library's series algorithms.

#include <cstdint>
#include <random>
#include <vector>

#include "ellarc/power_series.hpp"
#include "ellarc/rational.hpp"

namespace oracle {

using ellarc::PowerSeries;
using ellarc::Rational;
using Coeffs = std::vector<Rational>;

inline Coeffs coeffs_of(const PowerSeries &s) { return Coeffs(s.coefficients().begin(), s.coefficients().end()); }

// Schoolbook product truncated to n + 1 terms.
inline Coeffs mul(const Coeffs &a, const Coeffs &b, std::size_t n)
{
    Coeffs out(n + 1);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// outer(inner) by summing explicit powers of inner.
inline Coeffs compose(const Coeffs &outer, const Coeffs &inner, std::size_t n)
{
    Coeffs out(n + 1);
    Coeffs power(n + 1);
    power[0] = 1;
    for (std::size_t k = 0; k < outer.size() && k <= n; ++k) {
        for (std::size_t i = 0; i <= n; ++i) {
            out[i] += outer[k] * power[i];
        }
        power = mul(power, inner, n);
    }
    return out;
}

// Reversion by solving [x^k] s(g(x)) = 0 one coefficient at a time.
inline Coeffs revert(const Coeffs &s, std::size_t n)
{
    Coeffs g(n + 1);
    g[1] = Rational(1) / s[1];
    for (std::size_t k = 2; k <= n; ++k) {
        const Coeffs c = compose(s, g, n);
        g[k] = -c[k] / s[1];
    }
    return g;
}

// Long division a / b with b[0] != 0.
inline Coeffs divide(const Coeffs &a, const Coeffs &b, std::size_t n)
{
    Coeffs rem(n + 1);
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        rem[i] = a[i];
    }
    Coeffs q(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        q[k] = rem[k] / b[0];
        for (std::size_t j = k; j <= n && j - k < b.size(); ++j) {
            rem[j] -= q[k] * b[j - k];
        }
    }
    return q;
}

// leading*h - head*h^2 / (1 - a1 h / (1 - ... / (1 - a_d h))) via long division.
inline Coeffs convergent(const Rational &leading, const Rational &head, const Coeffs &partials, std::size_t n)
{
    Coeffs t{Rational(1)};
    for (auto it = partials.rbegin(); it != partials.rend(); ++it) {
        const Coeffs q = divide({Rational(0), *it}, t, n);
        t.assign(n + 1, Rational(0));
        for (std::size_t i = 0; i <= n; ++i) {
            t[i] = (i == 0 ? Rational(1) : Rational(0)) - q[i];
        }
    }
    const Coeffs q = divide({Rational(0), Rational(0), head}, t, n);
    Coeffs out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        out[i] = (i == 1 ? leading : Rational(0)) - q[i];
    }
    return out;
}

// Small random rationals with a nonzero numerator when asked.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    Rational rational(bool nonzero = false)
    {
        std::uniform_int_distribution<std::int64_t> num(-9, 9);
        std::uniform_int_distribution<std::int64_t> den(1, 7);
        std::int64_t p = num(rng_);
        while (nonzero && p == 0) {
            p = num(rng_);
        }
        return Rational(p, den(rng_));
    }

    PowerSeries series(std::size_t order, std::size_t zero_prefix = 0)
    {
        std::vector<Rational> c(order + 1);
        for (std::size_t k = zero_prefix; k <= order; ++k) {
            c[k] = rational(k == zero_prefix);
        }
        return PowerSeries(std::move(c));
    }

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace oracle
