#pragma once

// Exact rational numbers backed by Boost.Multiprecision's cpp_rational.
//
// Values are always held in lowest terms with a positive denominator; zero
// is 0/1. The textual form is "p/q", or "p" when q == 1, with the sign on
// the numerator.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "ellarc/error.hpp"

namespace ellarc {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    using value_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(std::int64_t n) : value_(n) {} // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) : Rational(BigInt(n), BigInt(d)) {}
    Rational(const BigInt &n, const BigInt &d)
    {
        if (d == 0) {
            throw error(errc::rational_division_by_zero, "zero denominator");
        }
        value_ = d < 0 ? value_type(-n, -d) : value_type(n, d);
    }
    explicit Rational(value_type v) : value_(std::move(v)) {}

    /// Parses "p", "-p", "p/q" or "-p/q". Whitespace is not accepted.
    static Rational parse(std::string_view text)
    {
        auto digits_ok = [](std::string_view s) {
            if (s.empty()) {
                return false;
            }
            for (char c : s) {
                if (c < '0' || c > '9') {
                    return false;
                }
            }
            return true;
        };
        const auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        std::string_view num_digits = (!num.empty() && num.front() == '-') ? num.substr(1) : num;
        if (!digits_ok(num_digits) || !digits_ok(den)) {
            throw error(errc::malformed_rational, "cannot parse '" + std::string(text) + "'");
        }
        return Rational(BigInt(std::string(num)), BigInt(std::string(den)));
    }

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    [[nodiscard]] const value_type &value() const noexcept { return value_; }

    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
    [[nodiscard]] int sign() const { return value_.sign(); }

    [[nodiscard]] std::string to_string() const
    {
        const BigInt d = denominator();
        if (d == 1) {
            return numerator().str();
        }
        return numerator().str() + "/" + d.str();
    }

    template <typename Real = double>
    [[nodiscard]] Real to() const
    {
        return value_.template convert_to<Real>();
    }

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw error(errc::rational_division_by_zero, "division of " + to_string() + " by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a) { return Rational(value_type(-a.value_)); }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    value_type value_{0};
};

/// a^n for n >= 0.
inline Rational pow(Rational base, unsigned n)
{
    Rational out(1);
    while (n != 0) {
        if ((n & 1U) != 0) {
            out *= base;
        }
        base *= base;
        n >>= 1U;
    }
    return out;
}

/// Generalized binomial coefficient binom(alpha, k).
inline Rational binomial(const Rational &alpha, unsigned k)
{
    Rational out(1);
    for (unsigned i = 0; i < k; ++i) {
        out *= (alpha - Rational(i)) / Rational(i + 1);
    }
    return out;
}

} // namespace ellarc
