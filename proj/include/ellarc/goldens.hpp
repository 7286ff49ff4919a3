#pragma once

// Published reference coefficients, keyed by series name and power, and a
// checker that reports every disagreement with a generated report instead of
// preferring either side.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellarc/derivation.hpp"
#include "ellarc/rational.hpp"

namespace ellarc {

struct Golden {
    std::string_view series; // "ivory", "h_series", "true_series", "approx_series", "difference", "cfrac"
    std::size_t power;       // power of the indeterminate; 1-based index for "cfrac"
    std::string_view value;
};

inline constexpr std::array published_goldens{
    Golden{"ivory", 0, "1"},
    Golden{"ivory", 1, "1/4"},
    Golden{"ivory", 2, "1/64"},
    Golden{"ivory", 3, "1/256"},

    Golden{"h_series", 0, "0"},
    Golden{"h_series", 1, "1/4"},
    Golden{"h_series", 2, "1/64"},
    Golden{"h_series", 3, "1/256"},
    Golden{"h_series", 4, "25/16384"},
    Golden{"h_series", 5, "49/65536"},
    Golden{"h_series", 6, "441/1048576"},
    Golden{"h_series", 7, "1089/4194304"},
    Golden{"h_series", 8, "184041/1073741824"},
    Golden{"h_series", 9, "511225/4294967296"},

    Golden{"true_series", 1, "4"},
    Golden{"true_series", 2, "-1"},
    Golden{"true_series", 3, "-1/2"},
    Golden{"true_series", 4, "-5/8"},
    Golden{"true_series", 5, "-17/16"},
    Golden{"true_series", 6, "-273/128"},
    Golden{"true_series", 7, "-609/128"},
    Golden{"true_series", 8, "-23391/2048"},

    Golden{"approx_series", 1, "4"},
    Golden{"approx_series", 2, "-1"},
    Golden{"approx_series", 3, "-1/2"},
    Golden{"approx_series", 4, "-5/8"},
    Golden{"approx_series", 5, "-17/16"},
    Golden{"approx_series", 6, "-269/128"},
    Golden{"approx_series", 7, "-1163/256"},
    Golden{"approx_series", 8, "-10657/1024"},

    Golden{"difference", 0, "0"},
    Golden{"difference", 1, "0"},
    Golden{"difference", 2, "0"},
    Golden{"difference", 3, "0"},
    Golden{"difference", 4, "0"},
    Golden{"difference", 5, "0"},
    Golden{"difference", 6, "-1/32"},
    Golden{"difference", 7, "-55/256"},
    Golden{"difference", 8, "-2077/2048"},

    Golden{"cfrac", 1, "1/2"},
    Golden{"cfrac", 2, "3/4"},
    Golden{"cfrac", 3, "3/4"},
    Golden{"cfrac", 4, "29/18"},
};

/// The published value for (series, power), if there is one.
inline std::optional<Rational> published_value(std::string_view series, std::size_t power)
{
    for (const auto &g : published_goldens) {
        if (g.series == series && g.power == power) {
            return Rational::parse(g.value);
        }
    }
    return std::nullopt;
}

struct GoldenCheck {
    Golden golden;
    std::optional<Rational> computed; // nullopt when the report does not reach that far
    [[nodiscard]] bool matches() const { return computed && *computed == Rational::parse(golden.value); }
};

/// Compares a report with every published value it is able to reach.
inline std::vector<GoldenCheck> check_goldens(const DerivationReport &r)
{
    std::vector<GoldenCheck> out;
    for (const auto &g : published_goldens) {
        std::optional<Rational> computed;
        if (g.series == "cfrac") {
            if (g.power <= r.cfrac_true.depth()) {
                computed = r.cfrac_true.coefficient(g.power);
            }
        } else {
            const PowerSeries &s = g.series == "ivory"        ? r.ivory
                                   : g.series == "h_series"   ? r.h_series
                                   : g.series == "true_series" ? r.true_series
                                   : g.series == "approx_series" ? r.approx_series
                                                                 : r.difference;
            if (g.power <= s.order()) {
                computed = s[g.power];
            }
        }
        out.push_back({g, computed});
    }
    return out;
}

} // namespace ellarc
