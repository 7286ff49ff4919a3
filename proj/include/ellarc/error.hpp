#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellarc {

enum class errc {
    rational_division_by_zero,
    malformed_rational,
    truncated_coefficient,   // asked for a coefficient beyond the truncation order
    zero_constant_term,
    division_by_zero_series,
    non_unit_constant,
    nonzero_inner_constant,
    zero_linear_term,
    not_centered,
    insufficient_order,
    insufficient_depth,
    not_normalizable,        // a zero partial numerator with a nonzero remainder
    index_out_of_range,
    not_in_ramanujan_shape,
    no_convergence,
    domain_error,
    out_of_range,
};

constexpr std::string_view to_string(errc code) noexcept
{
    switch (code) {
    case errc::rational_division_by_zero: return "RationalDivisionByZero";
    case errc::malformed_rational: return "MalformedRational";
    case errc::truncated_coefficient: return "TruncatedCoefficient";
    case errc::zero_constant_term: return "ZeroConstantTerm";
    case errc::division_by_zero_series: return "DivisionByZeroSeries";
    case errc::non_unit_constant: return "NonUnitConstant";
    case errc::nonzero_inner_constant: return "NonzeroInnerConstant";
    case errc::zero_linear_term: return "ZeroLinearTerm";
    case errc::not_centered: return "NotCentered";
    case errc::insufficient_order: return "InsufficientOrder";
    case errc::insufficient_depth: return "InsufficientDepth";
    case errc::not_normalizable: return "NotNormalizable";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_in_ramanujan_shape: return "NotInRamanujanShape";
    case errc::no_convergence: return "NoConvergence";
    case errc::domain_error: return "DomainError";
    case errc::out_of_range: return "OutOfRange";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace ellarc
