// Walks the exact derivation end to end and prints each stage.

#include <iostream>

#include "ellarc/ellarc.hpp"

int main()
{
    using namespace ellarc;

    const std::size_t order = default_working_order;
    const PowerSeries excess = h_series(order);
    const PowerSeries inverse = revert(excess);
    std::cout << "h(x)      = " << excess << '\n';
    std::cout << "x(h)      = " << inverse << '\n';

    const CFraction cf = cfrac_expand(inverse, 4);
    std::cout << "C-fraction:\n" << to_text(cf);

    const CFraction frozen = freeze_tail(cf, 2, Rational(3, 4));
    const ClosedFormExpr closed = collapse_to_closed_form(frozen);
    std::cout << "tail      B = " << solve_periodic_tail(Rational(3, 4)).to_string() << '\n';
    std::cout << "closed    " << closed.to_string() << '\n';
    std::cout << "true - closed = " << (inverse - closed.series(order)) << '\n';
    std::cout << "shared convergents: " << convergent_agreement_order(cf, frozen) << '\n';
}
