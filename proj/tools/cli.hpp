#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process.
//
// Exit codes: 0 success, 1 usage error, 2 verification or domain failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ellarc/ellarc.hpp"

namespace ellarc::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_failure = 2;

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Writes next to the target and renames over it.
inline void write_atomically(const std::string &path, const std::string &content)
{
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        f << content;
        if (!f.flush()) {
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::filesystem::rename(tmp, target);
}

inline std::string join(const std::vector<std::string> &items)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i == 0 ? "" : ", ") + items[i];
    }
    return out;
}

struct VerifyOptions {
    std::size_t order = default_working_order;
    std::string format = "text";
};

// Returns the exit status; the table goes to `out`, mismatches to `err`.
inline int verify_series(const VerifyOptions &opt, std::string &out, std::ostream &err)
{
    if (opt.order < 8) {
        throw UsageError("--order must be at least 8");
    }
    const DerivationReport r = full_report(opt.order);
    const auto checks = check_goldens(r);

    std::vector<std::string> status(opt.order + 1, "derived");
    for (const auto &c : checks) {
        if (c.golden.series == "cfrac" || c.golden.power > opt.order) {
            continue;
        }
        const bool h_indexed = c.golden.series == "true_series" || c.golden.series == "approx_series" ||
                               c.golden.series == "difference";
        auto &s = status[c.golden.power];
        if (!c.matches()) {
            s = "mismatch";
        } else if (h_indexed && s != "mismatch") {
            s = "reference";
        }
    }

    std::ostringstream os;
    const bool tsv = opt.format == "tsv";
    if (tsv) {
        os << "power\th_series\ttrue_series\tapprox_series\tdifference\tsource\n";
        for (std::size_t k = 0; k <= opt.order; ++k) {
            os << k << '\t' << r.h_series[k] << '\t' << r.true_series[k] << '\t' << r.approx_series[k] << '\t'
               << r.difference[k] << '\t' << status[k] << '\n';
        }
    } else {
        os << "# working order " << opt.order << "; h_series is in x = lambda^2, the other columns in h\n";
        os << std::left << std::setw(6) << "power" << std::setw(22) << "h_series" << std::setw(18) << "true_series"
           << std::setw(18) << "approx_series" << std::setw(18) << "difference" << "source\n";
        for (std::size_t k = 0; k <= opt.order; ++k) {
            os << std::setw(6) << k << std::setw(22) << r.h_series[k].to_string() << std::setw(18)
               << r.true_series[k].to_string() << std::setw(18) << r.approx_series[k].to_string() << std::setw(18)
               << r.difference[k].to_string() << status[k] << '\n';
        }
        os << "cfrac_true: " << join(r.cfrac_true.coeff_strings()) << '\n';
    }

    std::size_t mismatches = 0;
    for (const auto &c : checks) {
        if (c.golden.series != "cfrac" && c.computed && !c.matches()) {
            ++mismatches;
            err << "mismatch: " << c.golden.series << " power " << c.golden.power << ": published " << c.golden.value
                << ", computed " << *c.computed << '\n';
        }
    }
    if (!tsv) {
        os << "goldens: " << mismatches << " mismatched\n";
    }
    out = os.str();
    return mismatches == 0 ? exit_ok : exit_failure;
}

struct CfracOptions {
    std::size_t depth = 4;
    std::string freeze;
    std::size_t freeze_from = 2;
};

inline int cfrac(const CfracOptions &opt, std::string &out, std::ostream &err)
{
    if (opt.depth < 1) {
        throw UsageError("--depth must be at least 1");
    }
    std::optional<Rational> freeze;
    if (!opt.freeze.empty()) {
        try {
            freeze = Rational::parse(opt.freeze);
        } catch (const error &e) {
            throw UsageError(std::string("--freeze: ") + e.what());
        }
        if (opt.freeze_from < 1 || opt.freeze_from > opt.depth) {
            throw UsageError("--freeze-from must lie in 1..depth");
        }
    }
    const std::size_t order = std::max(default_working_order, opt.depth + 2);
    const CFraction cf = cfrac_expand(true_inverse_series(order), opt.depth);

    std::ostringstream os;
    os << "leading: " << cf.leading << '\n' << "head: " << cf.head << '\n';
    os << "partial_coeffs: " << join(cf.coeff_strings()) << '\n';
    if (cf.terminated) {
        os << "terminated: true\n";
    }
    for (std::size_t k = 1; k <= cf.depth(); ++k) {
        const auto published = published_value("cfrac", k);
        if (published && *published != cf.coefficient(k)) {
            err << "note: a" << k << " computed " << cf.coefficient(k) << ", published " << *published << '\n';
        }
    }
    if (freeze) {
        const CFraction frozen = freeze_tail(cf, opt.freeze_from, *freeze);
        os << "frozen_from: " << opt.freeze_from << '\n' << "frozen_value: " << *freeze << '\n';
        os << "frozen_coeffs: " << join(frozen.coeff_strings()) << ", ...\n";
        os << "tail: B = " << solve_periodic_tail(*freeze).to_string() << '\n';
        try {
            const std::string form = collapse_to_closed_form(frozen).to_string();
            os << "closed_form: " << form << '\n';
        } catch (const error &e) {
            if (e.code() != errc::not_in_ramanujan_shape) {
                throw;
            }
            err << "no closed form: " << e.what() << '\n';
        }
        os << "agreeing_convergents: " << convergent_agreement_order(cf, frozen) << '\n';
    }
    out = os.str();
    return exit_ok;
}

struct TableOptions {
    double lambda_min = 0;
    double lambda_max = 0.2;
    std::size_t steps = 20;
    PrecisionConfig cfg;
};

inline int error_table(const TableOptions &opt, std::string &out, std::ostream &err)
{
    if (!(opt.lambda_min >= 0 && opt.lambda_min < opt.lambda_max && opt.lambda_max < 1)) {
        throw UsageError("need 0 <= --lambda-min < --lambda-max < 1");
    }
    if (opt.steps < 1) {
        throw UsageError("--steps must be at least 1");
    }
    const auto rows = error_sweep(uniform_grid(opt.lambda_min, opt.lambda_max, opt.steps), opt.cfg);
    out = sweep_tsv(rows);

    int status = exit_ok;
    for (const auto &r : asymptotic_violations(rows)) {
        err << std::setprecision(17) << "asymptotic law violated at lambda " << r.lambda << ": normalized "
            << r.normalized << '\n';
        status = exit_failure;
    }
    for (const auto &r : overestimate_violations(rows)) {
        err << std::setprecision(17) << "approximation underestimates at lambda " << r.lambda << ": diff " << r.diff
            << '\n';
        status = exit_failure;
    }
    return status;
}

struct InvertOptions {
    double perimeter = 0;
    double sum = 0;
};

inline int invert(const InvertOptions &opt, std::string &out, std::ostream &err)
{
    Inversion inv;
    try {
        inv = invert_from_measurements(opt.perimeter, opt.sum);
    } catch (const error &e) {
        err << e.what() << '\n';
        return exit_failure;
    }
    std::ostringstream os;
    os << std::setprecision(17);
    os << "a: " << inv.ellipse.a << '\n'
       << "b: " << inv.ellipse.b << '\n'
       << "lambda: " << inv.lambda << '\n'
       << "lambda_sq: " << inv.lambda_sq << '\n'
       << "h: " << inv.h << '\n';
    out = os.str();
    return exit_ok;
}

} // namespace detail

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact derivation and numerical checks of the inverse elliptic-arc approximation"};
    app.name("ellarc");
    app.require_subcommand(1);

    std::string out_path;
    detail::VerifyOptions verify_opt;
    detail::CfracOptions cfrac_opt;
    detail::TableOptions table_opt;
    detail::InvertOptions invert_opt;
    std::size_t max_iter = 0;

    auto *verify = app.add_subcommand("verify-series", "Exact coefficient tables checked against published values");
    verify->add_option("--order", verify_opt.order, "Working truncation order (>= 8)");
    verify->add_option("--format", verify_opt.format, "Output format")->check(CLI::IsMember({"text", "tsv"}));
    verify->add_option("--out", out_path, "Write output to this file instead of stdout");

    auto *cfrac = app.add_subcommand("cfrac", "C-fraction coefficients of the inverse series");
    cfrac->add_option("--depth", cfrac_opt.depth, "Number of partial coefficients (>= 1)");
    cfrac->add_option("--freeze", cfrac_opt.freeze, "Freeze the tail at this rational value, e.g. 3/4");
    cfrac->add_option("--freeze-from", cfrac_opt.freeze_from, "First frozen partial coefficient (1-based)");
    cfrac->add_option("--out", out_path, "Write output to this file instead of stdout");

    auto *table = app.add_subcommand("error-table", "TSV error sweep over a uniform lambda grid");
    table->add_option("--lambda-min", table_opt.lambda_min, "Smallest lambda");
    table->add_option("--lambda-max", table_opt.lambda_max, "Largest lambda");
    table->add_option("--steps", table_opt.steps, "Number of grid intervals");
    table->add_option("--abs-tol", table_opt.cfg.abs_tol, "AGM stopping tolerance");
    auto *max_iter_opt = table->add_option("--max-iter", max_iter, "AGM iteration cap");
    table->add_option("--out", out_path, "Write output to this file instead of stdout");

    auto *inv = app.add_subcommand("invert", "Recover semiaxes from perimeter and axis sum");
    inv->add_option("--perimeter", invert_opt.perimeter, "Measured perimeter L")->required();
    inv->add_option("--sum", invert_opt.sum, "Axis sum a + b")->required();
    inv->add_option("--out", out_path, "Write output to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return exit_usage;
    }

    std::string text;
    int status = exit_ok;
    try {
        if (*verify) {
            status = detail::verify_series(verify_opt, text, err);
        } else if (*cfrac) {
            status = detail::cfrac(cfrac_opt, text, err);
        } else if (*table) {
            if (*max_iter_opt) {
                table_opt.cfg.max_iter = max_iter;
            }
            try {
                table_opt.cfg.validate();
            } catch (const error &e) {
                throw detail::UsageError(e.what());
            }
            status = detail::error_table(table_opt, text, err);
        } else {
            status = detail::invert(invert_opt, text, err);
        }
    } catch (const detail::UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const error &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }

    if (out_path.empty()) {
        out << text;
    } else {
        detail::write_atomically(out_path, text);
    }
    return status;
}

} // namespace ellarc::cli
