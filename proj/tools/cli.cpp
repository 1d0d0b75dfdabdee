#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "buoyancy/analysis.hpp"
#include "buoyancy/reference_tables.hpp"

namespace buoyancy::cli {

namespace {

struct Options {
    std::string method = "scp";
    std::string profile = "linear";
    std::string h_coeffs;
    double epsilon = 0.0;
    double a2 = 0.0;
    int n = kTableTruncation;
    int fd_m = 400;
    std::string truncation = "calibrated";
    std::string inner = "weighted";
    std::string output;
    std::string out_path;
    std::vector<double> a2_range;
    int points = 50;
    bool compare = false;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;  // shown above the aligned view only
};

std::string full(double v) { return fmt::format("{:.17g}", v); }
std::string shortest(double v) { return fmt::format("{}", v); }

std::string render(const Table& table, bool csv) {
    std::string text;
    auto join_csv = [](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t j = 0; j < cells.size(); ++j) line += (j ? "," : "") + cells[j];
        return line + "\n";
    };
    if (csv) {
        text += join_csv(table.header);
        for (const auto& row : table.rows) text += join_csv(row);
        return text;
    }
    std::vector<std::size_t> width(table.header.size());
    for (std::size_t j = 0; j < width.size(); ++j) {
        width[j] = table.header[j].size();
        for (const auto& row : table.rows) width[j] = std::max(width[j], row[j].size());
    }
    for (const auto& note : table.notes) text += "# " + note + "\n";
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            out += (j ? "  " : "") + fmt::format("{:>{}}", cells[j], width[j]);
        }
        return out + "\n";
    };
    text += line(table.header);
    for (const auto& row : table.rows) text += line(row);
    return text;
}

void emit(const Options& opts, const std::string& text, std::ostream& out) {
    if (opts.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + opts.out_path + "'");
    file << text;
}

std::vector<double> parse_coeff_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (item.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(v)) {
            throw CLI::ValidationError("--h-coeffs", "not a finite number: '" + item + "'");
        }
        values.push_back(v);
    }
    if (values.empty()) throw CLI::ValidationError("--h-coeffs", "empty coefficient list");
    return values;
}

GravityProfile resolve_profile(const Options& opts) {
    if (!opts.h_coeffs.empty()) return custom_profile(parse_coeff_list(opts.h_coeffs), opts.epsilon);
    if (opts.profile == "custom") throw CLI::ValidationError("--profile", "custom profiles need --h-coeffs");
    return bundled_profile(parse_profile_family(opts.profile), opts.epsilon);
}

SolverConfig resolve_config(const Options& opts) {
    SolverConfig config;
    config.method = parse_method(opts.method);
    config.n = opts.n;
    config.fd_m = opts.fd_m;
    config.inner = opts.inner == "unweighted" ? ChebyshevInnerProduct::Unweighted : ChebyshevInnerProduct::Weighted;
    if (opts.truncation == "calibrated") {
        const auto& cal = frozen_calibration();
        config.truncation = config.method == Method::Legendre ? cal.legendre : cal.chebyshev;
    } else {
        config.truncation = parse_truncation(opts.truncation);
    }
    return config;
}

bool wants_csv(const Options& opts, bool csv_default) {
    return opts.output.empty() ? csv_default : opts.output == "csv";
}

int cmd_solve(const Options& opts, std::ostream& out) {
    const auto profile = resolve_profile(opts);
    const auto config = resolve_config(opts);
    const auto result = solve_neutral(config, profile, opts.a2);
    const int size = config.method == Method::FiniteDifference ? opts.fd_m : opts.n;
    Table table{{"method", "profile", "epsilon", "a2", "n", "R2", "residual"}, {}, {}};
    table.rows.push_back({std::string(to_string(config.method)), profile.name, shortest(opts.epsilon),
                          shortest(opts.a2), std::to_string(size), full(result.rayleigh_sq),
                          fmt::format("{:.3e}", result.residual)});
    emit(opts, render(table, wants_csv(opts, true)), out);
    return 0;
}

std::string published_style(double v, int decimals) { return fmt::format("{:.{}f}", v, decimals); }

int cmd_table(const Options& opts, std::ostream& out) {
    const auto family = parse_profile_family(opts.profile);
    const auto& cal = frozen_calibration();
    const auto rows = reproduce_table(family, opts.n, cal, Execution::Parallel);
    const auto& reference = reference_table(family);
    const bool csv = wants_csv(opts, false);

    Table table;
    table.header = {"epsilon", "a2", "R2_SCP", "R2_SLP"};
    if (opts.compare) {
        for (const char* col : {"published_SCP", "published_SLP", "dev_SCP_pct", "dev_SLP_pct"}) table.header.push_back(col);
    }
    if (csv) {
        table.header.push_back("scp_truncation");
        table.header.push_back("slp_truncation");
    }
    const auto scp_basis = chebyshev_basis(opts.n, cal.chebyshev);
    const auto slp_basis = legendre_basis(opts.n, cal.legendre);
    table.notes.push_back(fmt::format("h(z) = {}, n = {}", to_string(family), opts.n));
    table.notes.push_back(fmt::format("SCP truncation: {} (Phi*_0..Phi*_{}), SLP truncation: {} (phi_1..phi_{})",
                                      to_string(cal.chebyshev), scp_basis.count - 1, to_string(cal.legendre),
                                      slp_basis.count));

    for (std::size_t j = 0; j < rows.size(); ++j) {
        const auto& row = rows[j];
        const auto& ref = reference[j];
        std::vector<std::string> cells{shortest(row.epsilon), shortest(row.a2)};
        if (csv) {
            cells.push_back(full(row.r2_scp));
            cells.push_back(full(row.r2_slp));
        } else {
            cells.push_back(published_style(row.r2_scp, ref.scp_decimals));
            cells.push_back(published_style(row.r2_slp, ref.slp_decimals));
        }
        if (opts.compare) {
            const double dev_scp = 100.0 * (row.r2_scp - ref.r2_scp) / ref.r2_scp;
            const double dev_slp = 100.0 * (row.r2_slp - ref.r2_slp) / ref.r2_slp;
            cells.push_back(published_style(ref.r2_scp, ref.scp_decimals));
            cells.push_back(published_style(ref.r2_slp, ref.slp_decimals));
            cells.push_back(csv ? full(dev_scp) : fmt::format("{:+.3f}", dev_scp));
            cells.push_back(csv ? full(dev_slp) : fmt::format("{:+.3f}", dev_slp));
        }
        if (csv) {
            cells.push_back(std::string(to_string(cal.chebyshev)));
            cells.push_back(std::string(to_string(cal.legendre)));
        }
        table.rows.push_back(std::move(cells));
    }
    emit(opts, render(table, csv), out);
    return 0;
}

void check_range(const Options& opts) {
    if (opts.a2_range.size() != 2 || !(opts.a2_range[0] > 0.0 && opts.a2_range[0] < opts.a2_range[1])) {
        throw CLI::ValidationError("--a2-range", "needs two values with 0 < lo < hi");
    }
}

int cmd_curve(const Options& opts, std::ostream& out, std::ostream& err) {
    check_range(opts);
    const auto profile = resolve_profile(opts);
    const auto config = resolve_config(opts);
    const auto grid = uniform_grid(opts.a2_range[0], opts.a2_range[1], opts.points);
    const auto curve = neutral_curve(config, profile, grid, Execution::Parallel);
    Table table{{"a2", "R2"}, {}, {}};
    for (const auto& point : curve) {
        if (point.error) err << "warning: a2 = " << shortest(point.a2) << ": " << *point.error << "\n";
        table.rows.push_back({full(point.a2), full(point.r2)});
    }
    emit(opts, render(table, wants_csv(opts, true)), out);
    return 0;
}

int cmd_critical(const Options& opts, std::ostream& out) {
    check_range(opts);
    const auto profile = resolve_profile(opts);
    const auto config = resolve_config(opts);
    const auto crit = critical_point(config, profile, opts.a2_range[0], opts.a2_range[1]);
    Table table{{"a2_crit", "R2_crit"}, {{full(crit.a2_crit), full(crit.r2_crit)}}, {}};
    emit(opts, render(table, wants_csv(opts, true)), out);
    return 0;
}

void add_common(CLI::App* cmd, Options& opts) {
    cmd->add_option("--method", opts.method, "Discretization: scp, slp or fd")
        ->check(CLI::IsMember({"scp", "slp", "fd"}));
    cmd->add_option("--profile", opts.profile, "Gravity field h(z): linear, quadratic, mixed or custom")
        ->check(CLI::IsMember({"linear", "quadratic", "mixed", "custom"}));
    cmd->add_option("--h-coeffs", opts.h_coeffs, "Custom h(z) coefficients of z, z^2, ... (comma separated)");
    cmd->add_option("--epsilon", opts.epsilon, "Gravity scale epsilon >= 0")->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", opts.n, "Truncation level")->check(CLI::PositiveNumber);
    cmd->add_option("--fd-m", opts.fd_m, "Interior points of the finite-difference grid")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--truncation", opts.truncation, "calibrated, functions, inclusive or polynomials")
        ->check(CLI::IsMember({"calibrated", "functions", "inclusive", "polynomials"}));
    cmd->add_option("--inner", opts.inner, "Chebyshev projection: weighted or unweighted")
        ->check(CLI::IsMember({"weighted", "unweighted"}));
}

void add_output(CLI::App* cmd, Options& opts) {
    cmd->add_option("--output", opts.output, "csv or table")->check(CLI::IsMember({"csv", "table"}));
    cmd->add_option("--out", opts.out_path, "Write to this file instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Neutral Rayleigh numbers for convection under variable gravity"};
    app.name("buoyancy");
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "Neutral Rayleigh number for one parameter set");
    add_common(solve, opts);
    add_output(solve, opts);
    solve->add_option("--a2", opts.a2, "Squared wavenumber a^2")->required()->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("table", "Reproduce one of the reference tables");
    table->add_option("--profile", opts.profile, "linear, quadratic or mixed")
        ->check(CLI::IsMember({"linear", "quadratic", "mixed"}));
    table->add_option("--n", opts.n, "Truncation level")->check(CLI::Range(2, 64));
    table->add_flag("--compare", opts.compare, "Append the published values and percent deviations");
    add_output(table, opts);

    auto* curve = app.add_subcommand("curve", "Neutral curve R^2(a^2) on a uniform grid");
    add_common(curve, opts);
    add_output(curve, opts);
    curve->add_option("--a2-range", opts.a2_range, "lo hi")->expected(2)->required();
    curve->add_option("--points", opts.points, "Grid points")->check(CLI::PositiveNumber);

    auto* critical = app.add_subcommand("critical", "Minimum of the neutral curve");
    add_common(critical, opts);
    add_output(critical, opts);
    critical->add_option("--a2-range", opts.a2_range, "lo hi")->expected(2)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*solve) return cmd_solve(opts, out);
        if (*table) return cmd_table(opts, out);
        if (*curve) return cmd_curve(opts, out, err);
        return cmd_critical(opts, out);
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitSolverError;
    }
}

}  // namespace buoyancy::cli
