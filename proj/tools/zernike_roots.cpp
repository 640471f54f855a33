// zernike_roots: tabulate roots of Zernike radial polynomials and derived
// Gauss rules.
//
//   zernike_roots table [--nmax 20]
//   zernike_roots roots N M
//   zernike_roots quad M S
//
// Common flags: --format text|csv|json, --digits D, --precision P, --eps E.
// Exit codes: 0 success, 1 numerical failure, 2 usage error.

#include "zernike/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Roots of Zernike radial polynomials R_n^m by third-order Newton iteration"};
    app.require_subcommand(1);
    app.fallthrough();

    zernike::CommandOptions opts;
    std::string format = "text";
    std::string eps;
    app.add_option("--format", format, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--digits", opts.format.digits, "Significant digits of printed values (default 19)");
    app.add_option("--precision", opts.precision,
                   "Working precision in decimal digits: 15 = double (default), up to 100");
    app.add_option("--eps", eps, "Newton stopping threshold on successive iterates (default 1e-15, 1e-30 above 30 digits)");

    int nmax = 20;
    auto* table = app.add_subcommand("table", "All roots with n <= nmax, ordered m, n, root");
    table->add_option("--nmax", nmax, "Largest radial order n (default 20)");

    int n = 0, m = 0;
    auto* roots = app.add_subcommand("roots", "Roots of a single R_n^m with diagnostics");
    roots->add_option("n", n, "Radial order")->required();
    roots->add_option("m", m, "Azimuthal order")->required();

    int qm = 0, qs = 0;
    auto* quad = app.add_subcommand("quad", "Gauss rule for weight y^m on [0,1] with s points");
    quad->add_option("m", qm, "Moment exponent")->required();
    quad->add_option("s", qs, "Number of points (1..12)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(zernike::ExitCode::usage);
    }

    opts.format.kind = zernike::parse_format_kind(format);
    if (!eps.empty()) opts.eps = eps;

    if (*table) return zernike::cmd_table(nmax, opts, std::cout, std::cerr);
    if (*roots) return zernike::cmd_roots(n, m, opts, std::cout, std::cerr);
    return zernike::cmd_quad(qm, qs, opts, std::cout, std::cerr);
}
