// Command-line front end: enumerate, ehrhart, verify, plotdata, normal-form.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "ratpoly/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace ratpoly::cli;

    CLI::App app{"Rational polygons of fixed denominator: enumeration and Ehrhart data"};
    app.require_subcommand(1);
    unsigned threads = 0;
    app.add_option("--threads", threads, "Worker threads (default: all cores)")->check(CLI::NonNegativeNumber);

    EnumerateOptions en;
    auto* enumerate = app.add_subcommand("enumerate", "Finitely growable polygons of denominator r and size k");
    enumerate->add_option("-r", en.r, "Denominator");
    enumerate->add_option("-k", en.k, "Size (number of lattice points)");
    enumerate->add_flag("--zero-interior", en.zero_interior, "Denominator-2 polygons without interior lattice points");
    enumerate->add_option("--out", en.out, "Output JSON Lines file (default: stdout)");
    enumerate->add_option("--threads", threads, "Worker threads (default: all cores)");

    EhrhartOptions eh;
    auto* ehrhart = app.add_subcommand("ehrhart", "Point-count tuples and Ehrhart quasi-polynomials");
    ehrhart->add_option("--in", eh.in, "Input JSON Lines file (default: stdin)");
    ehrhart->add_option("--tuples", eh.tuples, "CSV output: key,b1,i1,b2,i2");
    ehrhart->add_option("--quasi", eh.quasi, "CSV output: key,i,a2,a1,a0");
    ehrhart->add_option("--threads", threads, "Ignored; accepted for uniformity");

    VerifyOptions ve;
    auto* verify = app.add_subcommand("verify", "Check a denominator-2 dataset against the tuple conditions and bounds");
    verify->add_option("--in", ve.in, "Input JSON Lines file (default: stdin)");
    verify->add_option("--report", ve.report, "JSON report (default: stdout)");
    verify->add_flag("--zero-interior", ve.zero_interior, "Also require i(P) = 0 for every member");
    verify->add_option("--threads", threads, "Worker threads (default: all cores)");

    PlotdataOptions pl;
    auto* plotdata = app.add_subcommand("plotdata", "Distinct (b(2P), i(2P)) rows for fixed b(P), i(P)");
    plotdata->add_option("--in", pl.in, "Input JSON Lines file (default: stdin)");
    plotdata->add_option("--b1", pl.b1, "Boundary points of P")->required();
    plotdata->add_option("--i1", pl.i1, "Interior points of P")->required();
    plotdata->add_option("--out", pl.out, "Output .dat file (default: stdout)");

    NormalFormOptions nf;
    auto* normal = app.add_subcommand("normal-form", "Canonical key of each record");
    normal->add_option("--in", nf.in, "Input JSON Lines file (default: stdin)");
    normal->add_option("--out", nf.out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : int(bad_input);
    }

    try {
        if (*enumerate) {
            en.threads = threads;
            return cmd_enumerate(en);
        }
        if (*ehrhart) return cmd_ehrhart(eh);
        if (*verify) {
            ve.threads = threads;
            return cmd_verify(ve);
        }
        if (*plotdata) return cmd_plotdata(pl);
        if (*normal) return cmd_normal_form(nf);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}
