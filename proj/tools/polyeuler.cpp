#include <iostream>

#include <CLI11.hpp>

#include "polyeuler/commands.hpp"

using namespace polyeuler;

namespace {

void add_series_flags(CLI::App* sub, Command& c) {
    sub->add_option("--terms", c.terms, "Series terms K (default 24; fib 16)")->check(CLI::PositiveNumber);
    sub->add_option("--max-order", c.max_order, "Largest recurrence order to fit (default 8; fib 7)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regularized Euler measures of polyhedral sets and derived spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Command c;
    bool as_json = false;
    app.add_flag("--json", as_json, "Print the report as one JSON object");

    auto* measure = app.add_subcommand("measure", "Euler measure and classification of a set");
    measure->add_option("set", c.set, "Set literal, e.g. \"(0,1) u {2}\"")->required();

    auto* choose = app.add_subcommand("choose", "Measure of the k-subsets of a set by cell enumeration");
    choose->add_option("set", c.set)->required();
    choose->add_option("--k", c.k, "Subset size")->required();
    choose->add_flag("--cells", c.cells, "List the cells");

    auto* powerset = app.add_subcommand("powerset", "Regularized measure of the finite subsets");
    powerset->add_option("set", c.set)->required();
    add_series_flags(powerset, c);

    auto* gizmo = app.add_subcommand("gizmo", "Iterated choose over the power set, by two routes");
    gizmo->add_option("set", c.set)->required();
    gizmo->add_option("--ks", c.ks, "Selection sizes, e.g. --ks 2 2")->delimiter(',');
    add_series_flags(gizmo, c);

    auto* mapspace = app.add_subcommand("mapspace", "Regularized measure of map spaces");
    mapspace->add_option("set", c.set, "Domain")->required();
    mapspace->add_option("--finite", c.finite, "Hedral maps into an N-point set")->check(CLI::PositiveNumber);
    mapspace->add_option("--b", c.b, "Polyhedral maps into a compact set B");
    mapspace->add_option("--chib", c.chib, "Polyhedral maps into a compact B of this Euler measure");
    mapspace->add_flag("--pairs", c.pairs, "Unordered pairs of distinct maps (with --finite)");
    add_series_flags(mapspace, c);

    auto* fib = app.add_subcommand("fib", "Subsets with even gaps, against the Fibonacci numbers");
    fib->add_option("set", c.set)->required();
    add_series_flags(fib, c);

    auto* verify = app.add_subcommand("verify", "Run the invariant checks");
    verify->add_option("--scope", c.scope, "all or a module name")->check(CLI::IsMember(verify_scopes()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code(ErrorKind::input);
    }
    c.verb = app.get_subcommands().front()->get_name();

    nlohmann::ordered_json report;
    try {
        c.cap = cap_from_environment();
        report = run(c);
    } catch (const Error& e) {
        report = error_report(c, e);
    } catch (const std::exception& e) {
        report = error_report(c, InternalError(e.what()));
    }
    if (as_json) std::cout << report.dump(2) << "\n";
    else (report.contains("error") ? std::cerr : std::cout) << render_text(report);
    return exit_code(report);
}
