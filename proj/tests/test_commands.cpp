#include <cstdlib>
#include <string>

#include "doctest.h"
#include "polyeuler/commands.hpp"

using namespace polyeuler;
using json = nlohmann::ordered_json;

namespace {

Command make(std::string verb, std::string set = "") {
    Command c;
    c.verb = std::move(verb);
    c.set = std::move(set);
    return c;
}

json run_or_error(const Command& c) {
    try {
        return run(c);
    } catch (const Error& e) {
        return error_report(c, e);
    }
}

// Every object carrying "value" also names its route.
bool values_have_routes(const json& j) {
    if (j.is_object()) {
        if (j.contains("value") && j["value"].is_string() && !j.contains("route")) return false;
        for (const auto& [k, v] : j.items())
            if (!values_have_routes(v)) return false;
    } else if (j.is_array()) {
        for (const auto& v : j)
            if (!values_have_routes(v)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("measure") {
    const auto r = run(make("measure", "(0,1) u (2,3)"));
    CHECK(r["schema"] == 1);
    CHECK(r["set"]["euler_measure"]["value"] == "-2");
    CHECK(r["classification"]["components"].size() == 2);
    CHECK(exit_code(r) == 0);
}

TEST_CASE("gizmo reports both routes") {
    auto c = make("gizmo", "(0,1)");
    c.ks = {2};
    const auto r = run(c);
    CHECK(r["series"]["value"]["value"] == "-1/8");
    CHECK(r["fit"]["value"]["value"] == "-1/8");
    CHECK(r["expected"]["value"] == "-1/8");
    CHECK(r["checks"]["route_agreement"] == true);
    CHECK(r["checks"]["oracle_agreement"] == true);
    CHECK(r["support_counts"][3] == "13");
    CHECK(values_have_routes(r));
}

TEST_CASE("mapspace variants") {
    auto c = make("mapspace", "(0,1)");
    c.finite = 2;
    auto r = run(c);
    CHECK(r["map"]["series"]["value"]["value"] == "1/2");
    CHECK(r["checks"]["oracle_agreement"] == true);

    c.pairs = true;
    r = run(c);
    CHECK(r["map"]["series"]["value"]["value"] == "-1/8");
    CHECK(r["map"]["counts"][1] == "27");

    c = make("mapspace", "(0,1)");
    c.b = "[0,1] u [2,3]";
    r = run(c);
    CHECK(r["affine_measure"]["value"] == "2");
    CHECK(r["map"]["series"]["value"]["value"] == "1/2");

    c = make("mapspace", "(0,1)");
    c.chib = -2;
    CHECK(run(c)["map"]["series"]["value"]["value"] == "-1/2");

    c = make("mapspace", "(0,1)");
    const auto none = run_or_error(c);
    CHECK(none["error"]["class"] == "input");
    c.finite = 2;
    c.chib = 1;
    CHECK(run_or_error(c)["error"]["class"] == "input");

    c = make("mapspace", "(0,1) u (2,3)");
    c.finite = 2;
    CHECK(run(c)["map"]["series"]["value"]["value"] == "1/4");
    c.pairs = true;
    CHECK(run_or_error(c)["error"]["class"] == "input");
}

TEST_CASE("choose, powerset, fib") {
    auto c = make("choose", "(0,1) u (2,3)");
    c.k = 3;
    c.cells = true;
    auto r = run(c);
    CHECK(r["measure"]["value"] == "-4");
    CHECK(r["gen_binomial"]["value"] == "-4");
    CHECK(r["cells"]["dims"]["3"] == 4);

    r = run(make("powerset", "(0,1)"));
    CHECK(r["series"]["value"]["value"] == "1/2");
    CHECK(r["series"]["closed_form"]["denominator"] == json::array({"1", "1"}));

    r = run(make("fib", "{0, 1}"));
    CHECK(r["series"]["value"]["value"] == "2");
    CHECK(r["expected"]["value"] == "2");
    CHECK(r["warnings"].empty());
}

TEST_CASE("error classes and exit codes") {
    auto r = run_or_error(make("measure", "(1,0)"));
    CHECK(r["error"]["class"] == "input");
    CHECK(exit_code(r) == 2);

    auto c = make("choose", "(0,1)");
    c.k = 13;
    r = run_or_error(c);
    CHECK(r["error"]["class"] == "resource");
    CHECK(exit_code(r) == 3);

    c = make("mapspace", "(0,1)");
    c.finite = 5;
    c.pairs = true;
    r = run_or_error(c);
    CHECK(r["error"]["class"] == "regularization-failure");
    CHECK(exit_code(r) == 4);

    CHECK(exit_code(ErrorKind::internal) == 5);
    CHECK(run_or_error(make("frobnicate"))["error"]["class"] == "input");
    CHECK(run_or_error(make("measure"))["error"]["class"] == "input");
}

TEST_CASE("enumeration cap override") {
    ::unsetenv(cap_environment_variable);
    CHECK_FALSE(cap_from_environment().has_value());
    ::setenv(cap_environment_variable, "100", 1);
    CHECK(cap_from_environment() == 100u);
    auto c = make("gizmo", "(0,1)");
    c.ks = {2};
    c.cap = cap_from_environment();
    const auto r = run(c);
    CHECK(r["warnings"].size() == 1);
    CHECK(r["oracle"].size() < 4);
    ::setenv(cap_environment_variable, "12x", 1);
    CHECK_THROWS_AS(cap_from_environment(), InputError);
    ::unsetenv(cap_environment_variable);
}

TEST_CASE("JSON round trip keeps exact values") {
    for (const std::string& set : {"(0,1)", "{1/3, 7/2} u (-inf,-5/3)", "[0,1) u (2,3)"}) {
        auto c = make("gizmo", set);
        c.ks = {2, 2};
        const auto r = run(c);
        const auto back = json::parse(r.dump());
        CHECK(back == r);
        for (const auto& v : back["series"]["prefix"]) {
            const auto text = v.get<std::string>();
            CHECK(to_string(parse_rational(text)) == text);
        }
        for (const auto& w : back["fit"]["weights"]) CHECK(to_string(parse_rational(w.get<std::string>())) == w);
    }
}

TEST_CASE("verify") {
    auto c = make("verify");
    c.scope = "partition_combinatorics";
    const auto r = run(c);
    CHECK(r["ok"] == true);
    CHECK(r["checks"].size() >= 2);
    CHECK(r["checks"][0]["passed"] == true);
    CHECK(render_text(r).find("PASS partition_combinatorics") != std::string::npos);

    c.scope = "power_gizmos";
    CHECK(run(c)["ok"] == true);
    c.scope = "bogus";
    CHECK(run_or_error(c)["error"]["class"] == "input");

    const auto all = verify_suite("all");
    CHECK(all.size() >= 20);
    for (const auto& check : all) {
        CAPTURE(check.invariant);
        CHECK(check.passed);
    }
}

TEST_CASE("text rendering") {
    auto c = make("gizmo", "(0,1)");
    c.ks = {2};
    const auto text = render_text(run(c));
    CHECK(text.find("value: -1/8  [exponential fit]") != std::string::npos);
    CHECK(render_text(error_report(c, ResourceError("too big"))) == "resource error: too big\n");
}
