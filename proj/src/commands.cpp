#include "polyeuler/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "polyeuler/choose.hpp"
#include "polyeuler/fibonacci.hpp"
#include "polyeuler/map_spaces.hpp"
#include "polyeuler/partitions.hpp"
#include "polyeuler/power_gizmos.hpp"
#include "polyeuler/set_parser.hpp"

namespace polyeuler {

using json = nlohmann::ordered_json;

namespace {

json routed(const Rational& value, const std::string& route) {
    return {{"value", to_string(value)}, {"route", route}};
}

json routed(const Integer& value, const std::string& route) {
    return {{"value", to_string(value)}, {"route", route}};
}

json exact_list(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

json exact_list(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

json polynomial_json(const Polynomial& p) { return exact_list(p.coefficients()); }

json series_json(const EulerSeries& s, const std::string& route = "series regularization") {
    json out;
    out["grading"] = s.prefix.grading();
    out["prefix"] = exact_list(s.prefix.coefficients());
    if (s.recurrence) out["recurrence"] = {{"order", s.recurrence->order()}, {"taps", exact_list(s.recurrence->taps)}};
    out["closed_form"] = {{"numerator", polynomial_json(s.closed_form.numerator())},
                          {"denominator", polynomial_json(s.closed_form.denominator())},
                          {"text", s.closed_form.to_string()}};
    out["value"] = routed(s.value, route);
    return out;
}

json policy_json(const SeriesPolicy& p) { return {{"terms", p.terms}, {"max_order", p.max_order}}; }

SeriesPolicy policy_of(const Command& c, SeriesPolicy defaults = {}) {
    if (c.terms) defaults.terms = *c.terms;
    if (c.max_order) defaults.max_order = *c.max_order;
    return defaults;
}

void note_policy(json& out, const SeriesPolicy& requested, const SeriesPolicy& used) {
    out["policy"] = policy_json(used);
    if (requested.terms != used.terms || requested.max_order != used.max_order)
        out["warnings"].push_back("series policy changed from terms=" + std::to_string(requested.terms) +
                                  ", max_order=" + std::to_string(requested.max_order) + " to terms=" +
                                  std::to_string(used.terms) + ", max_order=" + std::to_string(used.max_order));
}

json set_json(const PolyhedralSet1D& a) {
    return {{"canonical", a.to_string()}, {"euler_measure", routed(Integer(static_cast<long>(euler_measure(a))), "piece count")}};
}

json classification_json(const Classification& c) {
    json comps = json::array();
    for (const auto& comp : c.components) {
        comps.push_back({{"lower", comp.lower.to_string()},
                         {"upper", comp.upper.to_string()},
                         {"lower_closed", comp.lower_closed},
                         {"upper_closed", comp.upper_closed}});
    }
    json out = {{"finite", c.finite}, {"compact", c.compact}, {"components", comps},
                {"has_isolated_points", c.has_isolated_points}};
    out["cardinality"] = c.cardinality ? json(*c.cardinality) : json(nullptr);
    return out;
}

PolyhedralSet1D parse_input(const Command& c) {
    if (c.set.empty()) throw InputError("missing set literal");
    return parse_set_expression(c.set);
}

json base_report(const Command& c) {
    json out;
    out["schema"] = report_schema;
    out["verb"] = c.verb;
    out["ok"] = true;
    if (!c.set.empty()) out["input"] = c.set;
    out["warnings"] = json::array();
    return out;
}

json run_measure(const Command& c) {
    const auto a = parse_input(c);
    json out = base_report(c);
    out["set"] = set_json(a);
    out["classification"] = classification_json(classify(a));
    return out;
}

json run_choose(const Command& c) {
    if (!c.k) throw InputError("choose needs --k");
    const auto a = parse_input(c);
    const std::size_t k = *c.k;
    json out = base_report(c);
    out["set"] = set_json(a);
    out["k"] = k;
    const auto cells = choose_cells(a, k);
    const Rational chi(static_cast<long>(euler_measure(a)));
    const Rational formula = gen_binomial(chi, k);
    out["measure"] = routed(cells.measure(), "cell enumeration");
    out["gen_binomial"] = routed(formula, "generalized binomial C(chi,k)");
    json checks = {{"cells_equal_gen_binomial", Rational(cells.measure()) == formula}};
    if (k <= default_partition_cap) {
        const Integer distinct = ordered_distinct_measure(a, k);
        out["ordered_distinct"] = routed(distinct, "partition lattice Mobius inversion");
        checks["distinct_equals_k_factorial_cells"] = distinct == factorial(k) * cells.measure();
    } else {
        out["warnings"].push_back("ordered_distinct skipped: k exceeds the partition cap");
    }
    out["checks"] = checks;
    if (c.cells) {
        json dims = json::object();
        for (const auto& [d, n] : cells.dimensions()) dims[std::to_string(d)] = n;
        out["cells"] = {{"dims", dims}, {"placements", cells.placements()}};
    }
    return out;
}

json run_powerset(const Command& c) {
    const auto a = parse_input(c);
    json out = base_report(c);
    out["set"] = set_json(a);
    const auto requested = policy_of(c);
    const auto s = powerset_series(a, requested);
    out["series"] = series_json(s);
    const std::int64_t chi = euler_measure(a);
    note_policy(out, requested, widen(requested, chi < 0 ? static_cast<std::size_t>(-chi) : static_cast<std::size_t>(chi) + 1));
    out["expected"] = routed(pow(Rational(2), euler_measure(a)), "2^chi");
    out["checks"] = {{"route_agreement", s.value == pow(Rational(2), euler_measure(a))}};
    return out;
}

json run_gizmo(const Command& c) {
    const auto a = parse_input(c);
    const GizmoSpec spec{c.ks};
    json out = base_report(c);
    out["set"] = set_json(a);
    out["ks"] = c.ks;
    const auto requested = policy_of(c);
    const auto r = gizmo_measure(a, spec, requested);
    out["series"] = series_json(r.series);
    out["fit"] = {{"bases", exact_list(r.fit.bases)},
                  {"weights", exact_list(r.fit.weights)},
                  {"polynomial", polynomial_json(r.fit.polynomial)},
                  {"value", routed(r.fit_value, "exponential fit")}};
    out["expected"] = routed(r.expected, "iterated binomial");
    note_policy(out, requested, r.policy_used);

    std::vector<Integer> counts;
    for (std::size_t k = 0; k <= 6; ++k) counts.push_back(gizmo_support_count(spec, k));
    out["support_counts"] = exact_list(counts);

    // Brute-force oracle on the smallest supports, as far as the cap allows.
    json oracle = json::array();
    bool oracle_ok = true;
    for (std::size_t k = 1; k <= 4; ++k) {
        try {
            const auto brute = gizmo_brute_force(spec, k, c.cap.value_or(default_brute_force_cap));
            const bool same = Integer(static_cast<unsigned long>(brute)) == counts[k];
            oracle_ok = oracle_ok && same;
            oracle.push_back({{"k", k}, {"brute_force", brute}, {"agree", same}});
        } catch (const ResourceError& e) {
            out["warnings"].push_back(std::string("oracle stopped at k=") + std::to_string(k) + ": " + e.what());
            break;
        }
    }
    out["oracle"] = oracle;
    out["checks"] = {{"route_agreement", r.fit_value == r.series.value && r.series.value == r.expected},
                     {"oracle_agreement", oracle_ok}};
    return out;
}

void require_single_interval(const PolyhedralSet1D& a, const std::string& what) {
    if (a.pieces().size() != 1 || a.interval_count() != 1)
        throw InputError(what + " needs the domain to be one open interval, got " + a.to_string());
}

json map_report_json(const MapSeriesReport& r) {
    return {{"counts", exact_list(r.counts)}, {"series", series_json(r.series)},
            {"expected", routed(r.expected, "functoriality")}};
}

json run_mapspace(const Command& c) {
    const int modes = (c.finite ? 1 : 0) + (c.b ? 1 : 0) + (c.chib ? 1 : 0);
    if (modes != 1) throw InputError("mapspace needs exactly one of --finite, --b, --chib");
    if (c.pairs && !c.finite) throw InputError("--pairs needs --finite");
    const auto a = parse_input(c);
    json out = base_report(c);
    out["set"] = set_json(a);
    const std::uint64_t cap = c.cap.value_or(default_map_cap);

    if (c.finite) {
        const std::uint64_t bsize = *c.finite;
        out["codomain_size"] = bsize;
        if (c.pairs) {
            require_single_interval(a, "--pairs");
            const auto requested = policy_of(c);
            const auto r = map_pair_measure(bsize, requested, cap);
            out["map"] = map_report_json(r);
            note_policy(out, requested, r.policy_used);
            out["map"]["counts_route"] = "brute force";
            out["checks"] = {{"matches_expected", r.series.value == r.expected}};
            return out;
        }
        const auto requested = policy_of(c);
        const auto r = hedral_map_measure(a, bsize, requested);
        out["map"] = map_report_json(r);
        note_policy(out, requested, r.policy_used);
        json oracle = json::array();
        bool ok = true;
        for (std::size_t k = 0; k <= 3; ++k) {
            try {
                const auto brute = finite_map_count(bsize, k, CountMode::brute, cap);
                const bool same = brute == finite_map_count(bsize, k, CountMode::formula);
                ok = ok && same;
                oracle.push_back({{"k", k}, {"brute_force", to_string(brute)}, {"agree", same}});
            } catch (const ResourceError& e) {
                out["warnings"].push_back(std::string("oracle stopped at k=") + std::to_string(k) + ": " + e.what());
                break;
            }
        }
        out["oracle"] = oracle;
        out["checks"] = {{"matches_expected", r.series.value == r.expected}, {"oracle_agreement", ok}};
        return out;
    }

    require_single_interval(a, "the Schanuel exponential");
    SchanuelReport r;
    if (c.b) {
        const auto b = parse_set_expression(*c.b);
        out["codomain"] = set_json(b);
        r = schanuel_measure(b, policy_of(c));
        out["affine_measure"] = routed(Integer(static_cast<long>(r.affine_measure)), "affine cell sketch");
    } else {
        r = schanuel_measure(*c.chib, policy_of(c));
        out["affine_measure"] = routed(Integer(static_cast<long>(r.affine_measure)), "symbolic chi(B)");
    }
    out["chi_b"] = r.chi_b;
    out["subset_counts"] = exact_list(r.subset_counts);
    out["map"] = map_report_json(r.map);
    out["map"]["counts_route"] = "Boolean inversion";
    note_policy(out, policy_of(c), r.map.policy_used);
    out["checks"] = {{"matches_expected", r.map.series.value == r.map.expected}};
    return out;
}

json run_fib(const Command& c) {
    const auto a = parse_input(c);
    json out = base_report(c);
    out["set"] = set_json(a);
    const auto requested = policy_of(c, {16, 7});
    const auto r = fibonacci_measure(a, requested);
    out["series"] = series_json(r.series);
    out["expected"] = routed(r.expected, "extended Fibonacci F(chi+1)");
    note_policy(out, requested, r.policy_used);
    out["checks"] = {{"matches_expected", r.series.value == Rational(r.expected)}};
    return out;
}

json run_verify(const Command& c) {
    json out = base_report(c);
    out["scope"] = c.scope;
    json checks = json::array();
    std::size_t failed = 0;
    for (const auto& r : verify_suite(c.scope)) {
        json item = {{"module", r.module}, {"invariant", r.invariant}, {"passed", r.passed}};
        if (!r.detail.empty()) item["detail"] = r.detail;
        checks.push_back(item);
        failed += !r.passed;
    }
    out["checks"] = checks;
    out["summary"] = {{"total", checks.size()}, {"failed", failed}};
    out["ok"] = failed == 0;
    return out;
}

void render(std::ostringstream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        const std::string key = j.is_object() ? it.key() : "-";
        if (v.is_object() && v.contains("value") && v.contains("route") && v.size() == 2) {
            os << pad << key << ": " << v["value"].get<std::string>() << "  [" << v["route"].get<std::string>() << "]\n";
        } else if (v.is_object()) {
            if (v.empty()) continue;
            os << pad << key << ":\n";
            render(os, v, indent + 1);
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
            if (v.empty()) continue;
            os << pad << key << ": ";
            for (std::size_t i = 0; i < v.size(); ++i)
                os << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            os << "\n";
        } else if (v.is_array()) {
            os << pad << key << ":\n";
            for (const auto& item : v) {
                os << pad << "  -";
                if (!item.is_object()) {
                    os << " " << item.dump() << "\n";
                    continue;
                }
                for (auto f = item.begin(); f != item.end(); ++f)
                    os << " " << f.key() << "=" << (f.value().is_string() ? f.value().get<std::string>() : f.value().dump());
                os << "\n";
            }
        } else {
            os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

}  // namespace

json run(const Command& c) {
    if (c.verb == "measure") return run_measure(c);
    if (c.verb == "choose") return run_choose(c);
    if (c.verb == "powerset") return run_powerset(c);
    if (c.verb == "gizmo") return run_gizmo(c);
    if (c.verb == "mapspace") return run_mapspace(c);
    if (c.verb == "fib") return run_fib(c);
    if (c.verb == "verify") return run_verify(c);
    throw InputError("unknown command '" + c.verb + "'");
}

json error_report(const Command& c, const Error& e) {
    json out;
    out["schema"] = report_schema;
    out["verb"] = c.verb;
    out["ok"] = false;
    if (!c.set.empty()) out["input"] = c.set;
    out["error"] = {{"class", to_string(e.kind())}, {"message", e.what()}};
    return out;
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::input: return 2;
        case ErrorKind::resource: return 3;
        case ErrorKind::regularization: return 4;
        case ErrorKind::internal: return 5;
    }
    return 5;
}

int exit_code(const json& report) {
    if (report.contains("error")) {
        const auto cls = report["error"]["class"].get<std::string>();
        for (auto k : {ErrorKind::input, ErrorKind::resource, ErrorKind::regularization, ErrorKind::internal})
            if (cls == to_string(k)) return exit_code(k);
        return 5;
    }
    return report.value("ok", true) ? 0 : 1;
}

std::string render_text(const json& report) {
    std::ostringstream os;
    if (report.contains("error")) {
        os << report["error"]["class"].get<std::string>() << " error: "
           << report["error"]["message"].get<std::string>() << "\n";
        return os.str();
    }
    if (report["verb"] == "verify") {
        for (const auto& c : report["checks"]) {
            os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["module"].get<std::string>() << ": "
               << c["invariant"].get<std::string>();
            if (c.contains("detail")) os << " (" << c["detail"].get<std::string>() << ")";
            os << "\n";
        }
        os << report["summary"]["total"].get<std::size_t>() - report["summary"]["failed"].get<std::size_t>()
           << "/" << report["summary"]["total"].get<std::size_t>() << " checks passed\n";
        return os.str();
    }
    json body = report;
    body.erase("schema");
    body.erase("ok");
    render(os, body, 0);
    return os.str();
}

std::optional<std::uint64_t> cap_from_environment() {
    const char* raw = std::getenv(cap_environment_variable);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    const std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos)
        throw InputError(std::string(cap_environment_variable) + " must be a positive integer, got '" + text + "'");
    try {
        const auto cap = std::stoull(text);
        if (cap == 0) throw InputError(std::string(cap_environment_variable) + " must be positive");
        return cap;
    } catch (const std::out_of_range&) {
        throw InputError(std::string(cap_environment_variable) + " is out of range");
    }
}

}  // namespace polyeuler
