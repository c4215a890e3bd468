#include <functional>
#include <optional>
#include <random>

#include "polyeuler/choose.hpp"
#include "polyeuler/commands.hpp"
#include "polyeuler/fibonacci.hpp"
#include "polyeuler/map_spaces.hpp"
#include "polyeuler/partitions.hpp"
#include "polyeuler/power_gizmos.hpp"
#include "polyeuler/set_parser.hpp"

namespace polyeuler {

namespace {

using Counterexample = std::optional<std::string>;

struct Suite {
    std::vector<CheckResult> results;

    void check(const std::string& module, const std::string& invariant,
               const std::function<Counterexample()>& body) {
        CheckResult r{module, invariant, false, ""};
        try {
            const auto bad = body();
            r.passed = !bad.has_value();
            if (bad) r.detail = *bad;
        } catch (const std::exception& e) {
            r.detail = std::string("threw: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

Rational half(int n) {
    Rational r(n, 2);
    r.canonicalize();
    return r;
}

PolyhedralSet1D random_set(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(0, 4), coord(-8, 8), kind(0, 9);
    std::vector<Piece> pieces;
    for (int i = count(rng); i > 0; --i) {
        const int k = kind(rng);
        int a = coord(rng), b = coord(rng);
        if (k < 4) {
            pieces.push_back(Piece::point(half(a)));
            continue;
        }
        if (a == b) ++b;
        if (a > b) std::swap(a, b);
        const ExtendedRational lo = k == 8 ? ExtendedRational::neg_inf() : ExtendedRational(half(a));
        const ExtendedRational hi = k == 9 ? ExtendedRational::pos_inf() : ExtendedRational(half(b));
        pieces.push_back(Piece::open(lo, hi));
        if (k == 5 && lo.is_finite()) pieces.push_back(Piece::point(lo.value()));
    }
    return PolyhedralSet1D::canonicalize(pieces);
}

PolyhedralSet1D intervals(long p) {
    PolyhedralSet1D out;
    for (long i = 0; i < p; ++i) out = unite(out, PolyhedralSet1D::open(Rational(2 * i), Rational(2 * i + 1)));
    return out;
}

PolyhedralSet1D points(long n, long offset = 100) {
    PolyhedralSet1D out;
    for (long i = 0; i < n; ++i) out = unite(out, PolyhedralSet1D::point(Rational(offset + i)));
    return out;
}

// chi = n via n points, or |n| open intervals; `mixed` adds a cancelling point/interval pair.
PolyhedralSet1D with_measure(long chi, bool mixed = false) {
    auto out = chi >= 0 ? points(chi) : intervals(-chi);
    if (mixed) out = unite(out, PolyhedralSet1D::closed_open(Rational(50), Rational(51)));
    return out;
}

std::string show(const PolyhedralSet1D& a) { return a.to_string(); }

void interval_checks(Suite& s) {
    const std::string m = "interval_sets";
    std::mt19937_64 rng(2024);
    std::vector<PolyhedralSet1D> sets;
    for (int i = 0; i < 120; ++i) sets.push_back(random_set(rng));

    s.check(m, "valuation law on random pairs", [&]() -> Counterexample {
        for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
            const auto &a = sets[i], &b = sets[i + 1];
            if (euler_measure(unite(a, b)) != euler_measure(a) + euler_measure(b) - euler_measure(intersect(a, b)))
                return show(a) + " ; " + show(b);
        }
        return std::nullopt;
    });
    s.check(m, "inclusion-exclusion on random triples and quadruples", [&]() -> Counterexample {
        for (std::size_t i = 0; i + 3 < sets.size(); i += 4) {
            for (std::size_t n : {3u, 4u}) {
                PolyhedralSet1D all;
                std::int64_t alternating = 0;
                for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
                    PolyhedralSet1D meet = PolyhedralSet1D::real_line();
                    for (std::size_t j = 0; j < n; ++j)
                        if (mask >> j & 1) meet = intersect(meet, sets[i + j]);
                    alternating += (std::popcount(mask) % 2 ? 1 : -1) * euler_measure(meet);
                }
                for (std::size_t j = 0; j < n; ++j) all = unite(all, sets[i + j]);
                if (euler_measure(all) != alternating) return "sets starting at " + show(sets[i]);
            }
        }
        return std::nullopt;
    });
    s.check(m, "complement law", [&]() -> Counterexample {
        for (const auto& a : sets)
            if (euler_measure(a) + euler_measure(complement(a)) != -1) return show(a);
        return std::nullopt;
    });
    s.check(m, "canonical form is idempotent", [&]() -> Counterexample {
        for (const auto& a : sets) {
            const auto pieces = a.pieces();
            if (PolyhedralSet1D::canonicalize(std::vector<Piece>(pieces.begin(), pieces.end())) != a) return show(a);
            if (complement(complement(a)) != a) return show(a);
        }
        return std::nullopt;
    });
    s.check(m, "finite sets: measure is cardinality", [&]() -> Counterexample {
        for (const auto& a : sets) {
            const auto c = classify(a);
            if (c.finite && (!c.cardinality || static_cast<std::int64_t>(*c.cardinality) != euler_measure(a)))
                return show(a);
        }
        return std::nullopt;
    });
    s.check(m, "translation invariance", [&]() -> Counterexample {
        const Rational shift(7, 3);
        for (const auto& a : sets)
            if (euler_measure(translate(a, shift)) != euler_measure(a)) return show(a);
        return std::nullopt;
    });
}

void series_checks(Suite& s) {
    const std::string m = "exact_series";
    s.check(m, "recurrence round trip on random rational functions", [&]() -> Counterexample {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> coef(-6, 6), den_pick(1, 5), deg(0, 3);
        for (int trial = 0; trial < 100; ++trial) {
            const int dn = deg(rng), dd = 1 + deg(rng);
            std::vector<Rational> num(dn + 1), den(dd + 1);
            for (auto& c : num) c = Rational(coef(rng), den_pick(rng)), c.canonicalize();
            den[0] = 1;
            for (int i = 1; i <= dd; ++i) den[i] = Rational(coef(rng), den_pick(rng)), den[i].canonicalize();
            if (den[dd] == 0) den[dd] = 1;
            const RationalFunction rf{Polynomial(num), Polynomial(den)};
            const std::size_t max_order = static_cast<std::size_t>(dn + dd);
            const auto prefix = rf.expand(2 * max_order + 2);
            const auto rec = min_recurrence(prefix, max_order);
            if (!rec || to_rational_function(prefix, *rec) != rf) return rf.to_string();
        }
        return std::nullopt;
    });
    s.check(m, "binomial prefixes regularize to (1+lam)^m", [&]() -> Counterexample {
        for (std::int64_t mm = -4; mm <= 4; ++mm)
            for (int lam = -3; lam <= 3; ++lam) {
                if (lam == -1 && mm < 0) continue;
                const auto b = binomial_prefix(mm, lam, 24);
                const auto reg = regularize(b.prefix, 8);
                if (reg.closed_form != b.closed_form || reg.value != pow(Rational(1 + lam), mm))
                    return "m=" + std::to_string(mm) + " lam=" + std::to_string(lam);
            }
        return std::nullopt;
    });
}

void partition_checks(Suite& s) {
    const std::string m = "partition_combinatorics";
    s.check(m, "partition lattice identity sum mu x^blocks = (x)_k for k <= 6", [&]() -> Counterexample {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
        for (std::size_t k = 0; k <= 6; ++k) {
            const auto parts = partitions_of(k);
            for (int trial = 0; trial < 10; ++trial) {
                Rational x(num(rng), den(rng));
                x.canonicalize();
                Rational sum = 0;
                for (const auto& pi : parts)
                    sum += Rational(mobius_bottom(pi)) * pow(x, static_cast<std::int64_t>(pi.block_count()));
                if (sum != falling_factorial(x, k)) return "k=" + std::to_string(k) + " x=" + to_string(x);
            }
        }
        return std::nullopt;
    });
    s.check(m, "Boolean-lattice inversion of x^(2j+1) gives x(x^2-1)^k for k <= 8", [&]() -> Counterexample {
        for (long x = -3; x <= 4; ++x)
            for (std::size_t k = 0; k <= 8; ++k) {
                const Rational got = boolean_inversion(k, [&](std::size_t j) {
                    return pow(Rational(x), static_cast<std::int64_t>(2 * j + 1));
                });
                if (got != Rational(x) * pow(Rational(x * x - 1), static_cast<std::int64_t>(k)))
                    return "x=" + std::to_string(x) + " k=" + std::to_string(k);
            }
        return std::nullopt;
    });
    s.check(m, "Pascal rule for generalized binomials", [&]() -> Counterexample {
        for (long p = -12; p <= 12; ++p)
            for (std::size_t k = 1; k <= 8; ++k) {
                Rational x(p, 3);
                x.canonicalize();
                if (gen_binomial(x, k) != gen_binomial(x - 1, k) + gen_binomial(x - 1, k - 1))
                    return "x=" + to_string(x) + " k=" + std::to_string(k);
            }
        return std::nullopt;
    });
}

void choose_checks(Suite& s) {
    const std::string m = "choose_construction";
    s.check(m, "cell measure = C(chi,k) and distinct tuples = k! cells", [&]() -> Counterexample {
        for (long chi = -4; chi <= 4; ++chi)
            for (bool mixed : {false, true}) {
                const auto a = with_measure(chi, mixed);
                for (std::size_t k = 0; k <= 5; ++k) {
                    const Integer cells = choose_cells(a, k).measure();
                    if (Rational(cells) != gen_binomial(chi, k) ||
                        ordered_distinct_measure(a, k) != factorial(k) * cells)
                        return show(a) + " k=" + std::to_string(k);
                }
            }
        return std::nullopt;
    });
}

void gizmo_checks(Suite& s) {
    const std::string m = "power_gizmos";
    const std::vector<std::vector<std::size_t>> specs{{1}, {2}, {3}, {2, 2}};
    s.check(m, "oracle equivalence: inclusion-exclusion = brute force on finite ground sets", [&]() -> Counterexample {
        for (const auto& ks : specs)
            for (std::size_t k = 0; k <= 4; ++k)
                if (gizmo_support_count(GizmoSpec{ks}, k) !=
                    Integer(static_cast<unsigned long>(gizmo_brute_force(GizmoSpec{ks}, k))))
                    return "ks size " + std::to_string(ks.size()) + " k=" + std::to_string(k);
        return std::nullopt;
    });
    s.check(m, "support independence", [&]() -> Counterexample {
        for (const auto& ks : specs) {
            const auto census = gizmo_census(GizmoSpec{ks}, 4);
            for (std::uint32_t mask = 0; mask < census.size(); ++mask)
                if (Integer(static_cast<unsigned long>(census[mask])) !=
                    gizmo_support_count(GizmoSpec{ks}, static_cast<std::size_t>(std::popcount(mask))))
                    return "mask " + std::to_string(mask);
        }
        return std::nullopt;
    });
    s.check(m, "both routes equal the iterated binomial for chi in -3..3", [&]() -> Counterexample {
        for (long chi = -3; chi <= 3; ++chi)
            for (const auto& ks : std::vector<std::vector<std::size_t>>{{2}, {3}, {2, 2}, {2, 3}}) {
                const auto r = gizmo_measure(with_measure(chi), GizmoSpec{ks});
                const Rational expected = iterated_binomial(pow(Rational(2), chi), ks);
                if (r.fit_value != expected || r.series.value != expected) return "chi=" + std::to_string(chi);
            }
        return std::nullopt;
    });
    s.check(m, "power set series of chi regularizes to 2^chi", [&]() -> Counterexample {
        for (long chi = -4; chi <= 4; ++chi)
            if (powerset_series(with_measure(chi, true)).value != pow(Rational(2), chi)) return "chi=" + std::to_string(chi);
        return std::nullopt;
    });
}

void map_checks(Suite& s) {
    const std::string m = "map_spaces";
    s.check(m, "breakpoint counts: formula = brute force for b <= 4, k <= 3", [&]() -> Counterexample {
        for (std::uint64_t b = 1; b <= 4; ++b)
            for (std::size_t k = 0; k <= 3; ++k)
                if (finite_map_count(b, k, CountMode::formula) != finite_map_count(b, k, CountMode::brute))
                    return "b=" + std::to_string(b) + " k=" + std::to_string(k);
        return std::nullopt;
    });
    s.check(m, "hedral functoriality: value b^chi(A) for p <= 3, b <= 4", [&]() -> Counterexample {
        for (long p = 1; p <= 3; ++p)
            for (std::uint64_t b = 1; b <= 4; ++b)
                if (hedral_map_measure(intervals(p), b).series.value !=
                    pow(Rational(static_cast<unsigned long>(b)), -p))
                    return "p=" + std::to_string(p) + " b=" + std::to_string(b);
        return std::nullopt;
    });
    s.check(m, "distinct pairs: counts 2*15^k - 3^k and value -1/8", [&]() -> Counterexample {
        const auto r = map_pair_measure(2);
        for (std::size_t k = 0; k < r.counts.size(); ++k)
            if (r.counts[k] != 2 * pow(Integer(15), k) - pow(Integer(3), k)) return "k=" + std::to_string(k);
        if (r.series.value != Rational(-1, 8)) return "value " + to_string(r.series.value);
        return std::nullopt;
    });
    s.check(m, "Schanuel exponential: 1/chi(B), 0 at chi(B)=0", [&]() -> Counterexample {
        for (std::int64_t chi = -3; chi <= 3; ++chi) {
            const Rational expected = chi == 0 ? Rational(0) : Rational(1) / Rational(static_cast<long>(chi));
            if (schanuel_measure(chi).map.series.value != expected) return "chi_B=" + std::to_string(chi);
        }
        for (long n = 1; n <= 3; ++n) {
            PolyhedralSet1D b;
            for (long i = 0; i < n; ++i) b = unite(b, PolyhedralSet1D::closed(Rational(3 * i), Rational(3 * i + 1)));
            const auto r = schanuel_measure(b);
            if (r.affine_measure != n || r.map.series.value != Rational(1, static_cast<unsigned long>(n)))
                return show(b);
        }
        return std::nullopt;
    });
}

void fibonacci_checks(Suite& s) {
    const std::string m = "fibonacci_subsets";
    s.check(m, "Cassini identity for n in -8..8", [&]() -> Counterexample {
        for (long n = -8; n <= 8; ++n)
            if (extended_fibonacci(n + 1) * extended_fibonacci(n - 1) - extended_fibonacci(n) * extended_fibonacci(n) !=
                sign_power(n))
                return "n=" + std::to_string(n);
        return std::nullopt;
    });
    s.check(m, "measure = F(chi+1) for chi in -3..4, independent of structure", [&]() -> Counterexample {
        for (long chi = -3; chi <= 4; ++chi)
            for (bool mixed : {false, true}) {
                const auto p = with_measure(chi, mixed);
                if (fibonacci_measure(p).series.value != Rational(extended_fibonacci(chi + 1))) return show(p);
            }
        return std::nullopt;
    });
    s.check(m, "finite P: equals exhaustive valid-subset count for |P| <= 6", [&]() -> Counterexample {
        for (long n = 0; n <= 6; ++n) {
            long valid = 0;
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                // Every run of unselected points (between selections or at the ends) is even.
                bool ok = true;
                long run = 0;
                for (long i = 0; i <= n; ++i) {
                    if (i == n || (mask >> i & 1)) {
                        ok = ok && run % 2 == 0;
                        run = 0;
                    } else {
                        ++run;
                    }
                }
                valid += ok;
            }
            if (fibonacci_measure(points(n)).series.value != Rational(valid)) return "|P|=" + std::to_string(n);
        }
        return std::nullopt;
    });
}

void cli_checks(Suite& s) {
    const std::string m = "cli";
    s.check(m, "parser round trip on printed canonical sets", [&]() -> Counterexample {
        std::mt19937_64 rng(99);
        for (int i = 0; i < 200; ++i) {
            const auto a = random_set(rng);
            if (parse_set_expression(a.to_string()) != a) return show(a);
        }
        return std::nullopt;
    });
    s.check(m, "JSON reports round-trip exact rationals", [&]() -> Counterexample {
        Command c;
        c.verb = "gizmo";
        c.set = "(0,1)";
        c.ks = {2, 2};
        const auto report = run(c);
        const auto back = nlohmann::ordered_json::parse(report.dump());
        if (back != report) return "report changed";
        for (const auto& v : back["series"]["prefix"]) {
            const auto text = v.get<std::string>();
            if (to_string(parse_rational(text)) != text) return text;
        }
        if (parse_rational(back["series"]["value"]["value"].get<std::string>()) != Rational(9, 128))
            return "value " + back["series"]["value"]["value"].get<std::string>();
        return std::nullopt;
    });
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"interval_sets", interval_checks},       {"exact_series", series_checks},
        {"partition_combinatorics", partition_checks}, {"choose_construction", choose_checks},
        {"power_gizmos", gizmo_checks},           {"map_spaces", map_checks},
        {"fibonacci_subsets", fibonacci_checks},  {"cli", cli_checks},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& verify_scopes() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out{"all"};
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<CheckResult> verify_suite(const std::string& scope) {
    Suite s;
    bool found = false;
    for (const auto& [name, fn] : registry()) {
        if (scope != "all" && scope != name) continue;
        found = true;
        fn(s);
    }
    if (!found) {
        std::string known;
        for (const auto& n : verify_scopes()) known += (known.empty() ? "" : ", ") + n;
        throw InputError("unknown verify scope '" + scope + "' (expected one of " + known + ")");
    }
    return s.results;
}

}  // namespace polyeuler
