#include <algorithm>
#include <functional>
#include <vector>

#include "doctest.h"
#include "polyeuler/errors.hpp"
#include "polyeuler/fibonacci.hpp"

using namespace polyeuler;

namespace {

PolyhedralSet1D open(long a, long b) { return PolyhedralSet1D::open(Rational(a), Rational(b)); }
PolyhedralSet1D point(long a) { return PolyhedralSet1D::point(Rational(a)); }

PolyhedralSet1D finite(std::size_t n) {
    std::vector<Rational> pts;
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(static_cast<long>(3 * i));
    return PolyhedralSet1D::points(pts);
}

// Several structurally different sets per Euler measure.
std::vector<PolyhedralSet1D> family(long chi) {
    std::vector<PolyhedralSet1D> out;
    // chi = points - intervals, over small mixes of both.
    for (long intervals = 0; intervals <= 3; ++intervals) {
        const long points = chi + intervals;
        if (points < 0 || points > 5) continue;
        PolyhedralSet1D alternating, grouped;
        for (long i = 0; i < intervals; ++i) grouped = unite(grouped, open(10 * i, 10 * i + 1));
        for (long i = 0; i < points; ++i) grouped = unite(grouped, point(100 + i));
        long x = 0;
        for (long i = 0; i < std::max(points, intervals); ++i) {
            if (i < points) alternating = unite(alternating, point(x++));
            if (i < intervals) alternating = unite(alternating, open(x, x + 1)), x += 2;
        }
        out.push_back(grouped);
        out.push_back(alternating);
    }
    // Adjacent open intervals sharing an endpoint that is not in P.
    if (chi == -2) out.push_back(unite(open(0, 1), open(1, 2)));
    // Unbounded pieces.
    if (chi == -1) out.push_back(PolyhedralSet1D::real_line());
    if (chi == 0) out.push_back(PolyhedralSet1D::closed_open(0, 1));
    if (chi == 1) out.push_back(PolyhedralSet1D::closed(0, 1));
    return out;
}

// Gap between selected points a < b (or infinite ends), measured on the concrete set.
std::int64_t gap(const PolyhedralSet1D& rest, const ExtendedRational& a, const ExtendedRational& b) {
    return euler_measure(restrict_open(rest, a, b));
}

// Realizes a placement with concrete coordinates and checks all pairs t < t'.
bool all_pairs_even(const PolyhedralSet1D& p, const PlacementDescriptor& d) {
    std::vector<Rational> chosen;
    const auto pieces = p.pieces();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& pc = pieces[i];
        if (pc.kind == Piece::Kind::point) {
            if (d.counts[i] == 1) chosen.push_back(pc.lo.value());
            continue;
        }
        // Pick c points strictly inside the interval.
        const std::size_t c = d.counts[i];
        const Rational width(static_cast<unsigned long>(c + 1));
        Rational lo, hi;
        if (pc.lo.is_finite() && pc.hi.is_finite()) lo = pc.lo.value(), hi = pc.hi.value();
        else if (pc.lo.is_finite()) lo = pc.lo.value(), hi = lo + width;
        else if (pc.hi.is_finite()) hi = pc.hi.value(), lo = hi - width;
        else lo = 0, hi = width;
        for (std::size_t j = 1; j <= c; ++j)
            chosen.push_back(lo + (hi - lo) * Rational(static_cast<unsigned long>(j), static_cast<unsigned long>(c + 1)));
    }
    const auto rest = difference(p, PolyhedralSet1D::points(chosen));
    std::vector<ExtendedRational> marks{ExtendedRational::neg_inf()};
    for (const auto& x : chosen) marks.emplace_back(x);
    marks.push_back(ExtendedRational::pos_inf());
    for (std::size_t i = 0; i < marks.size(); ++i)
        for (std::size_t j = i + 1; j < marks.size(); ++j)
            if (gap(rest, marks[i], marks[j]) % 2 != 0) return false;
    return true;
}

// Exhaustive count of valid subsets of a finite P.
long finite_oracle(std::size_t n) {
    long valid = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<long> marks{-1};
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) marks.push_back(static_cast<long>(i));
        marks.push_back(static_cast<long>(n));
        bool ok = true;
        // Unselected points strictly between each pair.
        for (std::size_t a = 0; a < marks.size() && ok; ++a)
            for (std::size_t b = a + 1; b < marks.size() && ok; ++b)
                if ((marks[b] - marks[a] - 1 - static_cast<long>(b - a - 1)) % 2 != 0) ok = false;
        valid += ok;
    }
    return valid;
}

}  // namespace

TEST_CASE("extended_fibonacci") {
    CHECK(extended_fibonacci(5) == 5);
    CHECK(extended_fibonacci(0) == 0);
    CHECK(extended_fibonacci(-2) == -1);
    CHECK(extended_fibonacci(-1) == 1);
    CHECK(extended_fibonacci(1) == 1);
    CHECK(extended_fibonacci(2) == 1);
    for (long n = -20; n <= 20; ++n)
        CHECK(extended_fibonacci(n + 1) == extended_fibonacci(n) + extended_fibonacci(n - 1));
    for (long n = -8; n <= 8; ++n)
        CHECK(extended_fibonacci(n + 1) * extended_fibonacci(n - 1) -
                  extended_fibonacci(n) * extended_fibonacci(n) ==
              sign_power(n));
}

TEST_CASE("parity_strata_coefficient") {
    for (std::size_t k = 0; k <= 6; ++k) CHECK(parity_strata_coefficient(open(0, 1), k) == 0);
    CHECK(parity_strata_coefficient(point(0), 0) == 0);
    CHECK(parity_strata_coefficient(point(0), 1) == 1);
    CHECK(parity_strata_coefficient(finite(2), 0) == 1);
    CHECK(parity_strata_coefficient(finite(2), 1) == 0);
    CHECK(parity_strata_coefficient(finite(2), 2) == 1);
    CHECK_THROWS_AS(parity_strata_coefficient(finite(2), 11), ResourceError);
    CHECK(parity_strata_coefficient(finite(2), 11, 11) == 0);
}

TEST_CASE("placement_gaps") {
    const auto p = unite(open(0, 1), point(5));
    CHECK(placement_gaps(p, {{0, 0}}) == std::vector<std::int64_t>{0});
    CHECK(placement_gaps(p, {{1, 0}}) == std::vector<std::int64_t>{-1, 0});
    CHECK(placement_gaps(p, {{2, 1}}) == std::vector<std::int64_t>{-1, -1, -1, 0});
    CHECK_THROWS_AS(placement_gaps(p, {{0, 2}}), InputError);
}

TEST_CASE("consecutive-gap evenness implies all-pair evenness") {
    for (long chi = -3; chi <= 4; ++chi)
        for (const auto& p : family(chi))
            for (std::size_t k = 0; k <= 4; ++k) {
                // Every placement: consecutive check agrees with the concrete all-pairs check.
                const auto kept = parity_placements(p, k);
                for (const auto& d : kept) CHECK(all_pairs_even(p, d));
                std::size_t concrete = 0;
                std::function<void(std::size_t, std::size_t, PlacementDescriptor&)> walk =
                    [&](std::size_t i, std::size_t left, PlacementDescriptor& d) {
                        if (i == d.counts.size()) {
                            if (left == 0) concrete += all_pairs_even(p, d);
                            return;
                        }
                        const bool pt = p.pieces()[i].kind == Piece::Kind::point;
                        for (std::size_t c = 0; c <= (pt ? std::min<std::size_t>(left, 1) : left); ++c) {
                            d.counts[i] = c;
                            walk(i + 1, left - c, d);
                        }
                        d.counts[i] = 0;
                    };
                PlacementDescriptor d{std::vector<std::size_t>(p.pieces().size(), 0)};
                walk(0, k, d);
                CHECK(concrete == kept.size());
            }
}

TEST_CASE("fibonacci_measure anchors") {
    CHECK(fibonacci_measure(point(0)).series.value == 1);
    CHECK(fibonacci_measure(open(0, 1)).series.value == 0);
    CHECK(fibonacci_measure(finite(2)).series.value == 2);
    CHECK(fibonacci_measure(PolyhedralSet1D::empty()).series.value == 1);
    auto r = fibonacci_measure(finite(2));
    CHECK(r.series.prefix.grading() == "rank");
    CHECK(r.series.closed_form.is_polynomial());
}

TEST_CASE("fibonacci_measure equals F(chi + 1)") {
    for (long chi = -3; chi <= 4; ++chi) {
        CAPTURE(chi);
        const auto sets = family(chi);
        REQUIRE(sets.size() >= 2);
        std::vector<Rational> values;
        for (const auto& p : sets) {
            CHECK(euler_measure(p) == chi);
            auto r = fibonacci_measure(p);
            CHECK(r.series.value == Rational(extended_fibonacci(chi + 1)));
            values.push_back(r.series.value);
        }
        CHECK(std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == values[0]; }));
    }
}

TEST_CASE("finite P: exhaustive subset oracle") {
    for (std::size_t n = 0; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(fibonacci_measure(finite(n)).series.value == finite_oracle(n));
    }
}

TEST_CASE("no kept placement has more points than pieces") {
    for (long chi = -3; chi <= 2; ++chi)
        for (const auto& p : family(chi)) {
            const std::size_t pieces = p.pieces().size();
            if (pieces > 6) continue;
            for (std::size_t k = pieces + 1; k <= pieces + 3; ++k)
                CHECK(parity_strata_coefficient(p, k, pieces + 3) == 0);
        }
}
