#include <random>
#include <vector>

#include "doctest.h"
#include "polyeuler/errors.hpp"
#include "polyeuler/interval_sets.hpp"

using namespace polyeuler;

namespace {

Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

const ExtendedRational ninf = ExtendedRational::neg_inf();
const ExtendedRational pinf = ExtendedRational::pos_inf();

PolyhedralSet1D open(long a, long b) { return PolyhedralSet1D::open(q(a), q(b)); }

// Random set on the half-integer grid in [-4, 4], with occasional unbounded pieces.
PolyhedralSet1D random_set(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<int> coord(-8, 8);
    std::uniform_int_distribution<int> kind(0, 9);
    std::vector<Piece> pieces;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        const int k = kind(rng);
        int a = coord(rng);
        int b = coord(rng);
        if (k < 4) {
            pieces.push_back(Piece::point(q(a, 2)));
            continue;
        }
        if (a == b) b = a + 1;
        if (a > b) std::swap(a, b);
        ExtendedRational lo = k == 8 ? ninf : ExtendedRational(q(a, 2));
        ExtendedRational hi = k == 9 ? pinf : ExtendedRational(q(b, 2));
        pieces.push_back(Piece::open(lo, hi));
        if (k == 5 && lo.is_finite()) pieces.push_back(Piece::point(lo.value()));
        if (k == 6 && hi.is_finite()) pieces.push_back(Piece::point(hi.value()));
    }
    return PolyhedralSet1D::canonicalize(pieces);
}

}  // namespace

TEST_CASE("canonicalize") {
    SUBCASE("disjoint pieces stay separate") {
        std::vector<Piece> in{Piece::point(5), Piece::open(0, 1), Piece::open(1, 2)};
        auto s = PolyhedralSet1D::canonicalize(in);
        std::vector<Piece> expected{Piece::open(0, 1), Piece::open(1, 2), Piece::point(5)};
        CHECK(s.pieces() == expected);
    }
    SUBCASE("closed literal decomposes") {
        auto s = PolyhedralSet1D::closed(0, 1);
        std::vector<Piece> expected{Piece::point(0), Piece::open(0, 1), Piece::point(1)};
        CHECK(s.pieces() == expected);
    }
    SUBCASE("overlapping open intervals merge") {
        std::vector<Piece> in{Piece::open(0, 2), Piece::open(1, 3)};
        CHECK(PolyhedralSet1D::canonicalize(in) == open(0, 3));
    }
    SUBCASE("interior point is absorbed") {
        std::vector<Piece> in{Piece::open(0, 1), Piece::point(1), Piece::open(1, 2)};
        CHECK(PolyhedralSet1D::canonicalize(in) == open(0, 2));
    }
    SUBCASE("malformed interval") {
        CHECK_THROWS_AS(Piece::open(1, 1), InputError);
        CHECK_THROWS_AS(Piece::open(2, 1), InputError);
        CHECK_THROWS_AS(PolyhedralSet1D::closed(3, 3), InputError);
        std::vector<Piece> bad{Piece{Piece::Kind::open_interval, 2, 1}};
        CHECK_THROWS_AS(PolyhedralSet1D::canonicalize(bad), InputError);
    }
}

TEST_CASE("combine and complement") {
    auto u = unite(open(0, 2), open(1, 3));
    CHECK(u == open(0, 3));
    CHECK(euler_measure(u) == euler_measure(open(0, 2)) + euler_measure(open(1, 3)) -
                                  euler_measure(intersect(open(0, 2), open(1, 3))));

    auto c = complement(open(0, 1));
    std::vector<Piece> expected{Piece::open(ninf, 0), Piece::point(0), Piece::point(1),
                                Piece::open(1, pinf)};
    CHECK(c.pieces() == expected);
    CHECK(euler_measure(c) == 0);

    auto i = intersect(unite(open(0, 1), open(2, 3)), PolyhedralSet1D::open(q(1, 2), q(5, 2)));
    std::vector<Piece> expected_i{Piece::open(q(1, 2), 1), Piece::open(2, q(5, 2))};
    CHECK(i.pieces() == expected_i);

    CHECK(complement(PolyhedralSet1D::real_line()).is_empty());
    CHECK(complement(PolyhedralSet1D::empty()) == PolyhedralSet1D::real_line());
    CHECK(difference(PolyhedralSet1D::closed(0, 1), open(0, 1)) ==
          PolyhedralSet1D::points(std::vector<Rational>{0, 1}));
}

TEST_CASE("euler_measure anchors") {
    CHECK(euler_measure(open(0, 1)) == -1);
    CHECK(euler_measure(PolyhedralSet1D::points(std::vector<Rational>{0, 1})) == 2);
    CHECK(euler_measure(unite(open(0, 1), open(2, 3))) == -2);
    CHECK(euler_measure(PolyhedralSet1D::closed(0, 1)) == 1);
    CHECK(euler_measure(PolyhedralSet1D::real_line()) == -1);
    CHECK(euler_measure(PolyhedralSet1D::closed_open(0, 1)) == 0);
}

TEST_CASE("classify") {
    auto finite = PolyhedralSet1D::points(std::vector<Rational>{1, 2, 3});
    auto c = classify(finite);
    CHECK(c.finite);
    REQUIRE(c.cardinality.has_value());
    CHECK(*c.cardinality == 3);
    CHECK(c.compact);
    CHECK(c.has_isolated_points);

    auto two = unite(PolyhedralSet1D::closed(0, 1), PolyhedralSet1D::closed(2, 3));
    c = classify(two);
    CHECK_FALSE(c.finite);
    CHECK(c.compact);
    CHECK(c.components.size() == 2);
    CHECK_FALSE(c.has_isolated_points);

    auto mixed = unite(open(0, 1), PolyhedralSet1D::point(5));
    c = classify(mixed);
    CHECK_FALSE(c.compact);
    CHECK(c.has_isolated_points);
    CHECK(c.components.size() == 2);

    c = classify(PolyhedralSet1D::closed_open(0, 1));
    CHECK(c.components.size() == 1);
    CHECK_FALSE(c.compact);
    CHECK_FALSE(classify(PolyhedralSet1D::real_line()).compact);
}

TEST_CASE("restrict_open") {
    CHECK(restrict_open(PolyhedralSet1D::closed(0, 1), 0, 1) == open(0, 1));
    auto s = PolyhedralSet1D::closed_open(0, 1);
    CHECK(restrict_open(s, ninf, q(1, 2)) == PolyhedralSet1D::closed_open(0, q(1, 2)));
    auto two = unite(open(0, 1), open(2, 3));
    CHECK(restrict_open(two, q(1, 2), q(5, 2)) ==
          unite(PolyhedralSet1D::open(q(1, 2), 1), PolyhedralSet1D::open(2, q(5, 2))));
    CHECK_THROWS_AS(restrict_open(two, 1, 1), InputError);
    CHECK_THROWS_AS(restrict_open(two, pinf, ninf), InputError);
}

TEST_CASE("membership at shared endpoints") {
    auto s = PolyhedralSet1D::open_closed(0, 1);
    CHECK(s.contains(1));
    CHECK_FALSE(s.contains(0));
    CHECK(s.contains(q(1, 2)));
    CHECK_FALSE(s.contains(2));
}

TEST_CASE("valuation properties on random sets") {
    std::mt19937_64 rng(20261018);
    for (int trial = 0; trial < 400; ++trial) {
        auto a = random_set(rng);
        auto b = random_set(rng);
        auto c = random_set(rng);
        auto d = random_set(rng);
        CAPTURE(a.to_string());
        CAPTURE(b.to_string());

        CHECK(euler_measure(unite(a, b)) ==
              euler_measure(a) + euler_measure(b) - euler_measure(intersect(a, b)));
        CHECK(euler_measure(a) + euler_measure(complement(a)) == -1);
        CHECK(PolyhedralSet1D::canonicalize(a.pieces()) == a);
        CHECK(complement(complement(a)) == a);
        CHECK(euler_measure(translate(a, q(7, 3))) == euler_measure(a));

        // Four-way inclusion-exclusion.
        const std::vector<PolyhedralSet1D> sets{a, b, c, d};
        std::int64_t alternating = 0;
        for (unsigned mask = 1; mask < 16; ++mask) {
            PolyhedralSet1D meet = PolyhedralSet1D::real_line();
            int bits = 0;
            for (unsigned i = 0; i < 4; ++i)
                if (mask & (1u << i)) {
                    meet = intersect(meet, sets[i]);
                    ++bits;
                }
            alternating += (bits % 2 == 1 ? 1 : -1) * euler_measure(meet);
        }
        CHECK(euler_measure(unite(unite(a, b), unite(c, d))) == alternating);

        auto cls = classify(a);
        if (cls.finite) CHECK(euler_measure(a) == static_cast<std::int64_t>(*cls.cardinality));
    }
}

TEST_CASE("non-canonical rational input") {
    const Rational ten_fourths(10, 4), five_halves(5, 2);
    const auto a = PolyhedralSet1D::open(ExtendedRational::neg_inf(), ten_fourths);
    CHECK(unite(a, PolyhedralSet1D::point(five_halves)).to_string() == "(-inf,5/2]");
    CHECK(PolyhedralSet1D::point(ten_fourths) == PolyhedralSet1D::point(five_halves));
}
