#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyeuler/rational.hpp"

namespace polyeuler {

/// A rational number or one of the two infinities.
class ExtendedRational {
public:
    enum class Kind { neg_inf, finite, pos_inf };

    ExtendedRational() = default;
    ExtendedRational(Rational value) : kind_(Kind::finite), value_(std::move(value)) { value_.canonicalize(); }
    ExtendedRational(int value) : kind_(Kind::finite), value_(value) {}

    static ExtendedRational neg_inf() { return ExtendedRational(Kind::neg_inf); }
    static ExtendedRational pos_inf() { return ExtendedRational(Kind::pos_inf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    /// Only meaningful when is_finite().
    const Rational& value() const { return value_; }

    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);
    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

    std::string to_string() const;

private:
    explicit ExtendedRational(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::finite;
    Rational value_;
};

/// A point {q} or an open interval (lo, hi) with lo < hi.
struct Piece {
    enum class Kind { point, open_interval };

    Kind kind = Kind::point;
    ExtendedRational lo;
    ExtendedRational hi;

    static Piece point(const Rational& q) { return {Kind::point, q, q}; }
    /// Throws InputError unless lo < hi.
    static Piece open(const ExtendedRational& lo, const ExtendedRational& hi);

    bool is_point() const { return kind == Kind::point; }
    bool is_interval() const { return kind == Kind::open_interval; }
    /// Euler measure of the piece: +1 for a point, -1 for an open interval.
    int measure() const { return is_point() ? 1 : -1; }
    bool contains(const Rational& x) const;

    friend bool operator==(const Piece&, const Piece&) = default;
};

/// A maximal connected run of pieces.
struct Component {
    ExtendedRational lower;
    ExtendedRational upper;
    bool lower_closed = false;
    bool upper_closed = false;

    bool is_point() const { return lower == upper; }
    bool is_compact() const {
        return lower.is_finite() && upper.is_finite() && lower_closed && upper_closed;
    }
};

struct Classification {
    bool finite = false;
    std::optional<std::size_t> cardinality;
    bool compact = false;
    std::vector<Component> components;
    bool has_isolated_points = false;
};

/// Finite union of rational points and open intervals in canonical form:
/// disjoint pieces, sorted left to right, with every point that would join two
/// intervals into one absorbed. Equal sets have equal piece sequences.
class PolyhedralSet1D {
public:
    enum class BinaryOp { unite, intersect, difference };

    PolyhedralSet1D() = default;

    /// Canonical union of arbitrary (possibly overlapping) pieces.
    static PolyhedralSet1D canonicalize(std::span<const Piece> pieces);

    static PolyhedralSet1D empty() { return {}; }
    static PolyhedralSet1D real_line();
    static PolyhedralSet1D point(const Rational& q);
    static PolyhedralSet1D points(std::span<const Rational> qs);
    static PolyhedralSet1D open(const ExtendedRational& lo, const ExtendedRational& hi);
    /// [lo, hi]; both finite, lo < hi.
    static PolyhedralSet1D closed(const Rational& lo, const Rational& hi);
    /// [lo, hi) and (lo, hi]; the closed end must be finite.
    static PolyhedralSet1D closed_open(const Rational& lo, const ExtendedRational& hi);
    static PolyhedralSet1D open_closed(const ExtendedRational& lo, const Rational& hi);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_empty() const { return pieces_.empty(); }
    bool contains(const Rational& x) const;

    std::size_t point_count() const;
    std::size_t interval_count() const;

    friend bool operator==(const PolyhedralSet1D&, const PolyhedralSet1D&) = default;

    /// Component-wise text in the set-literal grammar, e.g. "[0,1] u {5}".
    std::string to_string() const;

private:
    explicit PolyhedralSet1D(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

    friend PolyhedralSet1D combine(const PolyhedralSet1D&, const PolyhedralSet1D&,
                                   PolyhedralSet1D::BinaryOp);
    friend PolyhedralSet1D complement(const PolyhedralSet1D&);
    friend PolyhedralSet1D translate(const PolyhedralSet1D&, const Rational&);

    std::vector<Piece> pieces_;
};

PolyhedralSet1D combine(const PolyhedralSet1D& a, const PolyhedralSet1D& b,
                        PolyhedralSet1D::BinaryOp op);
PolyhedralSet1D complement(const PolyhedralSet1D& a);

inline PolyhedralSet1D unite(const PolyhedralSet1D& a, const PolyhedralSet1D& b) {
    return combine(a, b, PolyhedralSet1D::BinaryOp::unite);
}
inline PolyhedralSet1D intersect(const PolyhedralSet1D& a, const PolyhedralSet1D& b) {
    return combine(a, b, PolyhedralSet1D::BinaryOp::intersect);
}
inline PolyhedralSet1D difference(const PolyhedralSet1D& a, const PolyhedralSet1D& b) {
    return combine(a, b, PolyhedralSet1D::BinaryOp::difference);
}

/// Number of point pieces minus number of open-interval pieces.
std::int64_t euler_measure(const PolyhedralSet1D& a);

Classification classify(const PolyhedralSet1D& a);

/// a ∩ (lo, hi). Throws InputError unless lo < hi.
PolyhedralSet1D restrict_open(const PolyhedralSet1D& a, const ExtendedRational& lo,
                              const ExtendedRational& hi);

/// Shifts every endpoint by `offset`.
PolyhedralSet1D translate(const PolyhedralSet1D& a, const Rational& offset);

}  // namespace polyeuler
