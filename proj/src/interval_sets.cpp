#include "polyeuler/interval_sets.hpp"

#include <algorithm>
#include <functional>

#include "polyeuler/errors.hpp"

namespace polyeuler {

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_ || a.kind_ != ExtendedRational::Kind::finite)
        return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtendedRational::to_string() const {
    switch (kind_) {
        case Kind::neg_inf: return "-inf";
        case Kind::pos_inf: return "inf";
        case Kind::finite: break;
    }
    return polyeuler::to_string(value_);
}

Piece Piece::open(const ExtendedRational& lo, const ExtendedRational& hi) {
    if (!(lo < hi))
        throw InputError("malformed interval (" + lo.to_string() + "," + hi.to_string() +
                         "): lower end must be below upper end");
    return {Kind::open_interval, lo, hi};
}

bool Piece::contains(const Rational& x) const {
    if (is_point()) return lo.value() == x;
    ExtendedRational ex(x);
    return lo < ex && ex < hi;
}

namespace {

// The cut points split the line into 2m+1 atoms: O_0, P_0, O_1, ..., P_{m-1}, O_m.
// Every set whose finite endpoints are all cut points is a union of atoms.
class AtomGrid {
public:
    explicit AtomGrid(std::vector<Rational> cuts) : cuts_(std::move(cuts)) {
        std::sort(cuts_.begin(), cuts_.end());
        cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
    }

    std::size_t size() const { return 2 * cuts_.size() + 1; }
    static bool is_point_atom(std::size_t i) { return i % 2 == 1; }

    // A rational lying in atom i.
    Rational sample(std::size_t i) const {
        const std::size_t m = cuts_.size();
        if (is_point_atom(i)) return cuts_[i / 2];
        const std::size_t j = i / 2;
        if (m == 0) return 0;
        if (j == 0) return cuts_.front() - 1;
        if (j == m) return cuts_.back() + 1;
        return (cuts_[j - 1] + cuts_[j]) / 2;
    }

    ExtendedRational left_end(std::size_t i) const {
        const std::size_t j = i / 2;
        if (is_point_atom(i)) return cuts_[j];
        return j == 0 ? ExtendedRational::neg_inf() : ExtendedRational(cuts_[j - 1]);
    }

    ExtendedRational right_end(std::size_t i) const {
        const std::size_t j = i / 2;
        if (is_point_atom(i)) return cuts_[j];
        return j == cuts_.size() ? ExtendedRational::pos_inf() : ExtendedRational(cuts_[j]);
    }

    // Canonical pieces of the union of the atoms flagged in `member`.
    std::vector<Piece> assemble(const std::vector<bool>& member) const {
        std::vector<Piece> out;
        std::size_t i = 0;
        while (i < member.size()) {
            if (!member[i]) {
                ++i;
                continue;
            }
            std::size_t e = i;
            while (e + 1 < member.size() && member[e + 1]) ++e;
            if (i == e && is_point_atom(i)) {
                out.push_back(Piece::point(sample(i)));
            } else {
                if (is_point_atom(i)) out.push_back(Piece::point(sample(i)));
                out.push_back(Piece{Piece::Kind::open_interval, left_end(i), right_end(e)});
                if (is_point_atom(e)) out.push_back(Piece::point(sample(e)));
            }
            i = e + 1;
        }
        return out;
    }

private:
    std::vector<Rational> cuts_;
};

void collect_cuts(std::span<const Piece> pieces, std::vector<Rational>& cuts) {
    for (const auto& p : pieces) {
        if (p.lo.is_finite()) cuts.push_back(p.lo.value());
        if (p.is_interval() && p.hi.is_finite()) cuts.push_back(p.hi.value());
    }
}

std::vector<Piece> build(const AtomGrid& grid, const std::function<bool(const Rational&)>& in) {
    std::vector<bool> member(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) member[i] = in(grid.sample(i));
    return grid.assemble(member);
}

void validate(const Piece& p) {
    if (p.is_point()) {
        if (!p.lo.is_finite() || p.lo != p.hi)
            throw InputError("a point piece needs one finite coordinate");
    } else if (!(p.lo < p.hi)) {
        throw InputError("malformed interval (" + p.lo.to_string() + "," + p.hi.to_string() +
                         "): lower end must be below upper end");
    }
}

}  // namespace

PolyhedralSet1D PolyhedralSet1D::canonicalize(std::span<const Piece> pieces) {
    for (const auto& p : pieces) validate(p);
    std::vector<Rational> cuts;
    collect_cuts(pieces, cuts);
    AtomGrid grid(std::move(cuts));
    return PolyhedralSet1D(build(grid, [&](const Rational& x) {
        return std::any_of(pieces.begin(), pieces.end(),
                           [&](const Piece& p) { return p.contains(x); });
    }));
}

PolyhedralSet1D PolyhedralSet1D::real_line() {
    return PolyhedralSet1D({Piece::open(ExtendedRational::neg_inf(), ExtendedRational::pos_inf())});
}

PolyhedralSet1D PolyhedralSet1D::point(const Rational& q) {
    return PolyhedralSet1D({Piece::point(q)});
}

PolyhedralSet1D PolyhedralSet1D::points(std::span<const Rational> qs) {
    std::vector<Piece> pieces;
    for (const auto& q : qs) pieces.push_back(Piece::point(q));
    return canonicalize(pieces);
}

PolyhedralSet1D PolyhedralSet1D::open(const ExtendedRational& lo, const ExtendedRational& hi) {
    return PolyhedralSet1D({Piece::open(lo, hi)});
}

PolyhedralSet1D PolyhedralSet1D::closed(const Rational& lo, const Rational& hi) {
    auto mid = Piece::open(lo, hi);
    return PolyhedralSet1D({Piece::point(lo), mid, Piece::point(hi)});
}

PolyhedralSet1D PolyhedralSet1D::closed_open(const Rational& lo, const ExtendedRational& hi) {
    auto mid = Piece::open(lo, hi);
    return PolyhedralSet1D({Piece::point(lo), mid});
}

PolyhedralSet1D PolyhedralSet1D::open_closed(const ExtendedRational& lo, const Rational& hi) {
    auto mid = Piece::open(lo, hi);
    return PolyhedralSet1D({mid, Piece::point(hi)});
}

bool PolyhedralSet1D::contains(const Rational& x) const {
    // Pieces are sorted and disjoint: skip every piece lying entirely left of x.
    ExtendedRational ex(x);
    auto it = std::lower_bound(pieces_.begin(), pieces_.end(), ex,
                               [](const Piece& p, const ExtendedRational& v) {
                                   return p.is_point() ? p.hi < v : p.hi <= v;
                               });
    return it != pieces_.end() && it->contains(x);
}

std::size_t PolyhedralSet1D::point_count() const {
    return static_cast<std::size_t>(
        std::count_if(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.is_point(); }));
}

std::size_t PolyhedralSet1D::interval_count() const {
    return pieces_.size() - point_count();
}

std::string PolyhedralSet1D::to_string() const {
    if (pieces_.empty()) return "{}";
    const auto cls = classify(*this);
    std::string out;
    std::vector<std::string> pending_points;
    auto flush_points = [&] {
        if (pending_points.empty()) return;
        if (!out.empty()) out += " u ";
        out += "{";
        for (std::size_t i = 0; i < pending_points.size(); ++i) {
            if (i != 0) out += ",";
            out += pending_points[i];
        }
        out += "}";
        pending_points.clear();
    };
    for (const auto& c : cls.components) {
        if (c.is_point()) {
            pending_points.push_back(c.lower.to_string());
            continue;
        }
        flush_points();
        if (!out.empty()) out += " u ";
        out += c.lower_closed ? "[" : "(";
        out += c.lower.to_string() + "," + c.upper.to_string();
        out += c.upper_closed ? "]" : ")";
    }
    flush_points();
    return out;
}

PolyhedralSet1D combine(const PolyhedralSet1D& a, const PolyhedralSet1D& b,
                        PolyhedralSet1D::BinaryOp op) {
    std::vector<Rational> cuts;
    collect_cuts(a.pieces_, cuts);
    collect_cuts(b.pieces_, cuts);
    AtomGrid grid(std::move(cuts));
    return PolyhedralSet1D(build(grid, [&](const Rational& x) {
        const bool in_a = a.contains(x);
        const bool in_b = b.contains(x);
        switch (op) {
            case PolyhedralSet1D::BinaryOp::unite: return in_a || in_b;
            case PolyhedralSet1D::BinaryOp::intersect: return in_a && in_b;
            case PolyhedralSet1D::BinaryOp::difference: return in_a && !in_b;
        }
        return false;
    }));
}

PolyhedralSet1D complement(const PolyhedralSet1D& a) {
    std::vector<Rational> cuts;
    collect_cuts(a.pieces_, cuts);
    AtomGrid grid(std::move(cuts));
    return PolyhedralSet1D(build(grid, [&](const Rational& x) { return !a.contains(x); }));
}

std::int64_t euler_measure(const PolyhedralSet1D& a) {
    return static_cast<std::int64_t>(a.point_count()) -
           static_cast<std::int64_t>(a.interval_count());
}

Classification classify(const PolyhedralSet1D& a) {
    Classification out;
    const auto& pieces = a.pieces();
    out.finite = a.interval_count() == 0;
    if (out.finite) out.cardinality = pieces.size();

    for (std::size_t i = 0; i < pieces.size();) {
        std::size_t e = i;
        // Adjacent pieces share an endpoint: (x,q) then {q}, or {q} then (q,y).
        while (e + 1 < pieces.size() && pieces[e].is_point() != pieces[e + 1].is_point() &&
               pieces[e].hi == pieces[e + 1].lo)
            ++e;
        Component c;
        c.lower = pieces[i].lo;
        c.upper = pieces[e].hi;
        c.lower_closed = pieces[i].is_point();
        c.upper_closed = pieces[e].is_point();
        out.components.push_back(c);
        if (i == e && pieces[i].is_point()) out.has_isolated_points = true;
        i = e + 1;
    }
    out.compact = std::all_of(out.components.begin(), out.components.end(),
                              [](const Component& c) { return c.is_compact(); });
    return out;
}

PolyhedralSet1D restrict_open(const PolyhedralSet1D& a, const ExtendedRational& lo,
                              const ExtendedRational& hi) {
    return intersect(a, PolyhedralSet1D::open(lo, hi));
}

PolyhedralSet1D translate(const PolyhedralSet1D& a, const Rational& offset) {
    std::vector<Piece> shifted = a.pieces_;
    for (auto& p : shifted) {
        if (p.lo.is_finite()) p.lo = ExtendedRational(p.lo.value() + offset);
        if (p.hi.is_finite()) p.hi = ExtendedRational(p.hi.value() + offset);
    }
    return PolyhedralSet1D(std::move(shifted));
}

}  // namespace polyeuler
