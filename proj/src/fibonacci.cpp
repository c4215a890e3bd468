#include "polyeuler/fibonacci.hpp"

#include <functional>
#include <string>

#include "polyeuler/errors.hpp"

namespace polyeuler {

Integer extended_fibonacci(std::int64_t n) {
    Integer f;
    if (n >= 0) {
        mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
        return f;
    }
    // F(-n) = (-1)^(n+1) F(n)
    mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(-n));
    return (-n) % 2 == 0 ? Integer(-f) : f;
}

namespace {

template <typename Visit>
void for_each_placement(const PolyhedralSet1D& p, std::size_t k, std::size_t cap, Visit&& visit) {
    if (k > cap)
        throw ResourceError("placement enumeration for k=" + std::to_string(k) +
                            " exceeds the cap of " + std::to_string(cap));
    const auto pieces = p.pieces();
    PlacementDescriptor d{std::vector<std::size_t>(pieces.size(), 0)};
    std::function<void(std::size_t, std::size_t)> place = [&](std::size_t i, std::size_t left) {
        if (i == pieces.size()) {
            if (left == 0) visit(d);
            return;
        }
        const std::size_t most = pieces[i].kind == Piece::Kind::point ? std::min<std::size_t>(left, 1) : left;
        for (std::size_t c = 0; c <= most; ++c) {
            d.counts[i] = c;
            place(i + 1, left - c);
        }
        d.counts[i] = 0;
    };
    place(0, k);
}

}  // namespace

std::vector<std::int64_t> placement_gaps(const PolyhedralSet1D& p, const PlacementDescriptor& d) {
    const auto pieces = p.pieces();
    if (d.counts.size() != pieces.size()) throw InputError("placement does not match the set's pieces");
    // Walk the atoms left to right: an interval with c points splits into
    // c + 1 open sub-intervals; an unselected point is a +1 atom.
    std::vector<std::int64_t> gaps{0};
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const std::size_t c = d.counts[i];
        if (pieces[i].kind == Piece::Kind::point) {
            if (c > 1) throw InputError("a point piece holds at most one selected point");
            if (c == 1) gaps.push_back(0);
            else gaps.back() += 1;
            continue;
        }
        gaps.back() -= 1;
        for (std::size_t j = 0; j < c; ++j) gaps.push_back(-1);
    }
    return gaps;
}

std::vector<PlacementDescriptor> parity_placements(const PolyhedralSet1D& p, std::size_t k,
                                                   std::size_t cap) {
    std::vector<PlacementDescriptor> out;
    for_each_placement(p, k, cap, [&](const PlacementDescriptor& d) {
        for (std::int64_t g : placement_gaps(p, d))
            if (g % 2 != 0) return;
        out.push_back(d);
    });
    return out;
}

Integer parity_strata_coefficient(const PolyhedralSet1D& p, std::size_t k, std::size_t cap) {
    const auto pieces = p.pieces();
    Integer total = 0;
    for (const auto& d : parity_placements(p, k, cap)) {
        std::size_t inside = 0;
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (pieces[i].kind == Piece::Kind::open_interval) inside += d.counts[i];
        total += sign_power(inside);
    }
    return total;
}

FibonacciReport fibonacci_measure(const PolyhedralSet1D& p, const SeriesPolicy& policy,
                                  std::size_t cap) {
    FibonacciReport report;
    report.chi = euler_measure(p);
    const std::size_t pieces = p.pieces().size();
    report.policy_used = widen(policy, pieces + 1);

    std::vector<Rational> coeffs(report.policy_used.terms + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        // Two points in one interval leave an odd gap between them, so no
        // placement with more points than pieces survives.
        if (k > cap && k > pieces) continue;
        coeffs[k] = Rational(parity_strata_coefficient(p, k, cap));
    }
    SeriesPrefix prefix(std::move(coeffs), "rank");
    auto reg = regularize(prefix, report.policy_used.max_order);
    report.series = {std::move(prefix), reg.recurrence, reg.closed_form, reg.value};
    report.expected = extended_fibonacci(report.chi + 1);
    if (report.series.value != Rational(report.expected))
        throw InternalError("parity subsets regularized to " + to_string(report.series.value) +
                            ", expected F(" + std::to_string(report.chi + 1) + ") = " +
                            to_string(report.expected));
    return report;
}

}  // namespace polyeuler
