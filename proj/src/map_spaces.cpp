#include "polyeuler/map_spaces.hpp"

#include <string>

#include "polyeuler/errors.hpp"
#include "polyeuler/partitions.hpp"

namespace polyeuler {

namespace {

constexpr std::size_t max_breakpoints = 30;

void require_bsize(std::uint64_t bsize) {
    if (bsize == 0) throw InputError("codomain must have at least one point");
}

void require_within_cap(std::uint64_t bsize, std::size_t k, std::uint64_t cap) {
    if (k > max_breakpoints ||
        pow(Integer(static_cast<unsigned long>(bsize)), 2 * k + 1) > Integer(static_cast<unsigned long>(cap)))
        throw ResourceError("brute-force map enumeration " + std::to_string(bsize) + "^" +
                            std::to_string(2 * k + 1) + " exceeds the cap of " +
                            std::to_string(cap));
}

Rational chi_as_rational(std::int64_t chi) { return Rational(static_cast<long>(chi)); }

// Regularizes c_k = C(chi_a, k) n_k and checks the closed form.
MapSeriesReport regularize_counts(std::vector<Integer> counts, std::int64_t chi_a,
                                  std::size_t max_order, const RationalFunction& expected_form,
                                  Rational expected_value) {
    std::vector<Rational> coeffs(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        coeffs[k] = gen_binomial(chi_as_rational(chi_a), k) * Rational(counts[k]);
    SeriesPrefix prefix(std::move(coeffs), "breakpoints");
    auto reg = regularize(prefix, max_order);
    if (reg.closed_form != expected_form || reg.value != expected_value)
        throw InternalError("map series continued to " + reg.closed_form.to_string() +
                            ", expected " + expected_form.to_string());
    MapSeriesReport out;
    out.counts = std::move(counts);
    out.series = {std::move(prefix), reg.recurrence, reg.closed_form, reg.value};
    out.expected = std::move(expected_value);
    return out;
}

}  // namespace

std::vector<std::uint64_t> map_breakpoint_census(std::uint64_t bsize, std::size_t k,
                                                 std::uint64_t cap) {
    require_bsize(bsize);
    require_within_cap(bsize, k, cap);
    // Value sequence: v_0, then (u_i, v_i) for each marked point x_i: the value at
    // x_i and on the gap after it. x_i is a breakpoint unless u_i = v_i = v_{i-1}.
    std::vector<std::uint64_t> census(std::size_t{1} << k, 0);
    std::vector<std::uint64_t> values(2 * k + 1, 0);
    while (true) {
        std::uint32_t mask = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            const auto before = values[2 * i - 2];
            if (!(values[2 * i - 1] == before && values[2 * i] == before)) mask |= 1u << (i - 1);
        }
        ++census[mask];
        std::size_t pos = 0;
        while (pos < values.size() && ++values[pos] == bsize) values[pos++] = 0;
        if (pos == values.size()) break;
    }
    return census;
}

Integer finite_map_count(std::uint64_t bsize, std::size_t k, CountMode mode, std::uint64_t cap) {
    require_bsize(bsize);
    if (mode == CountMode::formula) {
        const Integer b(static_cast<unsigned long>(bsize));
        return b * pow(Integer(b * b - 1), k);
    }
    return Integer(static_cast<unsigned long>(map_breakpoint_census(bsize, k, cap).back()));
}

Integer hedral_breakpoint_count(std::uint64_t bsize, std::span<const std::size_t> per_component,
                                CountMode mode, std::uint64_t cap) {
    Integer total = 1;
    for (std::size_t c : per_component) total *= finite_map_count(bsize, c, mode, cap);
    return total;
}

MapSeriesReport hedral_map_measure(const PolyhedralSet1D& a, std::uint64_t bsize,
                                   const SeriesPolicy& policy) {
    require_bsize(bsize);
    if (classify(a).has_isolated_points)
        throw InputError("unsupported domain " + a.to_string() +
                         ": hedral map spaces need a domain without isolated points");
    if (a.point_count() != 0)
        throw InputError("unsupported domain " + a.to_string() +
                         ": only disjoint unions of open intervals are supported");
    const std::size_t p = a.interval_count();
    const SeriesPolicy used = widen(policy, std::max<std::size_t>(p, 1));

    const Integer b(static_cast<unsigned long>(bsize));
    std::vector<Integer> counts(used.terms + 1);
    for (std::size_t k = 0; k < counts.size(); ++k)
        counts[k] = pow(b, p) * pow(Integer(b * b - 1), k);

    const RationalFunction form(Polynomial(Rational(pow(b, p))),
                                pow(Polynomial::linear(1, Rational(b * b - 1)), p));
    auto report = regularize_counts(std::move(counts), -static_cast<std::int64_t>(p),
                                    used.max_order, form,
                                    pow(Rational(b), -static_cast<std::int64_t>(p)));
    report.policy_used = used;
    return report;
}

MapSeriesReport map_pair_measure(std::uint64_t bsize, const SeriesPolicy& policy,
                                 std::uint64_t cap) {
    require_bsize(bsize);
    // As many terms as brute force allows, up to the requested count.
    std::size_t last = 0;
    while (last + 1 <= policy.terms && last + 1 <= max_breakpoints &&
           pow(Integer(static_cast<unsigned long>(bsize)), 2 * (last + 1) + 1) <=
               Integer(static_cast<unsigned long>(cap)))
        ++last;
    if (last < 1) throw ResourceError("enumeration cap leaves too few terms to regularize");
    SeriesPolicy used{last, policy.max_order};
    if (last + 1 < 2 * used.max_order + 2) used.max_order = (last - 1) / 2;

    std::vector<Integer> counts(last + 1);
    for (std::size_t k = 0; k <= last; ++k) {
        const auto census = map_breakpoint_census(bsize, k, cap);
        const std::size_t full = census.size() - 1;
        Integer ordered = 0;
        for (std::size_t m1 = 0; m1 < census.size(); ++m1) {
            if (census[m1] == 0) continue;
            for (std::size_t m2 = 0; m2 < census.size(); ++m2)
                if ((m1 | m2) == full)
                    ordered += Integer(static_cast<unsigned long>(census[m1])) *
                               Integer(static_cast<unsigned long>(census[m2]));
        }
        // Drop f = g (possible only when its breakpoints are the full set), unorder.
        counts[k] = (ordered - Integer(static_cast<unsigned long>(census[full]))) / 2;
    }

    std::vector<Rational> coeffs(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        coeffs[k] = gen_binomial(-1, k) * Rational(counts[k]);
    SeriesPrefix prefix(std::move(coeffs), "breakpoints");
    auto reg = regularize(prefix, used.max_order);

    MapSeriesReport out;
    out.counts = std::move(counts);
    out.series = {std::move(prefix), reg.recurrence, reg.closed_form, reg.value};
    out.expected = gen_binomial(Rational(1, static_cast<unsigned long>(bsize)), 2);
    out.policy_used = used;
    return out;
}

CellSketch affine_pair_space(const PolyhedralSet1D& b) {
    const auto cls = classify(b);
    if (!cls.compact)
        throw InputError("unsupported codomain " + b.to_string() + ": B must be compact");
    CellSketch out;
    for (const auto& c : cls.components) {
        if (c.is_point()) {
            out.add_cell(0);
            continue;
        }
        // [a,b] x [a,b]: open square, four open edges, four vertices.
        out.add_cell(2);
        out.add_cell(1, 4);
        out.add_cell(0, 4);
    }
    return out;
}

namespace {

SchanuelReport schanuel_from(std::int64_t chi_b, std::int64_t affine, const SeriesPolicy& policy) {
    SchanuelReport out;
    out.chi_b = chi_b;
    out.affine_measure = affine;
    const SeriesPolicy used = widen(policy, 1);

    const Integer chi(static_cast<long>(chi_b));
    const Integer aff(static_cast<long>(affine));
    std::vector<Integer> exact(used.terms + 1);
    for (std::size_t k = 0; k <= used.terms; ++k) {
        // k breakpoint values times k+1 affine gaps.
        out.subset_counts.push_back(pow(chi, k) * pow(aff, k + 1));
        const Rational n = boolean_inversion(k, [&](std::size_t j) {
            return Rational(out.subset_counts[j]);
        });
        exact[k] = n.get_num();
        if (exact[k] != chi * pow(Integer(chi * chi - 1), k))
            throw InternalError("breakpoint inversion disagrees with chi(chi^2-1)^k at k=" +
                                std::to_string(k));
    }

    const RationalFunction form(Polynomial(Rational(chi)),
                                Polynomial::linear(1, Rational(chi * chi - 1)));
    const Rational expected = chi_b == 0 ? Rational(0) : Rational(1) / Rational(chi);
    out.map = regularize_counts(std::move(exact), -1, used.max_order, form, expected);
    out.map.policy_used = used;
    return out;
}

}  // namespace

SchanuelReport schanuel_measure(const PolyhedralSet1D& b, const SeriesPolicy& policy) {
    const CellSketch affine = affine_pair_space(b);
    return schanuel_from(euler_measure(b), affine.measure().get_si(), policy);
}

SchanuelReport schanuel_measure(std::int64_t chi_b, const SeriesPolicy& policy) {
    return schanuel_from(chi_b, chi_b, policy);
}

}  // namespace polyeuler
