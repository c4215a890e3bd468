#include "polyeuler/power_gizmos.hpp"

#include <algorithm>
#include <string>

#include "polyeuler/errors.hpp"
#include "polyeuler/partitions.hpp"

namespace polyeuler {

namespace {

constexpr std::size_t max_fit_dimension = 64;
constexpr std::size_t max_census_ground = 24;

// Solves m x = rhs exactly; m is square and nonsingular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw InternalError("singular exponential-fit system");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rational f = m[row][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[row][c] -= f * m[col][c];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

// S < T iff the smallest element of S xor T lies in S.
bool subset_less(std::uint32_t s, std::uint32_t t) {
    const std::uint32_t diff = s ^ t;
    return diff != 0 && (s & (diff & (~diff + 1))) != 0;
}

Rational power_of_two(std::int64_t e) {
    return pow(Rational(2), e);
}

}  // namespace

void GizmoSpec::validate() const {
    for (std::size_t k : ks)
        if (k == 0) throw InputError("gizmo selection sizes must be positive");
}

std::size_t GizmoSpec::fit_dimension() const {
    std::size_t j = 1;
    for (std::size_t k : ks) {
        j *= k;
        if (j > max_fit_dimension)
            throw ResourceError("gizmo fit dimension prod(k_i) exceeds " +
                                std::to_string(max_fit_dimension));
    }
    return j;
}

EulerSeries powerset_series(const PolyhedralSet1D& a, const SeriesPolicy& policy) {
    const std::int64_t chi = euler_measure(a);
    const std::size_t order = chi < 0 ? static_cast<std::size_t>(-chi) : static_cast<std::size_t>(chi) + 1;
    const SeriesPolicy used = widen(policy, order);
    auto binom = binomial_prefix(chi, 1, used.terms, "support");
    auto reg = regularize(binom.prefix, used.max_order);
    const Rational expected = power_of_two(chi);
    if (reg.closed_form != binom.closed_form || reg.value != expected)
        throw InternalError("power set series of chi=" + std::to_string(chi) +
                            " did not continue to (1+t)^chi");
    return {binom.prefix, reg.recurrence, reg.closed_form, reg.value};
}

Integer gizmo_support_count(const GizmoSpec& spec, std::size_t k) {
    spec.validate();
    const Rational n = boolean_inversion(k, [&](std::size_t j) {
        return iterated_binomial(Rational(pow(Integer(2), j)), spec.ks);
    });
    if (n.get_den() != 1 || n < 0)
        throw InternalError("support count is not a nonnegative integer: " + to_string(n));
    return n.get_num();
}

std::vector<std::uint64_t> gizmo_census(const GizmoSpec& spec, std::size_t n, std::uint64_t cap) {
    spec.validate();
    if (n > max_census_ground)
        throw ResourceError("gizmo census over " + std::to_string(n) +
                            " points exceeds the ground-set limit; use gizmo_support_count");
    const Integer cap_z(static_cast<unsigned long>(cap));
    Integer candidates = Integer(1) << n;
    if (candidates > cap_z)
        throw ResourceError("gizmo brute force over " + std::to_string(n) +
                            " points exceeds the enumeration cap; use gizmo_support_count");

    // Level 0: the power set of {1..n}, element i <-> bit i-1, in subset order.
    std::vector<std::uint32_t> level(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < level.size(); ++m) level[m] = m;
    std::sort(level.begin(), level.end(), subset_less);

    for (std::size_t k : spec.ks) {
        candidates += binomial(level.size(), k);
        if (candidates > cap_z)
            throw ResourceError("gizmo brute force needs more than " + std::to_string(cap) +
                                " candidate tuples; use gizmo_support_count");
        // Increasing k-tuples in lexicographic order; support is the union.
        std::vector<std::uint32_t> next;
        if (k <= level.size()) {
            std::vector<std::size_t> idx(k);
            for (std::size_t i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                std::uint32_t support = 0;
                for (std::size_t i : idx) support |= level[i];
                next.push_back(support);
                std::size_t i = k;
                while (i > 0 && idx[i - 1] == level.size() - k + i - 1) --i;
                if (i == 0) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        level = std::move(next);
    }

    std::vector<std::uint64_t> census(std::size_t{1} << n, 0);
    for (std::uint32_t support : level) ++census[support];
    return census;
}

std::uint64_t gizmo_brute_force(const GizmoSpec& spec, std::size_t k, std::uint64_t cap) {
    const auto census = gizmo_census(spec, k, cap);
    return census.back();
}

ExponentialFit gizmo_fit(const GizmoSpec& spec) {
    spec.validate();
    const std::size_t dim = spec.fit_dimension();
    ExponentialFit fit;
    for (std::size_t j = 1; j <= dim; ++j) fit.bases.push_back(pow(Integer(2), j) - 1);

    std::vector<Rational> counts(dim + 5);
    for (std::size_t k = 1; k <= dim + 4; ++k) counts[k] = Rational(gizmo_support_count(spec, k));

    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim));
    std::vector<Rational> rhs(dim);
    for (std::size_t k = 1; k <= dim; ++k) {
        for (std::size_t j = 0; j < dim; ++j) m[k - 1][j] = Rational(pow(fit.bases[j], k));
        rhs[k - 1] = counts[k];
    }
    fit.weights = solve(std::move(m), std::move(rhs));

    for (std::size_t k = dim + 1; k <= dim + 4; ++k) {
        Rational predicted = 0;
        for (std::size_t j = 0; j < dim; ++j) predicted += fit.weights[j] * Rational(pow(fit.bases[j], k));
        if (predicted != counts[k])
            throw InternalError("exponential fit mispredicts n_" + std::to_string(k));
    }

    std::vector<Rational> coeffs(dim + 1);
    for (std::size_t j = 0; j < dim; ++j) coeffs[j + 1] = fit.weights[j];
    fit.polynomial = Polynomial(std::move(coeffs));
    if (fit.polynomial != iterated_binomial_polynomial(spec.ks))
        throw InternalError("exponential fit polynomial differs from the iterated binomial");
    return fit;
}

std::size_t gizmo_series_order(const GizmoSpec& spec, std::int64_t chi) {
    const std::size_t dim = spec.fit_dimension();
    return chi < 0 ? dim * static_cast<std::size_t>(-chi) : dim * static_cast<std::size_t>(chi) + 1;
}

GizmoReport gizmo_measure(const PolyhedralSet1D& a, const GizmoSpec& spec,
                          const SeriesPolicy& policy) {
    spec.validate();
    GizmoReport report;
    report.chi = euler_measure(a);
    report.fit = gizmo_fit(spec);
    const Rational base = power_of_two(report.chi);

    report.fit_value = report.fit.polynomial(base);

    report.policy_used = widen(policy, gizmo_series_order(spec, report.chi));
    std::vector<Rational> coeffs(report.policy_used.terms + 1);
    const Rational chi_q(static_cast<long>(report.chi));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] = gen_binomial(chi_q, k) * Rational(gizmo_support_count(spec, k));
    SeriesPrefix prefix(std::move(coeffs), "support");
    auto reg = regularize(prefix, report.policy_used.max_order);
    report.series = {std::move(prefix), reg.recurrence, reg.closed_form, reg.value};

    report.expected = iterated_binomial(base, spec.ks);
    if (report.fit_value != report.series.value || report.fit_value != report.expected)
        throw InternalError("gizmo routes disagree: fit " + to_string(report.fit_value) +
                            ", series " + to_string(report.series.value) + ", iterated binomial " +
                            to_string(report.expected));
    return report;
}

}  // namespace polyeuler
