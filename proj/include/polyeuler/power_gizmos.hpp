#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyeuler/exact_series.hpp"
#include "polyeuler/interval_sets.hpp"
#include "polyeuler/rational.hpp"

namespace polyeuler {

inline constexpr std::uint64_t default_brute_force_cap = 10'000'000;

/// Iterated selection G(2^A; k_1, ..., k_r) over the small power set of A.
struct GizmoSpec {
    std::vector<std::size_t> ks;

    /// Throws InputError if some k_i is zero.
    void validate() const;
    /// J = prod k_i (1 for the bare power set).
    std::size_t fit_dimension() const;
};

/// n_k = sum_j a_j (2^j - 1)^k for j = 1..J.
struct ExponentialFit {
    std::vector<Integer> bases;
    std::vector<Rational> weights;
    /// sum_j a_j x^j; equals iterated_binomial(x, ks).
    Polynomial polynomial;
};

/// Euler series of the small power set of A: coefficients C(chi(A), k), value 2^chi(A).
EulerSeries powerset_series(const PolyhedralSet1D& a, const SeriesPolicy& policy = {});

/// Number of gizmo elements whose support is one fixed k-element set, by
/// inclusion-exclusion over the finite-ground-set totals C(2^j; ks).
Integer gizmo_support_count(const GizmoSpec& spec, std::size_t k);

/// Builds the gizmo over the ground set {1..n} literally (ordered subsets,
/// increasing tuples, union supports) and tallies elements by support.
/// Entry `mask` counts elements whose support is exactly that subset.
/// Throws ResourceError when the candidate tuples exceed `cap`.
std::vector<std::uint64_t> gizmo_census(const GizmoSpec& spec, std::size_t n,
                                        std::uint64_t cap = default_brute_force_cap);

/// gizmo_census(spec, k)[full support].
std::uint64_t gizmo_brute_force(const GizmoSpec& spec, std::size_t k,
                                std::uint64_t cap = default_brute_force_cap);

/// Solves for the exponential weights on n_1..n_J, checks n_{J+1}..n_{J+4} and
/// the polynomial identity. Throws InternalError when either check fails.
ExponentialFit gizmo_fit(const GizmoSpec& spec);

struct GizmoReport {
    std::int64_t chi = 0;
    /// sum_j a_j (2^chi)^j.
    Rational fit_value;
    /// Regularized support-graded Euler series.
    EulerSeries series;
    /// iterated_binomial(2^chi, ks).
    Rational expected;
    ExponentialFit fit;
    SeriesPolicy policy_used;
};

/// Regularized Euler measure of G(2^A; ks) by both routes. Throws InternalError
/// if the routes disagree with each other or with the iterated binomial.
GizmoReport gizmo_measure(const PolyhedralSet1D& a, const GizmoSpec& spec,
                          const SeriesPolicy& policy = {});

/// Order of the linear recurrence satisfied by the gizmo series when chi(A) = chi.
std::size_t gizmo_series_order(const GizmoSpec& spec, std::int64_t chi);

}  // namespace polyeuler
