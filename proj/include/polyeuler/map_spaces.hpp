#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polyeuler/choose.hpp"
#include "polyeuler/exact_series.hpp"
#include "polyeuler/interval_sets.hpp"
#include "polyeuler/rational.hpp"

namespace polyeuler {

inline constexpr std::uint64_t default_map_cap = 10'000'000;

enum class CountMode { formula, brute };

/// Maps from one open interval to a bsize-point set whose breakpoints are exactly
/// k given points. Formula: bsize (bsize^2 - 1)^k. Brute: enumerates the value
/// on each gap and at each breakpoint.
Integer finite_map_count(std::uint64_t bsize, std::size_t k, CountMode mode,
                         std::uint64_t cap = default_map_cap);

/// Maps (0,1) -> {0..bsize-1} with k marked points, tallied by breakpoint set:
/// entry `mask` counts maps whose breakpoints are exactly the marked points in `mask`.
std::vector<std::uint64_t> map_breakpoint_census(std::uint64_t bsize, std::size_t k,
                                                 std::uint64_t cap = default_map_cap);

/// Maps from p open intervals with the given per-interval breakpoint counts:
/// the product of finite_map_count over the intervals.
Integer hedral_breakpoint_count(std::uint64_t bsize, std::span<const std::size_t> per_component,
                                CountMode mode, std::uint64_t cap = default_map_cap);

struct MapSeriesReport {
    /// n_k: measure of the maps with one fixed k-element breakpoint set.
    std::vector<Integer> counts;
    EulerSeries series;
    /// Value predicted by functoriality.
    Rational expected;
    SeriesPolicy policy_used;
};

/// Hedral maps A -> (bsize points) for A a disjoint union of p open intervals.
/// Value bsize^chi(A) = bsize^{-p}. Throws InputError when A has point pieces.
MapSeriesReport hedral_map_measure(const PolyhedralSet1D& a, std::uint64_t bsize,
                                   const SeriesPolicy& policy = {});

/// Unordered pairs of distinct maps (0,1) -> (bsize points), graded by the size
/// of the union of their breakpoint sets; counts by brute force, as many terms
/// as the cap allows. Expected value C(1/bsize, 2).
MapSeriesReport map_pair_measure(std::uint64_t bsize, const SeriesPolicy& policy = {},
                                 std::uint64_t cap = default_map_cap);

/// Pairs (w, w') whose open segment lies in compact B, as cells: a closed
/// square per interval component, a vertex per point component.
/// Throws InputError for non-compact B.
CellSketch affine_pair_space(const PolyhedralSet1D& b);

struct SchanuelReport {
    std::int64_t chi_b = 0;
    /// Measure of the affine maps from one open gap into B.
    std::int64_t affine_measure = 0;
    /// chi_B^k * affine^{k+1}: maps whose breakpoints lie in a fixed k-set.
    std::vector<Integer> subset_counts;
    MapSeriesReport map;
};

/// Polyhedral maps (0,1) -> B for compact B.
SchanuelReport schanuel_measure(const PolyhedralSet1D& b, const SeriesPolicy& policy = {});
/// Same, from the codomain's Euler measure alone.
SchanuelReport schanuel_measure(std::int64_t chi_b, const SeriesPolicy& policy = {});

}  // namespace polyeuler
