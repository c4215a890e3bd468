#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyeuler/exact_series.hpp"
#include "polyeuler/interval_sets.hpp"
#include "polyeuler/rational.hpp"

namespace polyeuler {

inline constexpr std::size_t default_fibonacci_cap = 10;

/// F(n) over all integers: F(1) = F(2) = 1, F(n-1) = F(n+1) - F(n).
Integer extended_fibonacci(std::int64_t n);

/// Per-piece selected point counts (point pieces hold 0 or 1).
struct PlacementDescriptor {
    std::vector<std::size_t> counts;
};

/// Placements of k ordered points in P whose every gap (P \ S) between
/// consecutive selected points, and towards -inf and +inf, has even Euler measure.
std::vector<PlacementDescriptor> parity_placements(const PolyhedralSet1D& p, std::size_t k,
                                                   std::size_t cap = default_fibonacci_cap);

/// The gap measures of one placement, left to right (k + 1 entries).
std::vector<std::int64_t> placement_gaps(const PolyhedralSet1D& p, const PlacementDescriptor& d);

/// Signed sum over kept placements of (-1)^(points inside open intervals).
Integer parity_strata_coefficient(const PolyhedralSet1D& p, std::size_t k,
                                  std::size_t cap = default_fibonacci_cap);

struct FibonacciReport {
    std::int64_t chi = 0;
    EulerSeries series;
    Integer expected;
    SeriesPolicy policy_used;
};

/// Subsets S of P with all gaps even, graded by |S|. Value F(chi(P) + 1).
FibonacciReport fibonacci_measure(const PolyhedralSet1D& p, const SeriesPolicy& policy = {16, 7},
                                  std::size_t cap = default_fibonacci_cap);

}  // namespace polyeuler
