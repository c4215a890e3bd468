#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "polyeuler/interval_sets.hpp"
#include "polyeuler/partitions.hpp"
#include "polyeuler/rational.hpp"

namespace polyeuler {

inline constexpr std::size_t default_choose_cap = 12;

/// Formal disjoint union of open cells, recorded by dimension.
class CellSketch {
public:
    void add_cell(std::size_t dim, std::uint64_t multiplicity = 1);
    /// Records a cell along with the per-piece point counts that produced it.
    void add_cell(std::size_t dim, std::vector<std::size_t> placement);

    /// dimension -> number of cells.
    const std::map<std::size_t, std::uint64_t>& dimensions() const { return dims_; }
    const std::vector<std::vector<std::size_t>>& placements() const { return placements_; }
    std::uint64_t cell_count() const;

    /// sum over cells of (-1)^dim.
    Integer measure() const;

private:
    std::map<std::size_t, std::uint64_t> dims_;
    std::vector<std::vector<std::size_t>> placements_;
};

/// Strata of "A choose k": one open cell per way of distributing k ordered
/// points over the pieces of A (at most one per point piece).
/// Throws ResourceError when k > cap.
CellSketch choose_cells(const PolyhedralSet1D& a, std::size_t k,
                        std::size_t cap = default_choose_cap);

/// Euler measure of the k-tuples of pairwise distinct points of A, by
/// Möbius inversion over the partition lattice.
Integer ordered_distinct_measure(const PolyhedralSet1D& a, std::size_t k,
                                 std::size_t cap = default_partition_cap);

}  // namespace polyeuler
