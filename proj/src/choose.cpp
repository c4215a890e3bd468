#include "polyeuler/choose.hpp"

#include <string>

#include "polyeuler/errors.hpp"

namespace polyeuler {

void CellSketch::add_cell(std::size_t dim, std::uint64_t multiplicity) {
    if (multiplicity != 0) dims_[dim] += multiplicity;
}

void CellSketch::add_cell(std::size_t dim, std::vector<std::size_t> placement) {
    dims_[dim] += 1;
    placements_.push_back(std::move(placement));
}

std::uint64_t CellSketch::cell_count() const {
    std::uint64_t n = 0;
    for (const auto& [dim, mult] : dims_) n += mult;
    return n;
}

Integer CellSketch::measure() const {
    Integer total = 0;
    for (const auto& [dim, mult] : dims_) {
        const Integer m(static_cast<unsigned long>(mult));
        if (dim % 2 == 0)
            total += m;
        else
            total -= m;
    }
    return total;
}

namespace {

void distribute(const std::vector<Piece>& pieces, std::size_t index, std::size_t remaining,
                std::size_t dim, std::vector<std::size_t>& counts, CellSketch& out) {
    if (index == pieces.size()) {
        if (remaining == 0) out.add_cell(dim, counts);
        return;
    }
    const bool point = pieces[index].is_point();
    const std::size_t most = point ? std::min<std::size_t>(1, remaining) : remaining;
    for (std::size_t c = 0; c <= most; ++c) {
        counts[index] = c;
        distribute(pieces, index + 1, remaining - c, dim + (point ? 0 : c), counts, out);
    }
    counts[index] = 0;
}

}  // namespace

CellSketch choose_cells(const PolyhedralSet1D& a, std::size_t k, std::size_t cap) {
    if (k > cap)
        throw ResourceError("choose enumeration for k=" + std::to_string(k) +
                            " exceeds the cap of " + std::to_string(cap));
    CellSketch out;
    std::vector<std::size_t> counts(a.pieces().size(), 0);
    distribute(a.pieces(), 0, k, 0, counts, out);
    return out;
}

Integer ordered_distinct_measure(const PolyhedralSet1D& a, std::size_t k, std::size_t cap) {
    const Integer chi(static_cast<long>(euler_measure(a)));
    Integer total = 0;
    for (const auto& pi : partitions_of(k, cap))
        total += mobius_bottom(pi) * pow(chi, pi.block_count());
    return total;
}

}  // namespace polyeuler
