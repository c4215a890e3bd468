#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polyeuler/exact_series.hpp"
#include "polyeuler/rational.hpp"

namespace polyeuler {

inline constexpr std::size_t default_partition_cap = 10;

/// A set partition of {1..k}; blocks sorted by least element, elements ascending.
class SetPartition {
public:
    /// Throws InputError unless `blocks` is a partition of {1..k}.
    SetPartition(std::size_t k, std::vector<std::vector<std::size_t>> blocks);

    std::size_t ground_size() const { return ground_size_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return block_count_; }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;

private:
    std::size_t ground_size_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::size_t block_count_;
};

/// All B(k) partitions of {1..k}, via restricted growth strings.
/// Throws ResourceError when k > cap.
std::vector<SetPartition> partitions_of(std::size_t k, std::size_t cap = default_partition_cap);

/// mu(0^, pi) in the partition lattice: prod over blocks of (-1)^{|B|-1} (|B|-1)!.
Integer mobius_bottom(const SetPartition& pi);

/// x(x-1)...(x-k+1).
Rational falling_factorial(const Rational& x, std::size_t k);
/// falling_factorial(x, k) / k!.
Rational gen_binomial(const Rational& x, std::size_t k);
/// Left fold of gen_binomial over ks, starting from x.
Rational iterated_binomial(const Rational& x, std::span<const std::size_t> ks);

/// The polynomial in x equal to gen_binomial(p(x), k).
Polynomial binomial_polynomial(const Polynomial& p, std::size_t k);
/// The polynomial in x equal to iterated_binomial(x, ks).
Polynomial iterated_binomial_polynomial(std::span<const std::size_t> ks);

/// sum_{j=0..k} (-1)^{k-j} C(k,j) f(j): the count of "exactly all of a k-set"
/// recovered from the "some subset of size j" counts f(j).
Rational boolean_inversion(std::size_t k, const std::function<Rational(std::size_t)>& f);

}  // namespace polyeuler
