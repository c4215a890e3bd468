#include "polyeuler/partitions.hpp"

#include <algorithm>
#include <string>

#include "polyeuler/errors.hpp"

namespace polyeuler {

SetPartition::SetPartition(std::size_t k, std::vector<std::vector<std::size_t>> blocks)
    : ground_size_(k), blocks_(std::move(blocks)), block_count_(blocks_.size()) {
    std::vector<bool> seen(k + 1, false);
    std::size_t total = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw InputError("partition block must be nonempty");
        std::sort(b.begin(), b.end());
        for (std::size_t e : b) {
            if (e < 1 || e > k || seen[e])
                throw InputError("partition blocks must be disjoint subsets of {1.." +
                                 std::to_string(k) + "}");
            seen[e] = true;
            ++total;
        }
    }
    if (total != k) throw InputError("partition blocks must cover {1.." + std::to_string(k) + "}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<SetPartition> partitions_of(std::size_t k, std::size_t cap) {
    if (k > cap)
        throw ResourceError("partition enumeration for k=" + std::to_string(k) +
                            " exceeds the cap of " + std::to_string(cap));
    std::vector<SetPartition> out;
    if (k == 0) {
        out.emplace_back(0, std::vector<std::vector<std::size_t>>{});
        return out;
    }
    // growth[i] is the block of element i+1; growth[i] <= 1 + max(growth[0..i-1]).
    std::vector<std::size_t> growth(k, 0);
    std::vector<std::size_t> prefix_max(k, 0);
    while (true) {
        std::vector<std::vector<std::size_t>> blocks(prefix_max[k - 1] + 1);
        for (std::size_t i = 0; i < k; ++i) blocks[growth[i]].push_back(i + 1);
        out.emplace_back(k, std::move(blocks));

        std::size_t i = k - 1;
        while (i > 0 && growth[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++growth[i];
        prefix_max[i] = std::max(prefix_max[i - 1], growth[i]);
        for (std::size_t j = i + 1; j < k; ++j) {
            growth[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return out;
}

Integer mobius_bottom(const SetPartition& pi) {
    Integer mu = 1;
    for (const auto& b : pi.blocks()) {
        const std::size_t n = b.size() - 1;
        mu *= factorial(n);
        if (n % 2 == 1) mu = -mu;
    }
    return mu;
}

Rational falling_factorial(const Rational& x, std::size_t k) {
    Rational acc = 1;
    for (std::size_t i = 0; i < k; ++i) acc *= x - Rational(static_cast<long>(i));
    return acc;
}

Rational gen_binomial(const Rational& x, std::size_t k) {
    return falling_factorial(x, k) / Rational(factorial(k));
}

Rational iterated_binomial(const Rational& x, std::span<const std::size_t> ks) {
    Rational acc = x;
    for (std::size_t k : ks) acc = gen_binomial(acc, k);
    return acc;
}

Polynomial binomial_polynomial(const Polynomial& p, std::size_t k) {
    Polynomial acc(1);
    for (std::size_t i = 0; i < k; ++i) acc *= p - Polynomial(Rational(static_cast<long>(i)));
    return acc * (Rational(1) / Rational(factorial(k)));
}

Polynomial iterated_binomial_polynomial(std::span<const std::size_t> ks) {
    Polynomial acc = Polynomial::identity();
    for (std::size_t k : ks) acc = binomial_polynomial(acc, k);
    return acc;
}

Rational boolean_inversion(std::size_t k, const std::function<Rational(std::size_t)>& f) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        Rational term = Rational(binomial(k, j)) * f(j);
        if ((k - j) % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace polyeuler
