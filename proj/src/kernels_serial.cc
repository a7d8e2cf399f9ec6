#include <qreliab/errors.hh>
#include <qreliab/kernels.hh>

#include <algorithm>
#include <bit>
#include <map>

namespace qreliab::kernels {

std::vector<Mask> minimal_masks(std::span<const Mask> masks)
{
    std::vector<Mask> sorted(masks.begin(), masks.end());
    std::sort(sorted.begin(), sorted.end(), [](Mask a, Mask b) {
        auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Mask> result;
    for (auto m : sorted)
        if (std::none_of(result.begin(), result.end(), [&](Mask kept) { return (kept & ~m) == 0; }))
            result.push_back(m);
    return result;
}

namespace serial {

Count count_covering_subsets(unsigned n, std::span<const Mask> masks)
{
    if (n > max_enumeration_width)
        throw CapExceededError("subset enumeration", n, max_enumeration_width);
    std::uint64_t total = 0;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t subset = 0; subset < end; ++subset)
        for (auto m : masks)
            if ((m & ~subset) == 0) {
                ++total;
                break;
            }
    Count result;
    mpz_import(result.get_mpz_t(), 1, 1, sizeof(total), 0, 0, &total);
    return result;
}

Count weighted_covering_sum(unsigned n, std::span<const Mask> masks, std::span<const Count> present,
        std::span<const Count> absent)
{
    if (n > max_enumeration_width)
        throw CapExceededError("subset enumeration", n, max_enumeration_width);
    Count total = 0, weight;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t subset = 0; subset < end; ++subset) {
        bool covered = std::any_of(masks.begin(), masks.end(), [&](Mask m) { return (m & ~subset) == 0; });
        if (! covered)
            continue;
        weight = 1;
        for (unsigned f = 0; f < n; ++f)
            weight *= (subset >> f) & 1 ? present[f] : absent[f];
        total += weight;
    }
    return total;
}

std::vector<ProfileCount> profile_histogram(const BipartiteShape & shape)
{
    std::map<ProfileKey, std::uint64_t> histogram;
    const unsigned n = shape.left + shape.right;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t subset = 0; subset < end; ++subset) {
        std::uint64_t left = subset & ((std::uint64_t{1} << shape.left) - 1);
        std::uint64_t right = subset >> shape.left;
        ProfileKey key{std::popcount(left), std::popcount(right), 0, 0, 0};
        for (auto [u, w] : shape.edges) {
            bool in_left = (left >> u) & 1, in_right = (right >> w) & 1;
            if (in_left && in_right)
                ++key.c;
            else if (in_left)
                ++key.d;
            else if (in_right)
                ++key.dp;
        }
        ++histogram[key];
    }
    std::vector<ProfileCount> result;
    for (auto & [key, count] : histogram)
        result.push_back({key, count});
    return result;
}

std::vector<Count> power_sums(std::span<const Count> nodes, std::span<const Count> weights, std::size_t count)
{
    std::vector<Count> out(count, 0);
    Count power;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (weights[k] == 0)
            continue;
        power = 1;
        for (std::size_t p = 0; p < count; ++p) {
            out[p] += weights[k] * power;
            power *= nodes[k];
        }
    }
    return out;
}

} // namespace serial
} // namespace qreliab::kernels
