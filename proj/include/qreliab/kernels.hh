#ifndef QRELIAB_KERNELS_HH
#define QRELIAB_KERNELS_HH

// Exhaustive-enumeration kernels behind the brute-force oracles and the
// analytic oracle of the main reduction. Each kernel exists twice: a plain
// serial reference and an OpenMP version. Both return identical results; the
// public operations in exact_eval / bipartite / reduction_ur call the OpenMP
// version.

#include <qreliab/numeric.hh>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qreliab {

/// Largest enumeration width the 64-bit subset masks can address.
inline constexpr unsigned max_enumeration_width = 62;

/// (i, j, c, d, d') of a pair (R', T'); e is implied by c + d + d' + e = m.
struct ProfileKey
{
    int i = 0, j = 0, c = 0, d = 0, dp = 0;

    auto operator<=>(const ProfileKey &) const = default;
    bool operator==(const ProfileKey &) const = default;
};

namespace kernels {

using Mask = std::uint64_t;

/// Drops masks that contain another mask; what is left is an antichain that
/// covers exactly the same subsets.
std::vector<Mask> minimal_masks(std::span<const Mask> masks);

struct BipartiteShape
{
    int left = 0, right = 0;
    /// (left index, right index) per edge.
    std::vector<std::pair<int, int>> edges;
};

/// Histogram entry: how many (R', T') pairs share a profile.
struct ProfileCount
{
    ProfileKey key;
    std::uint64_t count;
};

namespace serial {
    /// Number of subsets of {0..n-1} containing at least one of `masks`.
    Count count_covering_subsets(unsigned n, std::span<const Mask> masks);

    /// Sum over covering subsets J of prod_{f in J} present[f] * prod_{f not in J} absent[f].
    Count weighted_covering_sum(unsigned n, std::span<const Mask> masks, std::span<const Count> present,
            std::span<const Count> absent);

    /// Profiles of all 2^(left+right) pairs, sorted by key.
    std::vector<ProfileCount> profile_histogram(const BipartiteShape & shape);

    /// out[p] = sum_k weights[k] * nodes[k]^p for p = 0..count-1.
    std::vector<Count> power_sums(std::span<const Count> nodes, std::span<const Count> weights, std::size_t count);
}

namespace omp {
    Count count_covering_subsets(unsigned n, std::span<const Mask> masks);
    Count weighted_covering_sum(unsigned n, std::span<const Mask> masks, std::span<const Count> present,
            std::span<const Count> absent);
    std::vector<ProfileCount> profile_histogram(const BipartiteShape & shape);
    std::vector<Count> power_sums(std::span<const Count> nodes, std::span<const Count> weights, std::size_t count);
}

} // namespace kernels
} // namespace qreliab

#endif // QRELIAB_KERNELS_HH
