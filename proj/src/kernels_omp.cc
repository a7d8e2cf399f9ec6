#include <qreliab/errors.hh>
#include <qreliab/kernels.hh>

#include <algorithm>
#include <bit>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qreliab::kernels::omp {

namespace
{
    int thread_count()
    {
#ifdef _OPENMP
        return omp_get_max_threads();
#else
        return 1;
#endif
    }

    int thread_id()
    {
#ifdef _OPENMP
        return omp_get_thread_num();
#else
        return 0;
#endif
    }

    bool covered(std::uint64_t subset, std::span<const Mask> masks)
    {
        for (auto m : masks)
            if ((m & ~subset) == 0)
                return true;
        return false;
    }

    /// products[s] = prod_{f < width} (bit f of s ? present : absent)[offset + f]
    std::vector<Count> product_table(unsigned offset, unsigned width, std::span<const Count> present,
            std::span<const Count> absent)
    {
        std::vector<Count> table(std::size_t{1} << width);
        table[0] = 1;
        for (unsigned f = 0; f < width; ++f) {
            const std::size_t half = std::size_t{1} << f;
            for (std::size_t s = 0; s < half; ++s) {
                table[s + half] = table[s] * present[offset + f];
                table[s] *= absent[offset + f];
            }
        }
        return table;
    }
}

Count count_covering_subsets(unsigned n, std::span<const Mask> masks)
{
    if (n > max_enumeration_width)
        throw CapExceededError("subset enumeration", n, max_enumeration_width);
    auto minimal = minimal_masks(masks);
    const std::int64_t end = std::int64_t{1} << n;
    unsigned long long total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
    for (std::int64_t subset = 0; subset < end; ++subset)
        if (covered(static_cast<std::uint64_t>(subset), minimal))
            ++total;
    return Count(static_cast<unsigned long>(total));
}

Count weighted_covering_sum(unsigned n, std::span<const Mask> masks, std::span<const Count> present,
        std::span<const Count> absent)
{
    if (n > max_enumeration_width)
        throw CapExceededError("subset enumeration", n, max_enumeration_width);
    auto minimal = minimal_masks(masks);
    // meet in the middle: one multiplication per covered subset
    const unsigned low_width = n / 2, high_width = n - low_width;
    auto low = product_table(0, low_width, present, absent);
    auto high = product_table(low_width, high_width, present, absent);

    const std::int64_t high_end = std::int64_t{1} << high_width;
    const std::uint64_t low_end = std::uint64_t{1} << low_width;
    std::vector<Count> partial(thread_count(), 0);
#pragma omp parallel
    {
        Count & acc = partial[thread_id()];
        Count term;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t h = 0; h < high_end; ++h)
            for (std::uint64_t l = 0; l < low_end; ++l) {
                std::uint64_t subset = (static_cast<std::uint64_t>(h) << low_width) | l;
                if (covered(subset, minimal)) {
                    mpz_mul(term.get_mpz_t(), low[l].get_mpz_t(), high[h].get_mpz_t());
                    acc += term;
                }
            }
    }
    Count total = 0;
    for (auto & p : partial)
        total += p;
    return total;
}

std::vector<ProfileCount> profile_histogram(const BipartiteShape & shape)
{
    const int m = static_cast<int>(shape.edges.size());
    const unsigned n = shape.left + shape.right;
    const std::int64_t end = std::int64_t{1} << n;
    const std::uint64_t left_mask = (std::uint64_t{1} << shape.left) - 1;

    // c = sum over chosen u of |N(u) & T'|; d and d' follow from the degrees.
    std::vector<std::uint64_t> neighbours(shape.left, 0);
    std::vector<int> left_degree(shape.left, 0), right_degree(shape.right, 0);
    for (auto [u, w] : shape.edges) {
        neighbours[u] |= std::uint64_t{1} << w;
        ++left_degree[u];
        ++right_degree[w];
    }
    auto profile = [&](std::uint64_t left, std::uint64_t right) {
        int c = 0, left_edges = 0, right_edges = 0;
        for (auto rest = left; rest != 0; rest &= rest - 1) {
            auto u = std::countr_zero(rest);
            c += std::popcount(neighbours[u] & right);
            left_edges += left_degree[u];
        }
        for (auto rest = right; rest != 0; rest &= rest - 1)
            right_edges += right_degree[std::countr_zero(rest)];
        return ProfileKey{std::popcount(left), std::popcount(right), c, left_edges - c, right_edges - c};
    };

    const std::size_t stride_dp = 1, stride_d = m + 1, stride_c = stride_d * (m + 1), stride_j = stride_c * (m + 1),
                      stride_i = stride_j * (shape.right + 1);
    const std::size_t cells = stride_i * (shape.left + 1);

    std::map<ProfileKey, std::uint64_t> merged;
    if (cells <= (std::size_t{1} << 18)) {
        std::vector<std::vector<std::uint64_t>> partial(thread_count(), std::vector<std::uint64_t>(cells, 0));
#pragma omp parallel
        {
            auto & hist = partial[thread_id()];
#pragma omp for schedule(static)
            for (std::int64_t s = 0; s < end; ++s) {
                auto subset = static_cast<std::uint64_t>(s);
                auto key = profile(subset & left_mask, subset >> shape.left);
                ++hist[key.i * stride_i + key.j * stride_j + key.c * stride_c + key.d * stride_d + key.dp * stride_dp];
            }
        }
        for (std::size_t cell = 0; cell < cells; ++cell) {
            std::uint64_t count = 0;
            for (auto & hist : partial)
                count += hist[cell];
            if (count == 0)
                continue;
            ProfileKey key;
            std::size_t rest = cell;
            key.i = static_cast<int>(rest / stride_i), rest %= stride_i;
            key.j = static_cast<int>(rest / stride_j), rest %= stride_j;
            key.c = static_cast<int>(rest / stride_c), rest %= stride_c;
            key.d = static_cast<int>(rest / stride_d), rest %= stride_d;
            key.dp = static_cast<int>(rest);
            merged.emplace(key, count);
        }
    }
    else {
        // Dense graphs: the cell table would be mostly empty.
        std::vector<std::map<ProfileKey, std::uint64_t>> partial(thread_count());
#pragma omp parallel
        {
            auto & hist = partial[thread_id()];
#pragma omp for schedule(static)
            for (std::int64_t s = 0; s < end; ++s) {
                auto subset = static_cast<std::uint64_t>(s);
                ++hist[profile(subset & left_mask, subset >> shape.left)];
            }
        }
        for (auto & hist : partial)
            for (auto & [key, count] : hist)
                merged[key] += count;
    }

    std::vector<ProfileCount> result;
    for (auto & [key, count] : merged)
        result.push_back({key, count});
    return result;
}

std::vector<Count> power_sums(std::span<const Count> nodes, std::span<const Count> weights, std::size_t count)
{
    std::vector<Count> out(count, 0);
    const auto n_count = static_cast<std::int64_t>(count);
    // contiguous blocks of exponents: one pow per block, then one multiply per step
    const std::int64_t block = std::max<std::int64_t>(1, (n_count + 4 * thread_count() - 1) / (4 * thread_count()));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t start = 0; start < n_count; start += block) {
        const std::int64_t stop = std::min(n_count, start + block);
        Count power;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (weights[k] == 0)
                continue;
            mpz_pow_ui(power.get_mpz_t(), nodes[k].get_mpz_t(), static_cast<unsigned long>(start));
            for (std::int64_t p = start; p < stop; ++p) {
                mpz_addmul(out[p].get_mpz_t(), weights[k].get_mpz_t(), power.get_mpz_t());
                if (p + 1 < stop)
                    power *= nodes[k];
            }
        }
    }
    return out;
}

} // namespace qreliab::kernels::omp
