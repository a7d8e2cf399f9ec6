#include <qreliab/errors.hh>
#include <qreliab/vandermonde.hh>

#include <algorithm>
#include <numeric>

namespace qreliab {

namespace
{
    template <typename T>
    void check_distinct(std::span<const T> nodes)
    {
        std::vector<std::size_t> order(nodes.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return nodes[a] < nodes[b]; });
        for (std::size_t k = 1; k < order.size(); ++k)
            if (nodes[order[k - 1]] == nodes[order[k]])
                throw DuplicateNodeError("Vandermonde nodes " + std::to_string(std::min(order[k - 1], order[k])) + " and "
                        + std::to_string(std::max(order[k - 1], order[k])) + " coincide; the system is singular");
    }

    void check_sizes(std::size_t nodes, std::size_t rhs)
    {
        if (nodes != rhs)
            throw InvalidArgumentError("Vandermonde system with " + std::to_string(nodes) + " nodes and "
                    + std::to_string(rhs) + " right-hand sides");
    }
}

void check_distinct_nodes(std::span<const Rational> nodes)
{
    check_distinct(nodes);
}

void check_distinct_nodes(std::span<const Count> nodes)
{
    check_distinct(nodes);
}

std::vector<Rational> solve_vandermonde(std::span<const Rational> nodes, std::span<const Rational> rhs)
{
    check_sizes(nodes.size(), rhs.size());
    check_distinct(nodes);
    std::vector<Rational> b(rhs.begin(), rhs.end());
    if (b.empty())
        return b;
    const std::size_t n = b.size() - 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = n; i > k; --i)
            b[i] -= nodes[k] * b[i - 1];
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t i = k + 1; i <= n; ++i)
            b[i] /= nodes[i] - nodes[i - k - 1];
        for (std::size_t i = k; i < n; ++i)
            b[i] -= b[i + 1];
    }
    return b;
}

std::vector<Rational> solve_vandermonde(std::span<const Count> nodes, std::span<const Count> rhs)
{
    check_sizes(nodes.size(), rhs.size());
    check_distinct(nodes);
    std::vector<Count> b(rhs.begin(), rhs.end());
    auto rational_fallback = [&] {
        std::vector<Rational> q_nodes(nodes.begin(), nodes.end()), q_rhs(rhs.begin(), rhs.end());
        return solve_vandermonde(std::span<const Rational>(q_nodes), std::span<const Rational>(q_rhs));
    };

    if (! b.empty()) {
        const std::size_t n = b.size() - 1;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = n; i > k; --i)
                b[i] -= nodes[k] * b[i - 1];
        Count gap, remainder;
        for (std::size_t k = n; k-- > 0;) {
            for (std::size_t i = k + 1; i <= n; ++i) {
                gap = nodes[i] - nodes[i - k - 1];
                mpz_tdiv_qr(b[i].get_mpz_t(), remainder.get_mpz_t(), b[i].get_mpz_t(), gap.get_mpz_t());
                if (remainder != 0)
                    return rational_fallback();
            }
            for (std::size_t i = k; i < n; ++i)
                b[i] -= b[i + 1];
        }
    }
    return {b.begin(), b.end()};
}

std::vector<Rational> interpolate_vandermonde(std::span<const Rational> nodes, std::span<const Rational> values)
{
    check_sizes(nodes.size(), values.size());
    check_distinct(nodes);
    std::vector<Rational> a(values.begin(), values.end());
    if (a.empty())
        return a;
    const std::size_t n = a.size() - 1;
    // Newton divided differences, then conversion to the monomial basis.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = n; i > k; --i)
            a[i] = (a[i] - a[i - 1]) / (nodes[i] - nodes[i - k - 1]);
    for (std::size_t k = n; k-- > 0;)
        for (std::size_t i = k; i < n; ++i)
            a[i] -= a[i + 1] * nodes[k];
    return a;
}

} // namespace qreliab
