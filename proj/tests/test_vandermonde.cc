#include <doctest.h>

#include <qreliab/errors.hh>
#include <qreliab/vandermonde.hh>

#include <random>

using namespace qreliab;

namespace
{
    /// Gaussian elimination on the explicit matrix, as a reference.
    std::vector<Rational> eliminate(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
    {
        const std::size_t n = b.size();
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (a[pivot][col] == 0)
                ++pivot;
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
            for (std::size_t row = 0; row < n; ++row) {
                if (row == col || a[row][col] == 0)
                    continue;
                Rational f = a[row][col] / a[col][col];
                for (std::size_t k = col; k < n; ++k)
                    a[row][k] -= f * a[col][k];
                b[row] -= f * b[col];
            }
        }
        for (std::size_t k = 0; k < n; ++k)
            b[k] /= a[k][k];
        return b;
    }

    Rational power(const Rational & x, std::size_t p)
    {
        Rational out = 1;
        for (std::size_t k = 0; k < p; ++k)
            out *= x;
        return out;
    }
}

TEST_CASE("small systems")
{
    std::vector<Count> nodes{2, 3}, rhs{5, 12};
    CHECK(solve_vandermonde(nodes, rhs) == std::vector<Rational>{3, 2});
    std::vector<Count> one{7}, c{11};
    CHECK(solve_vandermonde(one, c) == std::vector<Rational>{11});
    std::vector<Count> dup{2, 2}, any{1, 1};
    CHECK_THROWS_AS(solve_vandermonde(dup, any), DuplicateNodeError);
    std::vector<Count> none;
    CHECK(solve_vandermonde(none, none).empty());
    CHECK_THROWS_AS(solve_vandermonde(nodes, c), InvalidArgumentError);
}

TEST_CASE("fractional solutions fall back to rationals")
{
    // y = (1/2, 1/2) at nodes (1, 3): rhs = (1, 2)
    std::vector<Count> nodes{1, 3}, rhs{1, 2};
    CHECK(solve_vandermonde(nodes, rhs) == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("power-sum systems against elimination")
{
    std::mt19937_64 rng(99);
    for (int round = 0; round < 25; ++round) {
        std::size_t n = 1 + rng() % 7;
        std::vector<Rational> nodes, rhs;
        while (nodes.size() < n) {
            Rational x(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 5) + 1);
            x.canonicalize();
            if (std::find(nodes.begin(), nodes.end(), x) == nodes.end())
                nodes.push_back(x);
        }
        for (std::size_t k = 0; k < n; ++k)
            rhs.emplace_back(static_cast<long>(rng() % 100) - 50);
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t k = 0; k < n; ++k)
                a[p][k] = power(nodes[k], p);
        CHECK(solve_vandermonde(nodes, rhs) == eliminate(a, rhs));

        std::vector<std::vector<Rational>> interp(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                interp[i][j] = power(nodes[i], j);
        CHECK(interpolate_vandermonde(nodes, rhs) == eliminate(interp, rhs));
    }
}

TEST_CASE("integer path recovers integral solutions with huge nodes")
{
    std::mt19937_64 rng(1);
    std::vector<Count> nodes, y;
    for (int k = 0; k < 30; ++k) {
        nodes.push_back(pow2(400 + 13 * k) * (2 * k + 1) + 1);
        y.emplace_back(static_cast<unsigned long>(rng() % 1000));
    }
    std::vector<Count> rhs(nodes.size(), 0);
    for (std::size_t p = 0; p < rhs.size(); ++p)
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            Count term;
            mpz_pow_ui(term.get_mpz_t(), nodes[k].get_mpz_t(), p);
            rhs[p] += y[k] * term;
        }
    auto solved = solve_vandermonde(nodes, rhs);
    for (std::size_t k = 0; k < y.size(); ++k)
        CHECK(solved[k] == Rational(y[k]));
}
