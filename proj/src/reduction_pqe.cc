#include <qreliab/errors.hh>
#include <qreliab/reduction_pqe.hh>
#include <qreliab/vandermonde.hh>

namespace qreliab {

namespace
{
    Rational power(const Rational & base, long exponent)
    {
        Rational out;
        mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
        mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
        return out;
    }

    void check_open_unit(const Rational & p, const char * name)
    {
        if (p == 1)
            throw InvalidArgumentError(std::string(name) + " = 1 has no odds ratio; that case is solvable directly");
        if (! (p > 0 && p < 1))
            throw ProbabilityError(std::string(name) + " must lie strictly between 0 and 1, got " + format_rational(p));
    }
}

ProbInstance build_icd(const BipartiteGraph & graph, int c, int d, const Rational & r, const Rational & t)
{
    if (c < 0 || d < 0)
        throw InvalidArgumentError("c and d must be non-negative");
    check_probability(r, "relation R");
    check_probability(t, "relation T");
    Instance out;
    for (auto & u : graph.left())
        out.insert({"R", {u}});
    for (auto & w : graph.right())
        out.insert({"T", {w}});
    for (auto [ui, wi] : graph.edges())
        out.insert({"S", {graph.left()[ui], graph.right()[wi]}});
    for (auto & u : graph.left())
        for (int k = 1; k <= c; ++k) {
            auto fresh = "@w." + u + "." + std::to_string(k);
            out.insert({"T", {fresh}});
            out.insert({"S", {u, fresh}});
        }
    for (auto & w : graph.right())
        for (int k = 1; k <= d; ++k) {
            auto fresh = "@u." + w + "." + std::to_string(k);
            out.insert({"R", {fresh}});
            out.insert({"S", {fresh, w}});
        }
    return {std::move(out), ProbAssignment::per_relation({{"R", r}, {"S", Rational(1)}, {"T", t}})};
}

Rational KronSystem::cell(int c, int d, int i, int j) const
{
    return power(alpha.at(c), i) * power(beta.at(d), j);
}

KronSystem kron_system(int left_size, int right_size, const Rational & r, const Rational & t)
{
    check_open_unit(r, "r");
    check_open_unit(t, "t");
    KronSystem system;
    const Rational r_odds = r / (1 - r), t_odds = t / (1 - t);
    for (int c = 0; c <= left_size; ++c)
        system.alpha.push_back(r_odds * power(1 - t, c));
    for (int d = 0; d <= right_size; ++d)
        system.beta.push_back(t_odds * power(1 - r, d));
    return system;
}

Rational pi_value(const BipartiteGraph & graph, int c, int d, const Rational & r, const Rational & t, PiOracle oracle,
        std::size_t cap)
{
    if (oracle == PiOracle::brute) {
        auto icd = build_icd(graph, c, d, r, t);
        return 1 - pqe_brute(make_q1(), icd.instance, icd.phi, cap);
    }
    auto system = kron_system(std::max(graph.left_size(), c), std::max(graph.right_size(), d), r, t);
    auto counts = independent_pairs_by_size(graph, cap);
    Rational sum = 0;
    for (int i = 0; i <= graph.left_size(); ++i)
        for (int j = 0; j <= graph.right_size(); ++j)
            sum += Rational(counts[i][j]) * system.cell(c, d, i, j);
    return power(1 - r, graph.left_size()) * power(1 - t, graph.right_size()) * sum;
}

PqeReductionRun run_reduction_pqe(const BipartiteGraph & graph, const Rational & r, const Rational & t,
        PiOracle oracle, std::size_t cap)
{
    const int left = graph.left_size(), right = graph.right_size();
    auto system = kron_system(left, right, r, t);
    check_distinct_nodes(std::span<const Rational>(system.alpha));
    check_distinct_nodes(std::span<const Rational>(system.beta));

    PqeReductionRun run;
    run.r = r;
    run.t = t;
    run.sigma = static_cast<std::size_t>(left + 1) * static_cast<std::size_t>(right + 1);
    run.pi.assign(left + 1, std::vector<Rational>(right + 1));
    for (int c = 0; c <= left; ++c)
        for (int d = 0; d <= right; ++d)
            run.pi[c][d] = pi_value(graph, c, d, r, t, oracle, cap);

    const Rational scale = power(1 - r, left) * power(1 - t, right);
    // Per c: sum_j beta_d^j W[c][j] = Pi[c][d] / scale.
    std::vector<std::vector<Rational>> w(left + 1);
    for (int c = 0; c <= left; ++c) {
        std::vector<Rational> z;
        for (int d = 0; d <= right; ++d)
            z.push_back(run.pi[c][d] / scale);
        w[c] = interpolate_vandermonde(system.beta, z);
    }
    // Per j: sum_i alpha_c^i X[i][j] = W[c][j].
    run.x.assign(left + 1, std::vector<Count>(right + 1));
    run.p_result = 0;
    for (int j = 0; j <= right; ++j) {
        std::vector<Rational> column;
        for (int c = 0; c <= left; ++c)
            column.push_back(w[c][j]);
        auto solved = interpolate_vandermonde(system.alpha, column);
        for (int i = 0; i <= left; ++i) {
            auto x = to_integer(solved[i], "recovered X");
            if (x < 0)
                throw InvariantError("recovered X is negative");
            run.p_result += x;
            run.x[i][j] = std::move(x);
        }
    }
    return run;
}

} // namespace qreliab
