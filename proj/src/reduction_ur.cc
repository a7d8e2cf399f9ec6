#include <qreliab/errors.hh>
#include <qreliab/kernels.hh>
#include <qreliab/reduction_ur.hh>
#include <qreliab/vandermonde.hh>

#include <fstream>

namespace qreliab {

namespace
{
    std::uint64_t mul(std::uint64_t a, std::uint64_t b)
    {
        std::uint64_t out;
        if (__builtin_mul_overflow(a, b, &out))
            throw InvalidArgumentError("reduction parameters overflow 64 bits");
        return out;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b)
    {
        std::uint64_t out;
        if (__builtin_add_overflow(a, b, &out))
            throw InvalidArgumentError("reduction parameters overflow 64 bits");
        return out;
    }

    Count power(const Count & base, std::uint64_t exponent)
    {
        Count out;
        mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
        return out;
    }

    int checked_e(const ProfileKey & key, const ReductionParams & params)
    {
        if (key.i < 0 || key.i > params.left_size || key.j < 0 || key.j > params.right_size || key.c < 0 || key.d < 0
                || key.dp < 0 || key.c + key.d + key.dp > params.m)
            throw InvalidArgumentError("invalid profile (i,j,c,d,d')=(" + std::to_string(key.i) + ","
                    + std::to_string(key.j) + "," + std::to_string(key.c) + "," + std::to_string(key.d) + ","
                    + std::to_string(key.dp) + ") for |R|=" + std::to_string(params.left_size)
                    + ", |T|=" + std::to_string(params.right_size) + ", m=" + std::to_string(params.m));
        return params.m - key.c - key.d - key.dp;
    }

    Profile to_profile(const ProfileKey & key, int m)
    {
        return {key.i, key.j, key.c, key.d, key.dp, m - key.c - key.d - key.dp};
    }

    std::vector<Count> alphas_of(std::span<const ProfileKey> keys, const GadgetCounts & counts,
            const ReductionParams & params)
    {
        std::vector<Count> out(keys.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t k = 0; k < keys.size(); ++k)
            out[k] = alpha_coefficient(to_profile(keys[k], params.m), counts, params);
        return out;
    }

    void check_params(const ReductionParams & params)
    {
        if (params.r < 1 || params.s < 1 || params.t < 1)
            throw InvalidArgumentError("r, s, t must be positive");
    }
}

ReductionParams reduction_params(const BipartiteGraph & graph, int r, int s, int t)
{
    ReductionParams p;
    p.r = r, p.s = s, p.t = t;
    check_params(p);
    p.left_size = graph.left_size();
    p.right_size = graph.right_size();
    p.m = graph.m();
    const std::uint64_t m = p.m, ts = static_cast<std::uint64_t>(t + s);
    p.m1 = add(mul(mul(4, m), s), 1);
    p.m2 = add(add(p.m1, mul(mul(mul(2, m), ts), p.m1)), 1);
    p.m3 = add(add(add(p.m1, p.m2), mul(mul(p.left_size, ts), p.m2)), 1);
    const std::uint64_t m_plus = m + 1;
    p.equations = mul(mul(mul(p.left_size + 1, p.right_size + 1), m_plus), mul(m_plus, m_plus));
    return p;
}

ReductionParams with_override(ReductionParams params, std::uint64_t m1, std::uint64_t m2, std::uint64_t m3)
{
    params.m1 = m1;
    params.m2 = m2;
    params.m3 = m3;
    params.overridden = true;
    return params;
}

Instance build_dp(const BipartiteGraph & graph, const ReductionParams & params, std::uint64_t p)
{
    check_params(params);
    const int r = params.r, s = params.s, t = params.t;
    Instance out;
    auto add_all = [&](const Instance & gadget) {
        for (auto & fact : gadget)
            out.insert(fact);
    };
    auto ab = [&](std::string a, std::string b) {
        std::string endpoints[] = {std::move(a), std::move(b)};
        add_all(build_gadget(GadgetKind::ab, r, s, t, endpoints));
    };

    for (auto & u : graph.left())
        for (int k = 1; k <= r; ++k)
            out.insert({"R" + std::to_string(k), {u}});
    for (auto & w : graph.right())
        for (int k = 1; k <= t; ++k)
            out.insert({"T" + std::to_string(k), {w}});

    const auto edge_copies = mul(params.m1, p), left_copies = mul(params.m2, p), right_copies = mul(params.m3, p);
    long edge_index = 0;
    for (auto [ui, wi] : graph.edges()) {
        auto & u = graph.left()[ui];
        auto & w = graph.right()[wi];
        auto ns = "e" + std::to_string(edge_index);
        for (std::uint64_t copy = 0; copy < p; ++copy) {
            auto c = static_cast<long>(copy);
            std::string endpoints[] = {u, fresh_constant(ns, {c}) + ".b", fresh_constant(ns, {c}) + ".c", w};
            add_all(build_gadget(GadgetKind::abcd, r, s, t, endpoints));
        }
        for (std::uint64_t copy = 0; copy < edge_copies; ++copy)
            ab(u, fresh_constant(ns + ".g", {static_cast<long>(copy)}));
        ++edge_index;
    }
    for (std::size_t idx = 0; idx < graph.left().size(); ++idx) {
        auto ns = "u" + std::to_string(idx);
        for (std::uint64_t copy = 0; copy < left_copies; ++copy)
            ab(graph.left()[idx], fresh_constant(ns, {static_cast<long>(copy)}) + ".b");
    }
    for (std::size_t idx = 0; idx < graph.right().size(); ++idx) {
        auto ns = "w" + std::to_string(idx);
        for (std::uint64_t copy = 0; copy < right_copies; ++copy)
            ab(fresh_constant(ns, {static_cast<long>(copy)}) + ".a", graph.right()[idx]);
    }
    return out;
}

Count alpha_coefficient(const Profile & profile, const GadgetCounts & counts, const ReductionParams & params)
{
    check_params(params);
    if (counts.r != params.r || counts.s != params.s || counts.t != params.t)
        throw InvalidArgumentError("gadget counts were computed for different (r,s,t)");
    const int e = checked_e(profile.key(), params);
    if (profile.e != e)
        throw InvalidArgumentError("profile has e=" + std::to_string(profile.e) + " but c+d+d'+e must equal m="
                + std::to_string(params.m));

    const std::uint64_t i = profile.i, j = profile.j, c = profile.c, d = profile.d, dp = profile.dp;
    const std::uint64_t ue = e;
    const std::uint64_t left_out = params.left_size - profile.i, right_out = params.right_size - profile.j;

    Count alpha = power(counts.gamma, c) * power(counts.delta_r, d) * power(counts.delta_t, dp)
        * power(counts.delta_bot, ue);
    alpha *= power(counts.lambda_r, add(mul(params.m1, c + d), mul(params.m2, i)));
    alpha *= power(counts.lambda_t, mul(params.m3, j));
    alpha *= power(counts.lambda_bar_r, add(mul(params.m1, dp + ue), mul(params.m2, left_out)));
    alpha *= power(counts.lambda_bar_t, mul(params.m3, right_out));

    if (! params.overridden) {
        // The 2-adic valuation of alpha splits into blocks that must not
        // overlap; this is what makes distinct profiles give distinct alphas.
        const std::uint64_t s = params.s, ts = params.t + params.s, rs = params.r + params.s;
        const std::uint64_t low = s * (d + dp + 2 * ue);
        const std::uint64_t mid = add(low, mul(mul(ts, params.m1), dp + ue));
        const std::uint64_t high = add(mid, mul(mul(ts, params.m2), left_out));
        const std::uint64_t top = add(high, mul(mul(rs, params.m3), right_out));
        if (! (low < params.m1 && mid < params.m2 && high < params.m3))
            throw InvariantError("exponent blocks of alpha overlap");
        if (alpha == 0 || two_adic_valuation(alpha) != top)
            throw InvariantError("2-adic valuation of alpha differs from its block decomposition");
    }
    return alpha;
}

Count per_pair_count(const Profile & profile, const GadgetCounts & counts, const ReductionParams & params,
        std::uint64_t p)
{
    auto weight = y_weight(params.r, params.t, params.left_size, params.right_size, profile.i, profile.j);
    return weight * power(alpha_coefficient(profile, counts, params), p);
}

namespace
{
    void check_graph(const BipartiteGraph & graph, const ReductionParams & params)
    {
        if (graph.left_size() != params.left_size || graph.right_size() != params.right_size || graph.m() != params.m)
            throw InvalidArgumentError("reduction parameters were computed for a different graph");
    }

    void check_bipartite_cap(const BipartiteGraph & graph, std::size_t cap)
    {
        auto n = static_cast<std::size_t>(graph.left_size() + graph.right_size());
        if (cap > max_enumeration_width)
            throw InvalidArgumentError("bipartite enumeration cap exceeds " + std::to_string(max_enumeration_width));
        if (n > cap)
            throw CapExceededError("bipartite pair enumeration", n, cap);
    }

    struct WeightedCells
    {
        std::vector<ProfileKey> keys;
        std::vector<Count> alphas, weights;
    };

    WeightedCells weighted_cells(const BipartiteGraph & graph, const ReductionParams & params, std::size_t cap)
    {
        check_graph(graph, params);
        check_bipartite_cap(graph, cap);
        WeightedCells out;
        for (auto & [key, count] : kernels::omp::profile_histogram(graph.shape())) {
            out.keys.push_back(key);
            out.weights.push_back(Count(static_cast<unsigned long>(count))
                    * y_weight(params.r, params.t, params.left_size, params.right_size, key.i, key.j));
        }
        out.alphas = alphas_of(out.keys, closed_counts(params.r, params.s, params.t), params);
        return out;
    }
}

Count np_analytic(const BipartiteGraph & graph, const ReductionParams & params, std::uint64_t p, std::size_t cap)
{
    auto cells = weighted_cells(graph, params, cap);
    Count total = 0;
    for (std::size_t k = 0; k < cells.keys.size(); ++k)
        total += cells.weights[k] * power(cells.alphas[k], p);
    return total;
}

std::vector<Count> np_analytic_all(const BipartiteGraph & graph, const ReductionParams & params, std::size_t count,
        std::size_t cap)
{
    auto cells = weighted_cells(graph, params, cap);
    return kernels::omp::power_sums(cells.alphas, cells.weights, count);
}

Count np_brute(const BipartiteGraph & graph, const ReductionParams & params, std::uint64_t p, std::size_t cap)
{
    check_graph(graph, params);
    auto dp = build_dp(graph, params, p);
    return pow2(dp.size()) - ur_brute(make_qrst(params.r, params.s, params.t), dp, cap);
}

std::vector<ProfileKey> profile_cells(int left_size, int right_size, int m)
{
    std::vector<ProfileKey> cells;
    for (int i = 0; i <= left_size; ++i)
        for (int j = 0; j <= right_size; ++j)
            for (int c = 0; c <= m; ++c)
                for (int d = 0; c + d <= m; ++d)
                    for (int dp = 0; c + d + dp <= m; ++dp)
                        cells.push_back({i, j, c, d, dp});
    return cells;
}

ReductionRun run_reduction(const BipartiteGraph & graph, int r, int s, int t, const ReductionOptions & options)
{
    ReductionRun run;
    run.params = reduction_params(graph, r, s, t);
    run.counts = closed_counts(r, s, t);
    const auto & params = run.params;
    const auto equations = static_cast<std::size_t>(params.equations);

    auto cells = profile_cells(params.left_size, params.right_size, params.m);
    auto alphas = alphas_of(cells, run.counts, params);
    check_distinct_nodes(std::span<const Count>(alphas));

    if (options.emit_instances) {
        std::filesystem::create_directories(*options.emit_instances);
        for (std::size_t p = 0; p < equations; ++p) {
            auto path = *options.emit_instances / ("D_" + std::to_string(p) + ".facts");
            std::ofstream file(path);
            file << serialize(build_dp(graph, params, p));
            if (! file)
                throw Error("cannot write " + path.string());
        }
    }

    if (options.oracle == UrOracle::analytic)
        run.n_vector = np_analytic_all(graph, params, equations, options.bipartite_cap);
    else
        for (std::size_t p = 0; p < equations; ++p)
            run.n_vector.push_back(np_brute(graph, params, p, options.brute_cap));

    const std::size_t unknowns = cells.size();
    auto y = solve_vandermonde(std::span<const Count>(alphas),
            std::span<const Count>(run.n_vector.data(), unknowns));

    std::vector<Count> y_int;
    for (std::size_t k = 0; k < unknowns; ++k) {
        auto value = to_integer(y[k], "recovered Y");
        if (value < 0)
            throw InvariantError("recovered Y is negative");
        y_int.push_back(value);
    }
    auto replay = kernels::omp::power_sums(alphas, y_int, equations);
    for (std::size_t p = unknowns; p < equations; ++p)
        if (replay[p] != run.n_vector[p])
            throw InvariantError("equation p=" + std::to_string(p) + " is inconsistent with the recovered Y");

    run.p_result = 0;
    for (std::size_t k = 0; k < unknowns; ++k) {
        auto & key = cells[k];
        if (y_int[k] != 0)
            run.y_values.emplace(key, y_int[k]);
        if (key.c != 0)
            continue;
        auto weight = y_weight(r, t, params.left_size, params.right_size, key.i, key.j);
        Rational share(y_int[k], weight);
        share.canonicalize();
        run.p_result += to_integer(share, "Y divided by its weight");
    }
    return run;
}

} // namespace qreliab
