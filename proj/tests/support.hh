#ifndef QRELIAB_TESTS_SUPPORT_HH
#define QRELIAB_TESTS_SUPPORT_HH

// Generators shared by the unit tests and the acceptance binary.

#include <qreliab/bipartite.hh>
#include <qreliab/cq.hh>
#include <qreliab/instance.hh>
#include <qreliab/numeric.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace qreliab::testing {

inline int uniform_int(std::mt19937_64 & rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(std::mt19937_64 & rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

/// Atoms take the variable chain from a root to some node of a random forest,
/// so variable atom-sets are nested or disjoint by construction.
inline Query random_hierarchical_query(std::mt19937_64 & rng, int max_atoms = 4, int max_vars = 4)
{
    int vars = uniform_int(rng, 0, max_vars);
    std::vector<int> parent(vars);
    for (int v = 0; v < vars; ++v)
        parent[v] = uniform_int(rng, -1, v - 1);
    const char * names[] = {"x", "y", "z", "w"};

    int atoms = uniform_int(rng, 1, max_atoms);
    std::vector<Atom> out;
    for (int a = 0; a < atoms; ++a) {
        Atom atom{"R" + std::to_string(a), {}};
        int node = uniform_int(rng, -1, vars - 1);
        for (int v = node; v >= 0; v = parent[v])
            atom.args.push_back(Term::var(names[v]));
        std::shuffle(atom.args.begin(), atom.args.end(), rng);
        if (atom.args.empty() || coin(rng, 0.15))
            atom.args.insert(atom.args.begin() + uniform_int(rng, 0, static_cast<int>(atom.args.size())),
                    Term::constant(coin(rng) ? "a" : "b"));
        out.push_back(std::move(atom));
    }
    return Query(std::move(out));
}

/// Random facts over the query's relations and a small domain.
inline Instance random_instance(std::mt19937_64 & rng, const Query & query, int max_facts = 12, int domain = 3)
{
    Instance out;
    int target = uniform_int(rng, 0, max_facts);
    for (int tries = 0; tries < 8 * max_facts && static_cast<int>(out.size()) < target; ++tries) {
        auto & atom = query.atoms()[uniform_int(rng, 0, static_cast<int>(query.atoms().size()) - 1)];
        Fact fact{atom.relation, {}};
        for (std::size_t k = 0; k < atom.args.size(); ++k)
            fact.args.push_back(std::string(1, static_cast<char>('a' + uniform_int(rng, 0, domain - 1))));
        out.insert(std::move(fact));
    }
    return out;
}

inline Rational random_probability(std::mt19937_64 & rng, int max_den = 6)
{
    int den = uniform_int(rng, 1, max_den);
    Rational p(uniform_int(rng, 1, den), den);
    p.canonicalize();
    return p;
}

inline ProbAssignment random_fact_probs(std::mt19937_64 & rng, const Instance & instance)
{
    std::map<Fact, Rational> pi;
    for (auto & fact : instance)
        pi.emplace(fact, random_probability(rng));
    return ProbAssignment::per_fact(std::move(pi));
}

/// Each candidate fact of Q_{r,s,t} over x-values {a,b} and y-values {c,d}
/// is kept with the given probability.
inline Instance random_rst_instance(std::mt19937_64 & rng, int r, int s, int t, double keep = 0.6)
{
    const char * xs[] = {"a", "b"};
    const char * ys[] = {"c", "d"};
    Instance out;
    for (auto x : xs)
        for (int k = 1; k <= r; ++k)
            if (coin(rng, keep))
                out.insert({"R" + std::to_string(k), {x}});
    for (auto x : xs)
        for (auto y : ys)
            for (int k = 1; k <= s; ++k)
                if (coin(rng, keep))
                    out.insert({"S" + std::to_string(k), {x, y}});
    for (auto y : ys)
        for (int k = 1; k <= t; ++k)
            if (coin(rng, keep))
                out.insert({"T" + std::to_string(k), {y}});
    return out;
}

/// Every bipartite graph with the given side sizes and at most `max_edges` edges.
inline std::vector<BipartiteGraph> graphs_with(int left, int right, int max_edges)
{
    std::vector<std::string> l, r;
    for (int k = 0; k < left; ++k)
        l.push_back("u" + std::to_string(k));
    for (int k = 0; k < right; ++k)
        r.push_back("w" + std::to_string(k));
    std::vector<BipartiteGraph::Edge> all;
    for (int u = 0; u < left; ++u)
        for (int w = 0; w < right; ++w)
            all.emplace_back(u, w);

    std::vector<BipartiteGraph> out;
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        if (std::popcount(mask) > max_edges)
            continue;
        std::vector<BipartiteGraph::Edge> edges;
        for (std::size_t k = 0; k < all.size(); ++k)
            if ((mask >> k) & 1)
                edges.push_back(all[k]);
        out.emplace_back(l, r, edges);
    }
    return out;
}

/// All graphs with at most `max_side` vertices per side.
inline std::vector<BipartiteGraph> small_graphs(int max_side, int max_edges)
{
    std::vector<BipartiteGraph> out;
    for (int left = 0; left <= max_side; ++left)
        for (int right = 0; right <= max_side; ++right)
            for (auto & g : graphs_with(left, right, max_edges))
                out.push_back(std::move(g));
    return out;
}

inline BipartiteGraph single_edge()
{
    return BipartiteGraph({"u"}, {"w"}, {{0, 0}});
}

/// Independent-pair count straight from the definition.
inline Count independent_pairs_naive(const BipartiteGraph & g)
{
    Count total = 0;
    for (std::uint64_t ls = 0; ls < (std::uint64_t{1} << g.left_size()); ++ls)
        for (std::uint64_t rs = 0; rs < (std::uint64_t{1} << g.right_size()); ++rs) {
            bool independent = true;
            for (auto [u, w] : g.edges())
                independent = independent && ! (((ls >> u) & 1) && ((rs >> w) & 1));
            total += independent;
        }
    return total;
}

} // namespace qreliab::testing

#endif // QRELIAB_TESTS_SUPPORT_HH
