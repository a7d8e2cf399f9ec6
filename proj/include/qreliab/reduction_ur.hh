#ifndef QRELIAB_REDUCTION_UR_HH
#define QRELIAB_REDUCTION_UR_HH

#include <qreliab/bipartite.hh>
#include <qreliab/cq.hh>
#include <qreliab/exact_eval.hh>
#include <qreliab/gadgets.hh>
#include <qreliab/instance.hh>
#include <qreliab/numeric.hh>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

namespace qreliab {

/// Multiplicities of the gadget copies in D_p and the system size.
struct ReductionParams
{
    int r = 0, s = 0, t = 0;
    int left_size = 0, right_size = 0, m = 0;
    /// Copies per p: edge (u,*)-gadgets, per-left-vertex gadgets, per-right-vertex gadgets.
    std::uint64_t m1 = 0, m2 = 0, m3 = 0;
    /// (|R|+1)(|T|+1)(m+1)^3 equations.
    std::uint64_t equations = 0;
    /// Set by with_override. The separation guarantees behind invertibility
    /// no longer hold, so such params only serve to test per-pair counts.
    bool overridden = false;
};

/// m1 = 4ms+1, m2 = m1 + 2m(t+s)m1 + 1, m3 = m1 + m2 + |R|(t+s)m2 + 1.
/// Throws InvalidArgumentError on overflow of 64 bits.
ReductionParams reduction_params(const BipartiteGraph & graph, int r, int s, int t);

ReductionParams with_override(ReductionParams params, std::uint64_t m1, std::uint64_t m2, std::uint64_t m3);

/// D_p: R_*(u) for u on the left, T_*(w) for w on the right; per edge (u,w)
/// p abcd-gadgets (u,.,.,w) and m1*p ab-gadgets (u,.); per left u m2*p
/// ab-gadgets (u,.); per right w m3*p ab-gadgets (.,w).
Instance build_dp(const BipartiteGraph & graph, const ReductionParams & params, std::uint64_t p);

/// gamma^c delta_r^d delta_t^d' delta_bot^e lambda_r^(m1(c+d) + m2 i) lambda_t^(m3 j)
/// lambda_bar_r^(m1(d'+e) + m2(|R|-i)) lambda_bar_t^(m3(|T|-j)).
/// Invalid profiles raise InvalidArgumentError. Unless params are
/// overridden, the exponent-block separation is asserted (InvariantError).
Count alpha_coefficient(const Profile & profile, const GadgetCounts & counts, const ReductionParams & params);

/// Violating worlds of D_p attributed to one pair (R', T') with this profile:
/// (2^r-1)^(|R|-i) (2^t-1)^(|T|-j) alpha^p.
Count per_pair_count(const Profile & profile, const GadgetCounts & counts, const ReductionParams & params,
        std::uint64_t p);

/// N_p = 2^|D_p| - |Mod(Q_rst, D_p)| from the per-pair formula, summed over
/// all pairs of the graph.
Count np_analytic(const BipartiteGraph & graph, const ReductionParams & params, std::uint64_t p,
        std::size_t cap = default_bipartite_cap);

/// N_0 .. N_{count-1} through the analytic formula.
std::vector<Count> np_analytic_all(const BipartiteGraph & graph, const ReductionParams & params, std::size_t count,
        std::size_t cap = default_bipartite_cap);

/// N_p by model counting on the materialized D_p.
Count np_brute(const BipartiteGraph & graph, const ReductionParams & params, std::uint64_t p,
        std::size_t cap = default_brute_cap);

enum class UrOracle
{
    analytic,
    brute
};

struct ReductionOptions
{
    UrOracle oracle = UrOracle::analytic;
    std::size_t bipartite_cap = default_bipartite_cap;
    std::size_t brute_cap = default_brute_cap;
    /// Writes D_p as `D_<p>.facts` for every p used.
    std::optional<std::filesystem::path> emit_instances;
};

struct ReductionRun
{
    ReductionParams params;
    GadgetCounts counts;
    /// N_0 .. N_{M-1}.
    std::vector<Count> n_vector;
    /// Recovered Y per valid profile cell (c + d + d' <= m), lexicographic.
    std::map<ProfileKey, Count> y_values;
    /// Number of independent pairs recovered from the c = 0 cells.
    Count p_result;
};

/// Valid profile cells in lexicographic (i, j, c, d, d') order.
std::vector<ProfileKey> profile_cells(int left_size, int right_size, int m);

/// Builds N_p through the oracle, solves the Vandermonde system in alpha for
/// Y, and sums Y / ((2^r-1)^(|R|-i) (2^t-1)^(|T|-j)) over the c = 0 cells.
/// The system has one unknown per valid cell; the remaining equations up to
/// M are checked for consistency.
ReductionRun run_reduction(const BipartiteGraph & graph, int r, int s, int t, const ReductionOptions & options = {});

/// Instance of `query` with as many satisfying subinstances as `rst_instance`
/// has for Q_{r,s,t}, where (x, y, r, s, t) comes from
/// noncomparable_pair_and_rst(query). Variables other than x and y go to the
/// constant `@c0`; each atom mentioning neither gets one extra fact.
Instance lemma_binary_transform(const Query & query, const Instance & rst_instance);

struct MergedInstance
{
    /// Over R/1, S/2, T/1.
    Instance instance;
    /// R -> 2^-r, S -> 2^-s, T -> 2^-t.
    ProbAssignment phi;
    /// Facts dropped because their bundle is incomplete.
    std::size_t useless_facts = 0;
};

/// Replaces each complete bundle of R_*, S_* or T_* facts on one element (or
/// pair) by a single R, S or T fact. Then
/// |Mod(Q_rst, I)| = 2^|I| Pr(Q1, merged, phi).
MergedInstance merge_power2(const Query & rst_query, const Instance & rst_instance);

} // namespace qreliab

#endif // QRELIAB_REDUCTION_UR_HH
