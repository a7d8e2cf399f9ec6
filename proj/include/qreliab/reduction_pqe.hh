#ifndef QRELIAB_REDUCTION_PQE_HH
#define QRELIAB_REDUCTION_PQE_HH

#include <qreliab/bipartite.hh>
#include <qreliab/exact_eval.hh>
#include <qreliab/instance.hh>
#include <qreliab/numeric.hh>

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace qreliab {

struct ProbInstance
{
    Instance instance;
    ProbAssignment phi;
};

/// The graph as a Q1 instance, with c fresh T-neighbours `@w.<u>.<k>` hung
/// off every left vertex u and d fresh R-neighbours `@u.<w>.<k>` off every
/// right vertex w. phi = (r, 1, t): S-facts are certain.
ProbInstance build_icd(const BipartiteGraph & graph, int c, int d, const Rational & r, const Rational & t);

enum class PiOracle
{
    brute,
    formula
};

/// Probability that a world of I_{c,d} violates Q1. The formula oracle goes
/// through the independent-pair table and exists for cross-checking only.
Rational pi_value(const BipartiteGraph & graph, int c, int d, const Rational & r, const Rational & t, PiOracle oracle,
        std::size_t cap = default_brute_cap);

/// Kronecker factors: cell (c,d),(i,j) equals alpha[c]^i * beta[d]^j.
struct KronSystem
{
    std::vector<Rational> alpha; // (r/(1-r)) (1-t)^c, c = 0..|R|
    std::vector<Rational> beta;  // (t/(1-t)) (1-r)^d, d = 0..|T|

    Rational cell(int c, int d, int i, int j) const;
};

/// Requires 0 < r, t < 1.
KronSystem kron_system(int left_size, int right_size, const Rational & r, const Rational & t);

struct PqeReductionRun
{
    Rational r, t;
    /// Indexed [c][d].
    std::vector<std::vector<Rational>> pi;
    /// Indexed [i][j].
    std::vector<std::vector<Count>> x;
    Count p_result;
    std::size_t sigma = 0;
};

/// Computes every Pi_{c,d}, divides by (1-r)^|R| (1-t)^|T|, solves the
/// Kronecker system by one Vandermonde solve per factor, and sums X.
PqeReductionRun run_reduction_pqe(const BipartiteGraph & graph, const Rational & r, const Rational & t,
        PiOracle oracle = PiOracle::brute, std::size_t cap = default_brute_cap);

} // namespace qreliab

#endif // QRELIAB_REDUCTION_PQE_HH
