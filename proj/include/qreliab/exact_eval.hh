#ifndef QRELIAB_EXACT_EVAL_HH
#define QRELIAB_EXACT_EVAL_HH

#include <qreliab/cq.hh>
#include <qreliab/instance.hh>
#include <qreliab/numeric.hh>

#include <cstddef>

namespace qreliab {

inline constexpr std::size_t default_brute_cap = 30;

/// |Mod(Q, I)|: the number of subinstances of `instance` satisfying `query`.
/// Facts outside every match support are free and contribute a factor 2^k;
/// only the support facts are enumerated, and there may be at most `cap` of
/// them (CapExceededError otherwise).
Count ur_brute(const Query & query, const Instance & instance, std::size_t cap = default_brute_cap);

/// Pr(Q, I, pi) as the sum over satisfying worlds. Facts of probability 1 are
/// pinned present; `cap` bounds the number of uncertain support facts.
Rational pqe_brute(const Query & query, const Instance & instance, const ProbAssignment & pi,
        std::size_t cap = default_brute_cap);

/// Safe-plan evaluation for hierarchical queries: independent components
/// multiply, a root variable gives 1 - prod_a (1 - P(q[x->a])), and ground
/// atoms look up their fact. Throws NotHierarchicalError otherwise.
Rational pqe_safe(const Query & query, const Instance & instance, const ProbAssignment & pi);

/// 2^|I| * pqe_safe(q, I, 1/2).
Count ur_safe(const Query & query, const Instance & instance);

/// PQE_{r,s,1}(Q1) in polynomial time: drops S(a,b) without T(b), then
/// evaluates `R(x), S(x,y)` with phi = (r, s) through pqe_safe.
Rational rewrite_prob1(const Instance & q1_instance, const Rational & r, const Rational & s);

/// The matches' support facts, and each match as a bit mask over them.
struct SupportMasks
{
    std::vector<Fact> support_facts;
    std::vector<std::uint64_t> masks;
    /// Facts of the instance in no match support.
    std::size_t free_facts = 0;
};

/// Throws CapExceededError when more than `cap` facts occur in supports.
SupportMasks support_masks(const Query & query, const Instance & instance, std::size_t cap);

} // namespace qreliab

#endif // QRELIAB_EXACT_EVAL_HH
