#ifndef QRELIAB_VANDERMONDE_HH
#define QRELIAB_VANDERMONDE_HH

#include <qreliab/numeric.hh>

#include <span>
#include <vector>

namespace qreliab {

/// Throws DuplicateNodeError if two nodes coincide.
void check_distinct_nodes(std::span<const Rational> nodes);
void check_distinct_nodes(std::span<const Count> nodes);

/// Solves sum_k y[k] * nodes[k]^p = rhs[p] for p = 0..n-1 exactly
/// (Bjorck-Pereyra, O(n^2) operations).
std::vector<Rational> solve_vandermonde(std::span<const Rational> nodes, std::span<const Rational> rhs);

/// Integer variant. Runs in integers while every division is exact, which is
/// the case whenever the solution is integral; otherwise falls back to the
/// rational solve.
std::vector<Rational> solve_vandermonde(std::span<const Count> nodes, std::span<const Count> rhs);

/// Solves sum_j a[j] * nodes[i]^j = values[i] for i = 0..n-1: the monomial
/// coefficients of the interpolating polynomial.
std::vector<Rational> interpolate_vandermonde(std::span<const Rational> nodes, std::span<const Rational> values);

} // namespace qreliab

#endif // QRELIAB_VANDERMONDE_HH
