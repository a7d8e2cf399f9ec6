#ifndef QRELIAB_CQ_HH
#define QRELIAB_CQ_HH

#include <qreliab/instance.hh>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qreliab {

struct Term
{
    enum class Kind
    {
        variable,
        constant
    };

    Kind kind;
    std::string name;

    static Term var(std::string name) { return {Kind::variable, std::move(name)}; }
    static Term constant(std::string name) { return {Kind::constant, std::move(name)}; }

    bool is_variable() const noexcept { return kind == Kind::variable; }

    auto operator<=>(const Term &) const = default;
    bool operator==(const Term &) const = default;
};

struct Atom
{
    std::string relation;
    std::vector<Term> args;

    bool mentions(std::string_view variable) const;
    bool operator==(const Atom &) const = default;
};

std::string to_string(const Atom & atom);

/// A self-join-free Boolean conjunctive query. Validated on construction:
/// no relation symbol occurs in two atoms.
class Query
{
public:
    explicit Query(std::vector<Atom> atoms);

    const std::vector<Atom> & atoms() const noexcept { return _atoms; }
    const Schema & schema() const noexcept { return _schema; }
    /// Variables in order of first occurrence.
    const std::vector<std::string> & variables() const noexcept { return _variables; }

    std::size_t atom_of(std::string_view relation) const;

private:
    std::vector<Atom> _atoms;
    Schema _schema;
    std::vector<std::string> _variables;
};

std::string to_string(const Query & query);

/// Grammar: optional head `Q :-`, then comma-separated atoms `Rel(t1,...,tk)`.
/// Lowercase-initial tokens are variables; quoted or digit-initial tokens are
/// constants.
Query parse_query(std::string_view text);

/// `R1(x),...,Rr(x),S1(x,y),...,Ss(x,y),T1(y),...,Tt(y)`.
Query make_qrst(int r, int s, int t);

/// Q1 = `R(x), S(x,y), T(y)`.
Query make_q1();

/// Indices of the atoms mentioning `variable`.
std::set<std::size_t> atoms_of(const Query & query, std::string_view variable);

struct HierarchyWitness
{
    std::string x, y;
    std::set<std::size_t> atoms_x, atoms_y;
};

struct HierarchyReport
{
    bool hierarchical;
    std::optional<HierarchyWitness> witness;
};

/// Every variable pair must have nested or disjoint atom sets. The witness is
/// the first violating pair in first-occurrence order.
HierarchyReport classify_hierarchical(const Query & query);

struct NoncomparablePair
{
    std::string x, y;
    int r, s, t;

    bool operator==(const NoncomparablePair &) const = default;
};

/// Throws HierarchicalQueryError for hierarchical queries.
NoncomparablePair noncomparable_pair_and_rst(const Query & query);

struct Match
{
    /// Constant bound to each variable, in `Query::variables()` order.
    std::vector<std::string> assignment;
    /// Image fact of each atom, in atom order.
    std::vector<Fact> support;
};

/// All homomorphisms from the query into the instance, ordered
/// lexicographically by assignment. Throws SchemaError if a relation of the
/// query has a different arity in the instance.
std::vector<Match> enumerate_matches(const Query & query, const Instance & instance);

bool satisfies(const Instance & instance, const Query & query);

/// Throws SchemaError if a fact over a query relation has the wrong arity.
void check_compatible(const Query & query, const Instance & instance);

} // namespace qreliab

#endif // QRELIAB_CQ_HH
