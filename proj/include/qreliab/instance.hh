#ifndef QRELIAB_INSTANCE_HH
#define QRELIAB_INSTANCE_HH

#include <qreliab/numeric.hh>

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qreliab {

/// Relation symbol -> arity.
using Schema = std::map<std::string, std::size_t, std::less<>>;

struct Fact
{
    std::string relation;
    std::vector<std::string> args;

    auto operator<=>(const Fact &) const = default;
    bool operator==(const Fact &) const = default;
};

/// `R(a,b)`; `U()` for nullary facts.
std::string to_string(const Fact & fact);

/// A finite set of facts. Iteration order is lexicographic by (relation,
/// args), so the facts of one relation form a contiguous range.
class Instance
{
public:
    using const_iterator = std::set<Fact>::const_iterator;

    Instance() = default;
    Instance(std::initializer_list<Fact> facts);
    explicit Instance(std::span<const Fact> facts);

    /// Returns false when the fact was already present.
    bool insert(Fact fact);
    bool contains(const Fact & fact) const;

    std::size_t size() const noexcept { return _facts.size(); }
    bool empty() const noexcept { return _facts.empty(); }
    const_iterator begin() const { return _facts.begin(); }
    const_iterator end() const { return _facts.end(); }

    /// Contiguous range of the facts over `relation`.
    std::pair<const_iterator, const_iterator> facts_of(std::string_view relation) const;

    std::vector<Fact> facts() const { return {_facts.begin(), _facts.end()}; }

    bool operator==(const Instance &) const = default;

private:
    std::set<Fact> _facts;
};

/// Parses a fact file: one `Rel(c1,...,ck)` per line, `#` comment lines and
/// blank lines ignored. Every fact is checked against `schema`.
Instance parse_instance(std::string_view text, const Schema & schema);

/// Same grammar, no schema check beyond consistent arity per relation.
Instance parse_instance(std::string_view text);

/// One fact per line, sorted, newline-terminated.
std::string serialize(const Instance & instance);

/// `@ns.i1.i2...`; user constants never contain `@`, so these never collide.
std::string fresh_constant(std::string_view ns, std::span<const long> indices = {});
std::string fresh_constant(std::string_view ns, std::initializer_list<long> indices);

/// Per-fact or per-relation exact probabilities, each in (0, 1].
class ProbAssignment
{
public:
    enum class Mode
    {
        per_fact,
        per_relation
    };

    static ProbAssignment uniform(const Rational & p);
    static ProbAssignment per_relation(std::map<std::string, Rational, std::less<>> phi);
    static ProbAssignment per_fact(std::map<Fact, Rational> pi);

    Mode mode() const noexcept { return _mode; }

    /// Throws ProbabilityError if `fact` has no probability.
    const Rational & probability(const Fact & fact) const;

    const std::map<std::string, Rational, std::less<>> & relation_map() const { return _by_relation; }
    const std::map<Fact, Rational> & fact_map() const { return _by_fact; }

private:
    ProbAssignment() = default;

    Mode _mode = Mode::per_relation;
    bool _uniform = false;
    Rational _uniform_value;
    std::map<std::string, Rational, std::less<>> _by_relation;
    std::map<Fact, Rational> _by_fact;
};

/// Lines `Rel p/q` (per_relation) or `Rel(c,...) p/q` (per_fact).
ProbAssignment parse_prob_map(std::string_view text, ProbAssignment::Mode mode);

/// Throws ProbabilityError unless 0 < p <= 1.
void check_probability(const Rational & p, std::string_view context);

} // namespace qreliab

#endif // QRELIAB_INSTANCE_HH
