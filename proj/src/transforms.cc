#include <qreliab/errors.hh>
#include <qreliab/reduction_ur.hh>

#include <charconv>

namespace qreliab {

namespace
{
    struct AtomRoles
    {
        NoncomparablePair pair;
        std::vector<std::size_t> left, both, right, neither;
    };

    AtomRoles split_atoms(const Query & query)
    {
        AtomRoles roles{noncomparable_pair_and_rst(query), {}, {}, {}, {}};
        const auto & atoms = query.atoms();
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            bool has_x = atoms[a].mentions(roles.pair.x), has_y = atoms[a].mentions(roles.pair.y);
            auto & group = has_x ? (has_y ? roles.both : roles.left) : (has_y ? roles.right : roles.neither);
            group.push_back(a);
        }
        return roles;
    }

    /// `R3` -> ('R', 3); anything else is outside the Q_{r,s,t} schema.
    std::pair<char, std::size_t> rst_relation(const Fact & fact)
    {
        auto & name = fact.relation;
        std::size_t index = 0;
        bool ok = name.size() >= 2 && (name[0] == 'R' || name[0] == 'S' || name[0] == 'T');
        if (ok) {
            auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
            ok = ec == std::errc{} && end == name.data() + name.size() && index >= 1 && name[1] != '0';
        }
        if (! ok)
            throw SchemaError("fact " + to_string(fact) + " is not over R1..Rr, S1..Ss, T1..Tt");
        std::size_t arity = name[0] == 'S' ? 2 : 1;
        if (fact.args.size() != arity)
            throw SchemaError("fact " + to_string(fact) + " has the wrong arity");
        return {name[0], index};
    }

    Fact image(const Atom & atom, const NoncomparablePair & pair, const std::string & x_value,
            const std::string & y_value, const std::string & filler)
    {
        Fact fact{atom.relation, {}};
        for (auto & term : atom.args) {
            if (! term.is_variable())
                fact.args.push_back(term.name);
            else if (term.name == pair.x)
                fact.args.push_back(x_value);
            else if (term.name == pair.y)
                fact.args.push_back(y_value);
            else
                fact.args.push_back(filler);
        }
        return fact;
    }
}

Instance lemma_binary_transform(const Query & query, const Instance & rst_instance)
{
    auto roles = split_atoms(query);
    const auto & atoms = query.atoms();
    const auto filler = fresh_constant("c0");

    Instance out;
    for (auto & fact : rst_instance) {
        auto [kind, index] = rst_relation(fact);
        auto & group = kind == 'R' ? roles.left : kind == 'S' ? roles.both : roles.right;
        if (index > group.size())
            throw SchemaError("fact " + to_string(fact) + " is outside Q_{" + std::to_string(roles.pair.r) + ","
                    + std::to_string(roles.pair.s) + "," + std::to_string(roles.pair.t) + "}");
        auto & atom = atoms[group[index - 1]];
        const std::string & a = fact.args[0];
        const std::string & b = kind == 'S' ? fact.args[1] : fact.args[0];
        out.insert(image(atom, roles.pair, kind == 'T' ? filler : a, kind == 'R' ? filler : b, filler));
    }
    for (auto a : roles.neither)
        out.insert(image(atoms[a], roles.pair, filler, filler, filler));
    return out;
}

MergedInstance merge_power2(const Query & rst_query, const Instance & rst_instance)
{
    auto roles = split_atoms(rst_query);
    const auto & atoms = rst_query.atoms();
    const auto & x = roles.pair.x;
    const auto & y = roles.pair.y;
    auto shaped = [&](std::size_t a, std::initializer_list<const std::string *> vars) {
        auto & args = atoms[a].args;
        if (args.size() != vars.size())
            return false;
        auto it = vars.begin();
        for (auto & term : args)
            if (! term.is_variable() || term.name != **it++)
                return false;
        return true;
    };
    bool ok = roles.neither.empty();
    for (auto a : roles.left)
        ok = ok && shaped(a, {&x});
    for (auto a : roles.both)
        ok = ok && shaped(a, {&x, &y});
    for (auto a : roles.right)
        ok = ok && shaped(a, {&y});
    if (! ok)
        throw InvalidArgumentError("merge needs a query of the form R_*(x), S_*(x,y), T_*(y); got " + to_string(rst_query));
    for (auto & fact : rst_instance)
        if (rst_query.schema().find(fact.relation) == rst_query.schema().end())
            throw SchemaError("fact " + to_string(fact) + " is over a relation the query does not mention");
    check_compatible(rst_query, rst_instance);

    // Tally facts per element (or pair) and keep the complete bundles.
    auto complete = [&](const std::vector<std::size_t> & group) {
        std::map<std::vector<std::string>, std::size_t> tally;
        for (auto a : group) {
            auto [first, last] = rst_instance.facts_of(atoms[a].relation);
            for (auto it = first; it != last; ++it)
                ++tally[it->args];
        }
        std::vector<std::vector<std::string>> keys;
        for (auto & [args, n] : tally)
            if (n == group.size())
                keys.push_back(args);
        return keys;
    };

    MergedInstance out{{}, ProbAssignment::uniform(1), 0};
    std::size_t kept = 0;
    for (auto & args : complete(roles.left))
        out.instance.insert({"R", args}), kept += roles.left.size();
    for (auto & args : complete(roles.both))
        out.instance.insert({"S", args}), kept += roles.both.size();
    for (auto & args : complete(roles.right))
        out.instance.insert({"T", args}), kept += roles.right.size();
    out.useless_facts = rst_instance.size() - kept;
    out.phi = ProbAssignment::per_relation({{"R", Rational(1) / Rational(pow2(roles.pair.r))},
            {"S", Rational(1) / Rational(pow2(roles.pair.s))}, {"T", Rational(1) / Rational(pow2(roles.pair.t))}});
    return out;
}

} // namespace qreliab
