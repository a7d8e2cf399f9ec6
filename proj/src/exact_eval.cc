#include <qreliab/errors.hh>
#include <qreliab/exact_eval.hh>
#include <qreliab/kernels.hh>

#include <algorithm>
#include <map>
#include <numeric>

namespace qreliab {

namespace
{
    std::size_t checked_cap(std::size_t cap)
    {
        if (cap > max_enumeration_width)
            throw InvalidArgumentError("enumeration cap " + std::to_string(cap) + " exceeds the supported maximum "
                    + std::to_string(max_enumeration_width));
        return cap;
    }
}

SupportMasks support_masks(const Query & query, const Instance & instance, std::size_t cap)
{
    checked_cap(cap);
    auto matches = enumerate_matches(query, instance);

    std::map<Fact, std::size_t> index;
    for (auto & match : matches)
        for (auto & fact : match.support)
            index.emplace(fact, 0);
    if (index.size() > cap)
        throw CapExceededError("brute-force model counting", index.size(), cap);

    SupportMasks result;
    for (auto & [fact, position] : index) {
        position = result.support_facts.size();
        result.support_facts.push_back(fact);
    }
    for (auto & match : matches) {
        std::uint64_t mask = 0;
        for (auto & fact : match.support)
            mask |= std::uint64_t{1} << index.at(fact);
        result.masks.push_back(mask);
    }
    result.free_facts = instance.size() - result.support_facts.size();
    return result;
}

Count ur_brute(const Query & query, const Instance & instance, std::size_t cap)
{
    auto support = support_masks(query, instance, cap);
    auto n = static_cast<unsigned>(support.support_facts.size());
    return kernels::omp::count_covering_subsets(n, support.masks) * pow2(support.free_facts);
}

Rational pqe_brute(const Query & query, const Instance & instance, const ProbAssignment & pi, std::size_t cap)
{
    checked_cap(cap);
    for (auto & fact : instance)
        pi.probability(fact);

    // Enumerate only over uncertain support facts; certain ones are pinned present.
    auto support = support_masks(query, instance, std::max<std::size_t>(cap, max_enumeration_width));
    std::vector<std::size_t> uncertain_position(support.support_facts.size(), 0);
    std::uint64_t certain = 0;
    std::vector<Count> present, absent;
    Count denominator = 1;
    for (std::size_t f = 0; f < support.support_facts.size(); ++f) {
        auto & p = pi.probability(support.support_facts[f]);
        if (p == 1) {
            certain |= std::uint64_t{1} << f;
            continue;
        }
        uncertain_position[f] = present.size();
        present.push_back(p.get_num());
        absent.push_back(p.get_den() - p.get_num());
        denominator *= p.get_den();
    }
    if (present.size() > cap)
        throw CapExceededError("brute-force probability evaluation", present.size(), cap);

    std::vector<std::uint64_t> masks;
    for (auto m : support.masks) {
        std::uint64_t remapped = 0;
        for (std::size_t f = 0; f < support.support_facts.size(); ++f)
            if (((m >> f) & 1) && ! ((certain >> f) & 1))
                remapped |= std::uint64_t{1} << uncertain_position[f];
        masks.push_back(remapped);
    }

    auto numerator = kernels::omp::weighted_covering_sum(static_cast<unsigned>(present.size()), masks, present, absent);
    Rational result(numerator, denominator);
    result.canonicalize();
    return result;
}

namespace
{
    class SafePlan
    {
    public:
        SafePlan(const Query & query, const Instance & instance, const ProbAssignment & pi) :
            _order(query.variables()),
            _instance(instance),
            _pi(pi)
        {
        }

        Rational probability(const std::vector<Atom> & atoms) const
        {
            if (atoms.empty())
                return 1;
            auto components = split_components(atoms);
            if (components.size() > 1) {
                Rational product = 1;
                for (auto & component : components) {
                    product *= probability(component);
                    if (product == 0)
                        break;
                }
                return product;
            }
            return connected_probability(atoms);
        }

    private:
        static std::vector<std::vector<Atom>> split_components(const std::vector<Atom> & atoms)
        {
            std::vector<std::size_t> parent(atoms.size());
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](std::size_t a) {
                while (parent[a] != a)
                    a = parent[a] = parent[parent[a]];
                return a;
            };
            for (std::size_t a = 0; a < atoms.size(); ++a)
                for (std::size_t b = a + 1; b < atoms.size(); ++b)
                    for (auto & term : atoms[a].args)
                        if (term.is_variable() && atoms[b].mentions(term.name)) {
                            parent[find(a)] = find(b);
                            break;
                        }

            std::vector<std::vector<Atom>> components;
            std::map<std::size_t, std::size_t> slot;
            for (std::size_t a = 0; a < atoms.size(); ++a) {
                auto root = find(a);
                auto [it, fresh] = slot.emplace(root, components.size());
                if (fresh)
                    components.emplace_back();
                components[it->second].push_back(atoms[a]);
            }
            return components;
        }

        Rational connected_probability(const std::vector<Atom> & atoms) const
        {
            const Atom & first = atoms.front();
            bool ground = std::none_of(first.args.begin(), first.args.end(), [](const Term & t) { return t.is_variable(); });
            if (ground) {
                Fact fact{first.relation, {}};
                for (auto & term : first.args)
                    fact.args.push_back(term.name);
                return _instance.contains(fact) ? _pi.probability(fact) : Rational(0);
            }

            auto root = std::find_if(_order.begin(), _order.end(), [&](const std::string & v) {
                return std::all_of(atoms.begin(), atoms.end(), [&](const Atom & a) { return a.mentions(v); });
            });
            if (root == _order.end())
                throw NotHierarchicalError("no root variable in a connected component: the query is not hierarchical");

            Rational none_true = 1;
            for (auto & value : candidate_values(first, *root)) {
                auto branch = probability(substitute(atoms, *root, value));
                none_true *= 1 - branch;
            }
            return 1 - none_true;
        }

        std::vector<std::string> candidate_values(const Atom & atom, const std::string & variable) const
        {
            std::size_t position = 0;
            while (! (atom.args[position].is_variable() && atom.args[position].name == variable))
                ++position;

            std::vector<std::string> values;
            auto [first, last] = _instance.facts_of(atom.relation);
            for (auto it = first; it != last; ++it) {
                bool fits = true;
                for (std::size_t k = 0; k < atom.args.size() && fits; ++k)
                    fits = atom.args[k].is_variable() || atom.args[k].name == it->args[k];
                if (fits)
                    values.push_back(it->args[position]);
            }
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            return values;
        }

        static std::vector<Atom> substitute(std::vector<Atom> atoms, const std::string & variable, const std::string & value)
        {
            for (auto & atom : atoms)
                for (auto & term : atom.args)
                    if (term.is_variable() && term.name == variable)
                        term = Term::constant(value);
            return atoms;
        }

        const std::vector<std::string> & _order;
        const Instance & _instance;
        const ProbAssignment & _pi;
    };
}

Rational pqe_safe(const Query & query, const Instance & instance, const ProbAssignment & pi)
{
    auto report = classify_hierarchical(query);
    if (! report.hierarchical)
        throw NotHierarchicalError("safe-plan evaluation needs a hierarchical query; witness (" + report.witness->x + ","
                + report.witness->y + ") in " + to_string(query));
    check_compatible(query, instance);
    return SafePlan(query, instance, pi).probability(query.atoms());
}

Count ur_safe(const Query & query, const Instance & instance)
{
    auto probability = pqe_safe(query, instance, ProbAssignment::uniform(Rational(1, 2)));
    return to_integer(probability * Rational(pow2(instance.size())), "2^|I| * Pr(Q, I, 1/2)");
}

Rational rewrite_prob1(const Instance & q1_instance, const Rational & r, const Rational & s)
{
    check_probability(r, "relation R");
    check_probability(s, "relation S");
    static const Schema q1_schema{{"R", 1}, {"S", 2}, {"T", 1}};
    for (auto & fact : q1_instance) {
        auto it = q1_schema.find(fact.relation);
        if (it == q1_schema.end() || it->second != fact.args.size())
            throw SchemaError("not a Q1 instance: unexpected fact " + to_string(fact));
    }

    Instance rewritten;
    for (auto & fact : q1_instance) {
        if (fact.relation == "R")
            rewritten.insert(fact);
        else if (fact.relation == "S" && q1_instance.contains(Fact{"T", {fact.args[1]}}))
            rewritten.insert(fact);
    }
    static const Query rs_query = parse_query("R(x), S(x,y)");
    return pqe_safe(rs_query, rewritten, ProbAssignment::per_relation({{"R", r}, {"S", s}}));
}

} // namespace qreliab
