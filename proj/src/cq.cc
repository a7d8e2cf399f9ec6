#include <qreliab/cq.hh>
#include <qreliab/errors.hh>

#include "text.hh"

#include <algorithm>
#include <map>

namespace qreliab {

bool Atom::mentions(std::string_view variable) const
{
    return std::any_of(args.begin(), args.end(), [&](const Term & t) { return t.is_variable() && t.name == variable; });
}

std::string to_string(const Atom & atom)
{
    std::string out = atom.relation + "(";
    for (std::size_t k = 0; k < atom.args.size(); ++k) {
        if (k > 0)
            out += ",";
        auto & term = atom.args[k];
        out += term.is_variable() ? term.name : "'" + term.name + "'";
    }
    return out + ")";
}

Query::Query(std::vector<Atom> atoms) :
    _atoms(std::move(atoms))
{
    for (auto & atom : _atoms) {
        if (! _schema.emplace(atom.relation, atom.args.size()).second)
            throw SchemaError("self-join on relation '" + atom.relation + "': it occurs in two atoms");
        for (auto & term : atom.args)
            if (term.is_variable() && std::find(_variables.begin(), _variables.end(), term.name) == _variables.end())
                _variables.push_back(term.name);
    }
}

std::size_t Query::atom_of(std::string_view relation) const
{
    for (std::size_t k = 0; k < _atoms.size(); ++k)
        if (_atoms[k].relation == relation)
            return k;
    throw SchemaError("relation '" + std::string(relation) + "' does not occur in the query");
}

std::string to_string(const Query & query)
{
    std::string out;
    for (std::size_t k = 0; k < query.atoms().size(); ++k) {
        if (k > 0)
            out += ", ";
        out += to_string(query.atoms()[k]);
    }
    return out;
}

namespace
{
    Term parse_term(text::Cursor & cur)
    {
        cur.skip_blanks();
        char c = cur.current();
        if (c == '\'') {
            cur.advance();
            auto start = cur.column();
            auto name = cur.take_while([](char ch) { return text::is_name_char(ch) || ch == '.'; });
            if (name.empty())
                throw ParseError("empty or malformed quoted constant", cur.line(), start);
            if (! cur.peek('\''))
                cur.fail("unterminated quoted constant");
            cur.advance();
            return Term::constant(std::move(name));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Term::constant(cur.take_while([](char ch) { return text::is_name_char(ch) || ch == '.'; }));
        if (std::islower(static_cast<unsigned char>(c)))
            return Term::var(cur.take_while(text::is_name_char));
        cur.fail("expected a variable (lowercase first) or a constant (quoted or digit first)");
    }

    Atom parse_atom(text::Cursor & cur)
    {
        Atom atom;
        atom.relation = cur.relation_name();
        cur.expect('(');
        cur.skip_blanks();
        if (! cur.peek(')')) {
            while (true) {
                atom.args.push_back(parse_term(cur));
                cur.skip_blanks();
                if (cur.peek(')'))
                    break;
                cur.expect(',');
            }
        }
        cur.expect(')');
        return atom;
    }
}

Query parse_query(std::string_view query_text)
{
    // Flatten newlines so multi-line queries are accepted and columns stay meaningful.
    std::string flat(query_text);
    std::replace(flat.begin(), flat.end(), '\n', ' ');
    text::Cursor cur(flat);

    if (auto arrow = flat.find(":-"); arrow != std::string::npos) {
        cur.skip_blanks();
        auto head = cur.take_while(text::is_name_char);
        if (head.empty() || ! std::isalpha(static_cast<unsigned char>(head[0])))
            cur.fail("malformed query head");
        if (cur.accept("(") && ! cur.accept(")"))
            cur.fail("the query head must be Boolean");
        if (! cur.accept(":-"))
            cur.fail("expected ':-' after the query head");
    }

    std::vector<Atom> atoms;
    cur.skip_blanks();
    if (cur.at_end())
        cur.fail("empty query");
    while (true) {
        atoms.push_back(parse_atom(cur));
        cur.skip_blanks();
        if (cur.at_end())
            break;
        if (cur.peek('.')) {
            cur.advance();
            cur.skip_blanks();
            if (! cur.at_end())
                cur.fail("trailing characters after '.'");
            break;
        }
        cur.expect(',');
    }
    return Query(std::move(atoms));
}

Query make_qrst(int r, int s, int t)
{
    if (r < 1 || s < 1 || t < 1)
        throw InvalidArgumentError("r, s, t must be positive");
    std::vector<Atom> atoms;
    for (int k = 1; k <= r; ++k)
        atoms.push_back({"R" + std::to_string(k), {Term::var("x")}});
    for (int k = 1; k <= s; ++k)
        atoms.push_back({"S" + std::to_string(k), {Term::var("x"), Term::var("y")}});
    for (int k = 1; k <= t; ++k)
        atoms.push_back({"T" + std::to_string(k), {Term::var("y")}});
    return Query(std::move(atoms));
}

Query make_q1()
{
    return Query({{"R", {Term::var("x")}}, {"S", {Term::var("x"), Term::var("y")}}, {"T", {Term::var("y")}}});
}

std::set<std::size_t> atoms_of(const Query & query, std::string_view variable)
{
    auto & vars = query.variables();
    if (std::find(vars.begin(), vars.end(), variable) == vars.end())
        throw UnknownVariableError("variable '" + std::string(variable) + "' does not occur in the query");
    std::set<std::size_t> result;
    for (std::size_t k = 0; k < query.atoms().size(); ++k)
        if (query.atoms()[k].mentions(variable))
            result.insert(k);
    return result;
}

HierarchyReport classify_hierarchical(const Query & query)
{
    auto & vars = query.variables();
    std::vector<std::set<std::size_t>> sets;
    for (auto & v : vars)
        sets.push_back(atoms_of(query, v));

    for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b) {
            auto & sa = sets[a];
            auto & sb = sets[b];
            bool a_in_b = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
            bool b_in_a = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
            bool disjoint = std::none_of(sa.begin(), sa.end(), [&](std::size_t k) { return sb.contains(k); });
            if (! a_in_b && ! b_in_a && ! disjoint)
                return {false, HierarchyWitness{vars[a], vars[b], sa, sb}};
        }
    return {true, std::nullopt};
}

NoncomparablePair noncomparable_pair_and_rst(const Query & query)
{
    auto report = classify_hierarchical(query);
    if (report.hierarchical)
        throw HierarchicalQueryError("query is hierarchical, no non-comparable variable pair exists: " + to_string(query));
    auto & w = *report.witness;
    int r = 0, s = 0, t = 0;
    for (auto k : w.atoms_x)
        (w.atoms_y.contains(k) ? s : r)++;
    for (auto k : w.atoms_y)
        if (! w.atoms_x.contains(k))
            ++t;
    return {w.x, w.y, r, s, t};
}

void check_compatible(const Query & query, const Instance & instance)
{
    for (auto & [relation, arity] : query.schema()) {
        auto [first, last] = instance.facts_of(relation);
        for (auto it = first; it != last; ++it)
            if (it->args.size() != arity)
                throw SchemaError("arity mismatch: " + to_string(*it) + " but the query uses " + relation + " with "
                        + std::to_string(arity) + " arguments");
    }
}

namespace
{
    class MatchSearch
    {
    public:
        MatchSearch(const Query & query, const Instance & instance) :
            _query(query),
            _instance(instance)
        {
            for (std::size_t v = 0; v < query.variables().size(); ++v)
                _var_index.emplace(query.variables()[v], v);
            _assignment.resize(query.variables().size());
            _bound.assign(query.variables().size(), false);
            _support.resize(query.atoms().size());
        }

        std::vector<Match> run()
        {
            extend(0);
            std::sort(_matches.begin(), _matches.end(),
                    [](const Match & a, const Match & b) { return a.assignment < b.assignment; });
            return std::move(_matches);
        }

    private:
        void extend(std::size_t atom_index)
        {
            if (atom_index == _query.atoms().size()) {
                _matches.push_back({_assignment, _support});
                return;
            }
            auto & atom = _query.atoms()[atom_index];
            auto [first, last] = _instance.facts_of(atom.relation);
            for (auto it = first; it != last; ++it) {
                std::vector<std::size_t> newly_bound;
                if (unify(atom, *it, newly_bound)) {
                    _support[atom_index] = *it;
                    extend(atom_index + 1);
                }
                for (auto v : newly_bound)
                    _bound[v] = false;
            }
        }

        bool unify(const Atom & atom, const Fact & fact, std::vector<std::size_t> & newly_bound)
        {
            for (std::size_t k = 0; k < atom.args.size(); ++k) {
                auto & term = atom.args[k];
                if (! term.is_variable()) {
                    if (term.name != fact.args[k])
                        return false;
                    continue;
                }
                auto v = _var_index.at(term.name);
                if (_bound[v]) {
                    if (_assignment[v] != fact.args[k])
                        return false;
                }
                else {
                    _bound[v] = true;
                    _assignment[v] = fact.args[k];
                    newly_bound.push_back(v);
                }
            }
            return true;
        }

        const Query & _query;
        const Instance & _instance;
        std::map<std::string, std::size_t, std::less<>> _var_index;
        std::vector<std::string> _assignment;
        std::vector<bool> _bound;
        std::vector<Fact> _support;
        std::vector<Match> _matches;
    };
}

std::vector<Match> enumerate_matches(const Query & query, const Instance & instance)
{
    check_compatible(query, instance);
    return MatchSearch(query, instance).run();
}

bool satisfies(const Instance & instance, const Query & query)
{
    return ! enumerate_matches(query, instance).empty();
}

} // namespace qreliab
