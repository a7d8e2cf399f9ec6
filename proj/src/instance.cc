#include <qreliab/errors.hh>
#include <qreliab/instance.hh>
#include "text.hh"

#include <algorithm>

namespace qreliab {

std::string to_string(const Fact & fact)
{
    std::string out = fact.relation + "(";
    for (std::size_t k = 0; k < fact.args.size(); ++k) {
        if (k > 0)
            out += ',';
        out += fact.args[k];
    }
    return out + ")";
}

Instance::Instance(std::initializer_list<Fact> facts) :
    _facts(facts.begin(), facts.end())
{
}

Instance::Instance(std::span<const Fact> facts) :
    _facts(facts.begin(), facts.end())
{
}

bool Instance::insert(Fact fact)
{
    return _facts.insert(std::move(fact)).second;
}

bool Instance::contains(const Fact & fact) const
{
    return _facts.contains(fact);
}

auto Instance::facts_of(std::string_view relation) const -> std::pair<const_iterator, const_iterator>
{
    std::string name(relation);
    auto first = _facts.lower_bound(Fact{name, {}});
    // "R\0" sorts after every R-fact and before any longer relation name
    auto last = _facts.lower_bound(Fact{name + std::string(1, '\0'), {}});
    return {first, last};
}

namespace
{
    Fact parse_fact_at(text::Cursor & cur)
    {
        Fact fact;
        fact.relation = cur.relation_name();
        cur.expect('(');
        cur.skip_blanks();
        if (! cur.peek(')')) {
            while (true) {
                cur.skip_blanks();
                fact.args.push_back(cur.constant_name(true));
                cur.skip_blanks();
                if (cur.peek(')'))
                    break;
                cur.expect(',');
            }
        }
        cur.expect(')');
        return fact;
    }

    Instance parse_instance_impl(std::string_view text, const Schema * schema)
    {
        Instance result;
        Schema seen;
        std::size_t line_no = 0;
        for (auto line : text::lines(text)) {
            ++line_no;
            text::Cursor cur(line, line_no);
            cur.skip_blanks();
            if (cur.at_end() || cur.peek('#'))
                continue;
            auto column = cur.column();
            Fact fact = parse_fact_at(cur);
            cur.skip_blanks();
            if (! cur.at_end())
                cur.fail("trailing characters after fact");

            if (schema) {
                auto it = schema->find(fact.relation);
                if (it == schema->end())
                    throw SchemaError("unknown relation '" + fact.relation + "' at line " + std::to_string(line_no)
                            + ", column " + std::to_string(column));
                if (it->second != fact.args.size())
                    throw SchemaError("arity mismatch for " + to_string(fact) + " at line " + std::to_string(line_no)
                            + ": expected " + std::to_string(it->second) + " arguments");
            }
            else {
                auto [it, fresh] = seen.emplace(fact.relation, fact.args.size());
                if (! fresh && it->second != fact.args.size())
                    throw SchemaError("arity mismatch for " + to_string(fact) + " at line " + std::to_string(line_no));
            }
            result.insert(std::move(fact));
        }
        return result;
    }
}

Instance parse_instance(std::string_view text, const Schema & schema)
{
    return parse_instance_impl(text, &schema);
}

Instance parse_instance(std::string_view text)
{
    return parse_instance_impl(text, nullptr);
}

std::string serialize(const Instance & instance)
{
    std::string out;
    for (auto & fact : instance)
        out += to_string(fact) + "\n";
    return out;
}

std::string fresh_constant(std::string_view ns, std::span<const long> indices)
{
    if (ns.empty())
        throw InvalidArgumentError("fresh_constant needs a nonempty namespace");
    std::string out = "@" + std::string(ns);
    for (auto i : indices)
        out += "." + std::to_string(i);
    return out;
}

std::string fresh_constant(std::string_view ns, std::initializer_list<long> indices)
{
    return fresh_constant(ns, std::span<const long>(indices.begin(), indices.size()));
}

void check_probability(const Rational & p, std::string_view context)
{
    if (p <= 0 || p > 1)
        throw ProbabilityError("probability " + format_rational(p) + " for " + std::string(context)
                + " is outside (0, 1]");
}

ProbAssignment ProbAssignment::uniform(const Rational & p)
{
    check_probability(p, "every fact");
    ProbAssignment result;
    result._mode = Mode::per_relation;
    result._uniform = true;
    result._uniform_value = p;
    return result;
}

ProbAssignment ProbAssignment::per_relation(std::map<std::string, Rational, std::less<>> phi)
{
    for (auto & [rel, p] : phi)
        check_probability(p, "relation " + rel);
    ProbAssignment result;
    result._mode = Mode::per_relation;
    result._by_relation = std::move(phi);
    return result;
}

ProbAssignment ProbAssignment::per_fact(std::map<Fact, Rational> pi)
{
    for (auto & [fact, p] : pi)
        check_probability(p, to_string(fact));
    ProbAssignment result;
    result._mode = Mode::per_fact;
    result._by_fact = std::move(pi);
    return result;
}

const Rational & ProbAssignment::probability(const Fact & fact) const
{
    if (_uniform)
        return _uniform_value;
    if (_mode == Mode::per_relation) {
        auto it = _by_relation.find(fact.relation);
        if (it != _by_relation.end())
            return it->second;
    }
    else {
        auto it = _by_fact.find(fact);
        if (it != _by_fact.end())
            return it->second;
    }
    throw ProbabilityError("no probability for " + to_string(fact));
}

ProbAssignment parse_prob_map(std::string_view text, ProbAssignment::Mode mode)
{
    std::map<std::string, Rational, std::less<>> by_relation;
    std::map<Fact, Rational> by_fact;
    std::size_t line_no = 0;
    for (auto line : text::lines(text)) {
        ++line_no;
        text::Cursor cur(line, line_no);
        cur.skip_blanks();
        if (cur.at_end() || cur.peek('#'))
            continue;

        Fact fact;
        if (mode == ProbAssignment::Mode::per_fact)
            fact = parse_fact_at(cur);
        else
            fact.relation = cur.relation_name();
        if (! cur.skip_blanks())
            cur.fail("expected whitespace before probability");
        auto column = cur.column();
        Rational p;
        try {
            p = parse_rational(cur.rest());
        }
        catch (const ParseError & e) {
            throw ParseError("malformed probability '" + std::string(cur.rest()) + "'", line_no, column);
        }

        auto where = mode == ProbAssignment::Mode::per_fact ? to_string(fact) : fact.relation;
        check_probability(p, where + " at line " + std::to_string(line_no));
        if (mode == ProbAssignment::Mode::per_fact) {
            if (! by_fact.emplace(fact, p).second)
                throw ParseError("duplicate probability for " + where, line_no, 1);
        }
        else if (! by_relation.emplace(fact.relation, p).second)
            throw ParseError("duplicate probability for " + where, line_no, 1);
    }
    return mode == ProbAssignment::Mode::per_fact ? ProbAssignment::per_fact(std::move(by_fact))
                                                  : ProbAssignment::per_relation(std::move(by_relation));
}

} // namespace qreliab
