#include <doctest.h>

#include <qreliab/errors.hh>
#include <qreliab/instance.hh>

using namespace qreliab;

TEST_CASE("fact files round-trip through serialization")
{
    auto text = "# comment\nS(a,b)\n\nR(a)\nT(b)\nR(a)\n";
    auto instance = parse_instance(text);
    CHECK(instance.size() == 3);
    CHECK(serialize(instance) == "R(a)\nS(a,b)\nT(b)\n");
    CHECK(parse_instance(serialize(instance)) == instance);
}

TEST_CASE("schema and arity checks")
{
    Schema schema{{"R", 1}, {"S", 2}};
    CHECK_NOTHROW(parse_instance("R(a)\nS(a,b)\n", schema));
    CHECK_THROWS_AS(parse_instance("R(a,b)\n", schema), SchemaError);
    CHECK_THROWS_AS(parse_instance("U(a)\n", schema), SchemaError);
    CHECK_THROWS_AS(parse_instance("R(a)\nR(a,b)\n"), SchemaError);
}

TEST_CASE("malformed fact lines report their position")
{
    try {
        parse_instance("R(a)\nR(a\n");
        FAIL("expected a parse error");
    }
    catch (const ParseError & e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_instance("r(a)\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("R(a b)\n"), ParseError);
    CHECK(parse_instance("R(@e0.1.b)\n").size() == 1);
}

TEST_CASE("facts of one relation form a range")
{
    auto instance = parse_instance("R(a)\nR(b)\nS(a,b)\nRR(c)\n");
    auto [first, last] = instance.facts_of("R");
    CHECK(std::distance(first, last) == 2);
    auto [f2, l2] = instance.facts_of("RR");
    CHECK(std::distance(f2, l2) == 1);
    auto [f3, l3] = instance.facts_of("T");
    CHECK(f3 == l3);
}

TEST_CASE("fresh constants")
{
    CHECK(fresh_constant("c0") == "@c0");
    CHECK(fresh_constant("e1", {2, 3}) == "@e1.2.3");
}

TEST_CASE("probability maps")
{
    auto per_rel = parse_prob_map("R 1/2\nS 1\n", ProbAssignment::Mode::per_relation);
    CHECK(per_rel.probability({"R", {"a"}}) == Rational(1, 2));
    CHECK(per_rel.probability({"S", {"a", "b"}}) == 1);
    CHECK_THROWS_AS(per_rel.probability({"T", {"a"}}), ProbabilityError);

    auto per_fact = parse_prob_map("R(a) 1/3\nS(a,b) 2/3\n", ProbAssignment::Mode::per_fact);
    CHECK(per_fact.probability({"R", {"a"}}) == Rational(1, 3));
    CHECK_THROWS_AS(per_fact.probability({"R", {"b"}}), ProbabilityError);

    CHECK_THROWS_AS(parse_prob_map("R 0\n", ProbAssignment::Mode::per_relation), ProbabilityError);
    CHECK_THROWS_AS(parse_prob_map("R 3/2\n", ProbAssignment::Mode::per_relation), ProbabilityError);
    CHECK_THROWS_AS(parse_prob_map("R 1/2\nR 1/3\n", ProbAssignment::Mode::per_relation), ParseError);
    CHECK_THROWS_AS(check_probability(Rational(0), "x"), ProbabilityError);
    CHECK(ProbAssignment::uniform(Rational(1, 2)).probability({"Z", {}}) == Rational(1, 2));
}
