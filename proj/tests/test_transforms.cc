#include <doctest.h>

#include <qreliab/errors.hh>
#include <qreliab/reduction_ur.hh>

#include "support.hh"

using namespace qreliab;

namespace
{
    const char * lemma_query = "A(x,z), S(x,y), B(y,w), U(v)";
}

TEST_CASE("binary transform of a single edge")
{
    auto q = parse_query(lemma_query);
    auto image = lemma_binary_transform(q, parse_instance("R1(u)\nS1(u,w)\nT1(w)\n"));
    CHECK(image == Instance{{"A", {"u", "@c0"}}, {"S", {"u", "w"}}, {"B", {"w", "@c0"}}, {"U", {"@c0"}}});
    CHECK(ur_brute(q, image) == 1);

    auto empty = lemma_binary_transform(q, Instance{});
    CHECK(empty == Instance{{"U", {"@c0"}}});
    CHECK(ur_brute(q, empty) == 0);

    auto two = parse_instance("R1(u)\nR1(v)\nS1(u,w)\nT1(w)\n");
    CHECK(ur_brute(q, lemma_binary_transform(q, two)) == ur_brute(make_qrst(1, 1, 1), two));
}

TEST_CASE("binary transform rejects foreign schemas")
{
    auto q = parse_query(lemma_query);
    CHECK_THROWS_AS(lemma_binary_transform(q, parse_instance("R2(u)\n")), SchemaError);
    CHECK_THROWS_AS(lemma_binary_transform(q, parse_instance("X(u)\n")), SchemaError);
    CHECK_THROWS_AS(lemma_binary_transform(q, parse_instance("S1(u)\n")), SchemaError);
    CHECK_THROWS_AS(lemma_binary_transform(parse_query("R(x), S(x,y)"), Instance{}), HierarchicalQueryError);
}

TEST_CASE("binary transform preserves model counts")
{
    std::mt19937_64 rng(8);
    auto q = parse_query(lemma_query);
    auto rst = make_qrst(1, 1, 1);
    for (int round = 0; round < 30; ++round) {
        auto instance = testing::random_rst_instance(rng, 1, 1, 1);
        CHECK(ur_brute(q, lemma_binary_transform(q, instance)) == ur_brute(rst, instance));
    }
    auto wide = parse_query("R1(x), R2(x,z), S1(x,y), S2(y,x,y), T1(y,'k'), U(v,v)");
    auto wide_rst = make_qrst(2, 2, 1);
    for (int round = 0; round < 20; ++round) {
        auto instance = testing::random_rst_instance(rng, 2, 2, 1);
        CHECK(ur_brute(wide, lemma_binary_transform(wide, instance)) == ur_brute(wide_rst, instance));
    }
}

TEST_CASE("power-of-two merge")
{
    auto q211 = make_qrst(2, 1, 1);
    auto merged = merge_power2(q211, parse_instance("R1(a)\nR2(a)\nS1(a,b)\nT1(b)\n"));
    CHECK(merged.instance == Instance{{"R", {"a"}}, {"S", {"a", "b"}}, {"T", {"b"}}});
    CHECK(merged.phi.probability({"R", {"a"}}) == Rational(1, 4));
    CHECK(merged.phi.probability({"S", {"a", "b"}}) == Rational(1, 2));
    CHECK(merged.useless_facts == 0);
    CHECK(pqe_brute(make_q1(), merged.instance, merged.phi) == Rational(1, 16));

    auto partial = merge_power2(q211, parse_instance("R1(a)\nS1(a,b)\nT1(b)\n"));
    CHECK(partial.instance == Instance{{"S", {"a", "b"}}, {"T", {"b"}}});
    CHECK(partial.useless_facts == 1);
    CHECK(pqe_brute(make_q1(), partial.instance, partial.phi) == 0);

    auto q111 = make_qrst(1, 1, 1);
    auto same = parse_instance("R1(a)\nS1(a,b)\nT1(b)\n");
    auto unit = merge_power2(q111, same);
    CHECK(unit.instance.size() == 3);
    CHECK(unit.phi.probability({"T", {"b"}}) == Rational(1, 2));

    CHECK_THROWS_AS(merge_power2(make_q1(), parse_instance("U(a)\n")), SchemaError);
    CHECK_THROWS_AS(merge_power2(parse_query("R(x,z), S(x,y), T(y)"), Instance{}), InvalidArgumentError);
}

TEST_CASE("merge identity on random instances")
{
    std::mt19937_64 rng(12);
    for (auto [r, s, t] : {std::tuple{2, 1, 1}, std::tuple{1, 2, 2}}) {
        auto q = make_qrst(r, s, t);
        for (int round = 0; round < 15; ++round) {
            auto instance = testing::random_rst_instance(rng, r, s, t);
            auto merged = merge_power2(q, instance);
            CHECK(Rational(ur_brute(q, instance))
                    == Rational(pow2(instance.size())) * pqe_brute(make_q1(), merged.instance, merged.phi));
        }
    }
}
