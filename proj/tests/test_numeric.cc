#include <doctest.h>

#include <qreliab/errors.hh>
#include <qreliab/numeric.hh>

using namespace qreliab;

TEST_CASE("powers of two and valuations")
{
    CHECK(pow2(0) == 1);
    CHECK(pow2(10) == 1024);
    CHECK(pow2(100) == Count("1267650600228229401496703205376"));
    CHECK(two_adic_valuation(28) == 2);
    CHECK(two_adic_valuation(17) == 0);
    CHECK(two_adic_valuation(pow2(300) * 3) == 300);
}

TEST_CASE("rationals print as num/den in lowest terms")
{
    CHECK(format_rational(Rational(3)) == "3/1");
    CHECK(format_rational(Rational(0)) == "0/1");
    Rational q(6, 8);
    q.canonicalize();
    CHECK(format_rational(q) == "3/4");
    CHECK(format_rational(Rational(-1, 2)) == "-1/2");
    CHECK(format_rational(Rational(4, 8)) == "1/2");
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational(" 4/8 ") == Rational(1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("integrality")
{
    CHECK(is_integer(Rational(4, 2)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
    CHECK(to_integer(Rational(12, 4), "x") == 3);
    CHECK_THROWS_AS(to_integer(Rational(1, 3), "x"), NonIntegralError);
}
