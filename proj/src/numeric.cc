#include <qreliab/errors.hh>
#include <qreliab/numeric.hh>

#include <cctype>

namespace qreliab {

ParseError::ParseError(const std::string & what, std::size_t line, std::size_t column) :
    Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
    _line(line),
    _column(column)
{
}

CapExceededError::CapExceededError(const std::string & what_for, std::size_t required, std::size_t cap) :
    Error(what_for + ": enumeration width " + std::to_string(required) + " exceeds cap " + std::to_string(cap)),
    _required(required),
    _cap(cap)
{
}

Count pow2(unsigned long exponent)
{
    Count result;
    mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
    return result;
}

unsigned long two_adic_valuation(const Count & n)
{
    if (n == 0)
        throw InvalidArgumentError("2-adic valuation of zero is undefined");
    return mpz_scan1(n.get_mpz_t(), 0);
}

std::string format_rational(const Rational & q)
{
    Rational canonical = q;
    canonical.canonicalize();
    return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

namespace
{
    bool parse_digits(std::string_view s, bool allow_sign, Count & out)
    {
        std::size_t k = 0;
        if (allow_sign && k < s.size() && (s[k] == '-' || s[k] == '+'))
            ++k;
        if (k == s.size())
            return false;
        for (std::size_t j = k; j < s.size(); ++j)
            if (! std::isdigit(static_cast<unsigned char>(s[j])))
                return false;
        std::string digits(s.substr(s[0] == '+' ? 1 : 0));
        return out.set_str(digits, 10) == 0;
    }

    std::string_view trim(std::string_view s)
    {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }
}

Rational parse_rational(std::string_view text)
{
    auto s = trim(text);
    auto slash = s.find('/');
    Count num, den = 1;
    bool ok = false;
    if (slash == std::string_view::npos)
        ok = parse_digits(s, true, num);
    else
        ok = parse_digits(s.substr(0, slash), true, num) && parse_digits(s.substr(slash + 1), false, den);
    if (! ok)
        throw ParseError("malformed rational '" + std::string(s) + "'", 1, 1);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(s) + "'", 1, slash + 2);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational & q)
{
    return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0;
}

Count to_integer(const Rational & q, std::string_view what)
{
    if (! is_integer(q))
        throw NonIntegralError(std::string(what) + " is not an integer: " + format_rational(q));
    Count out;
    mpz_divexact(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

} // namespace qreliab
