#ifndef QRELIAB_ERRORS_HH
#define QRELIAB_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qreliab {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string & what, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return _line; }
    std::size_t column() const noexcept { return _column; }

private:
    std::size_t _line, _column;
};

/// Self-joins, arity mismatches, unknown relations.
class SchemaError : public Error
{
public:
    using Error::Error;
};

class UnknownVariableError : public Error
{
public:
    using Error::Error;
};

class NotHierarchicalError : public Error
{
public:
    using Error::Error;
};

class HierarchicalQueryError : public Error
{
public:
    using Error::Error;
};

/// An exhaustive enumeration would need more than `cap` positions.
class CapExceededError : public Error
{
public:
    CapExceededError(const std::string & what_for, std::size_t required, std::size_t cap);

    std::size_t required() const noexcept { return _required; }
    std::size_t cap() const noexcept { return _cap; }

private:
    std::size_t _required, _cap;
};

class ProbabilityError : public Error
{
public:
    using Error::Error;
};

class MembershipError : public Error
{
public:
    using Error::Error;
};

class InvalidArgumentError : public Error
{
public:
    using Error::Error;
};

/// Two Vandermonde nodes coincide, so the system is singular.
class DuplicateNodeError : public Error
{
public:
    using Error::Error;
};

/// A quantity that must be an integer came out fractional. Signals an
/// implementation fault rather than bad input.
class NonIntegralError : public Error
{
public:
    using Error::Error;
};

/// An internal structural guarantee failed (distinct Vandermonde nodes,
/// separated exponent blocks, consistency of surplus equations).
class InvariantError : public Error
{
public:
    using Error::Error;
};

} // namespace qreliab

#endif // QRELIAB_ERRORS_HH
