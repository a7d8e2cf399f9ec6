#ifndef QRELIAB_TEXT_HH
#define QRELIAB_TEXT_HH

// Small scanner shared by the query, fact, probability and graph readers.

#include <qreliab/errors.hh>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qreliab::text {

inline std::vector<std::string_view> lines(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (! line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        out.push_back(line);
        start = end + 1;
    }
    return out;
}

inline bool is_name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

inline bool is_constant_char(char c)
{
    return is_name_char(c) || c == '.' || c == '@';
}

class Cursor
{
public:
    Cursor(std::string_view text, std::size_t line = 1) :
        _text(text),
        _line(line)
    {
    }

    bool at_end() const { return _pos >= _text.size(); }
    bool peek(char c) const { return ! at_end() && _text[_pos] == c; }
    char current() const { return at_end() ? '\0' : _text[_pos]; }
    std::size_t column() const { return _pos + 1; }
    std::size_t line() const { return _line; }
    std::string_view rest() const { return _text.substr(_pos); }
    void advance(std::size_t n = 1) { _pos += n; }

    /// Skips whitespace, returns whether anything was skipped.
    bool skip_blanks()
    {
        auto start = _pos;
        while (! at_end() && std::isspace(static_cast<unsigned char>(_text[_pos])))
            ++_pos;
        return _pos != start;
    }

    [[noreturn]] void fail(const std::string & what) const
    {
        throw ParseError(what, _line, column());
    }

    void expect(char c)
    {
        skip_blanks();
        if (! peek(c))
            fail(std::string("expected '") + c + "'" + (at_end() ? " but reached end of input" : std::string(" but found '") + current() + "'"));
        ++_pos;
    }

    bool accept(std::string_view token)
    {
        skip_blanks();
        if (_text.substr(_pos, token.size()) == token) {
            _pos += token.size();
            return true;
        }
        return false;
    }

    /// `[A-Z][A-Za-z0-9_]*`
    std::string relation_name()
    {
        skip_blanks();
        if (at_end() || ! std::isupper(static_cast<unsigned char>(current())))
            fail("expected a relation name (uppercase letter first)");
        return take_while(is_name_char);
    }

    /// `[A-Za-z0-9_.@]+`; `@` only where generated constants are allowed.
    std::string constant_name(bool allow_at)
    {
        skip_blanks();
        auto start_col = column();
        auto name = take_while(is_constant_char);
        if (name.empty())
            fail("expected a constant");
        if (! allow_at && name.find('@') != std::string::npos)
            throw ParseError("'@' is reserved for generated constants", _line, start_col);
        return name;
    }

    template <typename Pred>
    std::string take_while(Pred pred)
    {
        auto start = _pos;
        while (! at_end() && pred(_text[_pos]))
            ++_pos;
        return std::string(_text.substr(start, _pos - start));
    }

private:
    std::string_view _text;
    std::size_t _line;
    std::size_t _pos = 0;
};

} // namespace qreliab::text

#endif // QRELIAB_TEXT_HH
