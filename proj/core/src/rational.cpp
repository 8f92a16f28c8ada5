#include "npoly/rational.hpp"

#include "npoly/error.hpp"

#include <algorithm>
#include <cctype>

namespace npoly {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

[[noreturn]] void bad_rational(std::string_view text)
{
    throw Error(ErrorKind::Parse, "invalid rational '" + std::string(text) + "'");
}

} // namespace

std::string to_string(const Rational& value)
{
    return value.get_str();
}

std::string to_string(const BigInt& value)
{
    return value.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);

    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0) bad_rational(text);
    if (negative) p = -p;

    Rational value(p, q);
    value.canonicalize();
    return value;
}

} // namespace npoly
