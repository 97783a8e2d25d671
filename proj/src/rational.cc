/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/rational.hh>
#include <digirth/errors.hh>

#include <charconv>
#include <numeric>

using std::int64_t;
using std::string;
using std::string_view;

namespace digirth
{
    namespace
    {
        auto checked(__int128 value) -> int64_t
        {
            if (value > INT64_MAX || value < INT64_MIN)
                throw InvalidArgument("rational arithmetic overflow");
            return int64_t(value);
        }
    }

    Rational::Rational(int64_t num, int64_t den)
    {
        if (den <= 0)
            throw InvalidArgument("rational denominator must be positive");
        if (num < 0)
            throw InvalidArgument("rational must be non-negative");
        auto g = std::gcd(num, den);
        _num = num / g;
        _den = den / g;
    }

    auto Rational::to_string() const -> string
    {
        return std::to_string(_num) + "/" + std::to_string(_den);
    }

    auto Rational::operator<=> (const Rational & other) const -> std::strong_ordering
    {
        return __int128(_num) * other._den <=> __int128(other._num) * _den;
    }

    auto operator+ (const Rational & a, const Rational & b) -> Rational
    {
        return Rational{ checked(__int128(a._num) * b._den + __int128(b._num) * a._den),
            checked(__int128(a._den) * b._den) };
    }

    auto operator* (const Rational & a, const Rational & b) -> Rational
    {
        return Rational{ checked(__int128(a._num) * b._num), checked(__int128(a._den) * b._den) };
    }

    auto parse_rational(string_view text) -> Rational
    {
        auto parse_int = [&] (string_view part) -> int64_t {
            int64_t value = 0;
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
            if (part.empty() || ec != std::errc{ } || ptr != part.data() + part.size())
                throw ParseError("expected a rational NUM/DEN, got '" + string(text) + "'");
            return value;
        };

        auto slash = text.find('/');
        if (slash == string_view::npos) {
            auto num = parse_int(text);
            if (num < 0)
                throw ParseError("rational '" + string(text) + "' must be non-negative");
            return Rational{ num };
        }
        auto den = parse_int(text.substr(slash + 1));
        if (den <= 0)
            throw ParseError("rational '" + string(text) + "' needs a positive denominator");
        auto num = parse_int(text.substr(0, slash));
        if (num < 0)
            throw ParseError("rational '" + string(text) + "' must be non-negative");
        return Rational{ num, den };
    }

    auto operator<< (std::ostream & s, const Rational & r) -> std::ostream &
    {
        return s << r.to_string();
    }

    auto clockwise_distance(const Rational & a, const Rational & b, const Rational & q) -> Rational
    {
        // Work over the common denominator of a, b and q.
        __int128 den = std::lcm(std::lcm(a.den(), b.den()), q.den());
        __int128 an = __int128(a.num()) * (den / a.den());
        __int128 bn = __int128(b.num()) * (den / b.den());
        __int128 qn = __int128(q.num()) * (den / q.den());
        if (0 == qn)
            throw InvalidArgument("circle perimeter must be positive");
        __int128 diff = (bn - an) % qn;
        if (diff < 0)
            diff += qn;
        return Rational{ checked(diff), checked(den) };
    }
}
