/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_RATIONAL_HH
#define DIGIRTH_GUARD_RATIONAL_HH 1

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace digirth
{
    /**
     * A non-negative rational kept in lowest terms. Arithmetic is exact and
     * overflow is reported rather than wrapped; values here are small
     * (positions on a circle of perimeter k/d, epsilon parameters).
     */
    class Rational
    {
        private:
            std::int64_t _num = 0, _den = 1;

        public:
            constexpr Rational() = default;
            Rational(std::int64_t num, std::int64_t den = 1);

            auto num() const -> std::int64_t { return _num; }
            auto den() const -> std::int64_t { return _den; }

            auto to_double() const -> double { return double(_num) / double(_den); }
            auto to_string() const -> std::string;

            auto operator== (const Rational &) const -> bool = default;
            auto operator<=> (const Rational & other) const -> std::strong_ordering;

            friend auto operator+ (const Rational &, const Rational &) -> Rational;
            friend auto operator* (const Rational &, const Rational &) -> Rational;
    };

    /// Parses "N/D" or "N".
    auto parse_rational(std::string_view) -> Rational;

    auto operator<< (std::ostream &, const Rational &) -> std::ostream &;

    /// (b - a) mod q, the distance from a to b going clockwise round a circle of perimeter q.
    auto clockwise_distance(const Rational & a, const Rational & b, const Rational & q) -> Rational;
}

#endif
