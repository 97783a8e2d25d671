/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/probbounds.hh>
#include <digirth/errors.hh>
#include <digirth/random.hh>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <sstream>

using boost::multiprecision::cpp_int;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace digirth
{
    namespace
    {
        using Decimal = boost::multiprecision::cpp_dec_float_50;

        auto as_decimal(const BigRational & x) -> Decimal
        {
            return Decimal(boost::multiprecision::numerator(x)) / Decimal(boost::multiprecision::denominator(x));
        }

        auto power(const BigRational & base, uint64_t exponent) -> BigRational
        {
            BigRational result = 1, square = base;
            while (exponent) {
                if (exponent & 1)
                    result *= square;
                square *= square;
                exponent >>= 1;
            }
            return result;
        }

        auto binomial(uint64_t n, uint64_t r) -> cpp_int
        {
            if (r > n)
                return 0;
            r = std::min(r, n - r);
            cpp_int result = 1;
            for (uint64_t i = 1 ; i <= r ; ++i)
                result = result * (n - r + i) / i;
            return result;
        }

        auto factorial(uint64_t n) -> cpp_int
        {
            cpp_int result = 1;
            for (uint64_t i = 2 ; i <= n ; ++i)
                result *= i;
            return result;
        }

        auto check_probability(const BigRational & p) -> void
        {
            if (p < 0 || p > 1)
                throw InvalidArgument("probability must lie in [0, 1]");
        }
    }

    auto exact(double x) -> BigRational
    {
        if (! std::isfinite(x))
            throw InvalidArgument("cannot represent a non-finite value exactly");

        int exponent = 0;
        double mantissa = std::frexp(x, &exponent);
        // mantissa * 2^53 is an integer for every finite double.
        auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
        exponent -= 53;

        BigRational result = cpp_int(scaled);
        if (exponent > 0)
            result *= BigRational(cpp_int(1) << exponent);
        else if (exponent < 0)
            result /= BigRational(cpp_int(1) << -exponent);
        return result;
    }

    auto to_double(const BigRational & x) -> double
    {
        return as_decimal(x).convert_to<double>();
    }

    auto render(const BigRational & x, int significant_digits) -> string
    {
        if (significant_digits < 1)
            throw InvalidArgument("need at least one significant digit");
        if (x == 0)
            return "0";

        string sign = x < 0 ? "-" : "";
        BigRational a = x < 0 ? BigRational(-x) : x;

        // Find e with 10^e <= a < 10^(e+1), starting from the digit counts.
        int e = int(boost::multiprecision::numerator(a).str().size())
            - int(boost::multiprecision::denominator(a).str().size());
        auto ten_to = [] (int k) { return BigRational(boost::multiprecision::pow(cpp_int(10), unsigned(std::abs(k)))); };
        auto scale = [&] (int k) { return k >= 0 ? ten_to(k) : BigRational(1) / ten_to(k); };
        while (a >= scale(e + 1))
            ++e;
        while (a < scale(e))
            --e;

        // Round a * 10^(digits-1-e) to an integer, ties away from zero.
        BigRational scaled = a * scale(significant_digits - 1 - e);
        cpp_int digits = boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
        if (2 * (scaled - BigRational(digits)) >= 1)
            ++digits;
        if (digits == boost::multiprecision::pow(cpp_int(10), unsigned(significant_digits))) {
            digits /= 10;
            ++e;
        }

        string body = digits.str();
        while (body.size() > 1 && body.back() == '0')
            body.pop_back();

        // Plain notation for moderate exponents, scientific otherwise, as printf's %g does.
        if (e >= -4 && e < significant_digits) {
            string out;
            if (e < 0)
                out = "0." + string(std::size_t(-e - 1), '0') + body;
            else if (int(body.size()) <= e + 1)
                out = body + string(std::size_t(e + 1 - int(body.size())), '0');
            else
                out = body.substr(0, std::size_t(e + 1)) + "." + body.substr(std::size_t(e + 1));
            return sign + out;
        }

        string mantissa = body.size() > 1 ? body.substr(0, 1) + "." + body.substr(1) : body;
        string exponent = to_string(std::abs(e));
        if (exponent.size() < 2)
            exponent = "0" + exponent;
        return sign + mantissa + "e" + (e < 0 ? "-" : "+") + exponent;
    }

    auto expected_cycles_bound(uint64_t kn, int ell, const BigRational & p) -> BigRational
    {
        if (ell < 2 || uint64_t(ell) > kn)
            throw InvalidArgument("cycle length must satisfy 2 <= ell <= kn");
        check_probability(p);
        return BigRational(binomial(kn, uint64_t(ell)) * factorial(uint64_t(ell - 1))) * power(p, uint64_t(ell));
    }

    auto double_cycle_bound(uint64_t k, uint64_t n, int ell1, int ell2, const BigRational & p) -> BigRational
    {
        if (ell1 < 2 || ell2 < 1)
            throw InvalidArgument("double cycles need ell1 >= 2 and ell2 >= 1");
        check_probability(p);
        cpp_int kn = cpp_int(k) * n;
        cpp_int count = ell1 * boost::multiprecision::pow(kn, unsigned(ell1 + ell2 - 1));
        return BigRational(count) * power(p, uint64_t(ell1 + ell2));
    }

    auto bad_pair_bound(uint64_t q, uint64_t n, uint64_t w, const BigRational & p) -> BigRational
    {
        if (w > n)
            throw InvalidArgument("bad-pair subset size w must not exceed n");
        check_probability(p);
        auto choose = binomial(n, w);
        return BigRational(cpp_int(q) * choose * choose) * power(1 - p, w * w);
    }

    auto bad_pair_subset_size(uint64_t n, uint64_t target_size) -> uint64_t
    {
        if (0 == target_size)
            throw InvalidArgument("target must have at least one vertex");
        return (n + 2 * target_size - 1) / (2 * target_size);
    }

    auto BoundReport::bound_holds(double bands) const -> bool
    {
        return analytic && *analytic >= empirical_mean - bands * empirical_stderr;
    }

    auto BoundReport::within(double bands) const -> bool
    {
        return analytic && std::abs(empirical_mean - *analytic) <= bands * empirical_stderr;
    }

    auto summarise(const vector<double> & observations) -> BoundReport
    {
        BoundReport report;
        report.trials = observations.size();
        if (observations.empty())
            return report;

        double sum = 0.0;
        for (auto x : observations)
            sum += x;
        report.empirical_mean = sum / double(observations.size());

        if (observations.size() > 1) {
            double squares = 0.0;
            for (auto x : observations)
                squares += (x - report.empirical_mean) * (x - report.empirical_mean);
            double variance = squares / double(observations.size() - 1);
            report.empirical_stderr = std::sqrt(variance / double(observations.size()));
        }
        return report;
    }

    auto count_digons(const Digraph & d) -> uint64_t
    {
        uint64_t result = 0;
        for (auto & [u, v] : d.arcs())
            if (u < v && d.has_arc(v, u))
                ++result;
        return result;
    }

    auto mc_cycle_count(const BlowUp & b, double p, int g, uint64_t trials, uint64_t seed) -> CycleCountReport
    {
        if (trials < 1)
            throw InvalidArgument("at least one trial is needed");
        if (g < 2)
            throw InvalidArgument("girth bound g must be at least 2");

        vector<double> cycle_counts, digon_counts;
        for (uint64_t t = 0 ; t < trials ; ++t) {
            auto h = sample(b, p, derive_seed(seed, t));
            cycle_counts.push_back(double(short_cycles(h, g).size()));
            digon_counts.push_back(double(count_digons(h)));
        }

        CycleCountReport report;
        report.cycles = summarise(cycle_counts);
        report.digons = summarise(digon_counts);
        report.bidirected_base_pairs = count_digons(b.base);

        auto exact_p = exact(p);
        uint64_t kn = uint64_t(b.layered.vertex_count());
        BigRational bound = 0;
        for (int ell = 2 ; ell < g && uint64_t(ell) <= kn ; ++ell)
            bound += expected_cycles_bound(kn, ell, exact_p);
        report.cycles.analytic = to_double(bound);

        auto layer = uint64_t(b.layer_size);
        report.digons.analytic = to_double(BigRational(cpp_int(report.bidirected_base_pairs) * layer * layer)
                * exact_p * exact_p);
        return report;
    }

    auto mc_estimate_pl(const Digraph & base, const vector<Vertex> & cycle, int w, double p,
            uint64_t trials, uint64_t seed) -> BoundReport
    {
        if (trials < 1)
            throw InvalidArgument("at least one trial is needed");
        if (w < 1)
            throw InvalidArgument("layer subset size w must be at least 1");
        if (! is_cycle_of(base, Cycle{ cycle }))
            throw InvalidArgument("the given vertex sequence is not a directed cycle of the base digraph");

        // Any w vertices of a layer induce the same transitive tournament, so take a fresh blow-up.
        auto host = blowup(induced(base, cycle).digraph, w);

        vector<double> acyclic;
        for (uint64_t t = 0 ; t < trials ; ++t)
            acyclic.push_back(is_acyclic(sample(host, p, derive_seed(seed, t))) ? 1.0 : 0.0);
        return summarise(acyclic);
    }
}
