/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/circular.hh>
#include <digirth/errors.hh>
#include <digirth/probbounds.hh>

#include <doctest.h>
#include <test_support.hh>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>

using namespace digirth;
using namespace digirth::testing;
using std::vector;

namespace
{
    using Wide = boost::multiprecision::cpp_dec_float_100;

    // Falling-factorial and repeated-multiplication routes, in wide decimal arithmetic.
    auto wide_power(Wide x, int e) -> Wide
    {
        Wide r = 1;
        for (int i = 0 ; i < e ; ++i)
            r *= x;
        return r;
    }

    auto wide_choose(std::uint64_t n, std::uint64_t r) -> Wide
    {
        Wide result = 1;
        for (std::uint64_t i = 0 ; i < r ; ++i)
            result = result * Wide(n - i) / Wide(i + 1);
        return result;
    }

    auto oracle_cycles(std::uint64_t kn, int ell, Wide p) -> Wide
    {
        Wide falling = 1;
        for (int i = 0 ; i < ell ; ++i)
            falling *= Wide(kn - std::uint64_t(i));
        return falling / Wide(ell) * wide_power(p, ell);
    }

    auto oracle_double(std::uint64_t k, std::uint64_t n, int l1, int l2, Wide p) -> Wide
    {
        Wide kn = Wide(k) * Wide(n);
        return Wide(l1) * wide_power(kn, l1) * wide_power(kn, l2 - 1) * wide_power(p, l1 + l2);
    }

    auto oracle_bad_pair(std::uint64_t q, std::uint64_t n, std::uint64_t w, Wide p) -> Wide
    {
        auto c = wide_choose(n, w);
        return Wide(q) * c * c * wide_power(1 - p, int(w * w));
    }

    // Twelve significant figures, ties away from zero, %g layout; done in decimal floating point.
    auto twelve(const Wide & x) -> std::string
    {
        if (x == 0)
            return "0";
        int e = 0;
        Wide m = x;
        while (m >= 10) { m /= 10; ++e; }
        while (m < 1) { m *= 10; --e; }
        Wide scaled = boost::multiprecision::floor(m * Wide(1e11) + Wide(0.5));
        if (scaled >= Wide(1e12)) {
            scaled /= 10;
            ++e;
        }
        std::string body = scaled.convert_to<boost::multiprecision::cpp_int>().str();
        while (body.size() > 1 && body.back() == '0')
            body.pop_back();
        if (e >= -4 && e < 12) {
            if (e < 0)
                return "0." + std::string(std::size_t(-e - 1), '0') + body;
            if (int(body.size()) <= e + 1)
                return body + std::string(std::size_t(e + 1 - int(body.size())), '0');
            return body.substr(0, std::size_t(e + 1)) + "." + body.substr(std::size_t(e + 1));
        }
        auto exponent = std::to_string(std::abs(e));
        if (exponent.size() < 2)
            exponent = "0" + exponent;
        return (body.size() > 1 ? body.substr(0, 1) + "." + body.substr(1) : body) + "e" + (e < 0 ? "-" : "+") + exponent;
    }

    auto wide(const BigRational & x) -> Wide
    {
        return Wide(boost::multiprecision::numerator(x)) / Wide(boost::multiprecision::denominator(x));
    }
}

TEST_CASE("expected_cycles_bound")
{
    CHECK(expected_cycles_bound(4, 2, BigRational(1, 2)) == BigRational(3, 2));
    CHECK(expected_cycles_bound(10, 5, 0) == 0);
    CHECK(expected_cycles_bound(3, 3, 1) == 2);
    CHECK_THROWS_AS(expected_cycles_bound(3, 4, 1), InvalidArgument);
    CHECK_THROWS_AS(expected_cycles_bound(3, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(expected_cycles_bound(3, 2, 2), InvalidArgument);
}

TEST_CASE("double_cycle_bound")
{
    CHECK(double_cycle_bound(1, 4, 2, 1, BigRational(1, 2)) == 4);
    CHECK(double_cycle_bound(3, 5, 2, 2, 0) == 0);
    CHECK(double_cycle_bound(2, 2, 2, 2, 1) == 128);
    CHECK_THROWS_AS(double_cycle_bound(1, 4, 1, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(double_cycle_bound(1, 4, 2, 0, 1), InvalidArgument);
}

TEST_CASE("bad_pair_bound")
{
    CHECK(bad_pair_bound(3, 5, 2, 1) == 0);
    CHECK(bad_pair_bound(1, 2, 1, BigRational(1, 2)) == 2);
    CHECK(bad_pair_bound(7, 5, 0, BigRational(1, 3)) == 7);
    CHECK_THROWS_AS(bad_pair_bound(1, 2, 3, 1), InvalidArgument);

    CHECK(bad_pair_subset_size(10, 2) == 3);
    CHECK(bad_pair_subset_size(8, 2) == 2);
    CHECK(bad_pair_subset_size(1, 5) == 1);
    CHECK_THROWS_AS(bad_pair_subset_size(4, 0), InvalidArgument);
}

TEST_CASE("bound formulas match an independent wide-decimal recomputation to 12 significant figures")
{
    vector<BigRational> ps{ BigRational(1, 2), BigRational(1, 3), BigRational(7, 10), exact(0.123456789),
        exact(std::pow(64.0, 1.0 / 9.0 - 1.0)) };

    for (auto & p : ps) {
        Wide wp = wide(p);
        for (std::uint64_t kn : { 4u, 9u, 30u, 200u, 5000u })
            for (int ell = 2 ; ell <= 9 && std::uint64_t(ell) <= kn ; ++ell)
                CHECK(render(expected_cycles_bound(kn, ell, p), 12) == twelve(oracle_cycles(kn, ell, wp)));

        for (std::uint64_t k : { 1u, 3u, 7u })
            for (std::uint64_t n : { 2u, 16u, 1000u })
                for (int l1 = 2 ; l1 <= 5 ; ++l1)
                    for (int l2 = 1 ; l2 <= 5 ; ++l2)
                        CHECK(render(double_cycle_bound(k, n, l1, l2, p), 12) == twelve(oracle_double(k, n, l1, l2, wp)));

        for (std::uint64_t q : { 1u, 6u })
            for (std::uint64_t n : { 2u, 10u, 60u })
                for (std::uint64_t w = 0 ; w <= n && w <= 12 ; ++w)
                    CHECK(render(bad_pair_bound(q, n, w, p), 12) == twelve(oracle_bad_pair(q, n, w, wp)));
    }
}

TEST_CASE("exact and render")
{
    CHECK(exact(0.5) == BigRational(1, 2));
    CHECK(exact(3.0) == 3);
    CHECK(exact(0.1) != BigRational(1, 10));
    CHECK(to_double(exact(0.1)) == 0.1);
    CHECK(render(BigRational(1, 3), 5) == "0.33333");
    CHECK(render(BigRational(2, 3), 3) == "0.667");
    CHECK(render(BigRational(5, 2), 1) == "3");
    CHECK(render(BigRational(9999, 10), 3) == "1e+03");
    CHECK(render(BigRational(9999, 10), 4) == "999.9");
    CHECK(render(BigRational(3, 2), 17) == "1.5");
    CHECK(render(BigRational(123456789), 3) == "1.23e+08");
    CHECK(render(BigRational(1, 1000000), 3) == "1e-06");
    CHECK(render(BigRational(1, 100000), 3) == "1e-05");
    CHECK(render(BigRational(1, 10000), 3) == "0.0001");
    CHECK(render(BigRational(0), 5) == "0");
    CHECK(render(BigRational(309033348625, 2), 12) == "154516674313");
    CHECK_THROWS_AS(exact(std::nan("")), InvalidArgument);
}

TEST_CASE("summarise")
{
    auto r = summarise({ 1.0, 2.0, 3.0, 4.0 });
    CHECK(r.trials == 4);
    CHECK(r.empirical_mean == doctest::Approx(2.5));
    CHECK(r.empirical_stderr == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));

    auto single = summarise({ 7.0 });
    CHECK(single.empirical_mean == 7.0);
    CHECK(single.empirical_stderr == 0.0);
}

TEST_CASE("mc_cycle_count")
{
    auto dig = blowup(digon(), 1);
    auto zero = mc_cycle_count(dig, 0.0, 3, 50, 1);
    CHECK(zero.cycles.empirical_mean == 0.0);
    CHECK(zero.digons.analytic == 0.0);

    auto full = mc_cycle_count(dig, 1.0, 3, 50, 1);
    CHECK(full.digons.empirical_mean == 1.0);
    CHECK(full.digons.empirical_stderr == 0.0);
    CHECK(full.digons.analytic == 1.0);
    CHECK(full.bidirected_base_pairs == 1);

    auto half = mc_cycle_count(blowup(digon(), 2), 0.5, 3, 2000, 17);
    CHECK(half.digons.analytic == 1.0);
    CHECK(half.digons.within(5));
    CHECK(half.cycles.bound_holds(5));

    CHECK_THROWS_AS(mc_cycle_count(dig, 0.5, 3, 0, 1), InvalidArgument);
}

TEST_CASE("expected-count bounds hold and the digon mean matches its exact value")
{
    struct Point { Digraph base; int n; double p; int g; };
    vector<Point> points{
        { gen_ckd({ 3, 1 }), 2, 0.3, 3 },
        { gen_ckd({ 3, 1 }), 3, 0.2, 4 },
        { gen_ckd({ 5, 2 }), 2, 0.4, 4 },
        { directed_cycle(4), 3, 0.5, 5 },
        { gen_ckd({ 2, 1 }), 4, 0.25, 3 },
    };
    std::uint64_t seed = 300;
    for (auto & pt : points) {
        auto r = mc_cycle_count(blowup(pt.base, pt.n), pt.p, pt.g, 1500, seed++);
        CHECK(r.cycles.bound_holds(5));
        CHECK(r.digons.within(5));
    }
}

TEST_CASE("mc_estimate_pl")
{
    auto zero = mc_estimate_pl(digon(), { 0, 1 }, 3, 0.0, 100, 4);
    CHECK(zero.empirical_mean == 1.0);

    auto full = mc_estimate_pl(digon(), { 0, 1 }, 1, 1.0, 100, 4);
    CHECK(full.empirical_mean == 0.0);

    auto half = mc_estimate_pl(digon(), { 0, 1 }, 1, 0.5, 4000, 4);
    half.analytic = 0.75;
    CHECK(half.within(5));

    CHECK_THROWS_AS(mc_estimate_pl(digon(), { 0, 2 }, 1, 0.5, 10, 4), InvalidArgument);
    CHECK_THROWS_AS(mc_estimate_pl(directed_cycle(3), { 0, 2, 1 }, 1, 0.5, 10, 4), InvalidArgument);
    CHECK_THROWS_AS(mc_estimate_pl(digon(), { 0, 1 }, 0, 0.5, 10, 4), InvalidArgument);
}

TEST_CASE("P_l for a directed triangle with singleton layers is exactly 1 - p^3")
{
    // With w = 1 the only cycle is the triangle itself.
    for (double p : { 0.3, 0.6, 0.9 }) {
        auto r = mc_estimate_pl(directed_cycle(3), { 0, 1, 2 }, 1, p, 3000, 77);
        r.analytic = 1.0 - p * p * p;
        CHECK(r.within(5));
    }
}
