/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_PROBBOUNDS_HH
#define DIGIRTH_GUARD_PROBBOUNDS_HH 1

#include <digirth/construct.hh>
#include <digirth/digraph.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace digirth
{
    using BigRational = boost::multiprecision::cpp_rational;

    /// The exact binary rational a double represents.
    auto exact(double) -> BigRational;

    auto to_double(const BigRational &) -> double;

    /// Decimal rendering to the given number of significant digits.
    auto render(const BigRational &, int significant_digits = 17) -> std::string;

    /// Expected-count bound for cycles of length ell among kn vertices: C(kn, ell) (ell-1)! p^ell.
    auto expected_cycles_bound(std::uint64_t kn, int ell, const BigRational & p) -> BigRational;

    /// Bound on the expected number of (ell1,ell2)-double cycles: ell1 (kn)^ell1 (kn)^(ell2-1) p^(ell1+ell2).
    auto double_cycle_bound(std::uint64_t k, std::uint64_t n, int ell1, int ell2, const BigRational & p) -> BigRational;

    /// Expected number of bad pairs: q C(n,w)^2 (1-p)^(w^2).
    auto bad_pair_bound(std::uint64_t q, std::uint64_t n, std::uint64_t w, const BigRational & p) -> BigRational;

    /// Layer subset size used by the bad-pair and P_l estimates: ceil(n / (2 k')).
    auto bad_pair_subset_size(std::uint64_t n, std::uint64_t target_size) -> std::uint64_t;

    struct BoundReport
    {
        std::optional<double> analytic;
        double empirical_mean = 0.0;
        double empirical_stderr = 0.0;
        std::uint64_t trials = 0;

        /// analytic >= mean - bands * stderr.
        auto bound_holds(double bands = 5.0) const -> bool;
        /// |mean - analytic| <= bands * stderr.
        auto within(double bands = 5.0) const -> bool;
    };

    /// Mean and standard error (sample standard deviation over sqrt(trials)) of a list of observations.
    auto summarise(const std::vector<double> & observations) -> BoundReport;

    struct CycleCountReport
    {
        /// Cycles of length < g per sample, against the summed expected-count bound.
        BoundReport cycles;
        /// Digons per sample, against their exact expectation.
        BoundReport digons;
        std::uint64_t bidirected_base_pairs = 0;
    };

    auto count_digons(const Digraph &) -> std::uint64_t;

    auto mc_cycle_count(const BlowUp & b, double p, int g, std::uint64_t trials, std::uint64_t seed)
        -> CycleCountReport;

    /**
     * Empirical frequency with which U(l) is acyclic: take w vertices in each
     * layer over the base cycle, keep each arc of the blow-up induced on them
     * with probability p. No analytic value is attached.
     */
    auto mc_estimate_pl(const Digraph & base, const std::vector<Vertex> & cycle, int w, double p,
            std::uint64_t trials, std::uint64_t seed) -> BoundReport;
}

#endif
