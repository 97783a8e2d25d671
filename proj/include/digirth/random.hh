/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_RANDOM_HH
#define DIGIRTH_GUARD_RANDOM_HH 1

#include <cstdint>
#include <random>

namespace digirth
{
    /**
     * Every random choice in this library comes from std::mt19937_64, whose
     * output stream is fixed by the C++ standard. A Bernoulli(p) trial takes
     * one 64-bit draw x and succeeds iff (x >> 11) * 2^-53 < p. Nothing goes
     * through std::*_distribution, whose algorithms are implementation-defined.
     */
    class Random
    {
        private:
            std::mt19937_64 _engine;

        public:
            explicit Random(std::uint64_t seed) : _engine(seed) { }

            auto next() -> std::uint64_t { return _engine(); }

            /// Uniform in [0, 1) with 53 random bits.
            auto unit() -> double { return double(next() >> 11) * 0x1.0p-53; }

            auto bernoulli(double p) -> bool { return unit() < p; }

            /// Uniform in [0, bound) by rejection, for bound >= 1.
            auto below(std::uint64_t bound) -> std::uint64_t;
    };

    /// splitmix64 finaliser.
    auto mix64(std::uint64_t) -> std::uint64_t;

    /// Seed for the index-th independent sub-stream of seed (per-try and per-trial seeds).
    auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t;
}

#endif
