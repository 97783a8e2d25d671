/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/random.hh>

using std::uint64_t;

namespace digirth
{
    auto Random::below(uint64_t bound) -> uint64_t
    {
        uint64_t limit = ~uint64_t{ 0 } - (~uint64_t{ 0 } % bound);
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    auto mix64(uint64_t z) -> uint64_t
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    auto derive_seed(uint64_t seed, uint64_t index) -> uint64_t
    {
        return mix64(seed ^ mix64(index));
    }
}
