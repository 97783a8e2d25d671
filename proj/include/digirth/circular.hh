/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_CIRCULAR_HH
#define DIGIRTH_GUARD_CIRCULAR_HH 1

#include <digirth/digraph.hh>
#include <digirth/homomorphism.hh>
#include <digirth/rational.hh>

#include <optional>
#include <string>
#include <vector>

namespace digirth
{
    /// Parameters of C(k,d), with 1 <= d <= k.
    struct KdParams
    {
        int k = 1;
        int d = 1;

        auto operator== (const KdParams &) const -> bool = default;
    };

    auto validate(const KdParams &) -> void;

    /// The digraph on Z_k with an arc i -> j whenever (j - i) mod k lies in {d, ..., k-1}.
    auto gen_ckd(const KdParams &) -> Digraph;

    /**
     * A placement of each vertex on the circle S_q of perimeter q. Positions
     * increase clockwise, so the clockwise distance from a to b is (b - a) mod q.
     */
    struct CircularColouring
    {
        Rational perimeter;
        std::vector<Rational> positions;
    };

    /// Reason the colouring is not a circular colouring of d, or nullopt if it is one.
    auto circular_colouring_error(const Digraph & d, const CircularColouring & c) -> std::optional<std::string>;

    /// Place f(v) at f(v)/d on S_{k/d}. Throws InvalidArgument if f is not a (k,d)-colouring of d.
    auto kd_colouring_to_circular(const Digraph & d, const VertexMap & f, const KdParams & p) -> CircularColouring;

    /// Arcs at clockwise distance at most 1 (which forces 0 or 1). Throws InvalidArgument on an invalid colouring.
    auto tight_arcs(const Digraph & d, const CircularColouring & c) -> std::vector<Arc>;

    /// A directed cycle made of tight arcs, if one exists.
    auto has_tight_cycle(const Digraph & d, const CircularColouring & c) -> std::optional<Cycle>;

    struct CircularChromaticNumber
    {
        Rational value;
        KdParams params;
        VertexMap colouring;
    };

    /**
     * Exact circular chromatic number: the least k/d, over 1 <= d <= k <= cap,
     * such that d is (k,d)-colourable. Candidates are tried in ascending order
     * of k/d, equal values by smaller k. The cap defaults to the vertex count;
     * LimitExceeded is thrown if no candidate under the cap works.
     */
    auto chi_c(const Digraph & d, std::optional<int> cap = std::nullopt) -> CircularChromaticNumber;

    /**
     * The map v -> floor(v / d') from C(k d', d d') to C(k, d). The result is
     * checked with check_acyclic_hom before it is returned; a failed check is
     * a logic_error.
     */
    auto quotient_hom(int k, int d, int dprime) -> VertexMap;
}

#endif
