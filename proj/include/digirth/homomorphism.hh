/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_HOMOMORPHISM_HH
#define DIGIRTH_GUARD_HOMOMORPHISM_HH 1

#include <digirth/digraph.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace digirth
{
    /// f[v] is the image of source vertex v.
    using VertexMap = std::vector<Vertex>;

    /// An arc that neither collapses nor lands on an arc: u -> v is a source arc, f(u) != f(v), and f(u) -> f(v) is not a target arc.
    struct BadArc
    {
        Arc arc;
        auto operator== (const BadArc &) const -> bool = default;
    };

    /// A fiber that is not acyclic: the fiber over target_vertex contains this cycle of the source.
    struct CyclicFiber
    {
        Vertex target_vertex;
        Cycle cycle;
        auto operator== (const CyclicFiber &) const -> bool = default;
    };

    using Violation = std::variant<BadArc, CyclicFiber>;

    struct HomVerdict
    {
        std::optional<Violation> violation;

        auto valid() const -> bool { return ! violation.has_value(); }
        explicit operator bool() const { return valid(); }
    };

    auto describe(const Violation &) -> std::string;

    /**
     * A map between two digraphs, with the digraphs it claims to relate. This
     * is what gets serialised; the solver works on bare VertexMaps.
     */
    struct Homomorphism
    {
        Digraph source;
        Digraph target;
        VertexMap map;
    };

    /**
     * Check that f is an acyclic homomorphism from source to target: every arc
     * either collapses or lands on an arc, and every fiber induces an acyclic
     * subdigraph. On failure the verdict carries a concrete witness. Arc
     * violations are reported before fiber violations.
     *
     * Throws InvalidArgument if f has the wrong length or values out of range.
     */
    auto check_acyclic_hom(const Digraph & source, const Digraph & target, const VertexMap & f) -> HomVerdict;

    auto compose(const VertexMap & first, const VertexMap & then) -> VertexMap;

    auto is_surjective(const VertexMap & f, int target_size) -> bool;

    /// Targets are limited to this many vertices so that domains fit in a machine word.
    inline constexpr int solver_target_limit = 64;

    /**
     * Exhaustive backtracking search for acyclic homomorphisms. Source vertices
     * are assigned in descending order of total degree (ties by index), values
     * in ascending order, so solutions are produced in lexicographic order of
     * that assignment sequence.
     */
    class HomomorphismSolver
    {
        private:
            const Digraph & _source;
            const Digraph & _target;
            std::vector<Vertex> _order;
            std::vector<std::uint64_t> _out_allowed, _in_allowed;

        public:
            HomomorphismSolver(const Digraph & source, const Digraph & target);

            /// Calls visit for each valid map; stops early when visit returns false.
            /// Returns true if the search ran to completion.
            auto for_each(const std::function<bool (const VertexMap &)> & visit) const -> bool;
    };

    enum class SolveMode { First, All, Count };

    struct SolveResult
    {
        std::vector<VertexMap> maps;
        std::uint64_t count = 0;
    };

    /// First: at most one map. All: every map. Count: count only, maps left empty.
    auto solve_hom(const Digraph & source, const Digraph & target, SolveMode mode) -> SolveResult;

    auto find_hom(const Digraph & source, const Digraph & target) -> std::optional<VertexMap>;
    auto count_homs(const Digraph & source, const Digraph & target) -> std::uint64_t;
    auto is_colourable(const Digraph & d, const Digraph & c) -> bool;

    struct CoreVerdict
    {
        bool core;
        /// A valid endomorphism that is not a bijection, when not a core.
        std::optional<VertexMap> witness;
    };

    auto check_core(const Digraph & c) -> CoreVerdict;
    auto is_core(const Digraph & c) -> bool;

    struct UniqueVerdict
    {
        bool unique = false;
        /// Human-readable reason when not unique.
        std::string reason;
        std::optional<VertexMap> reference;
        std::optional<VertexMap> outsider;
        std::size_t orbit_size = 0;
    };

    /**
     * d is uniquely c-colourable iff it has a surjective c-colouring and every
     * c-colouring lies in the Aut(c)-orbit of one fixed colouring.
     */
    auto check_uniquely_colourable(const Digraph & d, const Digraph & c,
            int automorphism_limit = default_automorphism_limit) -> UniqueVerdict;

    auto is_uniquely_colourable(const Digraph & d, const Digraph & c,
            int automorphism_limit = default_automorphism_limit) -> bool;
}

#endif
