/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_DIGRAPH_HH
#define DIGIRTH_GUARD_DIGRAPH_HH 1

#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace digirth
{
    using Vertex = int;
    using Arc = std::pair<Vertex, Vertex>;
    using VertexSet = std::vector<Vertex>;

    /**
     * A simple loopless digraph on the vertices 0..n-1. Oppositely directed
     * arcs uv and vu may both be present (a digon), but no arc appears twice.
     *
     * Immutable once built. Arcs are kept sorted lexicographically.
     */
    class Digraph
    {
        private:
            int _n = 0;
            std::vector<Arc> _arcs;
            std::vector<std::vector<Vertex> > _out, _in;

        public:
            Digraph() = default;

            /// Validates and deduplicates. Throws InvalidArgument on loops or out-of-range endpoints.
            Digraph(int n, std::vector<Arc> arcs);

            auto vertex_count() const -> int { return _n; }
            auto arc_count() const -> std::size_t { return _arcs.size(); }
            auto arcs() const -> const std::vector<Arc> & { return _arcs; }

            auto has_arc(Vertex u, Vertex v) const -> bool;

            auto out_neighbours(Vertex v) const -> std::span<const Vertex> { return _out[v]; }
            auto in_neighbours(Vertex v) const -> std::span<const Vertex> { return _in[v]; }
            auto out_degree(Vertex v) const -> int { return int(_out[v].size()); }
            auto in_degree(Vertex v) const -> int { return int(_in[v].size()); }

            auto operator== (const Digraph & other) const -> bool
            {
                return _n == other._n && _arcs == other._arcs;
            }
    };

    /// Length of a shortest directed cycle, or infinite when acyclic.
    struct Girth
    {
        std::optional<int> length;

        auto is_infinite() const -> bool { return ! length.has_value(); }
        auto at_least(int g) const -> bool { return is_infinite() || *length >= g; }
        auto operator== (const Girth &) const -> bool = default;

        static auto infinite() -> Girth { return Girth{ }; }
        static auto finite(int l) -> Girth { return Girth{ l }; }
    };

    auto operator<< (std::ostream &, const Girth &) -> std::ostream &;

    /// A directed cycle v_1 ... v_l (the closing arc v_l v_1 is implied), rotated
    /// so that its minimum vertex comes first.
    struct Cycle
    {
        std::vector<Vertex> vertices;

        auto length() const -> int { return int(vertices.size()); }
        auto arcs() const -> std::vector<Arc>;
        auto operator== (const Cycle &) const -> bool = default;
        auto operator<=> (const Cycle &) const = default;
    };

    auto canonical_cycle(std::vector<Vertex> vertices) -> Cycle;

    /// True if the vertex sequence is a directed cycle of d with distinct vertices.
    auto is_cycle_of(const Digraph & d, const Cycle & c) -> bool;

    struct Permutation
    {
        std::vector<Vertex> image;

        auto size() const -> int { return int(image.size()); }
        auto operator() (Vertex v) const -> Vertex { return image[v]; }
        auto operator== (const Permutation &) const -> bool = default;
        auto operator<=> (const Permutation &) const = default;

        static auto identity(int n) -> Permutation;
    };

    struct InducedSubdigraph
    {
        Digraph digraph;
        /// original[i] is the vertex of the parent digraph relabelled to i.
        std::vector<Vertex> original;
    };

    auto is_acyclic(const Digraph &) -> bool;

    /// Some directed cycle of d, if there is one.
    auto find_cycle(const Digraph & d) -> std::optional<Cycle>;

    auto girth(const Digraph &) -> Girth;

    /// Every directed cycle of length strictly less than g, each once, in canonical form, sorted.
    /// Enumeration stops once max_count cycles have been found.
    auto short_cycles(const Digraph &, int g,
            std::size_t max_count = std::numeric_limits<std::size_t>::max()) -> std::vector<Cycle>;

    /// The subdigraph induced on s, relabelled 0..|s|-1 in increasing vertex order.
    auto induced(const Digraph &, const VertexSet & s) -> InducedSubdigraph;

    inline constexpr int default_automorphism_limit = 10;

    auto automorphisms(const Digraph &, int limit = default_automorphism_limit) -> std::vector<Permutation>;

    /// s induces an acyclic subdigraph and no arc leaves s.
    auto is_acyclic_sink_set(const Digraph &, const VertexSet & s) -> bool;

    auto parse_digraph(std::string_view text) -> Digraph;
    auto write_digraph(const Digraph &) -> std::string;
    auto write_dot(const Digraph &) -> std::string;

    auto read_digraph_file(const std::string & filename) -> Digraph;
    auto write_digraph_file(const std::string & filename, const Digraph &) -> void;
}

#endif
