/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_CONSTRUCT_HH
#define DIGIRTH_GUARD_CONSTRUCT_HH 1

#include <digirth/digraph.hh>
#include <digirth/errors.hh>
#include <digirth/homomorphism.hh>
#include <digirth/rational.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace digirth
{
    /**
     * The blow-up D_n of a base digraph D: vertex i of D becomes a layer V_i of
     * n vertices carrying the transitive tournament (i,r) -> (i,s) for r < s,
     * and each base arc ij becomes all n^2 arcs from V_i to V_j. Vertex (i,r)
     * has id i*n + r.
     */
    struct BlowUp
    {
        Digraph base;
        int layer_size = 1;
        Digraph layered;

        auto vertex(Vertex i, int r) const -> Vertex { return i * layer_size + r; }
        auto layer_of(Vertex v) const -> Vertex { return v / layer_size; }
        auto position_of(Vertex v) const -> int { return v % layer_size; }

        /// The natural homomorphism sending each layer V_i to i.
        auto natural_map() const -> VertexMap;
    };

    auto blowup(const Digraph & base, int layer_size) -> BlowUp;

    /// The natural map for a digraph on k*n vertices laid out as a blow-up with layer size n.
    auto natural_map(int vertex_count, int layer_size) -> VertexMap;

    /// Keep each arc of host independently with probability p, one draw per arc in lexicographic order.
    auto sample(const Digraph & host, double p, std::uint64_t seed) -> Digraph;
    auto sample(const BlowUp & b, double p, std::uint64_t seed) -> Digraph;

    struct Repair
    {
        Digraph repaired;
        std::vector<Arc> deleted;
    };

    /// Independent repair could not hit every short cycle with vertex-disjoint arcs.
    class RepairFailed : public Error
    {
        private:
            std::vector<Cycle> _unhit;

        public:
            RepairFailed(const std::string & message, std::vector<Cycle> unhit) :
                Error(message),
                _unhit(std::move(unhit))
            {
            }

            auto unhit() const -> const std::vector<Cycle> & { return _unhit; }
    };

    /**
     * Delete one arc from every cycle of length less than g.
     *
     * Plain mode is greedy: repeatedly delete the arc lying on the most
     * remaining short cycles, ties to the lexicographically smallest arc.
     *
     * Independent mode takes cycles by increasing length and deletes, from
     * each cycle not already hit, its lexicographically first arc whose
     * endpoints no earlier deletion touches. Throws RepairFailed if some cycle
     * has no such arc.
     */
    auto short_cycle_repair(const Digraph & h, int g, bool independent) -> Repair;

    auto is_independent_arc_set(const std::vector<Arc> &) -> bool;

    /**
     * A directed cycle of length cycle_length plus a directed path of length
     * path_length joining two (possibly equal) cycle vertices, internally
     * disjoint from the cycle.
     */
    struct DoubleCycle
    {
        int cycle_length;
        int path_length;
        Cycle cycle;
        /// From its start on the cycle to its end on the cycle, both endpoints included.
        std::vector<Vertex> path;
        std::vector<Arc> arcs;
        VertexSet vertices;
    };

    /**
     * Every (l1,l2)-double cycle with l1, l2 < g, one entry per distinct arc
     * set. When the same subdigraph decomposes in more than one way, the
     * decomposition with the longest cycle is reported.
     */
    auto double_cycles(const Digraph & h, int g) -> std::vector<DoubleCycle>;

    struct ConstructParams
    {
        int g = 2;
        int n = 1;
        Rational eps{ 1, 9 };
        /// Overrides the default sampling probability n^(eps - 1).
        std::optional<double> p;
        std::uint64_t seed = 0;
        int max_tries = 1;
        bool independent = false;
        /// Exhaustive (non-)colourability checks are attempted up to this many vertices.
        int solver_cap = 24;

        auto effective_p() const -> double;
    };

    /// The largest unit fraction strictly below 1/(4g).
    auto default_eps(int g) -> Rational;

    auto validate(const ConstructParams &) -> void;

    /// ceil(n^(g eps)), computed exactly.
    auto short_cycle_threshold(int n, int g, const Rational & eps) -> std::uint64_t;

    /// At most ceil(n^(g eps)) cycles of length less than g.
    auto in_d1(const Digraph & h, const ConstructParams &) -> bool;

    /// in_d1, and any two cycles of length less than g are vertex-disjoint.
    auto in_d3(const Digraph & h, const ConstructParams &) -> bool;

    struct VerificationReport
    {
        std::optional<int> girth;
        bool girth_ok = false;
        bool deleted_ok = false;
        bool d_colourable = false;
        /// Unset when the exhaustive solve was skipped.
        std::optional<bool> not_c_colourable;
        bool solver_exhaustive = false;
        /// Independent mode only; unset when not attempted.
        std::optional<bool> uniquely_colourable;
        bool unique_exhaustive = false;

        /// Every check that must run ran and passed.
        auto verified() const -> bool;
        auto operator== (const VerificationReport &) const -> bool = default;
    };

    struct Witness
    {
        Digraph dstar;
        std::vector<Arc> deleted;
        ConstructParams params;
        int tries_used = 0;
        VerificationReport report;
    };

    struct TryDiagnostic
    {
        int index;
        std::uint64_t seed;
        std::size_t sampled_arcs;
        std::size_t short_cycles;
        std::string outcome;
    };

    struct ConstructOutcome
    {
        std::optional<Witness> witness;
        std::vector<TryDiagnostic> tries;
    };

    /**
     * Search for a digraph of girth at least g that is base-colourable but not
     * target-colourable, by sampling the blow-up of base and repairing short
     * cycles. Try t samples with derive_seed(seed, t). The first fully
     * verified try wins; otherwise the outcome carries per-try diagnostics
     * and no witness.
     *
     * Throws PreconditionFailed if base is target-colourable.
     */
    auto construct_witness(const Digraph & base, const Digraph & target, const ConstructParams &) -> ConstructOutcome;

    /// Recompute every verification check from the witness alone.
    auto verify_witness(const Witness & w, const Digraph & base, const Digraph & target) -> VerificationReport;
}

#endif
