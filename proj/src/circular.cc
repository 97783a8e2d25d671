/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/circular.hh>
#include <digirth/errors.hh>

#include <algorithm>
#include <map>
#include <stdexcept>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace digirth
{
    auto validate(const KdParams & p) -> void
    {
        if (p.d < 1 || p.k < p.d)
            throw InvalidArgument("C(k,d) needs 1 <= d <= k, got k=" + to_string(p.k) + " d=" + to_string(p.d));
    }

    auto gen_ckd(const KdParams & p) -> Digraph
    {
        validate(p);
        vector<Arc> arcs;
        for (int i = 0 ; i < p.k ; ++i)
            for (int step = p.d ; step < p.k ; ++step)
                arcs.emplace_back(i, (i + step) % p.k);
        return Digraph{ p.k, std::move(arcs) };
    }

    auto circular_colouring_error(const Digraph & d, const CircularColouring & c) -> optional<string>
    {
        if (std::cmp_not_equal(c.positions.size(), d.vertex_count()))
            return "colouring has " + to_string(c.positions.size()) + " positions for " + to_string(d.vertex_count())
                + " vertices";
        if (c.perimeter == Rational{ 0 })
            return "perimeter must be positive";
        for (auto & x : c.positions)
            if (x >= c.perimeter)
                return "position " + x.to_string() + " is not in [0, " + c.perimeter.to_string() + ")";

        for (auto & [u, v] : d.arcs())
            if (c.positions[u] != c.positions[v]
                    && clockwise_distance(c.positions[u], c.positions[v], c.perimeter) < Rational{ 1 })
                return "arc " + to_string(u) + "->" + to_string(v) + " is shorter than 1 clockwise";

        std::map<Rational, VertexSet> fibers;
        for (Vertex v = 0 ; v < d.vertex_count() ; ++v)
            fibers[c.positions[v]].push_back(v);
        for (auto & [position, fiber] : fibers)
            if (! is_acyclic(induced(d, fiber).digraph))
                return "vertices at position " + position.to_string() + " induce a cycle";

        return std::nullopt;
    }

    auto kd_colouring_to_circular(const Digraph & d, const VertexMap & f, const KdParams & p) -> CircularColouring
    {
        auto verdict = check_acyclic_hom(d, gen_ckd(p), f);
        if (! verdict.valid())
            throw InvalidArgument("not a (" + to_string(p.k) + "," + to_string(p.d) + ")-colouring: "
                    + describe(*verdict.violation));

        CircularColouring result{ Rational{ p.k, p.d }, { } };
        for (auto x : f)
            result.positions.emplace_back(x, p.d);
        return result;
    }

    auto tight_arcs(const Digraph & d, const CircularColouring & c) -> vector<Arc>
    {
        if (auto error = circular_colouring_error(d, c))
            throw InvalidArgument("invalid circular colouring: " + *error);

        vector<Arc> result;
        for (auto & [u, v] : d.arcs())
            if (clockwise_distance(c.positions[u], c.positions[v], c.perimeter) <= Rational{ 1 })
                result.emplace_back(u, v);
        return result;
    }

    auto has_tight_cycle(const Digraph & d, const CircularColouring & c) -> optional<Cycle>
    {
        return find_cycle(Digraph{ d.vertex_count(), tight_arcs(d, c) });
    }

    auto chi_c(const Digraph & d, optional<int> cap) -> CircularChromaticNumber
    {
        int limit = cap.value_or(std::max(1, d.vertex_count()));
        if (limit < 1)
            throw InvalidArgument("chi_c cap must be at least 1");
        if (limit > solver_target_limit)
            throw LimitExceeded("chi_c cap " + to_string(limit) + " exceeds the solver target limit of "
                    + to_string(solver_target_limit));

        vector<KdParams> candidates;
        for (int k = 1 ; k <= limit ; ++k)
            for (int dd = 1 ; dd <= k ; ++dd)
                candidates.push_back(KdParams{ k, dd });
        std::stable_sort(candidates.begin(), candidates.end(), [] (const KdParams & a, const KdParams & b) {
                auto lhs = a.k * b.d, rhs = b.k * a.d;
                return lhs != rhs ? lhs < rhs : a.k < b.k;
                });

        for (auto & p : candidates)
            if (auto f = find_hom(d, gen_ckd(p)))
                return CircularChromaticNumber{ Rational{ p.k, p.d }, p, *f };

        throw LimitExceeded("no (k,d)-colouring with k <= " + to_string(limit) + "; raise the cap");
    }

    auto quotient_hom(int k, int d, int dprime) -> VertexMap
    {
        validate(KdParams{ k, d });
        if (dprime < 1)
            throw InvalidArgument("quotient divisor must be at least 1");

        KdParams fine{ k * dprime, d * dprime };
        VertexMap f;
        for (int v = 0 ; v < fine.k ; ++v)
            f.push_back(v / dprime);

        auto verdict = check_acyclic_hom(gen_ckd(fine), gen_ckd(KdParams{ k, d }), f);
        if (! verdict.valid())
            throw std::logic_error("quotient map C(" + to_string(fine.k) + "," + to_string(fine.d) + ") -> C("
                    + to_string(k) + "," + to_string(d) + ") is not an acyclic homomorphism: "
                    + describe(*verdict.violation));
        return f;
    }
}
