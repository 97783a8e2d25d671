/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/homomorphism.hh>
#include <digirth/errors.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace digirth
{
    auto describe(const Violation & violation) -> string
    {
        if (auto bad = std::get_if<BadArc>(&violation))
            return "arc " + to_string(bad->arc.first) + "->" + to_string(bad->arc.second)
                + " maps to a non-arc of the target";

        auto & fiber = std::get<CyclicFiber>(violation);
        string cycle;
        for (auto v : fiber.cycle.vertices)
            cycle += (cycle.empty() ? "" : ",") + to_string(v);
        return "fiber over " + to_string(fiber.target_vertex) + " contains the cycle " + cycle;
    }

    namespace
    {
        auto check_map_shape(const Digraph & source, const Digraph & target, const VertexMap & f) -> void
        {
            if (std::cmp_not_equal(f.size(), source.vertex_count()))
                throw InvalidArgument("map has " + to_string(f.size()) + " entries but the source has "
                        + to_string(source.vertex_count()) + " vertices");
            for (auto x : f)
                if (x < 0 || x >= target.vertex_count())
                    throw InvalidArgument("map value " + to_string(x) + " is not a target vertex");
        }
    }

    auto check_acyclic_hom(const Digraph & source, const Digraph & target, const VertexMap & f) -> HomVerdict
    {
        check_map_shape(source, target, f);

        for (auto & [u, v] : source.arcs())
            if (f[u] != f[v] && ! target.has_arc(f[u], f[v]))
                return HomVerdict{ BadArc{ { u, v } } };

        vector<VertexSet> fibers(target.vertex_count());
        for (Vertex v = 0 ; v < source.vertex_count() ; ++v)
            fibers[f[v]].push_back(v);

        for (Vertex x = 0 ; x < target.vertex_count() ; ++x) {
            auto sub = induced(source, fibers[x]);
            if (auto cycle = find_cycle(sub.digraph)) {
                vector<Vertex> original;
                for (auto v : cycle->vertices)
                    original.push_back(sub.original[v]);
                return HomVerdict{ CyclicFiber{ x, canonical_cycle(std::move(original)) } };
            }
        }

        return HomVerdict{ };
    }

    auto compose(const VertexMap & first, const VertexMap & then) -> VertexMap
    {
        VertexMap result;
        result.reserve(first.size());
        for (auto x : first)
            result.push_back(then.at(x));
        return result;
    }

    auto is_surjective(const VertexMap & f, int target_size) -> bool
    {
        vector<char> hit(target_size, 0);
        for (auto x : f)
            hit.at(x) = 1;
        return std::all_of(hit.begin(), hit.end(), [] (char h) { return h; });
    }

    HomomorphismSolver::HomomorphismSolver(const Digraph & source, const Digraph & target) :
        _source(source),
        _target(target)
    {
        if (target.vertex_count() > solver_target_limit)
            throw LimitExceeded("solver targets are limited to " + to_string(solver_target_limit) + " vertices");

        _order.resize(source.vertex_count());
        std::iota(_order.begin(), _order.end(), 0);
        std::stable_sort(_order.begin(), _order.end(), [&] (Vertex a, Vertex b) {
                return source.out_degree(a) + source.in_degree(a) > source.out_degree(b) + source.in_degree(b);
                });

        // A source arc x -> y with f(x) = c forces f(y) into {c} u N+(c), and symmetrically for N-(c).
        _out_allowed.assign(target.vertex_count(), 0);
        _in_allowed.assign(target.vertex_count(), 0);
        for (Vertex c = 0 ; c < target.vertex_count() ; ++c) {
            _out_allowed[c] |= uint64_t{ 1 } << c;
            _in_allowed[c] |= uint64_t{ 1 } << c;
        }
        for (auto & [a, b] : target.arcs()) {
            _out_allowed[a] |= uint64_t{ 1 } << b;
            _in_allowed[b] |= uint64_t{ 1 } << a;
        }
    }

    auto HomomorphismSolver::for_each(const std::function<bool (const VertexMap &)> & visit) const -> bool
    {
        int n = _source.vertex_count();
        int k = _target.vertex_count();
        if (0 == n)
            return visit(VertexMap{ });
        if (0 == k)
            return true;

        uint64_t everything = (k == 64) ? ~uint64_t{ 0 } : ((uint64_t{ 1 } << k) - 1);
        VertexMap assignment(n, -1);
        vector<vector<uint64_t> > domains(n + 1, vector<uint64_t>(n, everything));

        // Scratch for the fiber reachability test.
        vector<int> visited_stamp(n, 0);
        int stamp = 0;
        vector<Vertex> stack;

        // Adding v to the fiber over c creates a cycle iff v reaches itself inside that fiber.
        auto closes_cycle = [&] (Vertex v, Vertex c) -> bool {
            ++stamp;
            stack.clear();
            for (auto w : _source.out_neighbours(v))
                if (assignment[w] == c && visited_stamp[w] != stamp) {
                    visited_stamp[w] = stamp;
                    stack.push_back(w);
                }
            while (! stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                if (x == v)
                    return true;
                for (auto w : _source.out_neighbours(x))
                    if ((w == v || assignment[w] == c) && visited_stamp[w] != stamp) {
                        visited_stamp[w] = stamp;
                        stack.push_back(w);
                    }
            }
            return false;
        };

        bool keep_going = true;
        std::function<void (int)> search = [&] (int depth) {
            if (depth == n) {
                keep_going = visit(assignment);
                return;
            }

            Vertex v = _order[depth];
            uint64_t options = domains[depth][v];
            while (options && keep_going) {
                Vertex c = std::countr_zero(options);
                options &= options - 1;

                assignment[v] = c;
                if (! closes_cycle(v, c)) {
                    auto & next = domains[depth + 1];
                    next = domains[depth];
                    bool wiped_out = false;
                    for (auto w : _source.out_neighbours(v))
                        if (assignment[w] == -1 && 0 == (next[w] &= _out_allowed[c]))
                            wiped_out = true;
                    for (auto w : _source.in_neighbours(v))
                        if (assignment[w] == -1 && 0 == (next[w] &= _in_allowed[c]))
                            wiped_out = true;
                    if (! wiped_out)
                        search(depth + 1);
                }
                assignment[v] = -1;
            }
        };

        search(0);
        return keep_going;
    }

    auto solve_hom(const Digraph & source, const Digraph & target, SolveMode mode) -> SolveResult
    {
        SolveResult result;
        HomomorphismSolver solver{ source, target };
        solver.for_each([&] (const VertexMap & f) {
                ++result.count;
                if (mode != SolveMode::Count)
                    result.maps.push_back(f);
                return mode != SolveMode::First;
                });
        return result;
    }

    auto find_hom(const Digraph & source, const Digraph & target) -> optional<VertexMap>
    {
        auto result = solve_hom(source, target, SolveMode::First);
        if (result.maps.empty())
            return std::nullopt;
        return result.maps.front();
    }

    auto count_homs(const Digraph & source, const Digraph & target) -> uint64_t
    {
        return solve_hom(source, target, SolveMode::Count).count;
    }

    auto is_colourable(const Digraph & d, const Digraph & c) -> bool
    {
        return find_hom(d, c).has_value();
    }

    auto check_core(const Digraph & c) -> CoreVerdict
    {
        // Every endomorphism of a core is a bijection; on a finite set, surjective suffices.
        CoreVerdict verdict{ true, std::nullopt };
        HomomorphismSolver{ c, c }.for_each([&] (const VertexMap & f) {
                if (is_surjective(f, c.vertex_count()))
                    return true;
                verdict = CoreVerdict{ false, f };
                return false;
                });
        return verdict;
    }

    auto is_core(const Digraph & c) -> bool
    {
        return check_core(c).core;
    }

    auto check_uniquely_colourable(const Digraph & d, const Digraph & c, int automorphism_limit) -> UniqueVerdict
    {
        UniqueVerdict verdict;

        auto reference = find_hom(d, c);
        if (! reference) {
            verdict.reason = "no colouring exists";
            return verdict;
        }
        verdict.reference = reference;

        if (! is_surjective(*reference, c.vertex_count())) {
            verdict.reason = "colouring is not surjective";
            return verdict;
        }

        std::set<VertexMap> orbit;
        for (auto & pi : automorphisms(c, automorphism_limit))
            orbit.insert(compose(*reference, pi.image));
        verdict.orbit_size = orbit.size();

        HomomorphismSolver{ d, c }.for_each([&] (const VertexMap & f) {
                if (orbit.contains(f))
                    return true;
                verdict.outsider = f;
                return false;
                });

        if (verdict.outsider) {
            verdict.reason = "two colourings do not differ by an automorphism";
            return verdict;
        }

        verdict.unique = true;
        return verdict;
    }

    auto is_uniquely_colourable(const Digraph & d, const Digraph & c, int automorphism_limit) -> bool
    {
        return check_uniquely_colourable(d, c, automorphism_limit).unique;
    }
}
