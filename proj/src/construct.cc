/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/construct.hh>
#include <digirth/random.hh>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

using boost::multiprecision::cpp_int;
using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace digirth
{
    auto BlowUp::natural_map() const -> VertexMap
    {
        return digirth::natural_map(layered.vertex_count(), layer_size);
    }

    auto natural_map(int vertex_count, int layer_size) -> VertexMap
    {
        VertexMap result(vertex_count);
        for (Vertex v = 0 ; v < vertex_count ; ++v)
            result[v] = v / layer_size;
        return result;
    }

    auto blowup(const Digraph & base, int layer_size) -> BlowUp
    {
        if (layer_size < 1)
            throw InvalidArgument("blow-up layer size must be at least 1");

        BlowUp result{ base, layer_size, { } };
        int n = layer_size;

        vector<Arc> arcs;
        for (Vertex i = 0 ; i < base.vertex_count() ; ++i)
            for (int r = 0 ; r < n ; ++r)
                for (int s = r + 1 ; s < n ; ++s)
                    arcs.emplace_back(result.vertex(i, r), result.vertex(i, s));

        for (auto & [i, j] : base.arcs())
            for (int r = 0 ; r < n ; ++r)
                for (int s = 0 ; s < n ; ++s)
                    arcs.emplace_back(result.vertex(i, r), result.vertex(j, s));

        result.layered = Digraph{ base.vertex_count() * n, std::move(arcs) };
        return result;
    }

    auto sample(const Digraph & host, double p, uint64_t seed) -> Digraph
    {
        if (! (p >= 0.0 && p <= 1.0))
            throw InvalidArgument("sampling probability must lie in [0, 1]");

        Random random{ seed };
        vector<Arc> kept;
        for (auto & arc : host.arcs())
            if (random.bernoulli(p))
                kept.push_back(arc);
        return Digraph{ host.vertex_count(), std::move(kept) };
    }

    auto sample(const BlowUp & b, double p, uint64_t seed) -> Digraph
    {
        return sample(b.layered, p, seed);
    }

    namespace
    {
        auto remove_arcs(const Digraph & h, const vector<Arc> & deleted) -> Digraph
        {
            std::set<Arc> gone(deleted.begin(), deleted.end());
            vector<Arc> arcs;
            for (auto & arc : h.arcs())
                if (! gone.contains(arc))
                    arcs.push_back(arc);
            return Digraph{ h.vertex_count(), std::move(arcs) };
        }

        auto sorted_arcs(const Cycle & c) -> vector<Arc>
        {
            auto arcs = c.arcs();
            std::sort(arcs.begin(), arcs.end());
            return arcs;
        }

        auto greedy_repair(const vector<Cycle> & cycles) -> vector<Arc>
        {
            vector<vector<Arc> > remaining;
            for (auto & c : cycles)
                remaining.push_back(sorted_arcs(c));

            vector<Arc> deleted;
            while (! remaining.empty()) {
                std::map<Arc, int> hits;
                for (auto & arcs : remaining)
                    for (auto & arc : arcs)
                        ++hits[arc];

                // std::map iterates in lexicographic order, so the first maximum wins ties.
                auto best = hits.begin();
                for (auto it = hits.begin() ; it != hits.end() ; ++it)
                    if (it->second > best->second)
                        best = it;

                auto chosen = best->first;
                deleted.push_back(chosen);
                std::erase_if(remaining, [&] (const vector<Arc> & arcs) {
                        return std::binary_search(arcs.begin(), arcs.end(), chosen);
                        });
            }

            std::sort(deleted.begin(), deleted.end());
            return deleted;
        }

        auto independent_repair(vector<Cycle> cycles, int vertex_count) -> vector<Arc>
        {
            std::stable_sort(cycles.begin(), cycles.end(), [] (const Cycle & a, const Cycle & b) {
                    return a.length() < b.length();
                    });

            vector<char> touched(vertex_count, 0);
            std::set<Arc> deleted;
            vector<Cycle> unhit;
            for (auto & c : cycles) {
                auto arcs = sorted_arcs(c);
                if (std::any_of(arcs.begin(), arcs.end(), [&] (const Arc & a) { return deleted.contains(a); }))
                    continue;

                auto choice = std::find_if(arcs.begin(), arcs.end(), [&] (const Arc & a) {
                        return ! touched[a.first] && ! touched[a.second];
                        });
                if (choice == arcs.end()) {
                    unhit.push_back(c);
                    continue;
                }

                deleted.insert(*choice);
                touched[choice->first] = touched[choice->second] = 1;
            }

            if (! unhit.empty()) {
                string which;
                for (auto & c : unhit) {
                    which += which.empty() ? "" : "; ";
                    for (std::size_t i = 0 ; i < c.vertices.size() ; ++i)
                        which += (i ? "," : "") + to_string(c.vertices[i]);
                }
                throw RepairFailed("no independent arc set hits every short cycle; unhit: " + which, std::move(unhit));
            }

            return vector<Arc>(deleted.begin(), deleted.end());
        }
    }

    auto short_cycle_repair(const Digraph & h, int g, bool independent) -> Repair
    {
        auto cycles = short_cycles(h, g);
        auto deleted = independent ? independent_repair(cycles, h.vertex_count()) : greedy_repair(cycles);
        return Repair{ remove_arcs(h, deleted), std::move(deleted) };
    }

    auto is_independent_arc_set(const vector<Arc> & arcs) -> bool
    {
        std::set<Vertex> seen;
        for (auto & [u, v] : arcs) {
            if (seen.contains(u) || seen.contains(v))
                return false;
            seen.insert(u);
            seen.insert(v);
        }
        return true;
    }

    auto double_cycles(const Digraph & h, int g) -> vector<DoubleCycle>
    {
        std::map<vector<Arc>, DoubleCycle> found;

        auto offer = [&] (DoubleCycle candidate) {
            auto key = candidate.arcs;
            auto [it, inserted] = found.try_emplace(key, candidate);
            if (! inserted && candidate.cycle_length > it->second.cycle_length)
                it->second = std::move(candidate);
        };

        vector<char> on_cycle(h.vertex_count(), 0), on_path(h.vertex_count(), 0);
        vector<Vertex> path;

        for (auto & cycle : short_cycles(h, g)) {
            for (auto v : cycle.vertices)
                on_cycle[v] = 1;
            auto cycle_arcs = cycle.arcs();
            std::set<Arc> cycle_arc_set(cycle_arcs.begin(), cycle_arcs.end());

            auto record = [&] () {
                DoubleCycle d{ cycle.length(), int(path.size()) - 1, cycle, path, cycle_arcs, cycle.vertices };
                for (std::size_t i = 0 ; i + 1 < path.size() ; ++i)
                    d.arcs.emplace_back(path[i], path[i + 1]);
                for (std::size_t i = 1 ; i + 1 < path.size() ; ++i)
                    d.vertices.push_back(path[i]);
                std::sort(d.arcs.begin(), d.arcs.end());
                std::sort(d.vertices.begin(), d.vertices.end());
                offer(std::move(d));
            };

            // Paths leave the cycle at once and wander outside it until they step back onto it.
            std::function<void (Vertex)> extend = [&] (Vertex v) {
                for (auto w : h.out_neighbours(v)) {
                    if (on_cycle[w]) {
                        bool single_chord = path.size() == 1;
                        if (! (single_chord && cycle_arc_set.contains(Arc{ v, w }))) {
                            path.push_back(w);
                            record();
                            path.pop_back();
                        }
                    }
                    else if (! on_path[w] && int(path.size()) + 1 < g) {
                        on_path[w] = 1;
                        path.push_back(w);
                        extend(w);
                        path.pop_back();
                        on_path[w] = 0;
                    }
                }
            };

            for (auto start : cycle.vertices) {
                path.assign(1, start);
                extend(start);
            }

            for (auto v : cycle.vertices)
                on_cycle[v] = 0;
        }

        vector<DoubleCycle> result;
        for (auto & [key, d] : found)
            result.push_back(std::move(d));
        return result;
    }

    auto ConstructParams::effective_p() const -> double
    {
        if (p)
            return *p;
        return std::pow(double(n), eps.to_double() - 1.0);
    }

    auto default_eps(int g) -> Rational
    {
        return Rational{ 1, 4 * std::int64_t(g) + 1 };
    }

    auto validate(const ConstructParams & params) -> void
    {
        if (params.g < 2)
            throw InvalidArgument("girth target g must be at least 2");
        if (params.n < 1)
            throw InvalidArgument("layer size n must be at least 1");
        if (params.eps == Rational{ 0 } || ! (params.eps < Rational{ 1, 4 * std::int64_t(params.g) }))
            throw InvalidArgument("eps must satisfy 0 < eps < 1/(4g), got " + params.eps.to_string());
        double p = params.effective_p();
        if (! (p > 0.0 && p <= 1.0))
            throw InvalidArgument("sampling probability must lie in (0, 1]");
        if (params.max_tries < 1)
            throw InvalidArgument("max_tries must be at least 1");
        if (params.solver_cap < 0)
            throw InvalidArgument("solver cap must be non-negative");
    }

    auto short_cycle_threshold(int n, int g, const Rational & eps) -> uint64_t
    {
        // Smallest t with t^den >= n^(g num).
        auto exponent = Rational{ g } * eps;
        cpp_int target = boost::multiprecision::pow(cpp_int(n), unsigned(exponent.num()));
        auto root_den = unsigned(exponent.den());

        auto estimate = uint64_t(std::floor(std::pow(double(n), exponent.to_double())));
        uint64_t t = estimate > 2 ? estimate - 2 : 0;
        while (boost::multiprecision::pow(cpp_int(t), root_den) < target)
            ++t;
        return t;
    }

    auto in_d1(const Digraph & h, const ConstructParams & params) -> bool
    {
        auto threshold = short_cycle_threshold(params.n, params.g, params.eps);
        return short_cycles(h, params.g, threshold + 1).size() <= threshold;
    }

    auto in_d3(const Digraph & h, const ConstructParams & params) -> bool
    {
        auto threshold = short_cycle_threshold(params.n, params.g, params.eps);
        auto cycles = short_cycles(h, params.g, threshold + 1);
        if (cycles.size() > threshold)
            return false;

        vector<char> used(h.vertex_count(), 0);
        for (auto & c : cycles)
            for (auto v : c.vertices) {
                if (used[v])
                    return false;
                used[v] = 1;
            }
        return true;
    }

    auto VerificationReport::verified() const -> bool
    {
        return girth_ok && deleted_ok && d_colourable && solver_exhaustive && not_c_colourable == true
            && uniquely_colourable != false;
    }

    auto verify_witness(const Witness & w, const Digraph & base, const Digraph & target) -> VerificationReport
    {
        VerificationReport report;
        auto & dstar = w.dstar;

        report.girth = girth(dstar).length;
        report.girth_ok = girth(dstar).at_least(w.params.g);

        report.deleted_ok = std::none_of(w.deleted.begin(), w.deleted.end(), [&] (const Arc & a) {
                return a.first < 0 || a.second < 0 || a.first >= dstar.vertex_count()
                    || a.second >= dstar.vertex_count() || dstar.has_arc(a.first, a.second);
                }) && (! w.params.independent || is_independent_arc_set(w.deleted));

        if (w.params.n >= 1 && dstar.vertex_count() == base.vertex_count() * w.params.n)
            report.d_colourable = check_acyclic_hom(dstar, base, natural_map(dstar.vertex_count(), w.params.n)).valid();

        if (dstar.vertex_count() <= w.params.solver_cap && target.vertex_count() <= solver_target_limit) {
            report.solver_exhaustive = true;
            report.not_c_colourable = ! is_colourable(dstar, target);
        }

        if (w.params.independent && dstar.vertex_count() <= w.params.solver_cap
                && base.vertex_count() <= default_automorphism_limit) {
            report.unique_exhaustive = true;
            report.uniquely_colourable = is_uniquely_colourable(dstar, base);
        }

        return report;
    }

    auto construct_witness(const Digraph & base, const Digraph & target, const ConstructParams & params)
        -> ConstructOutcome
    {
        validate(params);
        if (is_colourable(base, target))
            throw PreconditionFailed("the base digraph is colourable by the target, so no witness exists");

        auto host = blowup(base, params.n);
        auto p = params.effective_p();
        auto threshold = short_cycle_threshold(params.n, params.g, params.eps);

        ConstructOutcome outcome;
        for (int t = 0 ; t < params.max_tries ; ++t) {
            TryDiagnostic diagnostic{ t, derive_seed(params.seed, uint64_t(t)), 0, 0, "" };
            auto h = sample(host, p, diagnostic.seed);
            diagnostic.sampled_arcs = h.arc_count();

            auto cycles = short_cycles(h, params.g, threshold + 1);
            diagnostic.short_cycles = cycles.size();
            if (! (params.independent ? in_d3(h, params) : in_d1(h, params))) {
                diagnostic.outcome = params.independent ? "rejected: not in D3" : "rejected: not in D1";
                outcome.tries.push_back(std::move(diagnostic));
                continue;
            }

            optional<Repair> repair;
            try {
                repair = short_cycle_repair(h, params.g, params.independent);
            }
            catch (const RepairFailed & e) {
                diagnostic.outcome = string("rejected: ") + e.what();
                outcome.tries.push_back(std::move(diagnostic));
                continue;
            }

            Witness witness{ repair->repaired, repair->deleted, params, t + 1, { } };
            witness.report = verify_witness(witness, base, target);

            if (! witness.report.solver_exhaustive)
                diagnostic.outcome = "unverified: non-colourability check skipped above the solver cap";
            else if (! witness.report.verified())
                diagnostic.outcome = ! witness.report.girth_ok ? "failed: girth"
                    : ! witness.report.d_colourable ? "failed: natural map"
                    : witness.report.not_c_colourable != true ? "failed: target-colourable after repair"
                    : "failed: not uniquely base-colourable";
            else
                diagnostic.outcome = "verified";

            outcome.tries.push_back(std::move(diagnostic));
            if (witness.report.verified()) {
                outcome.witness = std::move(witness);
                break;
            }
        }

        return outcome;
    }
}
