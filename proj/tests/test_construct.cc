/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/circular.hh>
#include <digirth/construct.hh>
#include <digirth/errors.hh>
#include <digirth/random.hh>

#include <doctest.h>
#include <test_support.hh>

#include <cmath>
#include <set>

using namespace digirth;
using namespace digirth::testing;
using std::vector;

namespace
{
    auto two_digons_sharing_a_vertex() -> Digraph
    {
        return bidirected(3, { { 0, 1 }, { 1, 2 } });
    }

    auto disjoint_digons(int count) -> Digraph
    {
        vector<std::pair<int, int> > edges;
        for (int i = 0 ; i < count ; ++i)
            edges.emplace_back(2 * i, 2 * i + 1);
        return bidirected(2 * count, edges);
    }
}

TEST_CASE("blowup")
{
    auto arc = blowup(Digraph{ 2, { { 0, 1 } } }, 2);
    CHECK(arc.layered.vertex_count() == 4);
    CHECK(arc.layered.arc_count() == 6);
    CHECK(arc.layered.has_arc(arc.vertex(0, 0), arc.vertex(0, 1)));
    CHECK(! arc.layered.has_arc(arc.vertex(0, 1), arc.vertex(0, 0)));
    CHECK(arc.layered.has_arc(arc.vertex(0, 1), arc.vertex(1, 0)));
    CHECK(arc.layer_of(3) == 1);
    CHECK(arc.position_of(3) == 1);

    CHECK(blowup(single_vertex(), 3).layered == transitive_tournament(3));

    auto c52 = gen_ckd({ 5, 2 });
    CHECK(blowup(c52, 1).layered == c52);

    CHECK_THROWS_AS(blowup(c52, 0), InvalidArgument);
}

TEST_CASE("blow-up arc count and structure")
{
    Random random{ 41 };
    for (int t = 0 ; t < 20 ; ++t) {
        auto base = random_small_digraph(random, 1, 6);
        int n = 1 + int(random.below(6));
        auto b = blowup(base, n);
        int k = base.vertex_count();
        auto q = base.arc_count();
        CHECK(b.layered.arc_count() == q * std::size_t(n * n) + std::size_t(k * n * (n - 1) / 2));

        for (Vertex u = 0 ; u < b.layered.vertex_count() ; ++u)
            for (Vertex v = 0 ; v < b.layered.vertex_count() ; ++v) {
                bool expected = b.layer_of(u) == b.layer_of(v)
                    ? b.position_of(u) < b.position_of(v)
                    : base.has_arc(b.layer_of(u), b.layer_of(v));
                CHECK(b.layered.has_arc(u, v) == expected);
            }
    }
}

TEST_CASE("sample")
{
    auto b = blowup(gen_ckd({ 3, 1 }), 3);
    CHECK(sample(b, 1.0, 7) == b.layered);
    CHECK(sample(b, 0.0, 7).arc_count() == 0);
    CHECK(sample(b, 0.0, 7).vertex_count() == 9);
    CHECK(sample(b, 0.5, 7) == sample(b, 0.5, 7));
    CHECK(sample(b, 0.5, 7) != sample(b, 0.5, 8));

    CHECK_THROWS_AS(sample(b, 1.5, 7), InvalidArgument);
    CHECK_THROWS_AS(sample(b, -0.1, 7), InvalidArgument);
}

TEST_CASE("sample keeps each arc with the stated probability")
{
    auto b = blowup(gen_ckd({ 3, 1 }), 3);
    double total = double(b.layered.arc_count());
    const int trials = 1000;
    double sum = 0, sum_sq = 0;
    for (int s = 0 ; s < trials ; ++s) {
        auto h = sample(b, 0.5, derive_seed(99, std::uint64_t(s)));
        for (auto & [u, v] : h.arcs())
            CHECK(b.layered.has_arc(u, v));
        double x = double(h.arc_count());
        sum += x;
        sum_sq += x * x;
    }
    double mean = sum / trials;
    double sd = std::sqrt((sum_sq - trials * mean * mean) / (trials - 1));
    CHECK(std::abs(mean - 0.5 * total) <= 5 * sd / std::sqrt(double(trials)));
}

TEST_CASE("the natural map colours every sampled subdigraph of the blow-up")
{
    Random random{ 42 };
    for (int t = 0 ; t < 100 ; ++t) {
        auto base = random_small_digraph(random, 1, 5);
        auto b = blowup(base, 1 + int(random.below(4)));
        auto h = sample(b, random.unit(), random.next());
        CHECK(check_acyclic_hom(h, base, b.natural_map()).valid());
    }
    CHECK(natural_map(6, 2) == VertexMap{ 0, 0, 1, 1, 2, 2 });
}

TEST_CASE("short_cycle_repair")
{
    auto three = short_cycle_repair(directed_cycle(3), 4, false);
    CHECK(three.deleted.size() == 1);
    CHECK(is_acyclic(three.repaired));

    auto fixed = short_cycle_repair(directed_cycle(5), 4, false);
    CHECK(fixed.deleted.empty());
    CHECK(fixed.repaired == directed_cycle(5));

    auto digons = short_cycle_repair(disjoint_digons(2), 3, true);
    REQUIRE(digons.deleted.size() == 2);
    CHECK(is_independent_arc_set(digons.deleted));
    CHECK(girth(digons.repaired).at_least(3));

    // Plain greedy hits both digons through the shared vertex.
    auto shared = short_cycle_repair(two_digons_sharing_a_vertex(), 3, false);
    CHECK(shared.deleted.size() == 2);
    CHECK(girth(shared.repaired).at_least(3));

    // A vertex on a 2-cycle and a 3-cycle that share arcs cannot be hit independently.
    Digraph tangled{ 3, { { 0, 1 }, { 1, 0 }, { 1, 2 }, { 2, 0 }, { 0, 2 }, { 2, 1 } } };
    CHECK_THROWS_AS(short_cycle_repair(tangled, 4, true), RepairFailed);
    try {
        short_cycle_repair(tangled, 4, true);
    }
    catch (const RepairFailed & e) {
        CHECK(! e.unhit().empty());
        for (auto & c : e.unhit())
            CHECK(is_cycle_of(tangled, c));
    }

    CHECK_THROWS_AS(short_cycle_repair(digon(), 1, false), InvalidArgument);
}

TEST_CASE("repair always reaches the target girth, and deletes only existing arcs")
{
    Random random{ 43 };
    for (int t = 0 ; t < 150 ; ++t) {
        auto h = random_small_digraph(random, 0, 9);
        int g = 2 + int(random.below(4));
        auto r = short_cycle_repair(h, g, false);
        CHECK(girth(r.repaired).at_least(g));
        CHECK(r.repaired.arc_count() + r.deleted.size() == h.arc_count());
        for (auto & [u, v] : r.deleted) {
            CHECK(h.has_arc(u, v));
            CHECK(! r.repaired.has_arc(u, v));
        }
    }
}

TEST_CASE("independent repair never fails inside D3")
{
    Random random{ 44 };
    int in_class = 0;
    for (int t = 0 ; t < 400 ; ++t) {
        auto base = random_small_digraph(random, 2, 4);
        ConstructParams params;
        params.g = 2 + int(random.below(3));
        params.n = 1 + int(random.below(3));
        params.eps = default_eps(params.g);
        auto h = sample(blowup(base, params.n), 0.1 + 0.3 * random.unit(), random.next());
        if (! in_d3(h, params))
            continue;
        ++in_class;
        auto r = short_cycle_repair(h, params.g, true);
        CHECK(is_independent_arc_set(r.deleted));
        CHECK(girth(r.repaired).at_least(params.g));
    }
    CHECK(in_class >= 50);
}

TEST_CASE("is_independent_arc_set")
{
    CHECK(is_independent_arc_set({ }));
    CHECK(is_independent_arc_set({ { 0, 1 }, { 2, 3 } }));
    CHECK(! is_independent_arc_set({ { 0, 1 }, { 1, 2 } }));
    CHECK(! is_independent_arc_set({ { 0, 1 }, { 2, 0 } }));
}

TEST_CASE("double_cycles")
{
    auto shared = double_cycles(two_digons_sharing_a_vertex(), 3);
    REQUIRE(shared.size() == 1);
    CHECK(shared[0].cycle_length == 2);
    CHECK(shared[0].path_length == 2);
    CHECK(shared[0].vertices.size() == 3);
    CHECK(shared[0].arcs.size() == 4);
    CHECK(shared[0].path.front() == shared[0].path.back());

    CHECK(double_cycles(disjoint_digons(3), 3).empty());

    Digraph chord{ 3, { { 0, 1 }, { 1, 2 }, { 2, 0 }, { 1, 0 } } };
    auto found = double_cycles(chord, 4);
    REQUIRE(found.size() == 1);
    CHECK(found[0].cycle_length == 3);
    CHECK(found[0].path_length == 1);
    CHECK(found[0].vertices.size() == 3);
    CHECK(found[0].arcs.size() == 4);
    CHECK(found[0].path == vector<Vertex>{ 1, 0 });
}

TEST_CASE("double cycles are well formed, and exist exactly when two short cycles meet")
{
    Random random{ 45 };
    for (int t = 0 ; t < 150 ; ++t) {
        auto h = random_small_digraph(random, 0, 7);
        int g = 2 + int(random.below(3));
        auto found = double_cycles(h, g);

        std::set<vector<Arc> > arc_sets;
        for (auto & dc : found) {
            CHECK(dc.cycle_length < g);
            CHECK(dc.path_length < g);
            CHECK(dc.cycle.length() == dc.cycle_length);
            CHECK(is_cycle_of(h, dc.cycle));
            CHECK(int(dc.path.size()) == dc.path_length + 1);
            CHECK(int(dc.vertices.size()) == dc.cycle_length + dc.path_length - 1);
            CHECK(int(dc.arcs.size()) == dc.cycle_length + dc.path_length);
            for (auto & [u, v] : dc.arcs)
                CHECK(h.has_arc(u, v));
            auto & cv = dc.cycle.vertices;
            CHECK(std::find(cv.begin(), cv.end(), dc.path.front()) != cv.end());
            CHECK(std::find(cv.begin(), cv.end(), dc.path.back()) != cv.end());
            for (std::size_t i = 1 ; i + 1 < dc.path.size() ; ++i)
                CHECK(std::find(cv.begin(), cv.end(), dc.path[i]) == cv.end());
            auto sorted = dc.arcs;
            std::sort(sorted.begin(), sorted.end());
            CHECK(arc_sets.insert(sorted).second);
        }

        // Two distinct short cycles that meet always yield one: the second
        // leaves the first and returns along a path shorter than g. The
        // converse fails, since the path may close only a long cycle.
        auto cycles = short_cycles(h, g);
        bool meet = false;
        for (std::size_t i = 0 ; i < cycles.size() ; ++i)
            for (std::size_t j = i + 1 ; j < cycles.size() ; ++j)
                for (auto v : cycles[i].vertices)
                    meet = meet || std::find(cycles[j].vertices.begin(), cycles[j].vertices.end(), v)
                        != cycles[j].vertices.end();
        if (meet)
            CHECK(! found.empty());
    }
}

TEST_CASE("ConstructParams")
{
    ConstructParams params;
    CHECK_NOTHROW(validate(params));
    CHECK(default_eps(2) == Rational(1, 9));
    CHECK(default_eps(3) == Rational(1, 13));

    params.n = 16;
    params.eps = Rational(1, 9);
    CHECK(params.effective_p() == doctest::Approx(std::pow(16.0, 1.0 / 9.0 - 1.0)));
    params.p = 0.75;
    CHECK(params.effective_p() == 0.75);

    auto bad = [] (auto change) {
        ConstructParams p;
        change(p);
        return p;
    };
    CHECK_THROWS_AS(validate(bad([] (auto & p) { p.g = 1; })), InvalidArgument);
    CHECK_THROWS_AS(validate(bad([] (auto & p) { p.n = 0; })), InvalidArgument);
    CHECK_THROWS_AS(validate(bad([] (auto & p) { p.eps = Rational(1, 8); })), InvalidArgument);
    CHECK_THROWS_AS(validate(bad([] (auto & p) { p.eps = Rational(0); })), InvalidArgument);
    CHECK_THROWS_AS(validate(bad([] (auto & p) { p.p = 0.0; })), InvalidArgument);
    CHECK_THROWS_AS(validate(bad([] (auto & p) { p.p = 1.5; })), InvalidArgument);
    CHECK_THROWS_AS(validate(bad([] (auto & p) { p.max_tries = 0; })), InvalidArgument);
}

TEST_CASE("short_cycle_threshold")
{
    CHECK(short_cycle_threshold(2, 3, Rational(1, 13)) == 2);
    CHECK(short_cycle_threshold(1, 3, Rational(1, 13)) == 1);
    // 2^(9 * 1/9) = 2 exactly, so no rounding up.
    CHECK(short_cycle_threshold(2, 9, Rational(1, 9)) == 2);
    CHECK(short_cycle_threshold(4, 2, Rational(1, 2)) == 4);
    CHECK(short_cycle_threshold(5, 2, Rational(1, 2)) == 5);
    CHECK(short_cycle_threshold(1000, 3, Rational(1, 3)) == 1000);
    CHECK(short_cycle_threshold(1001, 3, Rational(1, 3)) == 1001);

    for (int n = 1 ; n <= 40 ; ++n)
        for (int g = 2 ; g <= 5 ; ++g) {
            auto eps = default_eps(g);
            double x = std::pow(double(n), g * eps.to_double());
            auto t = short_cycle_threshold(n, g, eps);
            CHECK(double(t) >= x - 1e-9);
            CHECK(double(t) < x + 1);
        }
}

TEST_CASE("in_d1 and in_d3")
{
    ConstructParams params;
    params.g = 3;
    params.n = 2;
    params.eps = Rational(1, 13);
    REQUIRE(short_cycle_threshold(params.n, params.g, params.eps) == 2);

    CHECK(in_d1(transitive_tournament(5), params));
    CHECK(in_d3(transitive_tournament(5), params));

    CHECK(in_d1(disjoint_digons(2), params));
    CHECK(in_d3(disjoint_digons(2), params));
    CHECK(! in_d1(disjoint_digons(3), params));
    CHECK(! in_d3(disjoint_digons(3), params));

    CHECK(in_d1(two_digons_sharing_a_vertex(), params));
    CHECK(! in_d3(two_digons_sharing_a_vertex(), params));
}

TEST_CASE("inside D1, failing D3 forces a double cycle")
{
    Random random{ 46 };
    for (int t = 0 ; t < 200 ; ++t) {
        auto h = random_small_digraph(random, 1, 7);
        ConstructParams params;
        params.g = 2 + int(random.below(3));
        params.n = 8;
        params.eps = default_eps(params.g);
        if (in_d1(h, params) && ! in_d3(h, params))
            CHECK(! double_cycles(h, params.g).empty());
    }
}

TEST_CASE("construct_witness succeeds on the dense bidirected triangle")
{
    ConstructParams params;
    params.g = 2;
    params.n = 2;
    params.p = 1.0;
    params.seed = 5;

    auto base = gen_ckd({ 3, 1 });
    auto target = gen_ckd({ 2, 1 });
    auto outcome = construct_witness(base, target, params);
    REQUIRE(outcome.witness);
    auto & w = *outcome.witness;
    CHECK(w.tries_used == 1);
    CHECK(w.dstar == blowup(base, 2).layered);
    CHECK(w.deleted.empty());
    CHECK(w.report.girth_ok);
    CHECK(w.report.d_colourable);
    CHECK(w.report.not_c_colourable == true);
    CHECK(w.report.solver_exhaustive);
    CHECK(w.report.verified());
    REQUIRE(outcome.tries.size() == 1);
    CHECK(outcome.tries[0].outcome == "verified");

    CHECK(brute_force_hom_count(w.dstar, target) == 0);
    CHECK(verify_witness(w, base, target) == w.report);

    auto again = construct_witness(base, target, params);
    REQUIRE(again.witness);
    CHECK(again.witness->dstar == w.dstar);
}

TEST_CASE("construct_witness rejects a base that already maps to the target")
{
    CHECK_THROWS_AS(construct_witness(gen_ckd({ 2, 1 }), gen_ckd({ 2, 1 }), ConstructParams{ }), PreconditionFailed);
}

TEST_CASE("construct_witness at girth 3 never reports an unverified success")
{
    ConstructParams params;
    params.g = 3;
    params.n = 3;
    params.eps = default_eps(3);
    params.p = 0.6;
    params.seed = 2024;
    params.max_tries = 50;

    auto base = gen_ckd({ 3, 1 });
    auto target = gen_ckd({ 2, 1 });
    auto outcome = construct_witness(base, target, params);
    if (outcome.witness) {
        auto & w = *outcome.witness;
        CHECK(girth(w.dstar).at_least(3));
        CHECK(w.report.verified());
        CHECK(verify_witness(w, base, target).verified());
        CHECK(! is_colourable(w.dstar, target));
        CHECK(outcome.tries.back().outcome == "verified");
        CHECK(w.tries_used == int(outcome.tries.size()));
    }
    else {
        CHECK(outcome.tries.size() == 50);
        for (auto & t : outcome.tries)
            CHECK(t.outcome != "verified");
    }
    for (std::size_t i = 0 ; i < outcome.tries.size() ; ++i) {
        CHECK(outcome.tries[i].index == int(i));
        CHECK(outcome.tries[i].seed == derive_seed(params.seed, i));
    }
}

TEST_CASE("independent construction checks unique colourability")
{
    ConstructParams params;
    params.g = 2;
    params.n = 2;
    params.p = 1.0;
    params.independent = true;

    auto base = gen_ckd({ 3, 1 });
    auto outcome = construct_witness(base, gen_ckd({ 2, 1 }), params);
    REQUIRE(outcome.witness);
    CHECK(outcome.witness->report.uniquely_colourable == true);
    CHECK(outcome.witness->report.unique_exhaustive);
    CHECK(is_independent_arc_set(outcome.witness->deleted));
}

TEST_CASE("verify_witness")
{
    auto base = gen_ckd({ 3, 1 });
    auto target = gen_ckd({ 2, 1 });

    Witness w;
    w.dstar = blowup(base, 2).layered;
    w.params.g = 3;
    w.params.n = 2;
    w.params.eps = default_eps(3);
    auto report = verify_witness(w, base, target);
    CHECK(! report.girth_ok);
    CHECK(report.girth == 2);
    CHECK(! report.verified());

    w.params.g = 2;
    w.params.solver_cap = 4;
    auto capped = verify_witness(w, base, target);
    CHECK(! capped.not_c_colourable.has_value());
    CHECK(! capped.solver_exhaustive);
    CHECK(! capped.verified());

    w.params.solver_cap = 24;
    w.deleted = { { 0, 2 } };
    CHECK(! verify_witness(w, base, target).deleted_ok);
}
