/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/certificate.hh>
#include <digirth/errors.hh>

#include <json.hpp>

using nlohmann::json;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace digirth
{
    namespace
    {
        auto arcs_to_json(const vector<Arc> & arcs) -> json
        {
            json result = json::array();
            for (auto & [u, v] : arcs)
                result.push_back({ u, v });
            return result;
        }

        auto report_json(const VerificationReport & r) -> json
        {
            json j;
            j["girth"] = r.girth ? json(*r.girth) : json(nullptr);
            j["girth_ok"] = r.girth_ok;
            j["deleted_ok"] = r.deleted_ok;
            j["d_colourable"] = r.d_colourable;
            j["not_c_colourable"] = r.not_c_colourable ? json(*r.not_c_colourable) : json(nullptr);
            j["solver_exhaustive"] = r.solver_exhaustive;
            j["uniquely_colourable"] = r.uniquely_colourable ? json(*r.uniquely_colourable) : json(nullptr);
            j["unique_exhaustive"] = r.unique_exhaustive;
            j["verified"] = r.verified();
            return j;
        }

        auto optional_bool(const json & j) -> std::optional<bool>
        {
            if (j.is_null())
                return std::nullopt;
            return j.get<bool>();
        }

        auto params_json(const ConstructParams & p) -> json
        {
            return json{
                { "g", p.g },
                { "n", p.n },
                { "eps_num", p.eps.num() },
                { "eps_den", p.eps.den() },
                { "p", p.effective_p() },
                { "seed", p.seed },
                { "max_tries", p.max_tries },
                { "independent", p.independent },
                { "solver_cap", p.solver_cap }
            };
        }

        auto dump(const json & j) -> string
        {
            return j.dump(2) + "\n";
        }

        template <typename F_>
        auto parsing(const char * what, F_ && f)
        {
            try {
                return f();
            }
            catch (const json::exception & e) {
                throw ParseError(string("malformed ") + what + ": " + e.what());
            }
        }

        auto bound_json(const BoundReport & r) -> json
        {
            return json{
                { "analytic", r.analytic ? json(*r.analytic) : json(nullptr) },
                { "empirical_mean", r.empirical_mean },
                { "empirical_stderr", r.empirical_stderr },
                { "trials", r.trials }
            };
        }
    }

    auto homomorphism_to_json(const Homomorphism & h) -> string
    {
        return dump(json{
                { "source", write_digraph(h.source) },
                { "target", write_digraph(h.target) },
                { "map", h.map } });
    }

    auto homomorphism_from_json(string_view text) -> Homomorphism
    {
        return parsing("homomorphism", [&] {
                auto j = json::parse(text);
                return Homomorphism{
                    parse_digraph(j.at("source").get<string>()),
                    parse_digraph(j.at("target").get<string>()),
                    j.at("map").get<VertexMap>() };
                });
    }

    auto certificate_to_json(const Certificate & c) -> string
    {
        auto & w = c.witness;
        json j;
        j["base"] = write_digraph(c.base);
        j["target"] = write_digraph(c.target);
        j["params"] = params_json(w.params);
        j["tries_used"] = w.tries_used;
        j["dstar"] = write_digraph(w.dstar);
        j["deleted"] = arcs_to_json(w.deleted);
        j["report"] = report_json(w.report);
        return dump(j);
    }

    auto certificate_from_json(string_view text) -> Certificate
    {
        return parsing("certificate", [&] {
                auto j = json::parse(text);
                auto & p = j.at("params");

                ConstructParams params;
                params.g = p.at("g").get<int>();
                params.n = p.at("n").get<int>();
                params.eps = Rational{ p.at("eps_num").get<std::int64_t>(), p.at("eps_den").get<std::int64_t>() };
                params.p = p.at("p").get<double>();
                params.seed = p.at("seed").get<uint64_t>();
                params.max_tries = p.at("max_tries").get<int>();
                params.independent = p.at("independent").get<bool>();
                params.solver_cap = p.value("solver_cap", ConstructParams{ }.solver_cap);

                vector<Arc> deleted;
                for (auto & arc : j.at("deleted"))
                    deleted.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());

                VerificationReport report;
                if (j.contains("report")) {
                    auto & r = j.at("report");
                    report.girth = r.at("girth").is_null() ? std::nullopt : std::optional<int>(r.at("girth").get<int>());
                    report.girth_ok = r.at("girth_ok").get<bool>();
                    report.deleted_ok = r.at("deleted_ok").get<bool>();
                    report.d_colourable = r.at("d_colourable").get<bool>();
                    report.not_c_colourable = optional_bool(r.at("not_c_colourable"));
                    report.solver_exhaustive = r.at("solver_exhaustive").get<bool>();
                    report.uniquely_colourable = optional_bool(r.at("uniquely_colourable"));
                    report.unique_exhaustive = r.at("unique_exhaustive").get<bool>();
                }

                return Certificate{
                    parse_digraph(j.at("base").get<string>()),
                    parse_digraph(j.at("target").get<string>()),
                    Witness{
                        parse_digraph(j.at("dstar").get<string>()),
                        std::move(deleted),
                        params,
                        j.value("tries_used", 0),
                        report } };
                });
    }

    auto report_to_json(const VerificationReport & r) -> string
    {
        return dump(report_json(r));
    }

    auto failure_to_json(const ConstructOutcome & outcome, const ConstructParams & params) -> string
    {
        json tries = json::array();
        for (auto & t : outcome.tries)
            tries.push_back(json{
                    { "try", t.index },
                    { "seed", t.seed },
                    { "sampled_arcs", t.sampled_arcs },
                    { "short_cycles", t.short_cycles },
                    { "outcome", t.outcome } });

        return dump(json{
                { "status", "exhausted" },
                { "params", params_json(params) },
                { "tries", tries } });
    }

    auto cycle_count_to_json(const CycleCountReport & r, int n, int g, double p, uint64_t trials, uint64_t seed)
        -> string
    {
        return dump(json{
                { "estimate", "cycles" },
                { "n", n },
                { "g", g },
                { "p", p },
                { "trials", trials },
                { "seed", seed },
                { "bidirected_base_pairs", r.bidirected_base_pairs },
                { "short_cycles", bound_json(r.cycles) },
                { "digons", bound_json(r.digons) } });
    }

    auto pl_to_json(const BoundReport & r, const vector<Vertex> & cycle, int w, double p, uint64_t seed) -> string
    {
        return dump(json{
                { "estimate", "pl" },
                { "cycle", cycle },
                { "w", w },
                { "p", p },
                { "seed", seed },
                { "acyclic_frequency", bound_json(r) } });
    }
}
