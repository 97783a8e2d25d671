/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_CERTIFICATE_HH
#define DIGIRTH_GUARD_CERTIFICATE_HH 1

#include <digirth/construct.hh>
#include <digirth/homomorphism.hh>
#include <digirth/probbounds.hh>

#include <string>
#include <string_view>

namespace digirth
{
    /// {"source": <digraph text>, "target": <digraph text>, "map": [...]}
    auto homomorphism_to_json(const Homomorphism &) -> std::string;
    auto homomorphism_from_json(std::string_view) -> Homomorphism;

    /// A self-contained witness: base, target, parameters, D*, deleted arcs and the report.
    struct Certificate
    {
        Digraph base;
        Digraph target;
        Witness witness;
    };

    auto certificate_to_json(const Certificate &) -> std::string;
    auto certificate_from_json(std::string_view) -> Certificate;

    auto report_to_json(const VerificationReport &) -> std::string;

    auto failure_to_json(const ConstructOutcome &, const ConstructParams &) -> std::string;

    auto cycle_count_to_json(const CycleCountReport &, int n, int g, double p, std::uint64_t trials,
            std::uint64_t seed) -> std::string;
    auto pl_to_json(const BoundReport &, const std::vector<Vertex> & cycle, int w, double p, std::uint64_t seed)
        -> std::string;
}

#endif
