/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/certificate.hh>
#include <digirth/circular.hh>
#include <digirth/cli.hh>
#include <digirth/construct.hh>
#include <digirth/digraph.hh>
#include <digirth/errors.hh>
#include <digirth/homomorphism.hh>
#include <digirth/probbounds.hh>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace digirth;

namespace
{
    // Exact rationals cross the boundary as (numerator, denominator) decimal strings.
    auto as_pair(const BigRational & x) -> std::pair<std::string, std::string>
    {
        return { boost::multiprecision::numerator(x).str(), boost::multiprecision::denominator(x).str() };
    }

    auto from_pair(const std::string & num, const std::string & den) -> BigRational
    {
        return BigRational(boost::multiprecision::cpp_int(num), boost::multiprecision::cpp_int(den));
    }

    auto optional_girth(const Digraph & d) -> std::optional<int>
    {
        return girth(d).length;
    }
}

PYBIND11_MODULE(_digirth, m)
{
    m.doc() = "Acyclic homomorphisms, circular colourings and high-girth witnesses for digraphs";

    auto base_error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<LimitExceeded>(m, "LimitExceeded", base_error.ptr());
    py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base_error.ptr());

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<int, std::vector<Arc>>(), py::arg("n"), py::arg("arcs") = std::vector<Arc>{ })
        .def_property_readonly("vertex_count", &Digraph::vertex_count)
        .def_property_readonly("arc_count", &Digraph::arc_count)
        .def_property_readonly("arcs", &Digraph::arcs)
        .def("has_arc", &Digraph::has_arc)
        .def("to_text", [] (const Digraph & d) { return write_digraph(d); })
        .def("to_dot", [] (const Digraph & d) { return write_dot(d); })
        .def_static("from_text", [] (const std::string & s) { return parse_digraph(s); })
        .def(py::self == py::self)
        .def("__repr__", [] (const Digraph & d) {
                return "Digraph(" + std::to_string(d.vertex_count()) + ", " + std::to_string(d.arc_count()) + " arcs)";
                });

    m.def("girth", &optional_girth, "Length of a shortest directed cycle, or None if acyclic");
    m.def("is_acyclic", &is_acyclic);
    m.def("find_cycle", [] (const Digraph & d) -> std::optional<std::vector<Vertex>> {
            if (auto c = find_cycle(d))
                return c->vertices;
            return std::nullopt;
            });
    m.def("short_cycles", [] (const Digraph & d, int g) {
            std::vector<std::vector<Vertex>> result;
            for (auto & c : short_cycles(d, g))
                result.push_back(c.vertices);
            return result;
            });

    m.def("gen_ckd", [] (int k, int d) { return gen_ckd(KdParams{ k, d }); }, py::arg("k"), py::arg("d"));

    m.def("check_acyclic_hom", [] (const Digraph & source, const Digraph & target, const VertexMap & f)
            -> std::optional<std::string> {
            auto verdict = check_acyclic_hom(source, target, f);
            if (verdict.valid())
                return std::nullopt;
            return describe(*verdict.violation);
            }, "None if f is an acyclic homomorphism, otherwise a description of a violation");
    m.def("find_hom", &find_hom);
    m.def("count_homs", &count_homs);
    m.def("all_homs", [] (const Digraph & s, const Digraph & t) { return solve_hom(s, t, SolveMode::All).maps; });
    m.def("is_colourable", &is_colourable);
    m.def("is_core", &is_core);
    m.def("is_uniquely_colourable", [] (const Digraph & d, const Digraph & c) { return is_uniquely_colourable(d, c); });

    m.def("chi_c", [] (const Digraph & d, std::optional<int> cap) {
            auto r = chi_c(d, cap);
            return py::make_tuple(r.value.num(), r.value.den(), r.colouring);
            }, py::arg("d"), py::arg("cap") = py::none(),
            "(numerator, denominator, colouring into C(numerator, denominator))");
    m.def("quotient_hom", &quotient_hom);

    m.def("blowup", [] (const Digraph & base, int n) { return blowup(base, n).layered; });
    m.def("sample", [] (const Digraph & host, double p, std::uint64_t seed) { return sample(host, p, seed); });
    m.def("short_cycle_repair", [] (const Digraph & h, int g, bool independent) {
            auto r = short_cycle_repair(h, g, independent);
            return py::make_tuple(r.repaired, r.deleted);
            }, py::arg("h"), py::arg("g"), py::arg("independent") = false);

    m.def("construct", [] (const Digraph & base, const Digraph & target, int g, int n,
                std::optional<std::pair<int, int>> eps, std::optional<double> p, std::uint64_t seed, int tries,
                bool independent) -> std::optional<std::string> {
            ConstructParams params;
            params.g = g;
            params.n = n;
            params.eps = eps ? Rational(eps->first, eps->second) : default_eps(g);
            params.p = p;
            params.seed = seed;
            params.max_tries = tries;
            params.independent = independent;
            validate(params);
            params.p = params.effective_p();
            auto outcome = construct_witness(base, target, params);
            if (! outcome.witness)
                return std::nullopt;
            return certificate_to_json(Certificate{ base, target, *outcome.witness });
            }, py::arg("base"), py::arg("target"), py::arg("g"), py::arg("n"), py::arg("eps") = py::none(),
            py::arg("p") = py::none(), py::arg("seed") = 0, py::arg("tries") = 1, py::arg("independent") = false,
            "Certificate JSON for the first verified witness, or None if every try failed");
    m.def("verify", [] (const std::string & certificate) {
            auto c = certificate_from_json(certificate);
            return report_to_json(verify_witness(c.witness, c.base, c.target));
            }, "Recomputed verification report JSON");

    m.def("expected_cycles_bound", [] (std::uint64_t kn, int ell, const std::string & pn, const std::string & pd) {
            return as_pair(expected_cycles_bound(kn, ell, from_pair(pn, pd)));
            });
    m.def("double_cycle_bound", [] (std::uint64_t k, std::uint64_t n, int l1, int l2, const std::string & pn,
                const std::string & pd) {
            return as_pair(double_cycle_bound(k, n, l1, l2, from_pair(pn, pd)));
            });
    m.def("bad_pair_bound", [] (std::uint64_t q, std::uint64_t n, std::uint64_t w, const std::string & pn,
                const std::string & pd) {
            return as_pair(bad_pair_bound(q, n, w, from_pair(pn, pd)));
            });

    m.def("run", [] (const std::vector<std::string> & args) {
            std::ostringstream out, err;
            int code = run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
            }, "Run the command-line tool in process: (exit code, stdout, stderr)");
}
