/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/cli.hh>
#include <digirth/certificate.hh>
#include <digirth/circular.hh>
#include <digirth/construct.hh>
#include <digirth/errors.hh>
#include <digirth/homomorphism.hh>
#include <digirth/probbounds.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

using std::optional;
using std::ostream;
using std::string;
using std::uint64_t;
using std::vector;

namespace digirth
{
    namespace
    {
        auto join(const VertexMap & f) -> string
        {
            string result;
            for (std::size_t i = 0 ; i < f.size() ; ++i)
                result += (i ? "," : "") + std::to_string(f[i]);
            return result;
        }

        auto parse_list(const string & text) -> vector<int>
        {
            vector<int> result;
            std::stringstream s{ text };
            string item;
            while (std::getline(s, item, ',')) {
                try {
                    std::size_t used = 0;
                    result.push_back(std::stoi(item, &used));
                    if (used != item.size())
                        throw std::invalid_argument(item);
                }
                catch (const std::logic_error &) {
                    throw InvalidArgument("expected a comma-separated list of integers, got '" + text + "'");
                }
            }
            return result;
        }

        auto read_text(const string & filename) -> string
        {
            std::ifstream infile{ filename };
            if (! infile)
                throw ParseError("cannot open '" + filename + "'");
            std::stringstream buffer;
            buffer << infile.rdbuf();
            return buffer.str();
        }

        auto write_text(const string & filename, const string & text) -> void
        {
            std::ofstream outfile{ filename };
            if (! outfile)
                throw Error("cannot write '" + filename + "'");
            outfile << text;
        }

        auto resolve_seed(const optional<uint64_t> & seed, ostream & err) -> uint64_t
        {
            if (seed)
                return *seed;
            std::random_device device;
            uint64_t fresh = (uint64_t{ device() } << 32) ^ device();
            err << "seed: " << fresh << "\n";
            return fresh;
        }

        auto format_double(double x) -> string
        {
            std::ostringstream s;
            s << std::setprecision(10) << x;
            return s.str();
        }

        auto bound_table(const vector<std::pair<string, BoundReport> > & rows) -> string
        {
            std::ostringstream s;
            s << std::left << std::setw(16) << "quantity" << std::setw(18) << "analytic" << std::setw(18) << "mean"
                << std::setw(18) << "stderr" << "trials\n";
            for (auto & [name, r] : rows)
                s << std::setw(16) << name << std::setw(18) << (r.analytic ? format_double(*r.analytic) : "-")
                    << std::setw(18) << format_double(r.empirical_mean) << std::setw(18)
                    << format_double(r.empirical_stderr) << r.trials << "\n";
            return s.str();
        }

        struct Options
        {
            int k = 0, d = 0;
            string output;
            string file;
            optional<int> cap;
            string from, to;
            bool all = false, count = false;
            optional<string> map;
            string base, target;
            int g = 2, n = 1, w = 1;
            optional<string> eps;
            optional<double> p;
            optional<uint64_t> seed;
            int tries = 1;
            bool independent = false;
            int solver_cap = ConstructParams{ }.solver_cap;
            uint64_t trials = 1;
            string cycle;
            bool json = false;
        };
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Acyclic homomorphisms, circular colourings and high-girth witnesses for digraphs", "digirth" };
        app.require_subcommand(1);
        Options o;

        auto ckd = app.add_subcommand("ckd", "Write the digraph C(k,d)");
        ckd->add_option("-k", o.k, "number of vertices")->required();
        ckd->add_option("-d", o.d, "minimum forward step")->required();
        ckd->add_option("-o", o.output, "output file (default: standard output)");

        auto girth_cmd = app.add_subcommand("girth", "Print the length of a shortest directed cycle, or inf");
        girth_cmd->add_option("FILE", o.file)->required();

        auto chic = app.add_subcommand("chic", "Print the circular chromatic number as K/D");
        chic->add_option("FILE", o.file)->required();
        chic->add_option("--cap", o.cap, "largest k to try (default: vertex count)");

        auto hom = app.add_subcommand("hom", "Find, count, enumerate or check acyclic homomorphisms");
        hom->add_option("--from", o.from)->required();
        hom->add_option("--to", o.to)->required();
        auto all_flag = hom->add_flag("--all", o.all, "print every homomorphism");
        auto count_flag = hom->add_flag("--count", o.count, "print the number of homomorphisms");
        auto map_option = hom->add_option("--map", o.map, "check this map, e.g. \"0,1,2\"");
        all_flag->excludes(count_flag)->excludes(map_option);
        count_flag->excludes(map_option);

        auto core = app.add_subcommand("core", "Decide whether a digraph is a core");
        core->add_option("FILE", o.file)->required();

        auto unique = app.add_subcommand("unique", "Decide unique colourability");
        unique->add_option("--from", o.from)->required();
        unique->add_option("--to", o.to)->required();

        auto construct = app.add_subcommand("construct", "Search for a high-girth witness by random blow-up");
        construct->add_option("--base", o.base)->required();
        construct->add_option("--target", o.target)->required();
        construct->add_option("-g", o.g, "girth target")->required();
        construct->add_option("-n", o.n, "layer size")->required();
        construct->add_option("--eps", o.eps, "epsilon as NUM/DEN, below 1/(4g)");
        construct->add_option("--p", o.p, "sampling probability (default n^(eps-1))");
        construct->add_option("--seed", o.seed);
        construct->add_option("--tries", o.tries, "maximum number of samples")->capture_default_str();
        construct->add_flag("--independent", o.independent, "repair with an independent arc set");
        construct->add_option("--solver-cap", o.solver_cap, "largest digraph for exhaustive checks")
            ->capture_default_str();
        construct->add_option("-o", o.output, "certificate file (default: standard output)");

        auto verify = app.add_subcommand("verify", "Re-verify a witness certificate");
        verify->add_option("CERT", o.file)->required();
        verify->add_option("--base", o.base)->required();
        verify->add_option("--target", o.target)->required();

        auto estimate = app.add_subcommand("estimate", "Monte Carlo estimates beside their analytic bounds");
        estimate->require_subcommand(1);

        auto cycles = estimate->add_subcommand("cycles", "Short cycles in samples of the blow-up");
        cycles->add_option("--base", o.base)->required();
        cycles->add_option("-n", o.n)->required();
        cycles->add_option("-g", o.g)->required();
        cycles->add_option("--p", o.p, "sampling probability (default n^(eps-1))");
        cycles->add_option("--trials", o.trials)->required();
        cycles->add_option("--seed", o.seed);
        cycles->add_flag("--json", o.json);

        auto pl = estimate->add_subcommand("pl", "Frequency with which U(l) is acyclic");
        pl->add_option("--base", o.base)->required();
        pl->add_option("--cycle", o.cycle, "base cycle, e.g. \"0,1,2\"")->required();
        pl->add_option("-w", o.w)->required();
        pl->add_option("--p", o.p, "sampling probability (default 1/2)");
        pl->add_option("--trials", o.trials)->required();
        pl->add_option("--seed", o.seed);
        pl->add_flag("--json", o.json);

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_code::success : exit_code::usage;
        }

        try {
            if (ckd->parsed()) {
                auto text = write_digraph(gen_ckd(KdParams{ o.k, o.d }));
                if (o.output.empty())
                    out << text;
                else
                    write_text(o.output, text);
            }
            else if (girth_cmd->parsed()) {
                out << girth(read_digraph_file(o.file)) << "\n";
            }
            else if (chic->parsed()) {
                auto result = chi_c(read_digraph_file(o.file), o.cap);
                out << result.value << "\n";
                err << "witness (" << result.params.k << "," << result.params.d << ")-colouring: "
                    << join(result.colouring) << "\n";
            }
            else if (hom->parsed()) {
                auto source = read_digraph_file(o.from), target = read_digraph_file(o.to);
                if (o.map) {
                    auto verdict = check_acyclic_hom(source, target, parse_list(*o.map));
                    if (verdict.valid())
                        out << "valid\n";
                    else
                        out << "invalid: " << describe(*verdict.violation) << "\n";
                }
                else if (o.count)
                    out << count_homs(source, target) << "\n";
                else if (o.all) {
                    for (auto & f : solve_hom(source, target, SolveMode::All).maps)
                        out << join(f) << "\n";
                }
                else if (auto f = find_hom(source, target))
                    out << join(*f) << "\n";
                else
                    out << "none\n";
            }
            else if (core->parsed()) {
                auto verdict = check_core(read_digraph_file(o.file));
                if (verdict.core)
                    out << "core\n";
                else
                    out << "not-core\n" << join(*verdict.witness) << "\n";
            }
            else if (unique->parsed()) {
                auto verdict = check_uniquely_colourable(read_digraph_file(o.from), read_digraph_file(o.to));
                if (verdict.unique)
                    out << "unique\n";
                else
                    out << "not-unique: " << verdict.reason << "\n";
            }
            else if (construct->parsed()) {
                auto base = read_digraph_file(o.base), target = read_digraph_file(o.target);
                ConstructParams params;
                params.g = o.g;
                params.n = o.n;
                params.eps = o.eps ? parse_rational(*o.eps) : default_eps(o.g);
                params.p = o.p;
                params.max_tries = o.tries;
                params.independent = o.independent;
                params.solver_cap = o.solver_cap;
                params.seed = resolve_seed(o.seed, err);
                validate(params);
                // Record the probability actually used so the certificate is self-contained.
                params.p = params.effective_p();

                auto outcome = construct_witness(base, target, params);
                for (auto & t : outcome.tries)
                    err << "try " << t.index << " seed " << t.seed << ": " << t.sampled_arcs << " arcs, "
                        << t.short_cycles << " short cycles, " << t.outcome << "\n";

                if (! outcome.witness) {
                    out << failure_to_json(outcome, params);
                    return exit_code::failure;
                }

                auto text = certificate_to_json(Certificate{ base, target, *outcome.witness });
                if (o.output.empty())
                    out << text;
                else {
                    write_text(o.output, text);
                    auto & w = *outcome.witness;
                    out << "verified witness: " << w.dstar.vertex_count() << " vertices, " << w.dstar.arc_count()
                        << " arcs, " << w.deleted.size() << " deleted, seed " << params.seed << ", try "
                        << w.tries_used << "\n";
                }
            }
            else if (verify->parsed()) {
                auto certificate = certificate_from_json(read_text(o.file));
                auto base = read_digraph_file(o.base), target = read_digraph_file(o.target);
                if (! (certificate.base == base && certificate.target == target)) {
                    err << "certificate was issued for a different base or target digraph\n";
                    return exit_code::failure;
                }
                auto report = verify_witness(certificate.witness, base, target);
                out << report_to_json(report);
                if (! (report == certificate.witness.report))
                    err << "recomputed report differs from the one stored in the certificate\n";
                return report.verified() ? exit_code::success : exit_code::failure;
            }
            else if (cycles->parsed()) {
                auto base = read_digraph_file(o.base);
                ConstructParams defaults;
                defaults.n = o.n;
                defaults.g = o.g;
                defaults.eps = default_eps(o.g);
                double p = o.p.value_or(defaults.effective_p());
                auto seed = resolve_seed(o.seed, err);
                auto report = mc_cycle_count(blowup(base, o.n), p, o.g, o.trials, seed);
                if (o.json)
                    out << cycle_count_to_json(report, o.n, o.g, p, o.trials, seed);
                else
                    out << "estimate cycles  n=" << o.n << " g=" << o.g << " p=" << format_double(p)
                        << " seed=" << seed << "\n"
                        << bound_table({ { "short_cycles", report.cycles }, { "digons", report.digons } });
            }
            else if (pl->parsed()) {
                auto base = read_digraph_file(o.base);
                auto cycle = parse_list(o.cycle);
                double p = o.p.value_or(0.5);
                auto seed = resolve_seed(o.seed, err);
                auto report = mc_estimate_pl(base, cycle, o.w, p, o.trials, seed);
                if (o.json)
                    out << pl_to_json(report, cycle, o.w, p, seed);
                else
                    out << "estimate pl  cycle=" << o.cycle << " w=" << o.w << " p=" << format_double(p)
                        << " seed=" << seed << "\n"
                        << bound_table({ { "acyclic", report } });
            }
        }
        catch (const InvalidArgument & e) {
            err << "digirth: " << e.what() << "\n";
            return exit_code::usage;
        }
        catch (const ParseError & e) {
            err << "digirth: " << e.what() << "\n";
            return exit_code::usage;
        }
        catch (const Error & e) {
            err << "digirth: " << e.what() << "\n";
            return exit_code::failure;
        }

        return exit_code::success;
    }
}
