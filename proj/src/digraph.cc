/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <digirth/digraph.hh>
#include <digirth/errors.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace digirth
{
    Digraph::Digraph(int n, vector<Arc> arcs) :
        _n(n)
    {
        if (n < 0)
            throw InvalidArgument("negative vertex count");

        for (auto & [u, v] : arcs) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InvalidArgument("arc (" + to_string(u) + "," + to_string(v) + ") has an endpoint out of range [0,"
                        + to_string(n) + ")");
            if (u == v)
                throw InvalidArgument("loop at vertex " + to_string(u));
        }

        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
        _arcs = std::move(arcs);

        _out.resize(n);
        _in.resize(n);
        for (auto & [u, v] : _arcs) {
            _out[u].push_back(v);
            _in[v].push_back(u);
        }
        for (auto & ins : _in)
            std::sort(ins.begin(), ins.end());
    }

    auto Digraph::has_arc(Vertex u, Vertex v) const -> bool
    {
        return std::binary_search(_out[u].begin(), _out[u].end(), v);
    }

    auto operator<< (std::ostream & s, const Girth & g) -> std::ostream &
    {
        if (g.is_infinite())
            return s << "inf";
        return s << *g.length;
    }

    auto Cycle::arcs() const -> vector<Arc>
    {
        vector<Arc> result;
        for (std::size_t i = 0 ; i < vertices.size() ; ++i)
            result.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
        return result;
    }

    auto canonical_cycle(vector<Vertex> vertices) -> Cycle
    {
        auto smallest = std::min_element(vertices.begin(), vertices.end());
        std::rotate(vertices.begin(), smallest, vertices.end());
        return Cycle{ std::move(vertices) };
    }

    auto is_cycle_of(const Digraph & d, const Cycle & c) -> bool
    {
        if (c.length() < 2)
            return false;
        vector<char> seen(d.vertex_count(), 0);
        for (auto v : c.vertices) {
            if (v < 0 || v >= d.vertex_count() || seen[v])
                return false;
            seen[v] = 1;
        }
        for (auto & [u, v] : c.arcs())
            if (! d.has_arc(u, v))
                return false;
        return true;
    }

    auto Permutation::identity(int n) -> Permutation
    {
        Permutation p;
        p.image.resize(n);
        std::iota(p.image.begin(), p.image.end(), 0);
        return p;
    }

    auto is_acyclic(const Digraph & d) -> bool
    {
        // Repeatedly strip vertices of outdegree zero; a digraph is acyclic iff this empties it.
        vector<int> out_degree(d.vertex_count());
        std::queue<Vertex> sinks;
        for (Vertex v = 0 ; v < d.vertex_count() ; ++v) {
            out_degree[v] = d.out_degree(v);
            if (0 == out_degree[v])
                sinks.push(v);
        }

        int removed = 0;
        while (! sinks.empty()) {
            Vertex v = sinks.front();
            sinks.pop();
            ++removed;
            for (auto u : d.in_neighbours(v))
                if (0 == --out_degree[u])
                    sinks.push(u);
        }

        return removed == d.vertex_count();
    }

    auto find_cycle(const Digraph & d) -> optional<Cycle>
    {
        enum class Mark : char { Unseen, Active, Done };
        vector<Mark> mark(d.vertex_count(), Mark::Unseen);
        vector<Vertex> parent(d.vertex_count(), -1);
        vector<std::size_t> next_edge(d.vertex_count(), 0);

        for (Vertex root = 0 ; root < d.vertex_count() ; ++root) {
            if (mark[root] != Mark::Unseen)
                continue;

            vector<Vertex> stack{ root };
            mark[root] = Mark::Active;
            while (! stack.empty()) {
                Vertex v = stack.back();
                auto out = d.out_neighbours(v);
                if (next_edge[v] == out.size()) {
                    mark[v] = Mark::Done;
                    stack.pop_back();
                    continue;
                }

                Vertex w = out[next_edge[v]++];
                if (mark[w] == Mark::Active) {
                    vector<Vertex> cycle;
                    for (Vertex x = v ; x != w ; x = parent[x])
                        cycle.push_back(x);
                    cycle.push_back(w);
                    std::reverse(cycle.begin(), cycle.end());
                    return canonical_cycle(std::move(cycle));
                }
                else if (mark[w] == Mark::Unseen) {
                    mark[w] = Mark::Active;
                    parent[w] = v;
                    stack.push_back(w);
                }
            }
        }

        return std::nullopt;
    }

    auto girth(const Digraph & d) -> Girth
    {
        constexpr int unreached = std::numeric_limits<int>::max();
        int best = unreached;
        vector<int> dist(d.vertex_count());

        // A shortest cycle through s closes with an arc u -> s where u is as near to s as possible.
        for (Vertex s = 0 ; s < d.vertex_count() && best > 2 ; ++s) {
            std::fill(dist.begin(), dist.end(), unreached);
            dist[s] = 0;
            std::queue<Vertex> frontier;
            frontier.push(s);
            while (! frontier.empty()) {
                Vertex v = frontier.front();
                frontier.pop();
                if (dist[v] + 1 >= best)
                    break;
                for (auto w : d.out_neighbours(v)) {
                    if (w == s) {
                        best = std::min(best, dist[v] + 1);
                    }
                    else if (dist[w] == unreached) {
                        dist[w] = dist[v] + 1;
                        frontier.push(w);
                    }
                }
            }
        }

        return best == unreached ? Girth::infinite() : Girth::finite(best);
    }

    auto short_cycles(const Digraph & d, int g, std::size_t max_count) -> vector<Cycle>
    {
        if (g < 2)
            throw InvalidArgument("cycle length bound must be at least 2");

        vector<Cycle> result;
        vector<Vertex> path;
        vector<char> on_path(d.vertex_count(), 0);

        // Each cycle is found exactly once, from its minimum vertex, so it comes out canonical.
        std::function<void (Vertex, Vertex)> extend = [&] (Vertex start, Vertex v) {
            for (auto w : d.out_neighbours(v)) {
                if (result.size() >= max_count)
                    return;
                if (w == start) {
                    if (path.size() >= 2)
                        result.push_back(Cycle{ path });
                }
                else if (w > start && ! on_path[w] && int(path.size()) + 1 < g) {
                    on_path[w] = 1;
                    path.push_back(w);
                    extend(start, w);
                    path.pop_back();
                    on_path[w] = 0;
                }
            }
        };

        for (Vertex s = 0 ; s < d.vertex_count() && result.size() < max_count ; ++s) {
            path.assign(1, s);
            on_path[s] = 1;
            extend(s, s);
            on_path[s] = 0;
        }

        std::sort(result.begin(), result.end());
        return result;
    }

    auto induced(const Digraph & d, const VertexSet & s) -> InducedSubdigraph
    {
        vector<Vertex> original = s;
        std::sort(original.begin(), original.end());
        original.erase(std::unique(original.begin(), original.end()), original.end());

        vector<int> relabel(d.vertex_count(), -1);
        for (std::size_t i = 0 ; i < original.size() ; ++i) {
            auto v = original[i];
            if (v < 0 || v >= d.vertex_count())
                throw InvalidArgument("vertex " + to_string(v) + " out of range");
            relabel[v] = int(i);
        }

        vector<Arc> arcs;
        for (auto u : original)
            for (auto v : d.out_neighbours(u))
                if (relabel[v] != -1)
                    arcs.emplace_back(relabel[u], relabel[v]);

        return InducedSubdigraph{ Digraph{ int(original.size()), std::move(arcs) }, std::move(original) };
    }

    auto automorphisms(const Digraph & d, int limit) -> vector<Permutation>
    {
        int n = d.vertex_count();
        if (n > limit)
            throw LimitExceeded("automorphism brute force limited to " + to_string(limit) + " vertices, digraph has "
                    + to_string(n));

        auto profile = [&] (Vertex v) { return std::pair{ d.out_degree(v), d.in_degree(v) }; };

        vector<Permutation> result;
        vector<Vertex> image(n, -1);
        vector<char> used(n, 0);

        std::function<void (Vertex)> assign = [&] (Vertex v) {
            if (v == n) {
                result.push_back(Permutation{ image });
                return;
            }

            for (Vertex w = 0 ; w < n ; ++w) {
                if (used[w] || profile(v) != profile(w))
                    continue;

                bool consistent = true;
                for (Vertex u = 0 ; u < v && consistent ; ++u)
                    consistent = d.has_arc(u, v) == d.has_arc(image[u], w)
                        && d.has_arc(v, u) == d.has_arc(w, image[u]);
                if (! consistent)
                    continue;

                used[w] = 1;
                image[v] = w;
                assign(v + 1);
                used[w] = 0;
            }
        };

        assign(0);
        return result;
    }

    auto is_acyclic_sink_set(const Digraph & d, const VertexSet & s) -> bool
    {
        vector<char> inside(d.vertex_count(), 0);
        for (auto v : s) {
            if (v < 0 || v >= d.vertex_count())
                throw InvalidArgument("vertex " + to_string(v) + " out of range");
            inside[v] = 1;
        }

        for (auto v : s)
            for (auto w : d.out_neighbours(v))
                if (! inside[w])
                    return false;

        return is_acyclic(induced(d, s).digraph);
    }

    namespace
    {
        auto split_spaces(string_view line) -> vector<string_view>
        {
            vector<string_view> tokens;
            std::size_t start = 0;
            while (true) {
                auto end = line.find(' ', start);
                tokens.push_back(line.substr(start, end == string_view::npos ? string_view::npos : end - start));
                if (end == string_view::npos)
                    break;
                start = end + 1;
            }
            return tokens;
        }

        auto parse_number(string_view token, int line_number) -> long long
        {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{ } || ptr != token.data() + token.size() || value < 0
                    || value > std::numeric_limits<int>::max())
                throw ParseError("line " + to_string(line_number) + ": expected a non-negative decimal integer, got '"
                        + string(token) + "'");
            return value;
        }
    }

    auto parse_digraph(string_view text) -> Digraph
    {
        optional<std::pair<int, long long> > header;
        vector<Arc> arcs;

        int line_number = 0;
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto end = text.find('\n', pos);
            auto line = text.substr(pos, end == string_view::npos ? string_view::npos : end - pos);
            pos = (end == string_view::npos) ? text.size() : end + 1;
            ++line_number;

            if (line.starts_with('#'))
                continue;
            if (line.empty() && pos >= text.size())
                break;

            auto tokens = split_spaces(line);
            if (! header) {
                if (tokens.size() != 3 || tokens[0] != "digraph")
                    throw ParseError("line " + to_string(line_number) + ": expected header 'digraph <n> <m>'");
                header = std::pair{ int(parse_number(tokens[1], line_number)), parse_number(tokens[2], line_number) };
                continue;
            }

            if (tokens.size() != 3 || tokens[0] != "a")
                throw ParseError("line " + to_string(line_number) + ": expected arc line 'a <u> <v>'");
            auto u = parse_number(tokens[1], line_number), v = parse_number(tokens[2], line_number);
            if (u >= header->first || v >= header->first)
                throw ParseError("line " + to_string(line_number) + ": arc endpoint out of range");
            if (u == v)
                throw ParseError("line " + to_string(line_number) + ": loop at vertex " + to_string(u));
            arcs.emplace_back(int(u), int(v));
        }

        if (! header)
            throw ParseError("missing 'digraph <n> <m>' header");
        if (std::cmp_not_equal(arcs.size(), header->second))
            throw ParseError("header declares " + to_string(header->second) + " arcs but " + to_string(arcs.size())
                    + " were given");

        Digraph result{ header->first, arcs };
        if (result.arc_count() != arcs.size())
            throw ParseError("duplicate arc");
        return result;
    }

    auto write_digraph(const Digraph & d) -> string
    {
        string result = "digraph " + to_string(d.vertex_count()) + " " + to_string(d.arc_count()) + "\n";
        for (auto & [u, v] : d.arcs())
            result += "a " + to_string(u) + " " + to_string(v) + "\n";
        return result;
    }

    auto write_dot(const Digraph & d) -> string
    {
        string result = "digraph {\n";
        for (Vertex v = 0 ; v < d.vertex_count() ; ++v)
            if (0 == d.out_degree(v) && 0 == d.in_degree(v))
                result += "  " + to_string(v) + ";\n";
        for (auto & [u, v] : d.arcs())
            result += "  " + to_string(u) + " -> " + to_string(v) + ";\n";
        return result + "}\n";
    }

    auto read_digraph_file(const string & filename) -> Digraph
    {
        std::ifstream infile{ filename };
        if (! infile)
            throw ParseError("cannot open '" + filename + "'");
        std::stringstream buffer;
        buffer << infile.rdbuf();
        try {
            return parse_digraph(buffer.str());
        }
        catch (const ParseError & e) {
            throw ParseError(filename + ": " + e.what());
        }
    }

    auto write_digraph_file(const string & filename, const Digraph & d) -> void
    {
        std::ofstream outfile{ filename };
        if (! outfile)
            throw Error("cannot write '" + filename + "'");
        outfile << write_digraph(d);
    }
}
