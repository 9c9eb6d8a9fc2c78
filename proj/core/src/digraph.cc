#include <maltsev/digraph.hh>
#include <maltsev/errors.hh>

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <sstream>

using namespace maltsev;

using std::string;
using std::string_view;
using std::vector;

Digraph::Digraph(int n, std::span<const Edge> edges) :
    _size(n)
{
    if (n < 0)
        throw ArgumentError("negative vertex count " + std::to_string(n));

    _adjacency.assign(std::size_t(n) * std::size_t(n), 0);
    _out.resize(n);
    _in.resize(n);

    for (auto & e : edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw ArgumentError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) + ") out of range for n=" + std::to_string(n));
        auto & cell = _adjacency[std::size_t(e.from) * n + e.to];
        if (! cell) {
            cell = 1;
            _edges.push_back(e);
        }
    }

    std::sort(_edges.begin(), _edges.end());
    for (auto & e : _edges) {
        _out[e.from].push_back(e.to);
        _in[e.to].push_back(e.from);
    }
    for (auto & in : _in)
        std::sort(in.begin(), in.end());
}

Digraph::Digraph(int n, std::initializer_list<Edge> edges) :
    Digraph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

auto Digraph::from_adjacency_mask(int n, std::uint64_t mask) -> Digraph
{
    if (n < 0 || n * n > 64)
        throw ArgumentError("adjacency mask needs 0 <= n <= 8");

    vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (mask >> (u * n + v) & 1)
                edges.push_back({u, v});
    return Digraph(n, edges);
}

auto Digraph::check_vertex(Vertex v) const -> void
{
    if (v < 0 || v >= _size)
        throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(_size));
}

auto Digraph::has_edge(Vertex u, Vertex v) const -> bool
{
    check_vertex(u);
    check_vertex(v);
    return _adjacency[std::size_t(u) * _size + v];
}

auto Digraph::out_neighbors(Vertex v) const -> const vector<Vertex> &
{
    check_vertex(v);
    return _out[v];
}

auto Digraph::in_neighbors(Vertex v) const -> const vector<Vertex> &
{
    check_vertex(v);
    return _in[v];
}

auto Digraph::adjacency_mask() const -> std::uint64_t
{
    if (_size * _size > 64)
        throw ArgumentError("adjacency mask needs n <= 8");

    std::uint64_t mask = 0;
    for (auto & e : _edges)
        mask |= std::uint64_t{1} << (e.from * _size + e.to);
    return mask;
}

auto maltsev::to_string(VertexKind kind) -> string_view
{
    switch (kind) {
        case VertexKind::source: return "source";
        case VertexKind::sink: return "sink";
        case VertexKind::isolated: return "isolated";
        case VertexKind::smooth: return "smooth";
    }
    return "?";
}

auto maltsev::is_sink(const Digraph & graph, Vertex v) -> bool
{
    return graph.out_neighbors(v).empty();
}

auto maltsev::is_source(const Digraph & graph, Vertex v) -> bool
{
    return graph.in_neighbors(v).empty();
}

auto maltsev::classify_vertices(const Digraph & graph) -> VertexClassification
{
    VertexClassification result;
    for (Vertex v = 0; v < graph.size(); ++v) {
        bool no_in = is_source(graph, v), no_out = is_sink(graph, v);
        if (no_in && no_out)
            result.kinds.push_back(VertexKind::isolated);
        else if (no_in)
            result.kinds.push_back(VertexKind::source);
        else if (no_out)
            result.kinds.push_back(VertexKind::sink);
        else
            result.kinds.push_back(VertexKind::smooth);

        if (no_in)
            result.sources.push_back(v);
        if (no_out)
            result.sinks.push_back(v);
    }
    return result;
}

namespace
{
    auto trim(string_view s) -> string_view
    {
        while (! s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        return s;
    }

    auto parse_int(string_view & rest, std::size_t line_number) -> long long
    {
        rest = trim(rest);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
        if (ec != std::errc{} || ptr == rest.data())
            throw ParseError(line_number, "expected an integer, got '" + string(rest) + "'");
        rest.remove_prefix(ptr - rest.data());
        if (! rest.empty() && rest.front() != ' ' && rest.front() != '\t')
            throw ParseError(line_number, "unexpected character '" + string(1, rest.front()) + "'");
        return value;
    }
}

auto maltsev::parse_digraph(std::istream & input) -> Digraph
{
    std::optional<long long> n;
    vector<Edge> edges;
    string raw;
    std::size_t line_number = 0;

    while (std::getline(input, raw)) {
        ++line_number;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;

        if (! n) {
            auto value = parse_int(line, line_number);
            if (! trim(line).empty())
                throw ParseError(line_number, "vertex count line has trailing content");
            if (value < 0)
                throw ParseError(line_number, "negative vertex count");
            if (value > 1 << 16)
                throw ParseError(line_number, "vertex count too large");
            n = value;
            continue;
        }

        auto u = parse_int(line, line_number);
        auto v = parse_int(line, line_number);
        if (! trim(line).empty())
            throw ParseError(line_number, "edge line must hold exactly two vertices");
        if (u < 0 || u >= *n || v < 0 || v >= *n)
            throw ParseError(line_number, "vertex index out of range [0, " + std::to_string(*n) + ")");
        edges.push_back({Vertex(u), Vertex(v)});
    }

    if (! n)
        throw ParseError(line_number, "missing vertex count");

    return Digraph(int(*n), edges);
}

auto maltsev::parse_digraph(string_view text) -> Digraph
{
    std::istringstream stream{string(text)};
    return parse_digraph(stream);
}

auto maltsev::serialize_digraph(const Digraph & graph) -> string
{
    string result = std::to_string(graph.size()) + "\n";
    for (auto & e : graph.edges())
        result += std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
    return result;
}

auto maltsev::relabel(const Digraph & graph, std::span<const Vertex> perm) -> Digraph
{
    if (perm.size() != std::size_t(graph.size()))
        throw ArgumentError("permutation size does not match vertex count");
    vector<char> seen(perm.size(), 0);
    for (auto v : perm) {
        if (v < 0 || v >= graph.size() || seen[v])
            throw ArgumentError("relabelling is not a permutation");
        seen[v] = 1;
    }

    vector<Edge> edges;
    edges.reserve(graph.edge_count());
    for (auto & e : graph.edges())
        edges.push_back({perm[e.from], perm[e.to]});
    return Digraph(graph.size(), edges);
}
