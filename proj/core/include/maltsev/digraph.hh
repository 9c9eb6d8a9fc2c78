#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maltsev
{
    using Vertex = int;

    struct Edge
    {
        Vertex from;
        Vertex to;

        auto operator<=>(const Edge &) const = default;
    };

    /// A finite directed graph on vertices 0..n-1, loops allowed, no parallel
    /// edges. n == 0 is the null digraph. Immutable once built.
    class Digraph
    {
        private:
            int _size = 0;
            std::vector<Edge> _edges;
            std::vector<std::uint8_t> _adjacency;
            std::vector<std::vector<Vertex>> _out, _in;

        public:
            Digraph() = default;

            /// Duplicate edges collapse; endpoints outside [0, n) throw ArgumentError.
            Digraph(int n, std::span<const Edge> edges);
            Digraph(int n, std::initializer_list<Edge> edges);

            /// Bit u*n+v of mask set iff (u,v) is an edge. Requires n*n <= 64.
            [[nodiscard]] static auto from_adjacency_mask(int n, std::uint64_t mask) -> Digraph;

            [[nodiscard]] auto size() const -> int { return _size; }
            [[nodiscard]] auto edge_count() const -> std::size_t { return _edges.size(); }

            /// Sorted lexicographically by (from, to).
            [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return _edges; }

            [[nodiscard]] auto has_edge(Vertex u, Vertex v) const -> bool;

            /// v+ and v-, sorted ascending. Throw ArgumentError for v out of range.
            [[nodiscard]] auto out_neighbors(Vertex v) const -> const std::vector<Vertex> &;
            [[nodiscard]] auto in_neighbors(Vertex v) const -> const std::vector<Vertex> &;

            [[nodiscard]] auto is_edgeless() const -> bool { return _edges.empty(); }

            [[nodiscard]] auto adjacency_mask() const -> std::uint64_t;

            auto operator==(const Digraph & other) const -> bool
            {
                return _size == other._size && _edges == other._edges;
            }

        private:
            auto check_vertex(Vertex v) const -> void;
    };

    enum class VertexKind
    {
        source,
        sink,
        isolated,
        smooth
    };

    [[nodiscard]] auto to_string(VertexKind kind) -> std::string_view;

    struct VertexClassification
    {
        std::vector<VertexKind> kinds;
        /// S-(G): every vertex with empty in-neighbourhood, isolated ones included.
        std::vector<Vertex> sources;
        /// S+(G): every vertex with empty out-neighbourhood, isolated ones included.
        std::vector<Vertex> sinks;
    };

    [[nodiscard]] auto classify_vertices(const Digraph & graph) -> VertexClassification;

    [[nodiscard]] auto is_sink(const Digraph & graph, Vertex v) -> bool;
    [[nodiscard]] auto is_source(const Digraph & graph, Vertex v) -> bool;

    /// Reads the line-oriented digraph text format: a vertex count, then one
    /// "u v" pair per line. '#' starts a comment line; CRLF is accepted.
    [[nodiscard]] auto parse_digraph(std::istream & input) -> Digraph;
    [[nodiscard]] auto parse_digraph(std::string_view text) -> Digraph;

    /// Canonical text: the vertex count followed by the sorted edge list.
    [[nodiscard]] auto serialize_digraph(const Digraph & graph) -> std::string;

    /// Image of the digraph under the vertex relabelling v -> perm[v].
    [[nodiscard]] auto relabel(const Digraph & graph, std::span<const Vertex> perm) -> Digraph;
}
