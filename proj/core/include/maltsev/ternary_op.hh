#pragma once

#include <maltsev/digraph.hh>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace maltsev
{
    enum class IdentityKind
    {
        maltsev,
        majority
    };

    [[nodiscard]] auto to_string(IdentityKind kind) -> std::string;
    [[nodiscard]] auto parse_identity_kind(const std::string & name) -> IdentityKind;

    /// A total operation V^3 -> V stored flat; f(x,y,z) lives at x*n*n + y*n + z.
    class TernaryOp
    {
        private:
            int _size = 0;
            std::vector<Vertex> _table;

        public:
            TernaryOp() = default;

            /// Zero-filled table on n elements.
            explicit TernaryOp(int n);

            /// Throws ArgumentError unless table has n^3 entries, each in [0, n).
            TernaryOp(int n, std::vector<Vertex> table);

            template <typename F>
            [[nodiscard]] static auto from_function(int n, F && f) -> TernaryOp
            {
                TernaryOp result(n);
                for (Vertex x = 0; x < n; ++x)
                    for (Vertex y = 0; y < n; ++y)
                        for (Vertex z = 0; z < n; ++z)
                            result.set(x, y, z, f(x, y, z));
                return result;
            }

            [[nodiscard]] auto size() const -> int { return _size; }
            [[nodiscard]] auto table() const -> const std::vector<Vertex> & { return _table; }

            [[nodiscard]] auto index(Vertex x, Vertex y, Vertex z) const -> std::size_t
            {
                return (std::size_t(x) * _size + y) * _size + z;
            }

            [[nodiscard]] auto operator()(Vertex x, Vertex y, Vertex z) const -> Vertex { return _table[index(x, y, z)]; }

            auto set(Vertex x, Vertex y, Vertex z, Vertex value) -> void;

            auto operator==(const TernaryOp &) const -> bool = default;
    };

    struct IdentityVerdict
    {
        bool holds = true;
        /// (x, y) for which one of the identities fails.
        std::optional<std::pair<Vertex, Vertex>> violation;

        explicit operator bool() const { return holds; }
    };

    [[nodiscard]] auto verify_identities(const TernaryOp & op, IdentityKind kind) -> IdentityVerdict;

    struct PolymorphismVerdict
    {
        bool compatible = true;
        /// Three edges (u_i, v_i) whose coordinatewise image is not an edge.
        std::optional<std::array<Edge, 3>> violation;

        explicit operator bool() const { return compatible; }
    };

    /// Exhaustive over all |E|^3 edge triples. ArgumentError on size mismatch.
    [[nodiscard]] auto verify_polymorphism(const Digraph & graph, const TernaryOp & op) -> PolymorphismVerdict;

    /// The value an identity family forces at (x,y,z), if any. For majority
    /// that is any repeated argument; for Maltsev, m(x,y,y)=x and m(x,x,y)=y.
    [[nodiscard]] auto forced_value(IdentityKind kind, Vertex x, Vertex y, Vertex z) -> std::optional<Vertex>;
}
