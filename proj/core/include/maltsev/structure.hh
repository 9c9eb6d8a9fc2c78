#pragma once

#include <maltsev/digraph.hh>
#include <maltsev/errors.hh>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace maltsev
{
    /// Four vertices (x, y, x2, y2) with (x,y), (x2,y), (x2,y2) edges but
    /// (x,y2) missing.
    struct RectangularityWitness
    {
        Vertex x, y, x2, y2;

        auto operator<=>(const RectangularityWitness &) const = default;
    };

    struct RectangularityVerdict
    {
        bool rectangular = true;
        std::optional<RectangularityWitness> witness;

        explicit operator bool() const { return rectangular; }
    };

    /// Finds the first violation in (x, y in x+, x2 in y-, y2 in x2+) order.
    [[nodiscard]] auto is_rectangular(const Digraph & graph) -> RectangularityVerdict;

    class NotRectangular : public PreconditionError
    {
        private:
            RectangularityWitness _witness;

        public:
            explicit NotRectangular(const RectangularityWitness & w);

            [[nodiscard]] auto witness() const -> const RectangularityWitness & { return _witness; }
    };

    enum class Side
    {
        plus,
        minus
    };

    [[nodiscard]] auto to_string(Side side) -> std::string;

    using BlockIndex = int;

    /// Classes of R+ (on non-sinks) or R- (on non-sources). Blocks are sorted
    /// internally and numbered by their smallest vertex, ascending.
    struct Partition
    {
        Side side = Side::plus;
        std::vector<std::vector<Vertex>> blocks;
        /// Undefined exactly on sinks (plus) or sources (minus).
        std::vector<std::optional<BlockIndex>> block_of;

        [[nodiscard]] auto size() const -> int { return int(blocks.size()); }
    };

    /// Throws NotRectangular when the relation would not be an equivalence.
    [[nodiscard]] auto r_classes(const Digraph & graph, Side side) -> Partition;

    struct FactorGraph
    {
        Partition partition;
        Digraph quotient;

        [[nodiscard]] auto projection(Vertex v) const -> std::optional<BlockIndex> { return partition.block_of.at(v); }
    };

    /// G+ or G-: (X,Y) is an edge iff some x in X, y in Y have (x,y) in E(G).
    [[nodiscard]] auto factor(const Digraph & graph, Side side) -> FactorGraph;

    /// The bijection X -> X+ from R+ classes onto R- classes, and its inverse Y -> Y-.
    struct ClassBijection
    {
        std::vector<BlockIndex> forward;
        std::vector<BlockIndex> backward;
    };

    [[nodiscard]] auto phi(const Digraph & graph) -> ClassBijection;
    [[nodiscard]] auto phi(const Digraph & graph, const Partition & plus, const Partition & minus) -> ClassBijection;

    struct IsomorphismVerdict
    {
        bool isomorphism = true;
        /// R+ block pair (X,Y) on which edge membership in G+ and G- disagrees.
        std::optional<std::pair<BlockIndex, BlockIndex>> violation;

        explicit operator bool() const { return isomorphism; }
    };

    /// Checks that phi carries G+ isomorphically onto G-.
    [[nodiscard]] auto verify_phi_isomorphism(const Digraph & graph) -> IsomorphismVerdict;
}
