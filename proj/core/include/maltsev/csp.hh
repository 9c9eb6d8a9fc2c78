#pragma once

#include <maltsev/digraph.hh>
#include <maltsev/oracle.hh>
#include <maltsev/ternary_op.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maltsev
{
    /// Can the pinned partial map V(h) -> V(G) be extended to a homomorphism h -> G?
    struct CspInstance
    {
        Digraph h;
        Pins pins;
    };

    /// A binary relation on the target's vertices, stored as one bit row per vertex.
    class Relation
    {
        private:
            int _size = 0;
            std::size_t _words = 0;
            std::vector<std::uint64_t> _bits;

        public:
            Relation() = default;
            explicit Relation(int n, bool full = false);

            [[nodiscard]] static auto diagonal(const std::vector<bool> & domain) -> Relation;
            [[nodiscard]] static auto of_edges(const Digraph & graph) -> Relation;

            [[nodiscard]] auto size() const -> int { return _size; }
            [[nodiscard]] auto test(Vertex a, Vertex b) const -> bool;
            auto set(Vertex a, Vertex b) -> void;

            [[nodiscard]] auto empty() const -> bool;
            [[nodiscard]] auto count() const -> std::size_t;
            [[nodiscard]] auto transpose() const -> Relation;

            /// { (a,c) : exists b with (a,b) in this and (b,c) in other }
            [[nodiscard]] auto compose(const Relation & other) const -> Relation;

            /// Returns true if anything was removed.
            auto intersect_with(const Relation & other) -> bool;

            auto operator==(const Relation &) const -> bool = default;
    };

    /// Per-variable domains and a relation for every ordered variable pair.
    /// relations[i][j] is the transpose of relations[j][i]; relations[i][i]
    /// is the diagonal of domains[i].
    struct PairSystem
    {
        std::vector<std::vector<bool>> domains;
        std::vector<std::vector<Relation>> relations;

        [[nodiscard]] auto variables() const -> int { return int(domains.size()); }
        auto operator==(const PairSystem &) const -> bool = default;
    };

    [[nodiscard]] auto initial_pair_system(const CspInstance & instance, const Digraph & target) -> PairSystem;

    /// Closes every relation under composition through every third variable
    /// until nothing changes. False iff some domain or relation became empty.
    auto enforce_path_consistency(PairSystem & system) -> bool;

    enum class CspVerdict
    {
        yes,
        no,
        maybe
    };

    [[nodiscard]] auto to_string(CspVerdict verdict) -> std::string;

    struct CspResult
    {
        CspVerdict verdict = CspVerdict::no;
        /// Whether a "yes" is backed by a known majority polymorphism of the target.
        bool complete = false;
        std::string warning;
    };

    /// Path consistency decides the instance when the target has a majority
    /// polymorphism; that is established by decide_maltsev or by the supplied
    /// table. Without it a "yes" is reported as "maybe". "no" is always sound.
    [[nodiscard]] auto solve_csp_consistency(const CspInstance & instance, const Digraph & target,
        const std::optional<TernaryOp> & majority = std::nullopt) -> CspResult;

    /// Each ordered variable pair (loops included) becomes an edge with
    /// probability edge_prob; pin_count distinct variables are pinned to
    /// uniformly chosen target vertices. Deterministic in seed.
    [[nodiscard]] auto random_instance(const Digraph & target, int vars, double edge_prob, int pin_count, std::uint64_t seed) -> CspInstance;
}
