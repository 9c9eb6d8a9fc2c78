#pragma once

#include <maltsev/digraph.hh>
#include <maltsev/ternary_op.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace maltsev
{
    /// Pinned vertices of an instance digraph: variable -> target vertex.
    using Pins = std::map<Vertex, Vertex>;

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t wipeouts = 0;
    };

    /// Complete backtracking search for a ternary polymorphism satisfying the
    /// identities of the given kind. Identity-forced entries are fixed first;
    /// the rest are tried in ascending flat index with ascending values, and
    /// each assignment filters the domains of every entry it shares an edge
    /// triple with. Domains are bitsets, so n is limited to 32.
    [[nodiscard]] auto find_polymorphism_bruteforce(const Digraph & graph, IdentityKind kind, SearchStats * stats = nullptr) -> std::optional<TernaryOp>;

    /// Complete backtracking search for a homomorphism h: H -> G extending pins.
    /// Result is indexed by vertex of H.
    [[nodiscard]] auto find_homomorphism_bruteforce(const Digraph & instance, const Digraph & target, const Pins & pins) -> std::optional<std::vector<Vertex>>;

    [[nodiscard]] auto is_homomorphism(const Digraph & instance, const Digraph & target, const std::vector<Vertex> & map) -> bool;
}
