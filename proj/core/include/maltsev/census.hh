#pragma once

#include <maltsev/decide.hh>
#include <maltsev/digraph.hh>

#include <cstdint>
#include <functional>
#include <string>

namespace maltsev
{
    enum class EnumerationMode
    {
        labeled,
        up_to_iso
    };

    [[nodiscard]] auto to_string(EnumerationMode mode) -> std::string;
    [[nodiscard]] auto parse_enumeration_mode(const std::string & name) -> EnumerationMode;

    inline constexpr int max_census_size = 5;

    /// Key whose numeric order is the lexicographic order of the row-major
    /// adjacency bitstring, entry (0,0) first.
    [[nodiscard]] auto adjacency_key(const Digraph & graph) -> std::uint64_t;

    /// Smallest adjacency_key over all n! relabellings.
    [[nodiscard]] auto canonical_key(const Digraph & graph) -> std::uint64_t;

    /// True iff no relabelling has a smaller adjacency_key.
    [[nodiscard]] auto is_canonical(int n, std::uint64_t adjacency_mask) -> bool;

    /// Visits digraphs whose adjacency mask lies in [first, last), ascending.
    /// In up_to_iso mode only the canonical member of each class is visited.
    auto for_each_digraph(int n, EnumerationMode mode, std::uint64_t first, std::uint64_t last,
        const std::function<void (std::uint64_t mask, const Digraph &)> & visit) -> void;

    auto for_each_digraph(int n, EnumerationMode mode, const std::function<void (std::uint64_t mask, const Digraph &)> & visit) -> void;

    /// Materialised enumeration; meant for n <= 4.
    [[nodiscard]] auto enumerate_digraphs(int n, EnumerationMode mode) -> std::vector<Digraph>;

    struct CensusRow
    {
        int n = 0;
        EnumerationMode mode = EnumerationMode::labeled;
        std::uint64_t total = 0;
        std::uint64_t rectangular = 0;
        std::uint64_t maltsev = 0;
        /// Brute force for n <= 3. From n = 4 on, counts Maltsev digraphs
        /// whose synthesized majority table verified, so it is a lower bound.
        std::uint64_t majority = 0;

        auto operator==(const CensusRow &) const -> bool = default;
    };

    /// Sharded over contiguous adjacency-mask ranges; workers = 0 means one
    /// per hardware thread. The result does not depend on the worker count.
    [[nodiscard]] auto count_maltsev(int n, EnumerationMode mode, unsigned workers = 1) -> CensusRow;

    [[nodiscard]] auto census_csv_header() -> std::string;
    [[nodiscard]] auto to_csv(const CensusRow & row) -> std::string;

    struct RectangularNonMaltsev
    {
        Digraph graph;
        MaltsevCertificate certificate;
    };

    /// First digraph, by size then adjacency mask, that is rectangular but
    /// refused by decide_maltsev.
    [[nodiscard]] auto smallest_rectangular_non_maltsev(int max_n = max_census_size) -> std::optional<RectangularNonMaltsev>;
}
