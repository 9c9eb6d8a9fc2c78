#pragma once

#include <maltsev/digraph.hh>

#include <cstdint>
#include <functional>

namespace maltsev::test
{
    inline auto c3() -> Digraph { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
    // Two sources feeding one sink.
    inline auto fan_in() -> Digraph { return Digraph(3, {{0, 2}, {1, 2}}); }
    inline auto loop1() -> Digraph { return Digraph(1, {{0, 0}}); }
    inline auto isolated1() -> Digraph { return Digraph(1, {}); }
    inline auto n4() -> Digraph { return Digraph(4, {{0, 2}, {1, 2}, {1, 3}}); }
    inline auto p2() -> Digraph { return Digraph(2, {{0, 1}}); }
    inline auto two_cycle() -> Digraph { return Digraph(2, {{0, 1}, {1, 0}}); }
    inline auto c2_plus_c3() -> Digraph { return Digraph(5, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}}); }
    inline auto path3() -> Digraph { return Digraph(3, {{0, 1}, {1, 2}}); }

    /// Every labeled digraph on n vertices, n <= 4.
    inline auto for_each_labeled(int n, const std::function<void (const Digraph &)> & f) -> void
    {
        for (std::uint64_t mask = 0; mask < std::uint64_t{1} << (n * n); ++mask)
            f(Digraph::from_adjacency_mask(n, mask));
    }

    inline auto for_each_labeled_up_to(int max_n, const std::function<void (const Digraph &)> & f) -> void
    {
        for (int n = 0; n <= max_n; ++n)
            for_each_labeled(n, f);
    }
}
