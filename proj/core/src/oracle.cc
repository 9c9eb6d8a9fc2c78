#include <maltsev/errors.hh>
#include <maltsev/oracle.hh>

#include <bit>

using namespace maltsev;

using std::optional;
using std::uint32_t;
using std::vector;

namespace
{
    using Domain = uint32_t;

    struct TableSearch
    {
        const Digraph & graph;
        int n;
        std::size_t cells;

        vector<Domain> out_mask, in_mask;
        // For cell t = (u1,u2,u3): the cells (v1,v2,v3) with every (ui,vi) an
        // edge, and the cells with every (vi,ui) an edge.
        vector<vector<uint32_t>> successors, predecessors;

        vector<Domain> domains;
        vector<Vertex> value;
        vector<uint32_t> order;
        vector<std::pair<uint32_t, Domain>> trail;
        SearchStats stats;

        TableSearch(const Digraph & g) :
            graph(g),
            n(g.size()),
            cells(std::size_t(n) * n * n)
        {
            out_mask.assign(n, 0);
            in_mask.assign(n, 0);
            for (auto & e : g.edges()) {
                out_mask[e.from] |= Domain{1} << e.to;
                in_mask[e.to] |= Domain{1} << e.from;
            }

            successors.resize(cells);
            predecessors.resize(cells);
            auto cell = [&](Vertex a, Vertex b, Vertex c) { return uint32_t((a * n + b) * n + c); };
            for (auto & a : g.edges())
                for (auto & b : g.edges())
                    for (auto & c : g.edges()) {
                        auto from = cell(a.from, b.from, c.from), to = cell(a.to, b.to, c.to);
                        successors[from].push_back(to);
                        predecessors[to].push_back(from);
                    }

            domains.assign(cells, n == 32 ? ~Domain{0} : (Domain{1} << n) - 1);
            value.assign(cells, -1);
        }

        auto restrict(uint32_t cell, Domain allowed) -> bool
        {
            auto narrowed = domains[cell] & allowed;
            if (narrowed != domains[cell]) {
                trail.emplace_back(cell, domains[cell]);
                domains[cell] = narrowed;
            }
            return narrowed != 0;
        }

        // Fixes cell to w and filters its neighbours. False on a wipeout.
        auto assign(uint32_t cell, Vertex w) -> bool
        {
            if (! (domains[cell] >> w & 1))
                return false;
            if (! restrict(cell, Domain{1} << w))
                return false;
            value[cell] = w;

            for (auto s : successors[cell])
                if (! restrict(s, out_mask[w]))
                    return false;
            for (auto p : predecessors[cell])
                if (! restrict(p, in_mask[w]))
                    return false;
            return true;
        }

        auto undo_to(std::size_t mark) -> void
        {
            while (trail.size() > mark) {
                domains[trail.back().first] = trail.back().second;
                trail.pop_back();
            }
        }

        auto search(std::size_t depth) -> bool
        {
            ++stats.nodes;
            if (depth == order.size())
                return true;

            auto cell = order[depth];
            auto mark = trail.size();
            for (Domain d = domains[cell]; d != 0; d &= d - 1) {
                auto w = std::countr_zero(d);
                if (assign(cell, w) && search(depth + 1))
                    return true;
                ++stats.wipeouts;
                undo_to(mark);
            }
            return false;
        }
    };
}

auto maltsev::find_polymorphism_bruteforce(const Digraph & graph, IdentityKind kind, SearchStats * stats) -> optional<TernaryOp>
{
    auto n = graph.size();
    if (n > 32)
        throw ArgumentError("brute-force polymorphism search supports at most 32 vertices");

    TableSearch s(graph);

    bool consistent = true;
    for (Vertex x = 0; x < n && consistent; ++x)
        for (Vertex y = 0; y < n && consistent; ++y)
            for (Vertex z = 0; z < n && consistent; ++z) {
                auto cell = uint32_t((x * n + y) * n + z);
                if (auto forced = forced_value(kind, x, y, z))
                    consistent = s.assign(cell, *forced);
                else
                    s.order.push_back(cell);
            }

    bool found = consistent && s.search(0);
    if (stats)
        *stats = s.stats;
    if (! found)
        return std::nullopt;

    return TernaryOp(n, s.value);
}

auto maltsev::is_homomorphism(const Digraph & instance, const Digraph & target, const vector<Vertex> & map) -> bool
{
    if (map.size() != std::size_t(instance.size()))
        return false;
    for (auto v : map)
        if (v < 0 || v >= target.size())
            return false;
    for (auto & e : instance.edges())
        if (! target.has_edge(map[e.from], map[e.to]))
            return false;
    return true;
}

namespace
{
    auto extend(const Digraph & instance, const Digraph & target, const Pins & pins, vector<Vertex> & map, Vertex next) -> bool
    {
        if (next == instance.size())
            return true;

        auto consistent = [&](Vertex w) {
            map[next] = w;
            for (auto u : instance.in_neighbors(next))
                if (u <= next && ! target.has_edge(map[u], w))
                    return false;
            for (auto u : instance.out_neighbors(next))
                if (u < next && ! target.has_edge(w, map[u]))
                    return false;
            return true;
        };

        if (auto pin = pins.find(next); pin != pins.end())
            return consistent(pin->second) && extend(instance, target, pins, map, next + 1);

        for (Vertex w = 0; w < target.size(); ++w)
            if (consistent(w) && extend(instance, target, pins, map, next + 1))
                return true;
        map[next] = -1;
        return false;
    }
}

auto maltsev::find_homomorphism_bruteforce(const Digraph & instance, const Digraph & target, const Pins & pins) -> optional<vector<Vertex>>
{
    for (auto & [variable, image] : pins)
        if (variable < 0 || variable >= instance.size() || image < 0 || image >= target.size())
            throw ArgumentError("pin " + std::to_string(variable) + " -> " + std::to_string(image) + " out of range");

    vector<Vertex> map(instance.size(), -1);
    if (! extend(instance, target, pins, map, 0))
        return std::nullopt;
    return map;
}
