#include <maltsev/structure.hh>

#include <map>

using namespace maltsev;

using std::optional;
using std::string;
using std::vector;

namespace
{
    auto describe(const RectangularityWitness & w) -> string
    {
        return "not rectangular: (" + std::to_string(w.x) + "," + std::to_string(w.y) + "), (" + std::to_string(w.x2) + "," + std::to_string(w.y) + "), (" + std::to_string(w.x2) + "," + std::to_string(w.y2) + ") are edges but (" + std::to_string(w.x) + "," + std::to_string(w.y2) + ") is not";
    }
}

NotRectangular::NotRectangular(const RectangularityWitness & w) :
    PreconditionError(describe(w)),
    _witness(w)
{
}

auto maltsev::to_string(Side side) -> string
{
    return side == Side::plus ? "plus" : "minus";
}

auto maltsev::is_rectangular(const Digraph & graph) -> RectangularityVerdict
{
    for (Vertex x = 0; x < graph.size(); ++x)
        for (auto y : graph.out_neighbors(x))
            for (auto x2 : graph.in_neighbors(y))
                for (auto y2 : graph.out_neighbors(x2))
                    if (! graph.has_edge(x, y2))
                        return RectangularityVerdict{false, RectangularityWitness{x, y, x2, y2}};
    return RectangularityVerdict{};
}

auto maltsev::r_classes(const Digraph & graph, Side side) -> Partition
{
    if (auto verdict = is_rectangular(graph); ! verdict)
        throw NotRectangular(*verdict.witness);

    // Under rectangularity, u R+ v iff u+ = v+ (nonempty), and dually for R-.
    Partition result;
    result.side = side;
    result.block_of.assign(graph.size(), std::nullopt);

    std::map<vector<Vertex>, BlockIndex> by_neighbourhood;
    for (Vertex v = 0; v < graph.size(); ++v) {
        auto & key = side == Side::plus ? graph.out_neighbors(v) : graph.in_neighbors(v);
        if (key.empty())
            continue;

        auto [it, inserted] = by_neighbourhood.try_emplace(key, result.size());
        if (inserted)
            result.blocks.emplace_back();
        result.blocks[it->second].push_back(v);
        result.block_of[v] = it->second;
    }

    return result;
}

auto maltsev::factor(const Digraph & graph, Side side) -> FactorGraph
{
    auto partition = r_classes(graph, side);

    vector<Edge> edges;
    for (auto & e : graph.edges()) {
        auto from = partition.block_of[e.from], to = partition.block_of[e.to];
        if (from && to)
            edges.push_back({*from, *to});
    }

    auto blocks = partition.size();
    return FactorGraph{std::move(partition), Digraph(blocks, edges)};
}

auto maltsev::phi(const Digraph & graph, const Partition & plus, const Partition & minus) -> ClassBijection
{
    if (plus.side != Side::plus || minus.side != Side::minus)
        throw ArgumentError("phi needs an R+ partition and an R- partition");
    if (plus.size() != minus.size())
        throw InvariantViolation("R+ has " + std::to_string(plus.size()) + " classes but R- has " + std::to_string(minus.size()));

    ClassBijection result;
    result.forward.assign(plus.size(), -1);
    result.backward.assign(minus.size(), -1);

    for (BlockIndex x = 0; x < plus.size(); ++x) {
        auto & image = graph.out_neighbors(plus.blocks[x].front());
        auto target = minus.block_of[image.front()];
        if (! target || minus.blocks[*target] != image)
            throw InvariantViolation("X+ for R+ class " + std::to_string(x) + " is not an R- class");
        result.forward[x] = *target;
    }

    for (BlockIndex y = 0; y < minus.size(); ++y) {
        auto & image = graph.in_neighbors(minus.blocks[y].front());
        auto target = plus.block_of[image.front()];
        if (! target || plus.blocks[*target] != image)
            throw InvariantViolation("Y- for R- class " + std::to_string(y) + " is not an R+ class");
        result.backward[y] = *target;
    }

    for (BlockIndex x = 0; x < plus.size(); ++x)
        if (result.backward[result.forward[x]] != x)
            throw InvariantViolation("phi is not invertible at R+ class " + std::to_string(x));

    return result;
}

auto maltsev::phi(const Digraph & graph) -> ClassBijection
{
    return phi(graph, r_classes(graph, Side::plus), r_classes(graph, Side::minus));
}

auto maltsev::verify_phi_isomorphism(const Digraph & graph) -> IsomorphismVerdict
{
    auto plus = factor(graph, Side::plus);
    auto minus = factor(graph, Side::minus);
    auto map = phi(graph, plus.partition, minus.partition);

    for (BlockIndex x = 0; x < plus.quotient.size(); ++x)
        for (BlockIndex y = 0; y < plus.quotient.size(); ++y)
            if (plus.quotient.has_edge(x, y) != minus.quotient.has_edge(map.forward[x], map.forward[y]))
                return IsomorphismVerdict{false, std::pair{x, y}};

    return IsomorphismVerdict{};
}
