#include <maltsev/synth.hh>

#include <algorithm>
#include <iterator>

using namespace maltsev;

using std::array;
using std::optional;
using std::vector;

EmptyCandidateSet::EmptyCandidateSet(const array<Vertex, 3> & triple) :
    InvariantViolation("empty candidate set at (" + std::to_string(triple[0]) + "," + std::to_string(triple[1]) + "," + std::to_string(triple[2]) + ")"),
    _triple(triple)
{
}

namespace
{
    auto require_base(const Digraph & graph) -> BaseKind
    {
        auto kind = base_kind_of(graph);
        if (! kind)
            throw PreconditionError("base operation needs a disjoint union of cycles, an edgeless digraph or the null digraph");
        return *kind;
    }

    struct CyclePosition
    {
        int cycle;
        int position;
    };

    struct Cycles
    {
        vector<CyclePosition> of;
        vector<vector<Vertex>> members;

        auto advance(Vertex v, int steps) const -> Vertex
        {
            auto & cycle = members[of[v].cycle];
            auto length = int(cycle.size());
            return cycle[(of[v].position + steps % length + length) % length];
        }

        auto distance(Vertex from, Vertex to) const -> int
        {
            auto length = int(members[of[from].cycle].size());
            return ((of[to].position - of[from].position) % length + length) % length;
        }

        auto same(Vertex a, Vertex b) const -> bool { return of[a].cycle == of[b].cycle; }
    };

    auto decompose_cycles(const Digraph & graph) -> Cycles
    {
        Cycles result;
        result.of.assign(graph.size(), CyclePosition{-1, -1});
        for (Vertex start = 0; start < graph.size(); ++start) {
            if (result.of[start].cycle != -1)
                continue;
            int id = int(result.members.size());
            auto & cycle = result.members.emplace_back();
            for (Vertex v = start; result.of[v].cycle == -1; v = graph.out_neighbors(v).front()) {
                result.of[v] = CyclePosition{id, int(cycle.size())};
                cycle.push_back(v);
            }
        }
        return result;
    }

    auto intersect(const vector<Vertex> & a, const vector<Vertex> & b) -> vector<Vertex>
    {
        vector<Vertex> result;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
        return result;
    }
}

auto maltsev::majority_base(const Digraph & graph) -> TernaryOp
{
    require_base(graph);
    return TernaryOp::from_function(graph.size(), [](Vertex x, Vertex y, Vertex z) { return y == z ? y : x; });
}

auto maltsev::maltsev_base(const Digraph & graph) -> TernaryOp
{
    auto kind = require_base(graph);
    if (kind != BaseKind::disjoint_cycles)
        return TernaryOp::from_function(graph.size(), [](Vertex x, Vertex y, Vertex z) {
            if (y == z)
                return x;
            if (x == y)
                return z;
            return x;
        });

    // The distance is reduced modulo the length of the cycle it is measured
    // on before it is applied, so the result commutes with the successor map.
    auto cycles = decompose_cycles(graph);
    return TernaryOp::from_function(graph.size(), [&](Vertex x, Vertex y, Vertex z) {
        if (cycles.same(y, z))
            return cycles.advance(x, cycles.distance(y, z));
        if (cycles.same(x, y))
            return cycles.advance(z, cycles.distance(y, x));
        return x;
    });
}

auto maltsev::conjugate_via_phi(const ClassBijection & map, const TernaryOp & f_plus) -> TernaryOp
{
    if (std::size_t(f_plus.size()) != map.forward.size())
        throw ArgumentError("operation on " + std::to_string(f_plus.size()) + " elements does not match " + std::to_string(map.forward.size()) + " R+ classes");

    auto & back = map.backward;
    return TernaryOp::from_function(f_plus.size(), [&](Vertex x, Vertex y, Vertex z) {
        return map.forward[f_plus(back[x], back[y], back[z])];
    });
}

auto maltsev::conjugate_via_phi(const Digraph & graph, const TernaryOp & f_plus) -> TernaryOp
{
    return conjugate_via_phi(phi(graph), f_plus);
}

auto maltsev::lift(const Digraph & graph, const TernaryOp & f_plus, IdentityKind kind, LiftStats * stats) -> TernaryOp
{
    auto plus = factor(graph, Side::plus);
    if (f_plus.size() != plus.quotient.size())
        throw ArgumentError("operation on " + std::to_string(f_plus.size()) + " elements does not match G+ on " + std::to_string(plus.quotient.size()) + " vertices");
    if (! verify_identities(f_plus, kind) || ! verify_polymorphism(plus.quotient, f_plus))
        throw PreconditionError("operation to lift is not a " + to_string(kind) + " polymorphism of G+");

    auto minus = r_classes(graph, Side::minus);
    auto f_minus = conjugate_via_phi(phi(graph, plus.partition, minus), f_plus);

    auto & plus_of = plus.partition.block_of;
    auto & minus_of = minus.block_of;

    LiftStats local;
    auto n = graph.size();
    TernaryOp result(n);

    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y)
            for (Vertex z = 0; z < n; ++z) {
                if (auto forced = forced_value(kind, x, y, z)) {
                    result.set(x, y, z, *forced);
                    ++local.forced;
                    continue;
                }

                optional<vector<Vertex>> candidates;
                bool by_plus = plus_of[x] && plus_of[y] && plus_of[z];
                bool by_minus = minus_of[x] && minus_of[y] && minus_of[z];

                if (by_plus)
                    candidates = plus.partition.blocks[f_plus(*plus_of[x], *plus_of[y], *plus_of[z])];
                if (by_minus) {
                    auto & block = minus.blocks[f_minus(*minus_of[x], *minus_of[y], *minus_of[z])];
                    candidates = candidates ? intersect(*candidates, block) : block;
                }

                if (! candidates) {
                    result.set(x, y, z, 0);
                    ++local.unconstrained;
                    continue;
                }

                if (candidates->empty())
                    throw EmptyCandidateSet({x, y, z});

                result.set(x, y, z, candidates->front());
                if (by_plus && by_minus)
                    ++local.both_constraints;
                else if (by_plus)
                    ++local.plus_only;
                else
                    ++local.minus_only;
                if (local.smallest_candidate_set == 0 || candidates->size() < local.smallest_candidate_set)
                    local.smallest_candidate_set = candidates->size();
            }

    if (stats)
        *stats = local;
    return result;
}

auto maltsev::lift_majority(const Digraph & graph, const TernaryOp & m_plus) -> TernaryOp
{
    return lift(graph, m_plus, IdentityKind::majority);
}

auto maltsev::lift_maltsev(const Digraph & graph, const TernaryOp & m_plus) -> TernaryOp
{
    return lift(graph, m_plus, IdentityKind::maltsev);
}

auto maltsev::synth(const Digraph & graph, IdentityKind kind, vector<LiftStats> * stats) -> TernaryOp
{
    auto certificate = decide_maltsev(graph);
    if (! certificate)
        throw NotMaltsev(std::move(certificate));

    auto & chain = certificate.chain;
    auto op = kind == IdentityKind::majority ? majority_base(chain.back()) : maltsev_base(chain.back());

    if (stats)
        stats->clear();
    for (auto level = chain.size() - 1; level-- > 0;) {
        LiftStats step;
        op = lift(chain[level], op, kind, &step);
        if (stats)
            stats->push_back(step);
    }

    if (auto v = verify_identities(op, kind); ! v)
        throw InvariantViolation("synthesized " + to_string(kind) + " table violates its identities at (" + std::to_string(v.violation->first) + "," + std::to_string(v.violation->second) + ")");
    if (! verify_polymorphism(graph, op))
        throw InvariantViolation("synthesized " + to_string(kind) + " table is not a polymorphism");

    return op;
}

auto maltsev::synth_majority(const Digraph & graph) -> TernaryOp
{
    return synth(graph, IdentityKind::majority);
}

auto maltsev::synth_maltsev(const Digraph & graph) -> TernaryOp
{
    return synth(graph, IdentityKind::maltsev);
}
