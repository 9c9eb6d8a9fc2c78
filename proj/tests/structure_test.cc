#include "test_graphs.hh"

#include <maltsev/structure.hh>

#include <gtest/gtest.h>

#include <algorithm>

using namespace maltsev;
using namespace maltsev::test;

using std::vector;

namespace
{
    // The definition, checked over all edge triples rather than by neighbourhood walks.
    auto rectangular_by_definition(const Digraph & g) -> bool
    {
        for (auto & a : g.edges())
            for (auto & b : g.edges())
                for (auto & c : g.edges())
                    if (a.to == b.to && b.from == c.from && ! g.has_edge(a.from, c.to))
                        return false;
        return true;
    }

    // u R+ v iff some z has (u,z) and (v,z); u R- v iff some z has (z,u) and (z,v).
    auto related(const Digraph & g, Side side, Vertex u, Vertex v) -> bool
    {
        for (Vertex z = 0; z < g.size(); ++z)
            if (side == Side::plus ? g.has_edge(u, z) && g.has_edge(v, z) : g.has_edge(z, u) && g.has_edge(z, v))
                return true;
        return false;
    }

    auto rectangular_up_to_3(const std::function<void (const Digraph &)> & f) -> void
    {
        for_each_labeled_up_to(3, [&](const Digraph & g) {
            if (is_rectangular(g))
                f(g);
        });
    }
}

TEST(IsRectangular, N4HasWitness)
{
    auto verdict = is_rectangular(n4());
    ASSERT_FALSE(verdict);
    EXPECT_EQ(*verdict.witness, (RectangularityWitness{0, 2, 1, 3}));
}

TEST(IsRectangular, CycleAndNull)
{
    EXPECT_TRUE(rectangular_by_definition(c3()));
    EXPECT_TRUE(is_rectangular(c3()));
    EXPECT_TRUE(is_rectangular(Digraph{}));
}

TEST(IsRectangular, AgreesWithDefinitionAndWitnessesAreGenuine)
{
    std::size_t rectangular = 0;
    for_each_labeled_up_to(3, [&](const Digraph & g) {
        auto verdict = is_rectangular(g);
        ASSERT_EQ(bool(verdict), rectangular_by_definition(g));
        if (verdict) {
            ++rectangular;
            return;
        }
        auto & w = *verdict.witness;
        ASSERT_TRUE(g.has_edge(w.x, w.y));
        ASSERT_TRUE(g.has_edge(w.x2, w.y));
        ASSERT_TRUE(g.has_edge(w.x2, w.y2));
        ASSERT_FALSE(g.has_edge(w.x, w.y2));
    });
    // 1 + 2 + 12 + 128, from an independent brute-force count.
    EXPECT_EQ(rectangular, 143u);
}

TEST(RClasses, Examples)
{
    auto plus = r_classes(fan_in(), Side::plus);
    EXPECT_EQ(plus.blocks, (vector<vector<Vertex>>{{0, 1}}));
    EXPECT_FALSE(plus.block_of[2].has_value());

    auto cycle = r_classes(c3(), Side::plus);
    EXPECT_EQ(cycle.blocks, (vector<vector<Vertex>>{{0}, {1}, {2}}));

    auto minus = r_classes(fan_in(), Side::minus);
    EXPECT_EQ(minus.blocks, (vector<vector<Vertex>>{{2}}));
    EXPECT_FALSE(minus.block_of[0].has_value());
    EXPECT_FALSE(minus.block_of[1].has_value());
    EXPECT_EQ(minus.block_of[2], 0);
}

TEST(RClasses, RejectsNonRectangular)
{
    try {
        (void) r_classes(n4(), Side::plus);
        FAIL() << "expected NotRectangular";
    }
    catch (const NotRectangular & e) {
        EXPECT_EQ(e.witness(), (RectangularityWitness{0, 2, 1, 3}));
    }
}

TEST(RClasses, BlocksNumberedBySmallestVertex)
{
    // R+ classes {1,3} (common out-neighbour 0) and {0,2} (common out-neighbour 1).
    Digraph g(4, {{1, 0}, {3, 0}, {0, 1}, {2, 1}});
    ASSERT_TRUE(is_rectangular(g));
    auto p = r_classes(g, Side::plus);
    EXPECT_EQ(p.blocks, (vector<vector<Vertex>>{{0, 2}, {1, 3}}));
}

TEST(RClasses, MatchesWitnessDefinition)
{
    rectangular_up_to_3([](const Digraph & g) {
        for (auto side : {Side::plus, Side::minus}) {
            auto p = r_classes(g, side);
            for (Vertex u = 0; u < g.size(); ++u) {
                bool excluded = side == Side::plus ? g.out_neighbors(u).empty() : g.in_neighbors(u).empty();
                ASSERT_EQ(p.block_of[u].has_value(), ! excluded);
                for (Vertex v = 0; v < g.size(); ++v) {
                    bool same = p.block_of[u] && p.block_of[v] && *p.block_of[u] == *p.block_of[v];
                    ASSERT_EQ(same, related(g, side, u, v));
                }
            }

            std::size_t covered = 0;
            for (std::size_t b = 0; b < p.blocks.size(); ++b) {
                ASSERT_FALSE(p.blocks[b].empty());
                if (b > 0)
                    ASSERT_LT(p.blocks[b - 1].front(), p.blocks[b].front());
                for (auto v : p.blocks[b])
                    ASSERT_EQ(p.block_of[v], int(b));
                covered += p.blocks[b].size();
            }
            ASSERT_EQ(covered, std::size_t(std::count_if(p.block_of.begin(), p.block_of.end(), [](auto & b) { return b.has_value(); })));
        }
    });
}

TEST(RClasses, RelatedVerticesShareNeighbourhoodWhichIsAClass)
{
    rectangular_up_to_3([](const Digraph & g) {
        auto plus = r_classes(g, Side::plus);
        auto minus = r_classes(g, Side::minus);
        for (auto & block : plus.blocks) {
            for (auto v : block)
                ASSERT_EQ(g.out_neighbors(v), g.out_neighbors(block.front()));
            auto & image = g.out_neighbors(block.front());
            ASSERT_TRUE(std::find(minus.blocks.begin(), minus.blocks.end(), image) != minus.blocks.end());
        }
        for (auto & block : minus.blocks) {
            for (auto v : block)
                ASSERT_EQ(g.in_neighbors(v), g.in_neighbors(block.front()));
            auto & image = g.in_neighbors(block.front());
            ASSERT_TRUE(std::find(plus.blocks.begin(), plus.blocks.end(), image) != plus.blocks.end());
        }
    });
}

TEST(Factor, Examples)
{
    auto f = factor(fan_in(), Side::plus);
    EXPECT_EQ(f.quotient, Digraph(1, {}));
    EXPECT_EQ(f.projection(0), 0);
    EXPECT_EQ(f.projection(1), 0);
    EXPECT_FALSE(f.projection(2).has_value());

    EXPECT_EQ(factor(c3(), Side::plus).quotient, c3());
    EXPECT_EQ(factor(Digraph{}, Side::plus).quotient, Digraph{});
}

TEST(Factor, EdgeRule)
{
    rectangular_up_to_3([](const Digraph & g) {
        for (auto side : {Side::plus, Side::minus}) {
            auto f = factor(g, side);
            ASSERT_EQ(f.quotient.size(), f.partition.size());
            for (int x = 0; x < f.quotient.size(); ++x)
                for (int y = 0; y < f.quotient.size(); ++y) {
                    bool expected = false;
                    for (auto u : f.partition.blocks[x])
                        for (auto v : f.partition.blocks[y])
                            expected = expected || g.has_edge(u, v);
                    ASSERT_EQ(f.quotient.has_edge(x, y), expected);
                }
        }
    });
}

TEST(Phi, Examples)
{
    auto cycle = phi(c3());
    EXPECT_EQ(cycle.forward, (vector<BlockIndex>{1, 2, 0}));
    EXPECT_EQ(cycle.backward, (vector<BlockIndex>{2, 0, 1}));

    auto fan = phi(fan_in());
    EXPECT_EQ(fan.forward, vector<BlockIndex>{0});

    EXPECT_EQ(phi(two_cycle()).forward, (vector<BlockIndex>{1, 0}));
}

TEST(Phi, InverseAndEdgeReformulation)
{
    rectangular_up_to_3([](const Digraph & g) {
        auto plus = factor(g, Side::plus);
        auto minus = r_classes(g, Side::minus);
        auto map = phi(g, plus.partition, minus);
        for (BlockIndex x = 0; x < plus.partition.size(); ++x)
            ASSERT_EQ(map.backward[map.forward[x]], x);
        for (BlockIndex y = 0; y < minus.size(); ++y)
            ASSERT_EQ(map.forward[map.backward[y]], y);

        // (X,Y) in E(G+) iff phi(X) meets Y as vertex sets.
        for (BlockIndex x = 0; x < plus.partition.size(); ++x)
            for (BlockIndex y = 0; y < plus.partition.size(); ++y) {
                auto & image = minus.blocks[map.forward[x]];
                auto & block = plus.partition.blocks[y];
                bool meets = std::any_of(image.begin(), image.end(), [&](Vertex v) {
                    return std::find(block.begin(), block.end(), v) != block.end();
                });
                ASSERT_EQ(plus.quotient.has_edge(x, y), meets);
            }
    });
}

TEST(VerifyPhiIsomorphism, Examples)
{
    EXPECT_TRUE(verify_phi_isomorphism(c3()));
    EXPECT_TRUE(verify_phi_isomorphism(fan_in()));
    EXPECT_THROW((void) verify_phi_isomorphism(n4()), NotRectangular);
}

TEST(VerifyPhiIsomorphism, HoldsOnAllSmallRectangularDigraphs)
{
    rectangular_up_to_3([](const Digraph & g) {
        auto verdict = verify_phi_isomorphism(g);
        ASSERT_TRUE(verdict) << serialize_digraph(g);
    });
}
