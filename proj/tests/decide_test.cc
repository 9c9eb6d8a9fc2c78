#include "test_graphs.hh"

#include <maltsev/decide.hh>
#include <maltsev/oracle.hh>

#include <gtest/gtest.h>

using namespace maltsev;
using namespace maltsev::test;

TEST(DisjointCycles, Examples)
{
    EXPECT_TRUE(is_disjoint_union_of_cycles(c3()));
    EXPECT_TRUE(is_disjoint_union_of_cycles(loop1()));
    EXPECT_FALSE(is_disjoint_union_of_cycles(fan_in()));
    EXPECT_TRUE(is_disjoint_union_of_cycles(Digraph{}));
    EXPECT_TRUE(is_disjoint_union_of_cycles(c2_plus_c3()));
}

TEST(DecideMaltsev, N4RefusedAtLevelZero)
{
    auto c = decide_maltsev(n4());
    EXPECT_FALSE(c);
    ASSERT_TRUE(c.refutation);
    EXPECT_EQ(c.refutation->level, 0);
    EXPECT_EQ(c.refutation->witness, (RectangularityWitness{0, 2, 1, 3}));
    EXPECT_TRUE(replay_certificate(c));
}

TEST(DecideMaltsev, PathFactorsToEdgelessPoint)
{
    auto c = decide_maltsev(p2());
    ASSERT_TRUE(c);
    ASSERT_EQ(c.chain.size(), 2u);
    EXPECT_EQ(c.chain[0], p2());
    EXPECT_EQ(c.chain[1], Digraph(1, {}));
    EXPECT_EQ(c.base, BaseKind::edgeless);
    EXPECT_TRUE(find_polymorphism_bruteforce(p2(), IdentityKind::maltsev));
}

TEST(DecideMaltsev, CycleIsBase)
{
    auto c = decide_maltsev(c3());
    ASSERT_TRUE(c);
    EXPECT_EQ(c.chain.size(), 1u);
    EXPECT_EQ(c.base, BaseKind::disjoint_cycles);
    EXPECT_TRUE(find_polymorphism_bruteforce(c3(), IdentityKind::maltsev));
}

TEST(DecideMaltsev, BaseKinds)
{
    EXPECT_EQ(decide_maltsev(Digraph{}).base, BaseKind::null);
    EXPECT_EQ(decide_maltsev(Digraph(3, {})).base, BaseKind::edgeless);
    EXPECT_EQ(decide_maltsev(c2_plus_c3()).base, BaseKind::disjoint_cycles);
}

TEST(DecideMaltsev, IsolatedVertexBesideCycleGoesThroughFactoring)
{
    Digraph g(2, {{0, 0}});
    auto c = decide_maltsev(g);
    ASSERT_TRUE(c);
    ASSERT_EQ(c.chain.size(), 2u);
    EXPECT_EQ(c.chain[1], loop1());
    EXPECT_EQ(c.base, BaseKind::disjoint_cycles);
}

TEST(DecideMaltsev, RectangularButFactorIsNot)
{
    // Loops at 0 and 1 plus 1 -> 2 -> 0: rectangular, but G+ has the edges
    // AA, BB, BA which are not.
    Digraph g(3, {{0, 0}, {1, 1}, {1, 2}, {2, 0}});
    ASSERT_TRUE(is_rectangular(g));
    auto c = decide_maltsev(g);
    EXPECT_FALSE(c);
    EXPECT_EQ(c.refutation->level, 1);
    EXPECT_EQ(c.chain[1], Digraph(2, {{0, 0}, {1, 0}, {1, 1}}));
    EXPECT_TRUE(replay_certificate(c));
    EXPECT_FALSE(find_polymorphism_bruteforce(g, IdentityKind::maltsev));
}

TEST(DecideMaltsev, AgreesWithOracleUpToThreeVertices)
{
    std::size_t graphs = 0;
    for_each_labeled_up_to(3, [&](const Digraph & g) {
        ++graphs;
        auto c = decide_maltsev(g);
        ASSERT_EQ(bool(c), find_polymorphism_bruteforce(g, IdentityKind::maltsev).has_value()) << serialize_digraph(g);
    });
    EXPECT_EQ(graphs, 1u + 2u + 16u + 512u);
}

TEST(DecideMaltsev, CertificatesReplayAndShrink)
{
    for_each_labeled_up_to(3, [](const Digraph & g) {
        auto c = decide_maltsev(g);
        ASSERT_TRUE(replay_certificate(c));
        for (std::size_t i = 1; i < c.chain.size(); ++i)
            ASSERT_LT(c.chain[i].size(), c.chain[i - 1].size());
        if (c)
            for (auto & member : c.chain)
                ASSERT_TRUE(is_rectangular(member));
    });
}

TEST(DecideMaltsev, FactorOfMaltsevIsMaltsev)
{
    for_each_labeled_up_to(3, [](const Digraph & g) {
        auto c = decide_maltsev(g);
        if (c && ! base_kind_of(g))
            ASSERT_TRUE(decide_maltsev(factor(g, Side::plus).quotient));
    });
}

TEST(ReplayCertificate, DetectsTampering)
{
    auto c = decide_maltsev(p2());
    c.chain[1] = loop1();
    EXPECT_FALSE(replay_certificate(c));

    auto refused = decide_maltsev(n4());
    refused.refutation->witness.y2 = 2;
    EXPECT_FALSE(replay_certificate(refused));
}
