#include "test_graphs.hh"

#include <maltsev/errors.hh>
#include <maltsev/io.hh>

#include <gtest/gtest.h>

#include <json.hpp>

using namespace maltsev;
using namespace maltsev::test;

using nlohmann::json;

TEST(DigraphJson, RoundTrip)
{
    for_each_labeled_up_to(2, [](const Digraph & g) {
        ASSERT_EQ(parse_digraph_json(digraph_to_json(g)), g);
    });
    EXPECT_EQ(digraph_to_json(p2()), R"({"n":2,"edges":[[0,1]]})");
}

TEST(FactorText, QuotientThenClasses)
{
    EXPECT_EQ(serialize_factor(factor(fan_in(), Side::plus)), "1\nclass 0: 0 1\n");
    EXPECT_EQ(serialize_factor(factor(fan_in(), Side::minus)), "1\nclass 0: 2\n");
    EXPECT_EQ(serialize_factor(factor(c3(), Side::plus)), "3\n0 1\n1 2\n2 0\nclass 0: 0\nclass 1: 1\nclass 2: 2\n");
}

TEST(CertificateJson, Accepted)
{
    auto value = json::parse(certificate_to_json(decide_maltsev(p2())));
    EXPECT_EQ(value["verdict"], true);
    EXPECT_EQ(value["base"], "edgeless");
    ASSERT_EQ(value["chain"].size(), 2u);
    EXPECT_EQ(value["chain"][0]["n"], 2);
    EXPECT_EQ(value["chain"][1], json::parse(R"({"n":1,"edges":[]})"));
}

TEST(CertificateJson, Refused)
{
    auto value = json::parse(certificate_to_json(decide_maltsev(n4())));
    EXPECT_EQ(value, json::parse(R"({"verdict":false,"level":0,"witness":[0,2,1,3]})"));
}

TEST(TernaryOpJson, RoundTripAndErrors)
{
    auto op = TernaryOp::from_function(2, [](Vertex x, Vertex y, Vertex z) { return y == z ? y : x; });
    auto text = ternary_op_to_json(op);
    EXPECT_EQ(json::parse(text)["arity"], 3);
    EXPECT_EQ(parse_ternary_op_json(text), op);

    EXPECT_THROW((void) parse_ternary_op_json("{"), ParseError);
    EXPECT_THROW((void) parse_ternary_op_json(R"({"n":2,"arity":2,"table":[0,0,0,0]})"), ParseError);
    EXPECT_THROW((void) parse_ternary_op_json(R"({"n":2,"arity":3,"table":[0]})"), ParseError);
    EXPECT_THROW((void) parse_ternary_op_json(R"({"n":2,"arity":3})"), ParseError);
}

TEST(HomomorphismJson, MapsVariablesToTargets)
{
    EXPECT_EQ(json::parse(homomorphism_to_json({0, 1, 2})), json::parse(R"({"0":0,"1":1,"2":2})"));
}

TEST(InstanceJson, RoundTripAndErrors)
{
    CspInstance instance{path3(), {{0, 0}, {2, 2}}};
    auto parsed = parse_instance_json(instance_to_json(instance));
    EXPECT_EQ(parsed.h, instance.h);
    EXPECT_EQ(parsed.pins, instance.pins);

    auto unpinned = parse_instance_json(R"({"h":{"n":2,"edges":[[0,1]]}})");
    EXPECT_TRUE(unpinned.pins.empty());

    EXPECT_THROW((void) parse_instance_json(R"({"h":{"n":2,"edges":[[0,2]]}})"), ParseError);
    EXPECT_THROW((void) parse_instance_json(R"({"h":{"n":2,"edges":[]},"pins":{"x":0}})"), ParseError);
    EXPECT_THROW((void) parse_instance_json(R"({"h":{"n":2,"edges":[]},"pins":{"5":0}})"), ParseError);
    EXPECT_THROW((void) parse_instance_json(R"({"h":{"n":2,"edges":[[0]]}})"), ParseError);
}
