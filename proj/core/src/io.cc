#include <maltsev/errors.hh>
#include <maltsev/io.hh>

#include <json.hpp>

using namespace maltsev;

using json = nlohmann::ordered_json;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    auto to_json_value(const Digraph & graph) -> json
    {
        json edges = json::array();
        for (auto & e : graph.edges())
            edges.push_back({e.from, e.to});
        return json{{"n", graph.size()}, {"edges", std::move(edges)}};
    }

    auto parse_json(string_view text) -> json
    {
        try {
            return json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(0, string("invalid JSON: ") + e.what());
        }
    }

    template <typename F>
    auto guarded(F && f) -> decltype(f())
    {
        try {
            return f();
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(0, string("unexpected JSON shape: ") + e.what());
        }
        catch (const ArgumentError & e) {
            throw ParseError(0, e.what());
        }
    }

    auto digraph_from_json(const json & value) -> Digraph
    {
        auto n = value.at("n").get<int>();
        vector<Edge> edges;
        for (auto & pair : value.at("edges")) {
            if (! pair.is_array() || pair.size() != 2)
                throw ParseError(0, "edge must be a [u, v] pair");
            edges.push_back({pair[0].get<Vertex>(), pair[1].get<Vertex>()});
        }
        return Digraph(n, edges);
    }
}

auto maltsev::digraph_to_json(const Digraph & graph) -> string
{
    return to_json_value(graph).dump();
}

auto maltsev::parse_digraph_json(string_view text) -> Digraph
{
    auto value = parse_json(text);
    return guarded([&] { return digraph_from_json(value); });
}

auto maltsev::serialize_factor(const FactorGraph & factor) -> string
{
    auto result = serialize_digraph(factor.quotient);
    for (std::size_t b = 0; b < factor.partition.blocks.size(); ++b) {
        result += "class " + std::to_string(b) + ":";
        for (auto v : factor.partition.blocks[b])
            result += " " + std::to_string(v);
        result += "\n";
    }
    return result;
}

auto maltsev::certificate_to_json(const MaltsevCertificate & certificate) -> string
{
    if (! certificate.verdict) {
        auto & r = certificate.refutation.value();
        return json{
            {"verdict", false},
            {"level", r.level},
            {"witness", {r.witness.x, r.witness.y, r.witness.x2, r.witness.y2}}}
            .dump();
    }

    json chain = json::array();
    for (auto & g : certificate.chain)
        chain.push_back(to_json_value(g));
    return json{{"verdict", true}, {"chain", std::move(chain)}, {"base", to_string(certificate.base.value())}}.dump();
}

auto maltsev::ternary_op_to_json(const TernaryOp & op) -> string
{
    return json{{"n", op.size()}, {"arity", 3}, {"table", op.table()}}.dump();
}

auto maltsev::parse_ternary_op_json(string_view text) -> TernaryOp
{
    auto value = parse_json(text);
    return guarded([&] {
        if (value.at("arity").get<int>() != 3)
            throw ParseError(0, "only ternary operations are supported");
        return TernaryOp(value.at("n").get<int>(), value.at("table").get<vector<Vertex>>());
    });
}

auto maltsev::homomorphism_to_json(const vector<Vertex> & map) -> string
{
    json result = json::object();
    for (std::size_t v = 0; v < map.size(); ++v)
        result[std::to_string(v)] = map[v];
    return result.dump();
}

auto maltsev::instance_to_json(const CspInstance & instance) -> string
{
    json pins = json::object();
    for (auto & [variable, image] : instance.pins)
        pins[std::to_string(variable)] = image;
    return json{{"h", to_json_value(instance.h)}, {"pins", std::move(pins)}}.dump();
}

auto maltsev::parse_instance_json(string_view text) -> CspInstance
{
    auto value = parse_json(text);
    return guarded([&] {
        CspInstance instance{digraph_from_json(value.at("h")), {}};
        if (value.contains("pins"))
            for (auto & [key, image] : value.at("pins").items()) {
                Vertex variable = 0;
                try {
                    std::size_t used = 0;
                    variable = std::stoi(key, &used);
                    if (used != key.size())
                        throw std::invalid_argument(key);
                }
                catch (const std::logic_error &) {
                    throw ParseError(0, "pin key '" + key + "' is not a variable index");
                }
                auto target = image.get<Vertex>();
                if (variable < 0 || variable >= instance.h.size())
                    throw ParseError(0, "pin variable " + key + " out of range");
                if (target < 0)
                    throw ParseError(0, "pin target must be nonnegative");
                instance.pins[variable] = target;
            }
        return instance;
    });
}
