#include <maltsev/csp.hh>
#include <maltsev/decide.hh>
#include <maltsev/errors.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

using namespace maltsev;

using std::uint64_t;
using std::vector;

Relation::Relation(int n, bool full) :
    _size(n),
    _words((std::size_t(n) + 63) / 64),
    _bits(std::size_t(n) * _words, 0)
{
    if (full)
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b)
                set(a, b);
}

auto Relation::diagonal(const vector<bool> & domain) -> Relation
{
    Relation result(int(domain.size()));
    for (Vertex a = 0; a < result._size; ++a)
        if (domain[a])
            result.set(a, a);
    return result;
}

auto Relation::of_edges(const Digraph & graph) -> Relation
{
    Relation result(graph.size());
    for (auto & e : graph.edges())
        result.set(e.from, e.to);
    return result;
}

auto Relation::test(Vertex a, Vertex b) const -> bool
{
    return _bits[a * _words + b / 64] >> (b % 64) & 1;
}

auto Relation::set(Vertex a, Vertex b) -> void
{
    _bits[a * _words + b / 64] |= uint64_t{1} << (b % 64);
}

auto Relation::empty() const -> bool
{
    return std::all_of(_bits.begin(), _bits.end(), [](uint64_t w) { return w == 0; });
}

auto Relation::count() const -> std::size_t
{
    return std::accumulate(_bits.begin(), _bits.end(), std::size_t{0}, [](std::size_t c, uint64_t w) { return c + std::popcount(w); });
}

auto Relation::transpose() const -> Relation
{
    Relation result(_size);
    for (Vertex a = 0; a < _size; ++a)
        for (Vertex b = 0; b < _size; ++b)
            if (test(a, b))
                result.set(b, a);
    return result;
}

auto Relation::compose(const Relation & other) const -> Relation
{
    Relation result(_size);
    for (Vertex a = 0; a < _size; ++a)
        for (Vertex b = 0; b < _size; ++b)
            if (test(a, b))
                for (std::size_t w = 0; w < _words; ++w)
                    result._bits[a * _words + w] |= other._bits[b * _words + w];
    return result;
}

auto Relation::intersect_with(const Relation & other) -> bool
{
    bool changed = false;
    for (std::size_t w = 0; w < _bits.size(); ++w) {
        auto narrowed = _bits[w] & other._bits[w];
        changed = changed || narrowed != _bits[w];
        _bits[w] = narrowed;
    }
    return changed;
}

auto maltsev::initial_pair_system(const CspInstance & instance, const Digraph & target) -> PairSystem
{
    auto vars = instance.h.size();
    auto n = target.size();
    for (auto & [variable, image] : instance.pins)
        if (variable < 0 || variable >= vars || image < 0 || image >= n)
            throw ArgumentError("pin " + std::to_string(variable) + " -> " + std::to_string(image) + " out of range");

    PairSystem system;
    system.domains.assign(vars, vector<bool>(n, true));
    for (auto & [variable, image] : instance.pins) {
        system.domains[variable].assign(n, false);
        system.domains[variable][image] = true;
    }

    auto edges = Relation::of_edges(target);
    for (auto & e : instance.h.edges())
        if (e.from == e.to)
            for (Vertex a = 0; a < n; ++a)
                if (! edges.test(a, a))
                    system.domains[e.from][a] = false;

    system.relations.assign(vars, vector<Relation>(vars));
    for (int i = 0; i < vars; ++i)
        for (int j = 0; j < vars; ++j) {
            auto & r = system.relations[i][j];
            if (i == j) {
                r = Relation::diagonal(system.domains[i]);
                continue;
            }
            r = Relation(n);
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = 0; b < n; ++b)
                    if (system.domains[i][a] && system.domains[j][b])
                        r.set(a, b);
        }

    auto transposed = edges.transpose();
    for (auto & e : instance.h.edges())
        if (e.from != e.to) {
            system.relations[e.from][e.to].intersect_with(edges);
            system.relations[e.to][e.from].intersect_with(transposed);
        }

    return system;
}

auto maltsev::enforce_path_consistency(PairSystem & system) -> bool
{
    auto vars = system.variables();
    auto & r = system.relations;

    for (bool changed = true; changed;) {
        changed = false;
        for (int k = 0; k < vars; ++k)
            for (int i = 0; i < vars; ++i)
                for (int j = 0; j < vars; ++j) {
                    if (! r[i][j].intersect_with(r[i][k].compose(r[k][j])))
                        continue;
                    changed = true;
                    if (r[i][j].empty())
                        return false;
                    if (i != j)
                        r[j][i] = r[i][j].transpose();
                }
    }

    for (int i = 0; i < vars; ++i) {
        auto & domain = system.domains[i];
        for (Vertex a = 0; a < Vertex(domain.size()); ++a)
            domain[a] = r[i][i].test(a, a);
        if (std::none_of(domain.begin(), domain.end(), [](bool b) { return b; }))
            return false;
    }
    return true;
}

auto maltsev::to_string(CspVerdict verdict) -> std::string
{
    switch (verdict) {
        case CspVerdict::yes: return "yes";
        case CspVerdict::no: return "no";
        case CspVerdict::maybe: return "maybe";
    }
    return "?";
}

auto maltsev::solve_csp_consistency(const CspInstance & instance, const Digraph & target, const std::optional<TernaryOp> & majority) -> CspResult
{
    auto system = initial_pair_system(instance, target);
    for (auto & d : system.domains)
        if (std::none_of(d.begin(), d.end(), [](bool b) { return b; }))
            return CspResult{CspVerdict::no, true, {}};

    if (! enforce_path_consistency(system))
        return CspResult{CspVerdict::no, true, {}};

    bool complete = bool(decide_maltsev(target));
    if (! complete && majority)
        complete = verify_identities(*majority, IdentityKind::majority) && verify_polymorphism(target, *majority);

    if (complete)
        return CspResult{CspVerdict::yes, true, {}};
    return CspResult{CspVerdict::maybe, false, "target has no known majority polymorphism; path consistency is not known to be complete"};
}

auto maltsev::random_instance(const Digraph & target, int vars, double edge_prob, int pin_count, uint64_t seed) -> CspInstance
{
    if (vars < 0)
        throw ArgumentError("negative variable count");
    if (! (edge_prob >= 0.0 && edge_prob <= 1.0))
        throw ArgumentError("edge probability must lie in [0, 1]");
    if (pin_count < 0 || pin_count > vars)
        throw ArgumentError("pin count must lie in [0, vars]");
    if (pin_count > 0 && target.size() == 0)
        throw ArgumentError("cannot pin into the null digraph");

    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);

    vector<Edge> edges;
    for (Vertex u = 0; u < vars; ++u)
        for (Vertex v = 0; v < vars; ++v)
            if (coin(rng))
                edges.push_back({u, v});

    vector<Vertex> order(vars);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    CspInstance instance{Digraph(vars, edges), {}};
    if (pin_count > 0) {
        std::uniform_int_distribution<Vertex> image(0, target.size() - 1);
        for (int p = 0; p < pin_count; ++p)
            instance.pins[order[p]] = image(rng);
    }
    return instance;
}
