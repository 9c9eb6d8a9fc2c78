#include <maltsev/errors.hh>
#include <maltsev/ternary_op.hh>

using namespace maltsev;

using std::optional;
using std::string;
using std::vector;

auto maltsev::to_string(IdentityKind kind) -> string
{
    return kind == IdentityKind::maltsev ? "maltsev" : "majority";
}

auto maltsev::parse_identity_kind(const string & name) -> IdentityKind
{
    if (name == "maltsev")
        return IdentityKind::maltsev;
    if (name == "majority")
        return IdentityKind::majority;
    throw ArgumentError("unknown identity kind '" + name + "'");
}

TernaryOp::TernaryOp(int n) :
    _size(n)
{
    if (n < 0)
        throw ArgumentError("negative domain size");
    _table.assign(std::size_t(n) * n * n, 0);
}

TernaryOp::TernaryOp(int n, vector<Vertex> table) :
    _size(n),
    _table(std::move(table))
{
    if (n < 0)
        throw ArgumentError("negative domain size");
    if (_table.size() != std::size_t(n) * n * n)
        throw ArgumentError("table has " + std::to_string(_table.size()) + " entries, expected " + std::to_string(std::size_t(n) * n * n));
    for (auto v : _table)
        if (v < 0 || v >= n)
            throw ArgumentError("table entry " + std::to_string(v) + " out of range");
}

auto TernaryOp::set(Vertex x, Vertex y, Vertex z, Vertex value) -> void
{
    if (value < 0 || value >= _size)
        throw ArgumentError("table entry " + std::to_string(value) + " out of range");
    _table[index(x, y, z)] = value;
}

auto maltsev::forced_value(IdentityKind kind, Vertex x, Vertex y, Vertex z) -> optional<Vertex>
{
    switch (kind) {
        case IdentityKind::majority:
            if (x == y || x == z)
                return x;
            if (y == z)
                return y;
            return std::nullopt;

        case IdentityKind::maltsev:
            if (y == z)
                return x;
            if (x == y)
                return z;
            return std::nullopt;
    }
    return std::nullopt;
}

auto maltsev::verify_identities(const TernaryOp & op, IdentityKind kind) -> IdentityVerdict
{
    auto n = op.size();
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
            bool ok = kind == IdentityKind::maltsev
                ? op(x, y, y) == x && op(x, x, y) == y
                : op(x, y, y) == y && op(y, x, y) == y && op(y, y, x) == y;
            if (! ok)
                return IdentityVerdict{false, std::pair{x, y}};
        }
    return IdentityVerdict{};
}

auto maltsev::verify_polymorphism(const Digraph & graph, const TernaryOp & op) -> PolymorphismVerdict
{
    if (op.size() != graph.size())
        throw ArgumentError("operation on " + std::to_string(op.size()) + " elements does not match digraph on " + std::to_string(graph.size()) + " vertices");

    auto & edges = graph.edges();
    for (auto & a : edges)
        for (auto & b : edges)
            for (auto & c : edges)
                if (! graph.has_edge(op(a.from, b.from, c.from), op(a.to, b.to, c.to)))
                    return PolymorphismVerdict{false, std::array{a, b, c}};
    return PolymorphismVerdict{};
}
