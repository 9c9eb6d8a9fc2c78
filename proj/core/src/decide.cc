#include <maltsev/decide.hh>
#include <maltsev/errors.hh>

using namespace maltsev;

using std::string;

auto maltsev::to_string(BaseKind kind) -> string
{
    switch (kind) {
        case BaseKind::disjoint_cycles: return "disjoint-cycles";
        case BaseKind::edgeless: return "edgeless";
        case BaseKind::null: return "null";
    }
    return "?";
}

auto maltsev::is_disjoint_union_of_cycles(const Digraph & graph) -> bool
{
    for (Vertex v = 0; v < graph.size(); ++v)
        if (graph.out_neighbors(v).size() != 1 || graph.in_neighbors(v).size() != 1)
            return false;
    return true;
}

auto maltsev::base_kind_of(const Digraph & graph) -> std::optional<BaseKind>
{
    if (graph.size() == 0)
        return BaseKind::null;
    if (graph.is_edgeless())
        return BaseKind::edgeless;
    if (is_disjoint_union_of_cycles(graph))
        return BaseKind::disjoint_cycles;
    return std::nullopt;
}

auto maltsev::decide_maltsev(const Digraph & graph) -> MaltsevCertificate
{
    MaltsevCertificate result;
    result.chain.push_back(graph);

    while (true) {
        auto & current = result.chain.back();

        // Rechecked at every level: G rectangular does not make G+ rectangular.
        if (auto verdict = is_rectangular(current); ! verdict) {
            result.refutation = Refutation{int(result.chain.size()) - 1, *verdict.witness};
            return result;
        }

        if (auto kind = base_kind_of(current)) {
            result.verdict = true;
            result.base = kind;
            return result;
        }

        auto next = factor(current, Side::plus).quotient;
        if (next.size() >= current.size())
            throw InvariantViolation("factoring a rectangular non-base digraph on " + std::to_string(current.size()) + " vertices did not shrink it");
        result.chain.push_back(std::move(next));
    }
}

auto maltsev::replay_certificate(const MaltsevCertificate & certificate) -> bool
{
    if (certificate.chain.empty())
        return false;
    if (certificate.verdict == certificate.refutation.has_value())
        return false;

    auto last = certificate.chain.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
        auto & g = certificate.chain[i];
        if (! is_rectangular(g) || base_kind_of(g))
            return false;
        if (factor(g, Side::plus).quotient != certificate.chain[i + 1])
            return false;
        if (certificate.chain[i + 1].size() >= g.size())
            return false;
    }

    auto & tail = certificate.chain[last];
    if (certificate.verdict)
        return is_rectangular(tail) && base_kind_of(tail) == certificate.base;

    auto & r = *certificate.refutation;
    if (r.level != int(last))
        return false;
    auto verdict = is_rectangular(tail);
    return ! verdict && verdict.witness == r.witness;
}

NotMaltsev::NotMaltsev(MaltsevCertificate certificate) :
    PreconditionError("digraph is not Maltsev" + (certificate.refutation ? " (rectangularity fails at chain level " + std::to_string(certificate.refutation->level) + ")" : string{})),
    _certificate(std::move(certificate))
{
}
