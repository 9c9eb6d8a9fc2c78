#pragma once

#include <maltsev/digraph.hh>
#include <maltsev/structure.hh>

#include <optional>
#include <string>
#include <vector>

namespace maltsev
{
    enum class BaseKind
    {
        disjoint_cycles,
        edgeless,
        null
    };

    [[nodiscard]] auto to_string(BaseKind kind) -> std::string;

    /// Every vertex has in-degree and out-degree exactly one. True for the null digraph.
    [[nodiscard]] auto is_disjoint_union_of_cycles(const Digraph & graph) -> bool;

    /// Which base class, if any, the digraph belongs to. The null digraph
    /// reports null rather than the other two kinds it also satisfies.
    [[nodiscard]] auto base_kind_of(const Digraph & graph) -> std::optional<BaseKind>;

    struct Refutation
    {
        /// Index into the chain; 0 is the input digraph itself.
        int level = 0;
        RectangularityWitness witness;
    };

    /// chain[0] is the input, chain[i+1] = factor(chain[i], plus).quotient.
    /// On acceptance chain.back() lies in the base class; on refusal
    /// chain[refutation->level] is the first non-rectangular member.
    struct MaltsevCertificate
    {
        bool verdict = false;
        std::vector<Digraph> chain;
        std::optional<BaseKind> base;
        std::optional<Refutation> refutation;

        explicit operator bool() const { return verdict; }
    };

    [[nodiscard]] auto decide_maltsev(const Digraph & graph) -> MaltsevCertificate;

    /// Re-derives every step of the certificate from chain[0]. Returns false
    /// on any mismatch.
    [[nodiscard]] auto replay_certificate(const MaltsevCertificate & certificate) -> bool;

    class NotMaltsev : public PreconditionError
    {
        private:
            MaltsevCertificate _certificate;

        public:
            explicit NotMaltsev(MaltsevCertificate certificate);

            [[nodiscard]] auto certificate() const -> const MaltsevCertificate & { return _certificate; }
    };
}
