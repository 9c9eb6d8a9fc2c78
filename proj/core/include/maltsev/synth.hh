#pragma once

#include <maltsev/decide.hh>
#include <maltsev/errors.hh>
#include <maltsev/structure.hh>
#include <maltsev/ternary_op.hh>

#include <array>
#include <cstddef>

namespace maltsev
{
    /// No vertex satisfies every constraint at this argument triple. The lifting
    /// argument rules this out whenever the input is Maltsev.
    class EmptyCandidateSet : public InvariantViolation
    {
        private:
            std::array<Vertex, 3> _triple;

        public:
            explicit EmptyCandidateSet(const std::array<Vertex, 3> & triple);

            [[nodiscard]] auto triple() const -> const std::array<Vertex, 3> & { return _triple; }
    };

    /// How the entries of a lifted table were determined.
    struct LiftStats
    {
        std::size_t forced = 0;
        std::size_t both_constraints = 0;
        std::size_t plus_only = 0;
        std::size_t minus_only = 0;
        std::size_t unconstrained = 0;
        /// Smallest candidate set seen among constrained entries (0 if none).
        std::size_t smallest_candidate_set = 0;
    };

    /// M(x,y,z) = y if y = z, else x. Requires a base-class digraph.
    [[nodiscard]] auto majority_base(const Digraph & graph) -> TernaryOp;

    /// A Maltsev polymorphism of a base-class digraph. On a union of cycles,
    /// with d the cyclic distance from y to z, x is advanced by d; otherwise,
    /// if x and y share a cycle, z is advanced by the distance from y to x.
    [[nodiscard]] auto maltsev_base(const Digraph & graph) -> TernaryOp;

    /// f-(X,Y,Z) = phi(f+(phi^-1 X, phi^-1 Y, phi^-1 Z)) on R- block indices.
    [[nodiscard]] auto conjugate_via_phi(const ClassBijection & map, const TernaryOp & f_plus) -> TernaryOp;
    [[nodiscard]] auto conjugate_via_phi(const Digraph & graph, const TernaryOp & f_plus) -> TernaryOp;

    /// Extends a polymorphism of G+ satisfying the given identities to one of G.
    /// Identity-forced entries come first; every other entry is the smallest
    /// vertex in the intersection of the applicable class constraints:
    /// the R+ class f+(x/R+, y/R+, z/R+) when no argument is a sink, and the
    /// R- class f-(x/R-, y/R-, z/R-) when no argument is a source.
    [[nodiscard]] auto lift(const Digraph & graph, const TernaryOp & f_plus, IdentityKind kind, LiftStats * stats = nullptr) -> TernaryOp;

    [[nodiscard]] auto lift_majority(const Digraph & graph, const TernaryOp & m_plus) -> TernaryOp;
    [[nodiscard]] auto lift_maltsev(const Digraph & graph, const TernaryOp & m_plus) -> TernaryOp;

    /// Walks the decide certificate bottom-up: base operation on the last
    /// chain member, then one lift per level. The result is re-verified
    /// before it is returned. Throws NotMaltsev when decide refuses.
    [[nodiscard]] auto synth(const Digraph & graph, IdentityKind kind, std::vector<LiftStats> * stats = nullptr) -> TernaryOp;

    [[nodiscard]] auto synth_majority(const Digraph & graph) -> TernaryOp;
    [[nodiscard]] auto synth_maltsev(const Digraph & graph) -> TernaryOp;
}
