#pragma once

#include <maltsev/csp.hh>
#include <maltsev/decide.hh>
#include <maltsev/structure.hh>
#include <maltsev/ternary_op.hh>

#include <string>
#include <string_view>
#include <vector>

namespace maltsev
{
    /// {"n": int, "edges": [[u, v], ...]}
    [[nodiscard]] auto digraph_to_json(const Digraph & graph) -> std::string;
    [[nodiscard]] auto parse_digraph_json(std::string_view text) -> Digraph;

    /// The quotient in digraph text format, then "class <i>: v1 v2 ..." lines.
    [[nodiscard]] auto serialize_factor(const FactorGraph & factor) -> std::string;

    /// Accepted: {"verdict": true, "chain": [...], "base": "..."}.
    /// Refused:  {"verdict": false, "level": int, "witness": [x, y, x2, y2]}.
    [[nodiscard]] auto certificate_to_json(const MaltsevCertificate & certificate) -> std::string;

    /// {"n": int, "arity": 3, "table": [...]}, index x*n*n + y*n + z.
    [[nodiscard]] auto ternary_op_to_json(const TernaryOp & op) -> std::string;
    [[nodiscard]] auto parse_ternary_op_json(std::string_view text) -> TernaryOp;

    /// {"0": h(0), "1": h(1), ...}
    [[nodiscard]] auto homomorphism_to_json(const std::vector<Vertex> & map) -> std::string;

    /// {"h": {"n": int, "edges": [[u, v], ...]}, "pins": {"var": target, ...}}
    [[nodiscard]] auto instance_to_json(const CspInstance & instance) -> std::string;
    [[nodiscard]] auto parse_instance_json(std::string_view text) -> CspInstance;
}
