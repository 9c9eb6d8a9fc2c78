#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maltsev
{
    /// Malformed digraph text or JSON input. Carries the 1-based line number
    /// for line-oriented formats (0 when not applicable).
    class ParseError : public std::runtime_error
    {
        private:
            std::size_t _line;

        public:
            ParseError(std::size_t line, const std::string & message);

            [[nodiscard]] auto line() const -> std::size_t { return _line; }
    };

    /// A caller handed us something outside an operation's domain: a vertex
    /// out of range, mismatched table sizes, an unsupported enumeration size.
    class ArgumentError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// An operation's mathematical precondition does not hold for its input
    /// (e.g. asking for R+ classes of a non-rectangular digraph).
    class PreconditionError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Something that the theory guarantees did not happen. Always a bug.
    class InvariantViolation : public std::logic_error
    {
        public:
            using std::logic_error::logic_error;
    };
}
