#include <maltsev/errors.hh>

using namespace maltsev;

ParseError::ParseError(std::size_t line, const std::string & message) :
    std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
    _line(line)
{
}
