#include "slsc/error.hpp"

#include <algorithm>

namespace slsc {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptySimplex: return "EmptySimplex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::SimplexNotInComplex: return "SimplexNotInComplex";
    case ErrorCode::AtomSetMismatch: return "AtomSetMismatch";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::InvalidAtomName: return "InvalidAtomName";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::UnknownAtomRef: return "UnknownAtomRef";
    case ErrorCode::DuplicateSimplex: return "DuplicateSimplex";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, const std::optional<SourcePosition>& position)
{
    std::string out{to_string(code)};
    if (position) {
        out += " at " + std::to_string(position->line) + ":" + std::to_string(position->column);
    }
    out += ": ";
    out += message;
    return out;
}

} // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<SourcePosition> position)
    : std::runtime_error(decorate(code, message, position)), code_(code), position_(position)
{
}

SourcePosition position_in(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    SourcePosition pos;
    pos.offset = offset;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

} // namespace slsc
