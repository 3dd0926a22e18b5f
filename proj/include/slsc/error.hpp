#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slsc {

enum class ErrorCode {
    EmptySimplex,
    DuplicateVertex,
    InvalidVertex,
    SimplexNotInComplex,
    AtomSetMismatch,
    UnknownAtom,
    InvalidAtomName,
    SyntaxError,
    UnbalancedParens,
    ParseError,
    ClosureViolation,
    UnknownAtomRef,
    DuplicateSimplex,
    InvalidDocument,
};

std::string_view to_string(ErrorCode code);

// Line/column are 1-based; offset is a 0-based byte offset into the input.
struct SourcePosition {
    std::size_t offset = 0;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<SourcePosition> position = std::nullopt);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    [[nodiscard]] const std::optional<SourcePosition>& position() const noexcept { return position_; }

private:
    ErrorCode code_;
    std::optional<SourcePosition> position_;
};

// Computes line/column of a byte offset within text.
SourcePosition position_in(std::string_view text, std::size_t offset);

} // namespace slsc
