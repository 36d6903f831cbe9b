#pragma once

#include <stdexcept>
#include <string>

namespace punctured {

enum class ErrorKind {
    DescriptorMismatch,
    DivisionByZero,
    NotAnExtensionField,
    InvalidField,
    VariableMismatch,
    NotAUnit,
    PrecisionExhausted,
    WindowExceeded,
    NotStabilized,
    NotInG,
    NotInFiltrationLevel,
    MalformedCocycle,
    NotMonic,
    WildBranch,
    ZeroFunction,
    Unsupported,
    Parse,
    InvalidArgument,
};

const char *error_kind_name(ErrorKind kind) noexcept;

// All library failures are reported through this type; `kind()` carries the
// contract-level error name so callers (CLI, bindings) can map it.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind), message_(what)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    // what() without the kind prefix.
    const std::string &message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

// Parse failures carry the byte offset into the input string.
class ParseError : public Error
{
public:
    ParseError(std::size_t offset, const std::string &what)
        : Error(ErrorKind::Parse, "at byte " + std::to_string(offset) + ": " + what), offset_(offset), reason_(what)
    {
    }

    std::size_t offset() const noexcept { return offset_; }
    const std::string &reason() const noexcept { return reason_; }

private:
    std::size_t offset_;
    std::string reason_;
};

} // namespace punctured
