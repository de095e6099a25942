#ifndef MAMMOAGE_ERRORS_HPP
#define MAMMOAGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mammoage {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input/format problems: unreadable files, malformed rows, bad tokens.
struct IoError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ConflictError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct DecodeError : Error { using Error::Error; };

// Runtime/fit problems: bad shapes, degenerate numerics, model mismatches.
struct InputError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct RangeError : Error { using Error::Error; };
struct ModelError : Error { using Error::Error; };
struct TagError : Error { using Error::Error; };
struct SeparationError : Error { using Error::Error; };
struct SingularError : Error { using Error::Error; };
struct DegenerateError : Error { using Error::Error; };

} // namespace mammoage

#endif // MAMMOAGE_ERRORS_HPP
