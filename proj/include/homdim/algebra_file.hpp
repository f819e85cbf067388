#pragma once

#include "homdim/algebra.hpp"
#include "homdim/error.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace homdim {

/// A problem in an algebra description, located by 1-based line and column.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class UnknownArrow : public ParseError {
public:
    using ParseError::ParseError;
};

class NonComposablePath : public ParseError {
public:
    using ParseError::ParseError;
};

/// Parses the line-oriented algebra format:
///
///     # comment
///     field Q                      (or: field F 5; default Q)
///     vertices 1 2 3
///     arrow a 1 2
///     relation a*b - 2*c*d         (terms: [int[/int] *] arrow*arrow*...)
///     cap 60                       (degree cap for the basis construction)
///
/// Paths are read left to right. Names match [A-Za-z0-9_']+. LF and CRLF
/// line endings are accepted.
Presentation parse_algebra_file(std::string_view text);

struct AlgebraFile {
    std::string path;
    Presentation presentation;
};

/// Reads and parses a file; throws std::runtime_error when it cannot be read.
AlgebraFile load_algebra_file(const std::string& path);

}  // namespace homdim
