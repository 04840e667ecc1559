#pragma once

#include <stdexcept>
#include <string>

namespace total_chroma {

/// A precondition on an argument was violated (sizes, regularity, ranges).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A coloring does not cover exactly the elements of its graph, or uses a
/// color outside its palette. Distinct from a coloring that is merely improper.
class MalformedColoring : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text or JSON input could not be parsed.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace total_chroma
