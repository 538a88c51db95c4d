#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace berbn {

// A value fell outside the total range of a discretization variable.
class OutOfRangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed content in a dataset, config, or CPT file. `line` is 1-based
// and 0 when no line position applies (e.g. JSON documents).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line ? message + " (line " + std::to_string(line) + ")" : message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

// File could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The observed evidence has probability zero under the model.
class ImpossibleEvidenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace berbn
