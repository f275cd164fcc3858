#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tweetmarket {

// Input violates a documented precondition (lengths, ranges, counts).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Fewer observations than an operation needs.
class EmptyInputError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Input is well-formed but statistically degenerate (zero variance, constant series).
class DegenerateInputError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AlignmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sliding window that does not fit inside the series.
class BoundaryError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Operation invoked on an object in the wrong lifecycle state (e.g. transform before fit).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, std::size_t line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

}  // namespace tweetmarket
