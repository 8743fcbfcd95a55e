#pragma once

#include <stdexcept>
#include <string>

namespace anticor {

// Malformed input text (ragged rows, non-numeric cells, missing header).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input violating a domain invariant (non-positive price,
// missing value).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape mismatches: too few assets, too few days, incompatible lengths.
class DimensionError : public std::runtime_error {
public:
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parameter outside an operation's domain (odd day count, gamma >= 1, w < 2).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Not enough history for a windowed computation.
class InsufficientHistoryError : public std::runtime_error {
public:
    explicit InsufficientHistoryError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace anticor
