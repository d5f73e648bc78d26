#pragma once

#include <stdexcept>
#include <string>

namespace ladr {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad JSON, bad DIMACS, bad rational literal, invalid flag combos.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// An exact solver was asked to handle an instance above its configured size cap.
class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& what) : Error(what) {}
};

}  // namespace ladr
