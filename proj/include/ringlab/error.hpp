#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

/// Base for every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: wrong table dimensions, out-of-range indices, bad documents.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A construction or search would exceed a configured size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A search ran out of its node budget before finishing.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what, unsigned long long nodes = 0)
        : Error(what), nodes_(nodes) {}
    unsigned long long nodes() const noexcept { return nodes_; }

private:
    unsigned long long nodes_;
};

/// Syntax error in a ring expression; `offset` is a 0-based character position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An internal consistency check failed; indicates a defect, not bad input.
class DefectError : public Error {
public:
    using Error::Error;
};

}  // namespace ringlab
