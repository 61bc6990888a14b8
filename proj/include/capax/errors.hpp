#pragma once

#include <stdexcept>
#include <string>

namespace capax {

// Operand shapes or moduli disagree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of an operation (bad residue, n < 1, j > k, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A checked 64-bit intermediate would overflow.
class RangeError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// An enumeration or materialization would exceed its configured budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A file could not be opened or read.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation reached a state its own invariants rule out.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace capax
