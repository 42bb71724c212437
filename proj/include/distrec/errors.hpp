#pragma once

#include <stdexcept>
#include <string>

namespace distrec {

// Shape mismatch between matrices, vectors or recurrences.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (zero path length,
// invalid vertex, division by the zero polynomial, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Bad configuration: non-prime modulus, enumeration cap exceeded, malformed
// command-line spec.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace distrec
