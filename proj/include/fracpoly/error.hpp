#pragma once

#include <stdexcept>
#include <string>

namespace fracpoly {

// Malformed input text (graph files, family specs, signed words).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input is well-formed but violates a mathematical precondition.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured enumeration budget would be exceeded.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed; indicates a bug or a false theorem.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace fracpoly
