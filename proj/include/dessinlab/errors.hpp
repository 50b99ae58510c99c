#pragma once

#include <stdexcept>
#include <string>

namespace dessinlab {

// Input data violates a structural invariant (bad involution, non-transitive
// pair, inadmissible cut, bad dart index, malformed document).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured resource bound was exceeded (enumeration size, orbit size,
// oracle dimension).
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A proven property failed to hold at runtime; indicates an implementation
// fault, not bad input.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Cycle-notation or document syntax error. Positions are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column)),
          line(line), column(column), message(msg) {}

    int line;
    int column;
    std::string message;
};

// A closed formula does not apply to the given input.
class formula_not_applicable : public std::runtime_error {
public:
    explicit formula_not_applicable(const std::string& reason)
        : std::runtime_error("formula not applicable: " + reason), reason(reason) {}

    std::string reason;
};

} // namespace dessinlab
