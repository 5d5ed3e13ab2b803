#pragma once

#include <stdexcept>
#include <string>

namespace irt {

// A structural invariant that should be mathematically guaranteed failed.
// Distinct from input errors: it means either an implementation bug or a
// genuine counterexample, and must never be swallowed.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured work cap (enumeration size, search node budget) was exceeded.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input; line is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line_number = 0)
        : std::runtime_error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + what
                                             : what),
          line(line_number) {}
    int line;
};

}  // namespace irt
