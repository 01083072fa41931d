#pragma once

#include <stdexcept>
#include <string>

namespace clx {

// Invalid domain input (bad polynomial/ring/ideal data): the CLI maps this to
// exit code 2, anything else to 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Search exceeded its node budget; distinct from invalidity so callers never
// mistake truncation for a complete answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace clx
