#ifndef QTC_ERRORS_HPP
#define QTC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtc {

// Work or memory cap exceeded.  CLI maps this to exit code 3.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic would leave the supported 64-bit range.  Exit code 3.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Query outside an oracle's declared domain.  Exit code 3.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed automaton description or formula.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qtc

#endif
