#ifndef CHIRAL_ERRORS_HPP
#define CHIRAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chiral {

/// Mathematical impossibility in otherwise well-formed input
/// (singular presentation matrix, even determinant, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Violation of an operation's stated precondition.
class ContractError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The brute-force enumeration would exceed the configured bound.
class OracleBoundError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Text input rejected by a parser; carries 1-based line/column.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace chiral

#endif
