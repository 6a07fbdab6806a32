#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lahyper {

  // Index, size, or argument outside the domain of an operation.
  class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  // The induced product is only defined on nonempty subsets.
  class EmptyOperand : public DomainError {
   public:
    using DomainError::DomainError;
  };

  // A combinatorial guard (carrier size, factor count, exponent) was exceeded.
  class LimitError : public std::length_error {
   public:
    using std::length_error::length_error;
  };

  class ExhaustiveTooLarge : public LimitError {
   public:
    using LimitError::LimitError;
  };

  enum class ViolationKind {
    empty_entry,
    unknown_element,
    row_count_mismatch,
    column_count_mismatch,
    duplicate_name,
    invalid_name,
    row_name_mismatch,
    too_many_elements,
    syntax,
  };

  char const* to_string(ViolationKind kind) noexcept;

  struct Violation {
    ViolationKind kind;
    // Table coordinates; npos when the violation is not tied to a cell.
    std::size_t   row    = npos;
    std::size_t   column = npos;
    // Source position (1-based) when the table came from text; 0 otherwise.
    std::size_t   line     = 0;
    std::size_t   line_col = 0;
    std::string   reason;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  };

  // Thrown with every problem found in a table, not just the first.
  class TableError : public std::runtime_error {
   public:
    explicit TableError(std::vector<Violation> violations);

    std::vector<Violation> const& violations() const noexcept {
      return violations_;
    }

   private:
    std::vector<Violation> violations_;
  };

  // Half-open byte range into an expression string.
  struct Span {
    std::size_t begin = 0;
    std::size_t end   = 0;

    friend bool operator==(Span, Span) = default;
  };

  class ExprError : public std::runtime_error {
   public:
    ExprError(std::string const& message, Span span)
        : std::runtime_error(message), span_(span) {}

    Span span() const noexcept {
      return span_;
    }

   private:
    Span span_;
  };

  class SyntaxError : public ExprError {
   public:
    using ExprError::ExprError;
  };

  class TypeError : public ExprError {
   public:
    using ExprError::ExprError;
  };

}  // namespace lahyper
