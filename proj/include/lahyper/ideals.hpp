#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "lahyper/brackets.hpp"
#include "lahyper/core.hpp"

namespace lahyper {

  enum class IdealSide { left, right, two_sided };

  enum class IdealKind { left, right, two_sided, mn };

  std::string_view to_string(IdealKind kind) noexcept;

  // A product x o y that leaves the subject; operands in product order.
  struct IdealEscape {
    IdealSide   side;
    std::size_t left_operand;
    std::size_t right_operand;
    ElemSet     escaping;
  };

  struct IdealVerdict {
    ElemSet     subject;
    IdealKind   kind = IdealKind::left;
    std::size_t m    = 0;
    std::size_t n    = 0;
    // One-sided kinds: the containment itself. (m,n): containment of the
    // left-nested product.
    bool holds_under_convention = false;
    // (m,n) only: some bracketings are contained in the subject, some not.
    bool bracketing_dependent = false;
    // (m,n) only, set when bracketing_dependent.
    std::optional<std::pair<BracketTree, ElemSet>> failing_bracketing;
    // One-sided kinds, set on failure.
    std::optional<IdealEscape> escape;
    // (m,n) only: value of every bracketing in enumeration order.
    std::vector<std::pair<BracketTree, ElemSet>> outcomes;

    // True when the subject passes under every reading considered.
    bool holds() const noexcept {
      return holds_under_convention && !bracketing_dependent;
    }
  };

  // Left: H*A ⊆ A. Right: A*H ⊆ A. Throws EmptyOperand for an empty A.
  IdealVerdict is_hyperideal(HyperTable const& t, ElemSet subject, IdealSide side);

  inline constexpr std::size_t max_mn_factors = 9;

  // Checks A^m * H * A^n ⊆ A for the factor sequence [A x m, H, A x n]
  // under the left-nested convention and under every bracketing.
  // Throws EmptyOperand for an empty A, DomainError when m = n = 0 and
  // LimitError when m + n + 1 > 9.
  IdealVerdict is_mn_hyperideal(HyperTable const& t,
                                ElemSet           subject,
                                std::size_t       m,
                                std::size_t       n);

}  // namespace lahyper
