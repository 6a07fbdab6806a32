#include "lahyper/ideals.hpp"

#include <string>

#include "lahyper/error.hpp"

namespace lahyper {

  namespace {
    void require_subject(HyperTable const& t, ElemSet subject) {
      if (subject.empty()) {
        throw EmptyOperand("a hyperideal candidate must be nonempty");
      }
      if (!subject.subset_of(t.carrier())) {
        throw DomainError("subset is not contained in the carrier");
      }
    }

    // First (x, y) in lexicographic order with x o y ⊄ subject, where x
    // ranges over `lefts` and y over `rights`.
    std::optional<IdealEscape> first_escape(HyperTable const& t,
                                            ElemSet           lefts,
                                            ElemSet           rights,
                                            ElemSet           subject,
                                            IdealSide         side) {
      for (auto x : lefts) {
        for (auto y : rights) {
          auto const out = t(x, y) - subject;
          if (!out.empty()) {
            return IdealEscape{side, x, y, out};
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::string_view to_string(IdealKind kind) noexcept {
    switch (kind) {
      case IdealKind::left:
        return "left";
      case IdealKind::right:
        return "right";
      case IdealKind::two_sided:
        return "two-sided";
      case IdealKind::mn:
        return "(m,n)";
    }
    return "";
  }

  IdealVerdict is_hyperideal(HyperTable const& t,
                             ElemSet           subject,
                             IdealSide         side) {
    require_subject(t, subject);
    IdealVerdict verdict;
    verdict.subject = subject;
    switch (side) {
      case IdealSide::left:
        verdict.kind   = IdealKind::left;
        verdict.escape = first_escape(
            t, t.carrier(), subject, subject, IdealSide::left);
        break;
      case IdealSide::right:
        verdict.kind   = IdealKind::right;
        verdict.escape = first_escape(
            t, subject, t.carrier(), subject, IdealSide::right);
        break;
      case IdealSide::two_sided:
        verdict.kind   = IdealKind::two_sided;
        verdict.escape = first_escape(
            t, t.carrier(), subject, subject, IdealSide::left);
        if (!verdict.escape) {
          verdict.escape = first_escape(
              t, subject, t.carrier(), subject, IdealSide::right);
        }
        break;
    }
    verdict.holds_under_convention = !verdict.escape.has_value();
    return verdict;
  }

  IdealVerdict is_mn_hyperideal(HyperTable const& t,
                                ElemSet           subject,
                                std::size_t       m,
                                std::size_t       n) {
    require_subject(t, subject);
    if (m + n == 0) {
      throw DomainError("(0,0) has no product to test");
    }
    if (m + n + 1 > max_mn_factors) {
      throw LimitError("(m,n) product with " + std::to_string(m + n + 1)
                       + " factors exceeds the limit of 9");
    }
    std::vector<ElemSet> factors(m, subject);
    factors.push_back(t.carrier());
    factors.insert(factors.end(), n, subject);

    IdealVerdict verdict;
    verdict.subject = subject;
    verdict.kind    = IdealKind::mn;
    verdict.m       = m;
    verdict.n       = n;
    verdict.holds_under_convention =
        eval_bracketing(t, factors, left_nested(factors.size()))
            .subset_of(subject);

    std::size_t                                     contained = 0;
    std::optional<std::pair<BracketTree, ElemSet>> first_failure;
    for (auto& tree : enumerate_bracketings(factors.size())) {
      auto value = eval_bracketing(t, factors, tree);
      if (value.subset_of(subject)) {
        ++contained;
      } else if (!first_failure) {
        first_failure.emplace(tree, value);
      }
      verdict.outcomes.emplace_back(std::move(tree), value);
    }
    verdict.bracketing_dependent =
        contained != 0 && contained != verdict.outcomes.size();
    if (verdict.bracketing_dependent) {
      verdict.failing_bracketing = std::move(first_failure);
    }
    return verdict;
  }

}  // namespace lahyper
