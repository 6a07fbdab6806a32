#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lahyper/core.hpp"

namespace lahyper {

  enum class LawId : std::uint8_t {
    left_invertive,
    associative,
    locally_associative,
    commutative,
    medial,
    set_left_invertive,
    set_medial,
  };

  // Element-scope laws quantify over elements, set-scope laws over nonempty
  // subsets.
  enum class LawScope : std::uint8_t { element, set };

  // One node of a law side, stored in post-order (the root is last).
  struct Term {
    enum class Kind : std::uint8_t {
      hyper,      // x_first o x_second
      singleton,  // {x_first}
      variable,   // the subset X_first
      star,       // node[first] * node[second]
    };
    Kind         kind;
    std::uint8_t first  = 0;
    std::uint8_t second = 0;
  };

  struct LawSide {
    static constexpr std::size_t max_nodes = 7;

    std::array<Term, max_nodes> nodes{};
    std::uint8_t                size = 0;

    std::span<Term const> terms() const noexcept {
      return {nodes.data(), size};
    }
  };

  struct LawInfo {
    LawId            id;
    std::string_view name;
    LawScope         scope;
    std::size_t      arity;
    LawSide          lhs;
    LawSide          rhs;
  };

  LawInfo const&            law_info(LawId law);
  std::span<LawId const>    all_laws() noexcept;
  std::string_view          to_string(LawId law) noexcept;
  // Accepts the catalog names, ignoring case ("LeftInvertive",
  // "leftinvertive").
  std::optional<LawId>      parse_law_id(std::string_view text);

  // Renders one side with the given variable names, e.g. "(a∘b)*{c}".
  std::string render_side(LawSide const&                side,
                          std::span<std::string const> variables);

  // Evaluates one side. `tuple` holds element indices for element-scope
  // laws and subset bitmasks for set-scope laws; `entry(x, y)` returns the
  // table entry x o y.
  template <typename Entry>
  ElemSet evaluate_side(LawSide const&                 side,
                        std::span<std::uint64_t const> tuple,
                        Entry&&                        entry) {
    std::array<ElemSet, LawSide::max_nodes> value{};
    for (std::size_t i = 0; i < side.size; ++i) {
      Term const& term = side.nodes[i];
      switch (term.kind) {
        case Term::Kind::hyper:
          value[i] = entry(static_cast<std::size_t>(tuple[term.first]),
                           static_cast<std::size_t>(tuple[term.second]));
          break;
        case Term::Kind::singleton:
          value[i] = ElemSet::singleton(
              static_cast<std::size_t>(tuple[term.first]));
          break;
        case Term::Kind::variable:
          value[i] = ElemSet(tuple[term.first]);
          break;
        case Term::Kind::star: {
          ElemSet out;
          ElemSet right = value[term.second];
          for (auto x : value[term.first]) {
            for (auto y : right) {
              out |= entry(x, y);
            }
          }
          value[i] = out;
          break;
        }
      }
    }
    return value[side.size - 1];
  }

  struct Witness {
    // Quantified values in quantifier order: element indices for
    // element-scope laws, subsets for set-scope laws.
    std::vector<std::size_t> elements;
    std::vector<ElemSet>     subsets;
    ElemSet                  lhs;
    ElemSet                  rhs;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  enum class Verdict : std::uint8_t {
    holds,
    fails,
    // Sampled checks that found no violation; never reported as holds.
    not_refuted,
  };

  struct LawReport {
    LawId                        law;
    Verdict                      verdict = Verdict::holds;
    std::optional<Witness>       first_witness;
    std::optional<std::uint64_t> violation_count;
    // Every violating tuple in scan order, filled only on request.
    std::vector<Witness>         witnesses;
    // Size of each quantifier's domain and number of tuples examined.
    std::size_t                  domain_size       = 0;
    std::uint64_t                instances_checked = 0;
    bool                         exhaustive        = true;

    bool holds() const noexcept {
      return verdict == Verdict::holds;
    }
  };

  struct CheckOptions {
    bool        count_violations = false;
    bool        all_witnesses    = false;
    // 0 = one per hardware thread.
    std::size_t workers = 1;
  };

  struct Exhaustive {};
  struct Sampled {
    std::uint64_t seed;
    std::uint64_t count;
  };
  using SetCheckScope = std::variant<Exhaustive, Sampled>;

  // Largest carrier for exhaustive set-scope checks.
  inline constexpr std::size_t max_exhaustive_set_order = 4;

  // Element-scope laws. Throws DomainError for a set-scope law.
  LawReport check_law(HyperTable const& t, LawId law, CheckOptions opts = {});

  // Set-scope laws. Throws DomainError for an element-scope law and
  // ExhaustiveTooLarge for exhaustive checks above order 4.
  LawReport check_set_law(HyperTable const& t,
                          LawId             law,
                          SetCheckScope     scope,
                          CheckOptions      opts = {});

  // Evaluates both sides of one instance directly from the table.
  std::pair<ElemSet, ElemSet> evaluate_instance(HyperTable const&              t,
                                                LawId                          law,
                                                std::span<std::uint64_t const> tuple);

}  // namespace lahyper
