#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lahyper/core.hpp"

namespace lahyper {

  // One parenthesization of a k-factor product: a full binary tree whose
  // leaves are the positions 0..k-1 in left-to-right order.
  class BracketTree {
   public:
    struct Node {
      // Child node indices, or -1 for a leaf.
      int left  = -1;
      int right = -1;
      // Factor position for a leaf, -1 otherwise.
      int leaf = -1;

      friend bool operator==(Node const&, Node const&) = default;
    };

    static BracketTree leaf(std::size_t position);
    // Joins two trees; the right tree's positions are shifted past the left.
    static BracketTree join(BracketTree const& left, BracketTree const& right);

    std::size_t leaf_count() const noexcept {
      return leaves_;
    }
    std::size_t internal_count() const noexcept {
      return nodes_.size() - leaves_;
    }
    // Nodes in post-order; the root is last.
    std::span<Node const> nodes() const noexcept {
      return nodes_;
    }
    std::size_t root() const noexcept {
      return nodes_.size() - 1;
    }

    // Compact positional form with the outermost pair dropped, e.g.
    // "(01)2". Positions 10 and 11 print as 'a' and 'b'.
    std::string to_string() const;
    // The same shape over named factors, e.g. "({b}*{b})*{b}".
    std::string render(std::span<std::string const> factors) const;

    friend bool operator==(BracketTree const&, BracketTree const&) = default;

   private:
    std::vector<Node> nodes_;
    std::size_t       leaves_ = 0;
  };

  inline constexpr std::size_t max_bracket_factors = 12;

  std::uint64_t catalan(std::size_t n) noexcept;

  // All bracketings of k factors: split point ascending, then left subtree
  // order, then right. Throws LimitError unless 1 <= k <= 12.
  std::vector<BracketTree> enumerate_bracketings(std::size_t k);

  // ((f0 * f1) * f2) * ...
  BracketTree left_nested(std::size_t k);

  // Folds the set product over the tree. Throws DomainError on a
  // leaf-count mismatch and EmptyOperand on an empty factor.
  ElemSet eval_bracketing(HyperTable const&        t,
                          std::span<ElemSet const> factors,
                          BracketTree const&       tree);

  struct PowerFamily {
    ElemSet                                  base;
    std::size_t                              exponent = 1;
    std::vector<std::pair<BracketTree, ElemSet>> outcomes;
    // Ascending bitmask order.
    std::vector<ElemSet>                     distinct_values;
    bool                                     well_defined = true;
  };

  // Every bracketing of `exponent` copies of `base`. Throws EmptyOperand
  // for an empty base and LimitError unless 1 <= exponent <= 12.
  PowerFamily power_family(HyperTable const& t, ElemSet base, std::size_t exponent);

  // The set of values reachable by some bracketing of `factors`, by
  // interval dynamic programming. Ascending bitmask order.
  std::vector<ElemSet> bracketing_spread(HyperTable const&        t,
                                         std::span<ElemSet const> factors);

}  // namespace lahyper
