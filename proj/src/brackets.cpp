#include "lahyper/brackets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lahyper/error.hpp"

namespace lahyper {

  namespace {
    void check_factor_count(std::size_t k) {
      if (k < 1 || k > max_bracket_factors) {
        throw LimitError("factor count " + std::to_string(k)
                         + " outside 1..12");
      }
    }

    char position_char(int p) {
      return p < 10 ? static_cast<char>('0' + p)
                    : static_cast<char>('a' + (p - 10));
    }

    template <typename Leaf>
    std::string render_node(std::span<BracketTree::Node const> nodes,
                            std::size_t                        i,
                            bool                               outer,
                            std::string_view                   op,
                            Leaf&&                             leaf) {
      auto const& node = nodes[i];
      if (node.leaf >= 0) {
        return leaf(node.leaf);
      }
      auto text = render_node(nodes, static_cast<std::size_t>(node.left),
                              false, op, leaf)
                  + std::string(op)
                  + render_node(nodes, static_cast<std::size_t>(node.right),
                                false, op, leaf);
      return outer ? text : "(" + text + ")";
    }

    std::vector<BracketTree> enumerate_range(std::size_t k) {
      if (k == 1) {
        return {BracketTree::leaf(0)};
      }
      std::vector<BracketTree> out;
      for (std::size_t split = 1; split < k; ++split) {
        auto lefts  = enumerate_range(split);
        auto rights = enumerate_range(k - split);
        for (auto const& l : lefts) {
          for (auto const& r : rights) {
            out.push_back(BracketTree::join(l, r));
          }
        }
      }
      return out;
    }
  }  // namespace

  BracketTree BracketTree::leaf(std::size_t position) {
    BracketTree t;
    t.nodes_.push_back({-1, -1, static_cast<int>(position)});
    t.leaves_ = 1;
    return t;
  }

  BracketTree BracketTree::join(BracketTree const& left,
                                BracketTree const& right) {
    BracketTree t;
    t.nodes_ = left.nodes_;
    int const offset    = static_cast<int>(left.nodes_.size());
    int const leaf_base = static_cast<int>(left.leaves_);
    for (auto node : right.nodes_) {
      if (node.leaf >= 0) {
        node.leaf += leaf_base;
      } else {
        node.left += offset;
        node.right += offset;
      }
      t.nodes_.push_back(node);
    }
    t.nodes_.push_back({static_cast<int>(left.root()),
                        static_cast<int>(t.nodes_.size() - 1),
                        -1});
    t.leaves_ = left.leaves_ + right.leaves_;
    return t;
  }

  std::string BracketTree::to_string() const {
    return render_node(nodes_, root(), true, "", [](int p) {
      return std::string(1, position_char(p));
    });
  }

  std::string BracketTree::render(std::span<std::string const> factors) const {
    return render_node(nodes_, root(), true, "*", [&](int p) {
      return factors[static_cast<std::size_t>(p)];
    });
  }

  std::uint64_t catalan(std::size_t n) noexcept {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < n; ++i) {
      c = c * 2 * (2 * i + 1) / (i + 2);
    }
    return c;
  }

  std::vector<BracketTree> enumerate_bracketings(std::size_t k) {
    check_factor_count(k);
    return enumerate_range(k);
  }

  BracketTree left_nested(std::size_t k) {
    check_factor_count(k);
    auto tree = BracketTree::leaf(0);
    for (std::size_t i = 1; i < k; ++i) {
      tree = BracketTree::join(tree, BracketTree::leaf(0));
    }
    return tree;
  }

  ElemSet eval_bracketing(HyperTable const&        t,
                          std::span<ElemSet const> factors,
                          BracketTree const&       tree) {
    if (tree.leaf_count() != factors.size()) {
      throw DomainError("bracketing has " + std::to_string(tree.leaf_count())
                        + " leaves but " + std::to_string(factors.size())
                        + " factors were given");
    }
    for (auto f : factors) {
      if (f.empty()) {
        throw EmptyOperand("empty factor in a bracketed product");
      }
    }
    auto const           nodes = tree.nodes();
    std::vector<ElemSet> value(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      auto const& node = nodes[i];
      value[i] = node.leaf >= 0
                     ? factors[static_cast<std::size_t>(node.leaf)]
                     : set_product(t,
                                   value[static_cast<std::size_t>(node.left)],
                                   value[static_cast<std::size_t>(node.right)]);
    }
    return value.back();
  }

  PowerFamily power_family(HyperTable const& t,
                           ElemSet           base,
                           std::size_t       exponent) {
    if (base.empty()) {
      throw EmptyOperand("power of the empty set");
    }
    PowerFamily family;
    family.base     = base;
    family.exponent = exponent;
    std::vector<ElemSet> const factors(exponent, base);
    std::set<ElemSet>          distinct;
    for (auto& tree : enumerate_bracketings(exponent)) {
      auto value = eval_bracketing(t, factors, tree);
      distinct.insert(value);
      family.outcomes.emplace_back(std::move(tree), value);
    }
    family.distinct_values.assign(distinct.begin(), distinct.end());
    family.well_defined = family.distinct_values.size() == 1;
    return family;
  }

  std::vector<ElemSet> bracketing_spread(HyperTable const&        t,
                                         std::span<ElemSet const> factors) {
    std::size_t const k = factors.size();
    check_factor_count(k);
    for (auto f : factors) {
      if (f.empty()) {
        throw EmptyOperand("empty factor in a bracketed product");
      }
    }
    // reach[i][j]: values of factors i..j-1 over all bracketings.
    std::vector<std::vector<std::set<ElemSet>>> reach(
        k, std::vector<std::set<ElemSet>>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
      reach[i][i + 1].insert(factors[i]);
    }
    for (std::size_t len = 2; len <= k; ++len) {
      for (std::size_t i = 0; i + len <= k; ++i) {
        std::size_t const j = i + len;
        for (std::size_t m = i + 1; m < j; ++m) {
          for (auto x : reach[i][m]) {
            for (auto y : reach[m][j]) {
              reach[i][j].insert(set_product(t, x, y));
            }
          }
        }
      }
    }
    return {reach[0][k].begin(), reach[0][k].end()};
  }

}  // namespace lahyper
