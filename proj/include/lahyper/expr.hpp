#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lahyper/core.hpp"
#include "lahyper/error.hpp"

namespace lahyper {

  // Concrete syntax:
  //
  //   expr    := operand [ op operand ]
  //   operand := name | '{' name { ',' name } '}' | '(' expr ')'
  //   op      := 'o' | '∘' | '*'
  //
  // Both operators share one precedence level and do not associate, so
  // "a o b o c" is rejected; every nested product needs parentheses. A
  // standalone token "o" is always the operator.

  enum class ExprKind { name, set_literal, hyper, star };

  struct ExprNode {
    ExprKind                 kind;
    Span                     span;
    // name: the identifier; set_literal: the members in source order.
    std::vector<std::string> names;
    std::vector<Span>        name_spans;
    // Children of hyper and star nodes.
    std::size_t              lhs = 0;
    std::size_t              rhs = 0;
  };

  // Untyped syntax tree; nodes are stored children-first, root last.
  class Expr {
   public:
    std::vector<ExprNode> nodes;

    ExprNode const& root() const {
      return nodes.back();
    }
    std::size_t root_index() const noexcept {
      return nodes.size() - 1;
    }
  };

  // Throws SyntaxError with the offending span.
  Expr parse_expr(std::string_view input);

  // Canonical text with ASCII operators; reparses to the same shape.
  std::string format_expr(Expr const& expr);

  // Structural equality ignoring spans.
  bool same_shape(Expr const& x, Expr const& y);

  enum class ExprType { element, set };

  struct TypedNode {
    ExprKind    kind;
    ExprType    type;
    Span        span;
    std::size_t element = 0;  // name
    ElemSet     set;          // set_literal
    std::size_t lhs     = 0;
    std::size_t rhs     = 0;
  };

  class TypedExpr {
   public:
    std::vector<TypedNode> nodes;

    TypedNode const& root() const {
      return nodes.back();
    }
    ExprType type() const {
      return nodes.back().type;
    }
  };

  // Throws TypeError naming the rule and the span of the bad operand.
  TypedExpr typecheck(Expr const& expr, HyperTable const& t);

  struct ExprValue {
    ExprType    type;
    // The element for an element-typed expression.
    std::size_t element = 0;
    // The value of a set-typed expression.
    ElemSet     set;
  };

  ExprValue eval_expr(TypedExpr const& expr, HyperTable const& t);

  // parse + typecheck + eval.
  ExprValue evaluate(std::string_view input, HyperTable const& t);

}  // namespace lahyper
