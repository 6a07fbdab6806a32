#include "lahyper/expr.hpp"

#include <optional>
#include <string>

namespace lahyper {

  namespace {
    constexpr std::string_view circ = "∘";

    enum class Tok { name, lbrace, rbrace, comma, lparen, rparen, hyper, star, end };

    struct Token {
      Tok              kind;
      Span             span;
      std::string_view text;
    };

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v'
             || c == '\f';
    }

    bool ends_name(std::string_view in, std::size_t i) {
      char const c = in[i];
      return is_space(c) || c == '{' || c == '}' || c == ',' || c == '('
             || c == ')' || c == '*' || in.substr(i).starts_with(circ);
    }

    class Lexer {
     public:
      explicit Lexer(std::string_view in) : in_(in) {}

      Token next() {
        while (pos_ < in_.size() && is_space(in_[pos_])) {
          ++pos_;
        }
        std::size_t const start = pos_;
        if (pos_ == in_.size()) {
          return {Tok::end, {start, start}, {}};
        }
        auto single = [&](Tok kind) {
          ++pos_;
          return Token{kind, {start, pos_}, in_.substr(start, 1)};
        };
        switch (in_[pos_]) {
          case '{':
            return single(Tok::lbrace);
          case '}':
            return single(Tok::rbrace);
          case ',':
            return single(Tok::comma);
          case '(':
            return single(Tok::lparen);
          case ')':
            return single(Tok::rparen);
          case '*':
            return single(Tok::star);
          case '#':
          case ':':
            throw SyntaxError(std::string("unexpected character '")
                                  + in_[pos_] + "'",
                              {start, start + 1});
          default:
            break;
        }
        if (in_.substr(pos_).starts_with(circ)) {
          pos_ += circ.size();
          return {Tok::hyper, {start, pos_}, in_.substr(start, circ.size())};
        }
        while (pos_ < in_.size() && !ends_name(in_, pos_)) {
          if (in_[pos_] == '#' || in_[pos_] == ':') {
            throw SyntaxError(std::string("unexpected character '")
                                  + in_[pos_] + "'",
                              {pos_, pos_ + 1});
          }
          ++pos_;
        }
        auto text = in_.substr(start, pos_ - start);
        return {text == "o" ? Tok::hyper : Tok::name, {start, pos_}, text};
      }

     private:
      std::string_view in_;
      std::size_t      pos_ = 0;
    };

    class Parser {
     public:
      explicit Parser(std::string_view in) : lexer_(in), in_(in) {
        advance();
      }

      Expr parse() {
        parse_expr();
        if (tok_.kind == Tok::rparen) {
          throw SyntaxError("unbalanced parenthesis: ')' has no matching '('",
                            tok_.span);
        }
        if (tok_.kind != Tok::end) {
          throw SyntaxError("unexpected '" + std::string(tok_.text)
                                + "' after a complete expression",
                            tok_.span);
        }
        return std::move(expr_);
      }

     private:
      void advance() {
        tok_ = lexer_.next();
      }

      static bool is_op(Tok k) {
        return k == Tok::hyper || k == Tok::star;
      }

      std::size_t push(ExprNode node) {
        expr_.nodes.push_back(std::move(node));
        return expr_.nodes.size() - 1;
      }

      std::size_t parse_expr() {
        std::size_t lhs = parse_operand();
        if (!is_op(tok_.kind)) {
          return lhs;
        }
        Token const op = tok_;
        advance();
        std::size_t rhs = parse_operand();
        if (is_op(tok_.kind)) {
          throw SyntaxError("operators do not associate; parenthesize "
                            "the product before '"
                                + std::string(tok_.text) + "'",
                            tok_.span);
        }
        ExprNode node{op.kind == Tok::hyper ? ExprKind::hyper : ExprKind::star,
                      {expr_.nodes[lhs].span.begin, expr_.nodes[rhs].span.end},
                      {},
                      {},
                      lhs,
                      rhs};
        return push(std::move(node));
      }

      std::size_t parse_operand() {
        switch (tok_.kind) {
          case Tok::name: {
            ExprNode node{ExprKind::name, tok_.span, {std::string(tok_.text)},
                          {tok_.span}, 0, 0};
            advance();
            return push(std::move(node));
          }
          case Tok::lbrace:
            return parse_set();
          case Tok::lparen: {
            Token const open = tok_;
            advance();
            std::size_t inner = parse_expr();
            if (tok_.kind != Tok::rparen) {
              if (tok_.kind == Tok::end) {
                throw SyntaxError("unbalanced parenthesis: '(' is never closed",
                                  open.span);
              }
              throw SyntaxError("expected ')' but found '"
                                    + std::string(tok_.text) + "'",
                                tok_.span);
            }
            expr_.nodes[inner].span = {open.span.begin, tok_.span.end};
            advance();
            return inner;
          }
          case Tok::end:
            throw SyntaxError("expected an operand but the input ended",
                              tok_.span);
          default:
            throw SyntaxError("expected an element, a set literal or '(' but "
                              "found '"
                                  + std::string(tok_.text) + "'",
                              tok_.span);
        }
      }

      std::size_t parse_set() {
        Token const open = tok_;
        advance();
        ExprNode node{ExprKind::set_literal, open.span, {}, {}, 0, 0};
        if (tok_.kind == Tok::rbrace) {
          throw SyntaxError("empty set literal; products are defined on "
                            "nonempty subsets only",
                            {open.span.begin, tok_.span.end});
        }
        while (true) {
          if (tok_.kind == Tok::end) {
            throw SyntaxError("unbalanced brace: '{' is never closed",
                              open.span);
          }
          if (tok_.kind != Tok::name) {
            throw SyntaxError("expected an element name in set literal but "
                              "found '"
                                  + std::string(tok_.text) + "'",
                              tok_.span);
          }
          node.names.emplace_back(tok_.text);
          node.name_spans.push_back(tok_.span);
          advance();
          if (tok_.kind == Tok::comma) {
            advance();
            continue;
          }
          if (tok_.kind == Tok::rbrace) {
            node.span = {open.span.begin, tok_.span.end};
            advance();
            return push(std::move(node));
          }
          if (tok_.kind == Tok::end) {
            throw SyntaxError("unbalanced brace: '{' is never closed",
                              open.span);
          }
          throw SyntaxError("expected ',' or '}' but found '"
                                + std::string(tok_.text) + "'",
                            tok_.span);
        }
      }

      Lexer            lexer_;
      std::string_view in_;
      Token            tok_{Tok::end, {}, {}};
      Expr             expr_;
    };

    std::string format_node(Expr const& e, std::size_t i, bool nested) {
      auto const& node = e.nodes[i];
      switch (node.kind) {
        case ExprKind::name:
          return node.names.front();
        case ExprKind::set_literal: {
          std::string out = "{";
          for (std::size_t k = 0; k < node.names.size(); ++k) {
            out += (k == 0 ? "" : ",") + node.names[k];
          }
          return out + "}";
        }
        case ExprKind::hyper:
        case ExprKind::star: {
          auto text = format_node(e, node.lhs, true)
                      + (node.kind == ExprKind::hyper ? " o " : " * ")
                      + format_node(e, node.rhs, true);
          return nested ? "(" + text + ")" : text;
        }
      }
      return {};
    }

    bool same_node(Expr const& x, std::size_t i, Expr const& y, std::size_t j) {
      auto const& a = x.nodes[i];
      auto const& b = y.nodes[j];
      if (a.kind != b.kind || a.names != b.names) {
        return false;
      }
      if (a.kind == ExprKind::hyper || a.kind == ExprKind::star) {
        return same_node(x, a.lhs, y, b.lhs) && same_node(x, a.rhs, y, b.rhs);
      }
      return true;
    }

    std::string_view type_name(ExprType t) {
      return t == ExprType::element ? "an element" : "a set";
    }
  }  // namespace

  Expr parse_expr(std::string_view input) {
    return Parser(input).parse();
  }

  std::string format_expr(Expr const& expr) {
    return format_node(expr, expr.root_index(), false);
  }

  bool same_shape(Expr const& x, Expr const& y) {
    return same_node(x, x.root_index(), y, y.root_index());
  }

  TypedExpr typecheck(Expr const& expr, HyperTable const& t) {
    TypedExpr out;
    out.nodes.reserve(expr.nodes.size());
    auto resolve = [&](std::string const& name, Span span) {
      auto index = t.index_of(name);
      if (!index) {
        throw TypeError("unknown element '" + name + "'", span);
      }
      return *index;
    };
    // Children precede parents, so node indices carry over unchanged.
    for (auto const& node : expr.nodes) {
      TypedNode typed{node.kind, ExprType::set, node.span, 0, ElemSet(), 0, 0};
      switch (node.kind) {
        case ExprKind::name:
          typed.type    = ExprType::element;
          typed.element = resolve(node.names.front(), node.span);
          break;
        case ExprKind::set_literal:
          for (std::size_t k = 0; k < node.names.size(); ++k) {
            typed.set |= ElemSet::singleton(
                resolve(node.names[k], node.name_spans[k]));
          }
          break;
        case ExprKind::hyper:
        case ExprKind::star: {
          bool const     is_hyper = node.kind == ExprKind::hyper;
          ExprType const wanted = is_hyper ? ExprType::element : ExprType::set;
          std::string const op  = is_hyper ? "∘" : "*";
          for (auto [child, which] :
               {std::pair{node.lhs, "left"}, std::pair{node.rhs, "right"}}) {
            auto const& c = out.nodes[child];
            if (c.type != wanted) {
              std::string msg = std::string(which) + " operand of " + op
                                + " must be " + std::string(type_name(wanted))
                                + ", found " + std::string(type_name(c.type));
              if (!is_hyper) {
                msg += " (write {x} for a singleton)";
              }
              throw TypeError(msg, c.span);
            }
          }
          typed.lhs = node.lhs;
          typed.rhs = node.rhs;
          break;
        }
      }
      out.nodes.push_back(typed);
    }
    return out;
  }

  ExprValue eval_expr(TypedExpr const& expr, HyperTable const& t) {
    std::vector<ElemSet> value(expr.nodes.size());
    for (std::size_t i = 0; i < expr.nodes.size(); ++i) {
      auto const& node = expr.nodes[i];
      switch (node.kind) {
        case ExprKind::name:
          break;
        case ExprKind::set_literal:
          value[i] = node.set;
          break;
        case ExprKind::hyper:
          value[i] = hyper(t, expr.nodes[node.lhs].element,
                           expr.nodes[node.rhs].element);
          break;
        case ExprKind::star:
          value[i] = set_product(t, value[node.lhs], value[node.rhs]);
          break;
      }
    }
    auto const& root = expr.root();
    return {root.type, root.element, value.back()};
  }

  ExprValue evaluate(std::string_view input, HyperTable const& t) {
    return eval_expr(typecheck(parse_expr(input), t), t);
  }

}  // namespace lahyper
