#include "lahyper/report.hpp"

#include <optional>
#include <sstream>

namespace lahyper {

  namespace {
    using json = nlohmann::ordered_json;

    // Expansions of a final product with more terms than this are skipped.
    constexpr std::size_t max_expanded_terms = 8;

    json set_json(HyperTable const& t, ElemSet s) {
      json out = json::array();
      for (auto i : s) {
        out.push_back(t.name(i));
      }
      return out;
    }

    std::vector<std::string> variable_names(LawInfo const& info) {
      static std::vector<std::string> const elems = {"x", "y", "z", "w"};
      static std::vector<std::string> const sets  = {"A", "B", "C", "D"};
      auto const& pool = info.scope == LawScope::element ? elems : sets;
      return {pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(info.arity)};
    }

    std::vector<std::uint64_t> witness_tuple(Witness const& w) {
      std::vector<std::uint64_t> tuple;
      for (auto e : w.elements) {
        tuple.push_back(e);
      }
      for (auto s : w.subsets) {
        tuple.push_back(s.bits());
      }
      return tuple;
    }

    std::string tuple_text(HyperTable const& t, Witness const& w) {
      std::string out = "(";
      bool        first = true;
      for (auto e : w.elements) {
        out += (first ? "" : ", ") + t.name(e);
        first = false;
      }
      for (auto s : w.subsets) {
        out += (first ? "" : ", ") + format_set(t, s);
        first = false;
      }
      return out + ")";
    }

    // Renders a law side where some nodes are already reduced to values.
    class SideChain {
     public:
      SideChain(HyperTable const&              t,
                LawSide const&                 side,
                std::span<std::uint64_t const> tuple)
          : t_(t), side_(side), tuple_(tuple), value_(side.size) {
        auto entry = [&t](std::size_t x, std::size_t y) { return t(x, y); };
        for (std::size_t i = 0; i < side.size; ++i) {
          Term const& term = side.nodes[i];
          if (term.kind == Term::Kind::singleton) {
            value_[i] = ElemSet::singleton(tuple[term.first]);
          } else if (term.kind == Term::Kind::variable) {
            value_[i] = ElemSet(tuple[term.first]);
          }
        }
        // Full value through the shared evaluator.
        result_ = evaluate_side(side, tuple, entry);
      }

      std::string run() {
        std::string out = render(root(), false);
        while (!value_[root()]) {
          Term const& top = side_.nodes[root()];
          bool const  ready
              = top.kind == Term::Kind::hyper
                || (top.kind == Term::Kind::star && value_[top.first]
                    && value_[top.second]);
          if (ready) {
            if (top.kind == Term::Kind::star) {
              out += expand(*value_[top.first], *value_[top.second]);
            }
            value_[root()] = result_;
            out += " = " + format_set(t_, result_);
            break;
          }
          reduce_round();
          out += " = " + render(root(), false);
        }
        return out;
      }

     private:
      std::size_t root() const {
        return side_.size - 1U;
      }

      ElemSet product(ElemSet x, ElemSet y) const {
        return set_product(t_, x, y);
      }

      // Evaluates every non-root node whose operands are values.
      void reduce_round() {
        std::vector<std::optional<ElemSet>> next = value_;
        for (std::size_t i = 0; i + 1 < side_.size; ++i) {
          if (value_[i]) {
            continue;
          }
          Term const& term = side_.nodes[i];
          if (term.kind == Term::Kind::hyper) {
            next[i] = t_(tuple_[term.first], tuple_[term.second]);
          } else if (term.kind == Term::Kind::star && value_[term.first]
                     && value_[term.second]) {
            next[i] = product(*value_[term.first], *value_[term.second]);
          }
        }
        value_ = std::move(next);
      }

      std::string expand(ElemSet x, ElemSet y) const {
        std::size_t const terms = x.size() * y.size();
        if (terms > max_expanded_terms) {
          return {};
        }
        std::string names;
        std::string values;
        for (auto a : x) {
          for (auto b : y) {
            auto const op = t_.name(a) + "∘" + t_.name(b);
            if (terms == 1) {
              return " = " + op;
            }
            names += (names.empty() ? "(" : " ∪ (") + op + ")";
            values += (values.empty() ? "" : " ∪ ") + format_set(t_, t_(a, b));
          }
        }
        return " = " + names + " = " + values;
      }

      std::string render(std::size_t i, bool nested) const {
        if (value_[i]) {
          return format_set(t_, *value_[i]);
        }
        Term const& term = side_.nodes[i];
        std::string text;
        if (term.kind == Term::Kind::hyper) {
          text = t_.name(tuple_[term.first]) + "∘" + t_.name(tuple_[term.second]);
        } else {
          text = render(term.first, true) + "*" + render(term.second, true);
        }
        return nested ? "(" + text + ")" : text;
      }

      HyperTable const&                   t_;
      LawSide const&                      side_;
      std::span<std::uint64_t const>      tuple_;
      std::vector<std::optional<ElemSet>> value_;
      ElemSet                             result_;
    };

    std::string instance_text(HyperTable const&              t,
                              LawSide const&                 side,
                              std::span<std::uint64_t const> tuple,
                              LawScope                       scope) {
      std::vector<std::string> vars;
      for (auto v : tuple) {
        vars.push_back(scope == LawScope::element
                           ? t.name(static_cast<std::size_t>(v))
                           : format_set(t, ElemSet(v)));
      }
      return render_side(side, vars);
    }

    std::string domain_product(std::size_t domain, std::size_t arity) {
      std::string out;
      for (std::size_t i = 0; i < arity; ++i) {
        out += (i == 0 ? "" : "×") + std::to_string(domain);
      }
      return out;
    }

    json witness_json(HyperTable const& t, Witness const& w) {
      json tuple = json::array();
      for (auto e : w.elements) {
        tuple.push_back(t.name(e));
      }
      for (auto s : w.subsets) {
        tuple.push_back(set_json(t, s));
      }
      return {{"tuple", tuple},
              {"lhs", set_json(t, w.lhs)},
              {"rhs", set_json(t, w.rhs)}};
    }

    std::string verdict_name(Verdict v) {
      switch (v) {
        case Verdict::holds:
          return "holds";
        case Verdict::fails:
          return "fails";
        case Verdict::not_refuted:
          return "not_refuted";
      }
      return {};
    }

    std::string dump(json const& j) {
      return j.dump(2) + "\n";
    }

    std::string factor_sequence(std::size_t m, std::size_t n) {
      std::string out = "[";
      for (std::size_t i = 0; i < m; ++i) {
        out += "A, ";
      }
      out += "H";
      for (std::size_t i = 0; i < n; ++i) {
        out += ", A";
      }
      return out + "]";
    }

    std::vector<std::string> mn_factor_names(std::size_t m, std::size_t n) {
      std::vector<std::string> names(m, "A");
      names.emplace_back("H");
      names.insert(names.end(), n, "A");
      return names;
    }
  }  // namespace

  std::vector<std::string> witness_chain(HyperTable const& t,
                                         LawId             law,
                                         Witness const&    witness) {
    LawInfo const& info  = law_info(law);
    auto const     tuple = witness_tuple(witness);
    std::vector<std::string> lines;
    lines.push_back(SideChain(t, info.lhs, tuple).run());
    lines.push_back(SideChain(t, info.rhs, tuple).run());
    lines.push_back(instance_text(t, info.lhs, tuple, info.scope) + " ≠ "
                    + instance_text(t, info.rhs, tuple, info.scope));
    return lines;
  }

  std::string law_statement(LawId law) {
    LawInfo const& info = law_info(law);
    auto const     vars = variable_names(info);
    return render_side(info.lhs, vars) + " = " + render_side(info.rhs, vars);
  }

  json to_json(HyperTable const& t, LawReport const& r) {
    LawInfo const& info = law_info(r.law);
    json           out;
    out["kind"]              = "law_report";
    out["law"]               = std::string(info.name);
    out["scope"]             = info.scope == LawScope::element ? "element" : "set";
    out["statement"]         = law_statement(r.law);
    out["verdict"]           = verdict_name(r.verdict);
    out["holds"]             = r.holds();
    out["exhaustive"]        = r.exhaustive;
    out["instances_checked"] = r.instances_checked;
    out["first_witness"]
        = r.first_witness ? witness_json(t, *r.first_witness) : json(nullptr);
    out["violation_count"]
        = r.violation_count ? json(*r.violation_count) : json(nullptr);
    if (!r.witnesses.empty()) {
      json all = json::array();
      for (auto const& w : r.witnesses) {
        all.push_back(witness_json(t, w));
      }
      out["witnesses"] = std::move(all);
    }
    return out;
  }

  json to_json(HyperTable const& t, IdealVerdict const& v) {
    json out;
    out["kind"]       = "ideal_verdict";
    out["ideal_kind"] = std::string(to_string(v.kind));
    out["subject"]    = set_json(t, v.subject);
    if (v.kind == IdealKind::mn) {
      out["m"] = v.m;
      out["n"] = v.n;
    }
    out["holds_under_convention"] = v.holds_under_convention;
    out["bracketing_dependent"]   = v.bracketing_dependent;
    out["holds"]                  = v.holds();
    if (v.kind == IdealKind::mn) {
      out["failing_bracketing"]
          = v.failing_bracketing
                ? json{{"tree", v.failing_bracketing->first.to_string()},
                       {"value", set_json(t, v.failing_bracketing->second)}}
                : json(nullptr);
      json all = json::array();
      for (auto const& [tree, value] : v.outcomes) {
        all.push_back({{"tree", tree.to_string()},
                       {"value", set_json(t, value)},
                       {"contained", value.subset_of(v.subject)}});
      }
      out["bracketings"] = std::move(all);
    } else {
      out["escape"]
          = v.escape
                ? json{{"side", v.escape->side == IdealSide::left ? "left"
                                                                  : "right"},
                       {"operands",
                        {t.name(v.escape->left_operand),
                         t.name(v.escape->right_operand)}},
                       {"escaping", set_json(t, v.escape->escaping)}}
                : json(nullptr);
    }
    return out;
  }

  json to_json(HyperTable const& t, PowerFamily const& f) {
    json out;
    out["kind"]     = "power_family";
    out["base"]     = set_json(t, f.base);
    out["exponent"] = f.exponent;
    out["catalan"]  = catalan(f.exponent - 1);
    json outcomes   = json::array();
    for (auto const& [tree, value] : f.outcomes) {
      outcomes.push_back({{"tree", tree.to_string()}, {"value", set_json(t, value)}});
    }
    out["outcomes"] = std::move(outcomes);
    json distinct   = json::array();
    for (auto v : f.distinct_values) {
      distinct.push_back(set_json(t, v));
    }
    out["distinct_values"] = std::move(distinct);
    out["well_defined"]    = f.well_defined;
    return out;
  }

  json to_json(EnumerationSummary const& s) {
    json laws = json::array();
    for (auto id : s.laws) {
      laws.push_back(std::string(to_string(id)));
    }
    json out;
    out["kind"]      = "enumeration";
    out["order"]     = s.order;
    out["laws"]      = std::move(laws);
    out["up_to_iso"] = s.up_to_iso;
    out["count"]     = s.count;
    return out;
  }

  std::string emit_report(HyperTable const&  t,
                          LawReport const&   r,
                          ReportFormat       format) {
    if (format == ReportFormat::json) {
      return dump(to_json(t, r));
    }
    LawInfo const&     info = law_info(r.law);
    std::ostringstream out;
    out << info.name << ": " << law_statement(r.law) << '\n';
    switch (r.verdict) {
      case Verdict::holds:
        out << "law holds (" << domain_product(r.domain_size, info.arity)
            << " instances checked)\n";
        break;
      case Verdict::not_refuted:
        out << "no violation found in " << r.instances_checked
            << " samples\n";
        break;
      case Verdict::fails: {
        auto const& w    = *r.first_witness;
        auto const  vars = variable_names(info);
        std::string names = "(";
        for (std::size_t i = 0; i < vars.size(); ++i) {
          names += (i == 0 ? "" : ", ") + vars[i];
        }
        out << "law fails at " << names << ") = " << tuple_text(t, w) << ":\n";
        for (auto const& line : witness_chain(t, r.law, w)) {
          out << "  " << line << '\n';
        }
        break;
      }
    }
    if (r.violation_count) {
      out << "violations: " << *r.violation_count << " of "
          << r.instances_checked << (r.exhaustive ? " instances" : " samples")
          << '\n';
    }
    if (!r.witnesses.empty()) {
      out << "all witnesses:\n";
      for (auto const& w : r.witnesses) {
        out << "  " << tuple_text(t, w) << ": " << format_set(t, w.lhs)
            << " ≠ " << format_set(t, w.rhs) << '\n';
      }
    }
    return out.str();
  }

  std::string emit_report(HyperTable const&   t,
                          IdealVerdict const& v,
                          ReportFormat        format) {
    if (format == ReportFormat::json) {
      return dump(to_json(t, v));
    }
    std::ostringstream out;
    auto const         subject = format_set(t, v.subject);
    if (v.kind != IdealKind::mn) {
      out << subject << (v.holds() ? " is" : " is not") << " a "
          << to_string(v.kind) << " hyperideal";
      if (v.escape) {
        auto const& e = *v.escape;
        out << ": " << t.name(e.left_operand) << "∘" << t.name(e.right_operand)
            << " = " << format_set(t, t(e.left_operand, e.right_operand))
            << " leaves " << subject << " by "
            << format_set(t, e.escaping);
      } else {
        switch (v.kind) {
          case IdealKind::left:
            out << ": H*" << subject << " ⊆ " << subject;
            break;
          case IdealKind::right:
            out << ": " << subject << "*H ⊆ " << subject;
            break;
          default:
            out << ": H*" << subject << " ⊆ " << subject << " and " << subject
                << "*H ⊆ " << subject;
            break;
        }
      }
      out << '\n';
      return out.str();
    }

    auto const names = mn_factor_names(v.m, v.n);
    out << "(" << v.m << "," << v.n << ") product " << factor_sequence(v.m, v.n)
        << " with A = " << subject << " (" << v.outcomes.size()
        << " bracketings)\n";
    std::size_t contained = 0;
    for (auto const& [tree, value] : v.outcomes) {
      bool const in = value.subset_of(v.subject);
      contained += in ? 1 : 0;
      out << "  " << tree.render(names) << " = " << format_set(t, value)
          << (in ? " ⊆ A" : " ⊄ A") << '\n';
    }
    out << "left-nested convention: "
        << (v.holds_under_convention ? "contained" : "not contained") << '\n';
    out << "contained under " << contained << " of " << v.outcomes.size()
        << " bracketings";
    if (v.bracketing_dependent) {
      out << "; the verdict depends on the bracketing (fails under "
          << v.failing_bracketing->first.render(names) << ")";
    }
    out << '\n';
    out << subject << (v.holds() ? " is" : " is not") << " a (" << v.m << ","
        << v.n << ")-hyperideal under every bracketing\n";
    return out.str();
  }

  std::string emit_report(HyperTable const&  t,
                          PowerFamily const& f,
                          ReportFormat       format) {
    if (format == ReportFormat::json) {
      return dump(to_json(t, f));
    }
    std::ostringstream out;
    auto const         base = format_set(t, f.base);
    std::vector<std::string> const factors(f.exponent, base);
    out << "powers of " << base << ", exponent " << f.exponent << " ("
        << f.outcomes.size() << " bracketings)\n";
    for (auto const& [tree, value] : f.outcomes) {
      out << "  " << tree.render(factors) << " = " << format_set(t, value)
          << '\n';
    }
    out << "distinct values:";
    for (auto v : f.distinct_values) {
      out << ' ' << format_set(t, v);
    }
    out << '\n'
        << "well-defined: " << (f.well_defined ? "yes" : "no") << '\n';
    return out.str();
  }

  std::string emit_report(EnumerationSummary const& s, ReportFormat format) {
    if (format == ReportFormat::json) {
      return dump(to_json(s));
    }
    std::ostringstream out;
    out << "order " << s.order << ", laws {";
    for (std::size_t i = 0; i < s.laws.size(); ++i) {
      out << (i == 0 ? "" : ", ") << to_string(s.laws[i]);
    }
    out << "}: " << s.count << (s.up_to_iso ? " isomorphism classes" : " tables")
        << '\n';
    return out.str();
  }

}  // namespace lahyper
