#include "lahyper/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lahyper/brackets.hpp"
#include "lahyper/error.hpp"
#include "lahyper/expr.hpp"
#include "lahyper/ideals.hpp"
#include "lahyper/laws.hpp"
#include "lahyper/report.hpp"
#include "lahyper/search.hpp"
#include "lahyper/table_io.hpp"

namespace lahyper {

  namespace {
    using json = nlohmann::ordered_json;

    // Input problems the user has to fix; reported with exit code 2.
    class InputError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    std::vector<LawId> parse_laws(std::vector<std::string> const& ids) {
      std::vector<LawId> laws;
      for (auto const& id : ids) {
        auto law = parse_law_id(id);
        if (!law) {
          std::string known;
          for (auto l : all_laws()) {
            known += (known.empty() ? "" : ", ") + std::string(to_string(l));
          }
          throw InputError("unknown law '" + id + "' (known: " + known + ")");
        }
        laws.push_back(*law);
      }
      return laws;
    }

    std::string caret_line(std::string_view input, Span span) {
      // Spans are byte offsets; count code points for the caret column.
      auto columns = [&](std::size_t from, std::size_t to) {
        std::size_t cols = 0;
        for (std::size_t i = from; i < to && i < input.size(); ++i) {
          if ((static_cast<unsigned char>(input[i]) & 0xC0U) != 0x80U) {
            ++cols;
          }
        }
        return cols;
      };
      return std::string(columns(0, span.begin), ' ')
             + std::string(std::max<std::size_t>(1, columns(span.begin, span.end)), '^');
    }

    // A set-typed expression such as "{b}" or "(b o d) * {d}".
    ElemSet parse_set_argument(std::string const& text, HyperTable const& t) {
      auto typed = typecheck(parse_expr(text), t);
      if (typed.type() != ExprType::set) {
        throw TypeError("expected a set, found an element (write {x} for a "
                        "singleton)",
                        typed.root().span);
      }
      return eval_expr(typed, t).set;
    }

    struct Globals {
      std::ostream& out;
      std::ostream& err;
    };

    int cmd_check(Globals const&                  g,
                  std::string const&              file,
                  std::vector<std::string> const& law_ids,
                  bool                            all_witnesses,
                  bool                            as_json,
                  std::optional<std::uint64_t>    seed,
                  std::uint64_t                   samples,
                  std::size_t                     workers) {
      auto const t    = read_table_file(file);
      auto const laws = parse_laws(law_ids);
      CheckOptions opts;
      opts.count_violations = true;
      opts.all_witnesses    = all_witnesses;
      opts.workers          = workers;

      bool failed = false;
      json reports = json::array();
      for (std::size_t i = 0; i < laws.size(); ++i) {
        LawReport report;
        if (law_info(laws[i]).scope == LawScope::element) {
          report = check_law(t, laws[i], opts);
        } else if (t.order() <= max_exhaustive_set_order) {
          report = check_set_law(t, laws[i], Exhaustive{}, opts);
        } else if (seed) {
          report = check_set_law(t, laws[i], Sampled{*seed, samples}, opts);
        } else {
          throw InputError(std::string(to_string(laws[i]))
                           + " on a table of order above 4 is sampled; pass "
                             "--seed");
        }
        failed = failed || report.verdict == Verdict::fails;
        if (as_json) {
          reports.push_back(to_json(t, report));
        } else {
          g.out << (i == 0 ? "" : "\n")
                << emit_report(t, report, ReportFormat::text);
        }
      }
      if (as_json) {
        g.out << json{{"kind", "check"}, {"file", file}, {"reports", reports}}.dump(2)
              << '\n';
      }
      return failed ? exit_check_failed : exit_ok;
    }

    int cmd_eval(Globals const&     g,
                 std::string const& file,
                 std::string const& expression,
                 bool               as_json) {
      auto const t     = read_table_file(file);
      auto const typed = typecheck(parse_expr(expression), t);
      auto const value = eval_expr(typed, t);
      bool const is_set = value.type == ExprType::set;
      if (as_json) {
        json out;
        out["kind"]       = "eval";
        out["expression"] = expression;
        out["type"]       = is_set ? "set" : "element";
        if (is_set) {
          json members = json::array();
          for (auto i : value.set) {
            members.push_back(t.name(i));
          }
          out["value"] = std::move(members);
        } else {
          out["value"] = t.name(value.element);
        }
        g.out << out.dump(2) << '\n';
      } else {
        g.out << expression << " = "
              << (is_set ? format_set(t, value.set) : t.name(value.element))
              << '\n';
      }
      return exit_ok;
    }

    int cmd_powers(Globals const&     g,
                   std::string const& file,
                   std::string const& base,
                   std::size_t        exponent,
                   bool               as_json) {
      auto const t      = read_table_file(file);
      auto const family = power_family(t, parse_set_argument(base, t), exponent);
      g.out << emit_report(t, family, as_json ? ReportFormat::json
                                              : ReportFormat::text);
      return family.well_defined ? exit_ok : exit_check_failed;
    }

    int cmd_ideal(Globals const&             g,
                  std::string const&         file,
                  std::string const&         set,
                  std::string const&         side,
                  std::optional<std::size_t> m,
                  std::optional<std::size_t> n,
                  bool                       as_json) {
      auto const t       = read_table_file(file);
      auto const subject = parse_set_argument(set, t);
      IdealVerdict verdict;
      if (m || n) {
        verdict = is_mn_hyperideal(t, subject, m.value_or(0), n.value_or(0));
      } else {
        IdealSide s = side == "left"    ? IdealSide::left
                      : side == "right" ? IdealSide::right
                                        : IdealSide::two_sided;
        verdict = is_hyperideal(t, subject, s);
      }
      g.out << emit_report(t, verdict, as_json ? ReportFormat::json
                                               : ReportFormat::text);
      return verdict.holds() ? exit_ok : exit_check_failed;
    }

    int cmd_enumerate(Globals const&                  g,
                      std::size_t                     order,
                      std::vector<std::string> const& law_ids,
                      bool                            count_only,
                      bool                            up_to_iso,
                      std::string const&              emit_dir,
                      bool                            no_prune,
                      std::size_t                     workers,
                      bool                            as_json) {
      SearchSpec spec;
      spec.n       = order;
      spec.laws    = parse_laws(law_ids);
      spec.prune   = !no_prune;
      spec.workers = workers;
      bool const emit = !count_only;
      spec.mode = up_to_iso ? (emit ? SearchMode::emit_iso : SearchMode::count_iso)
                            : (emit ? SearchMode::emit : SearchMode::count);

      std::uint64_t emitted = 0;
      TableSink     sink;
      if (emit && !emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        sink = [&](HyperTable const& t) {
          char name[32];
          std::snprintf(name, sizeof(name), "model_%06llu.hgt",
                        static_cast<unsigned long long>(++emitted));
          std::ofstream file(std::filesystem::path(emit_dir) / name,
                             std::ios::binary);
          file << format_table(t);
          if (!file) {
            throw InputError("cannot write into '" + emit_dir + "'");
          }
        };
      } else if (emit) {
        sink = [&](HyperTable const& t) {
          g.out << "# model " << ++emitted << '\n' << format_table(t) << '\n';
        };
      }
      EnumerationSummary summary;
      summary.order     = order;
      summary.laws      = spec.laws;
      summary.up_to_iso = up_to_iso;
      summary.count     = enumerate_tables(spec, sink);
      g.out << emit_report(summary, as_json ? ReportFormat::json
                                            : ReportFormat::text);
      return exit_ok;
    }

    int cmd_iso(Globals const&     g,
                std::string const& file1,
                std::string const& file2,
                bool               as_json) {
      auto const t1 = read_table_file(file1);
      auto const t2 = read_table_file(file2);
      std::optional<std::vector<std::size_t>> phi;
      if (t1.order() == t2.order()) {
        phi = are_isomorphic(t1, t2);
      }
      if (as_json) {
        json out;
        out["kind"]       = "iso";
        out["isomorphic"] = phi.has_value();
        if (phi) {
          json mapping;
          for (std::size_t i = 0; i < phi->size(); ++i) {
            mapping[t1.name(i)] = t2.name((*phi)[i]);
          }
          out["mapping"] = std::move(mapping);
        } else {
          out["mapping"] = nullptr;
        }
        g.out << out.dump(2) << '\n';
      } else if (t1.order() != t2.order()) {
        g.out << "not isomorphic: orders " << t1.order() << " and "
              << t2.order() << " differ\n";
      } else if (phi) {
        g.out << "isomorphic:";
        for (std::size_t i = 0; i < phi->size(); ++i) {
          g.out << ' ' << t1.name(i) << "->" << t2.name((*phi)[i]);
        }
        g.out << '\n';
      } else {
        g.out << "not isomorphic\n";
      }
      return phi ? exit_ok : exit_check_failed;
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Verification and search toolkit for finite LA-hypergroupoids",
                 "lahyper"};
    app.require_subcommand(1);
    Globals const g{out, err};

    bool json_output = false;
    std::size_t workers = 1;

    std::string              check_file;
    std::vector<std::string> check_laws;
    bool                     all_witnesses = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t            samples = 10000;
    auto* check = app.add_subcommand("check", "Check algebraic laws on a table");
    check->add_option("file", check_file, "Table file (.hgt)")->required();
    check->add_option("--law", check_laws, "Law ids, comma separated")
        ->required()
        ->delimiter(',');
    check->add_flag("--all-witnesses", all_witnesses, "List every violating tuple");
    check->add_option("--seed", seed, "Seed for sampled set-law checks");
    check->add_option("--samples", samples, "Sample count for sampled checks");
    check->add_option("--workers", workers, "Worker threads (0 = all cores)");
    check->add_flag("--json", json_output, "Machine-readable output");

    std::string eval_file;
    std::string expression;
    auto* eval = app.add_subcommand("eval", "Evaluate a hyper-expression");
    eval->add_option("file", eval_file, "Table file (.hgt)")->required();
    eval->add_option("expression", expression, "Expression, e.g. \"(d o d) * {b}\"")
        ->required();
    eval->add_flag("--json", json_output, "Machine-readable output");

    std::string powers_file;
    std::string base;
    std::size_t exponent = 1;
    auto* powers = app.add_subcommand("powers", "All bracketings of a power A^m");
    powers->add_option("file", powers_file, "Table file (.hgt)")->required();
    powers->add_option("--base", base, "Base set, e.g. \"{b}\"")->required();
    powers->add_option("--exp", exponent, "Exponent (1..12)")->required();
    powers->add_flag("--json", json_output, "Machine-readable output");

    std::string                ideal_file;
    std::string                ideal_set;
    std::string                side = "both";
    std::optional<std::size_t> m;
    std::optional<std::size_t> n;
    auto* ideal = app.add_subcommand("ideal", "Hyperideal and (m,n)-hyperideal checks");
    ideal->add_option("file", ideal_file, "Table file (.hgt)")->required();
    ideal->add_option("--set", ideal_set, "Candidate subset, e.g. \"{a}\"")->required();
    ideal->add_option("--side", side, "left, right or both")
        ->check(CLI::IsMember({"left", "right", "both"}));
    ideal->add_option("--m", m, "Copies of A before H");
    ideal->add_option("--n", n, "Copies of A after H");
    ideal->add_flag("--json", json_output, "Machine-readable output");

    std::size_t              order = 1;
    std::vector<std::string> enum_laws;
    bool                     count_only = false;
    bool                     up_to_iso  = false;
    bool                     no_prune   = false;
    std::string              emit_dir;
    std::size_t              enum_workers = 0;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate all models of small order");
    enumerate->add_option("--order", order, "Carrier size (1..4)")->required();
    enumerate->add_option("--law", enum_laws, "Element laws, comma separated")
        ->delimiter(',');
    enumerate->add_flag("--count-only", count_only, "Only print the count");
    enumerate->add_flag("--up-to-iso", up_to_iso, "One table per isomorphism class");
    enumerate->add_option("--emit-dir", emit_dir, "Write each model to DIR/model_NNNNNN.hgt");
    enumerate->add_flag("--no-prune", no_prune, "Check laws only on complete tables");
    enumerate->add_option("--workers", enum_workers, "Worker threads (0 = all cores)");
    enumerate->add_flag("--json", json_output, "Machine-readable summary");

    std::string iso_file1;
    std::string iso_file2;
    auto* iso = app.add_subcommand("iso", "Test two tables for isomorphism");
    iso->add_option("file1", iso_file1, "First table")->required();
    iso->add_option("file2", iso_file2, "Second table")->required();
    iso->add_flag("--json", json_output, "Machine-readable output");

    std::vector<std::string> argv_rest(args.rbegin(),
                                       args.rend() - (args.empty() ? 0 : 1));
    try {
      app.parse(argv_rest);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_input_error;
    }

    try {
      if (*check) {
        return cmd_check(g, check_file, check_laws, all_witnesses, json_output,
                         seed, samples, workers);
      }
      if (*eval) {
        return cmd_eval(g, eval_file, expression, json_output);
      }
      if (*powers) {
        return cmd_powers(g, powers_file, base, exponent, json_output);
      }
      if (*ideal) {
        return cmd_ideal(g, ideal_file, ideal_set, side, m, n, json_output);
      }
      if (*enumerate) {
        return cmd_enumerate(g, order, enum_laws, count_only, up_to_iso,
                             emit_dir, no_prune, enum_workers, json_output);
      }
      if (*iso) {
        return cmd_iso(g, iso_file1, iso_file2, json_output);
      }
    } catch (ExprError const& e) {
      std::string_view const input = *eval ? std::string_view(expression)
                                     : *powers ? std::string_view(base)
                                               : std::string_view(ideal_set);
      err << (dynamic_cast<TypeError const*>(&e) ? "type error: " : "syntax error: ")
          << e.what() << " at " << e.span().begin << ".." << e.span().end << '\n'
          << "  " << input << '\n'
          << "  " << caret_line(input, e.span()) << '\n';
      return exit_input_error;
    } catch (TableError const& e) {
      err << e.what() << '\n';
      return exit_input_error;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return exit_input_error;
    }
    return exit_input_error;
  }

}  // namespace lahyper
