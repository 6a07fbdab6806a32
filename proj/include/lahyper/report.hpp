#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lahyper/brackets.hpp"
#include "lahyper/core.hpp"
#include "lahyper/expr.hpp"
#include "lahyper/ideals.hpp"
#include "lahyper/laws.hpp"

namespace lahyper {

  enum class ReportFormat { text, json };

  struct EnumerationSummary {
    std::size_t        order = 0;
    std::vector<LawId> laws;
    bool               up_to_iso = false;
    std::uint64_t      count     = 0;
  };

  // The witness evaluated step by step, one line per side plus the
  // inequality, e.g. "(d∘d)*{b} = {d}*{b} = d∘b = {b}".
  std::vector<std::string> witness_chain(HyperTable const& t,
                                         LawId             law,
                                         Witness const&    witness);

  // The law with placeholder variables, e.g. "(x∘y)*{z} = (z∘y)*{x}".
  std::string law_statement(LawId law);

  nlohmann::ordered_json to_json(HyperTable const& t, LawReport const& report);
  nlohmann::ordered_json to_json(HyperTable const& t, IdealVerdict const& verdict);
  nlohmann::ordered_json to_json(HyperTable const& t, PowerFamily const& family);
  nlohmann::ordered_json to_json(EnumerationSummary const& summary);

  // JSON output is one object followed by a newline.
  std::string emit_report(HyperTable const& t, LawReport const& report, ReportFormat format);
  std::string emit_report(HyperTable const& t, IdealVerdict const& verdict, ReportFormat format);
  std::string emit_report(HyperTable const& t, PowerFamily const& family, ReportFormat format);
  std::string emit_report(EnumerationSummary const& summary, ReportFormat format);

}  // namespace lahyper
