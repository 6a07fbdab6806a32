#pragma once

#include <string>
#include <string_view>

#include "lahyper/core.hpp"

namespace lahyper {

  // The .hgt text format:
  //
  //   elements: a b c
  //   a: {a} {a} {a}
  //   b: {a} {a,c} {b}
  //   c: {a} {b,c} {c}
  //
  // Row r, cell j holds r o (element j). '#' starts a comment; blank lines
  // are ignored. Throws TableError with line/column-anchored violations.
  RawTable   parse_raw_table(std::string_view text);
  HyperTable parse_table_file(std::string_view text);

  // Canonical text; parse_table_file(format_table(t)) == t.
  std::string format_table(HyperTable const& t);

  HyperTable read_table_file(std::string const& path);

}  // namespace lahyper
