#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lahyper {

  // Exit codes: 0 when the checked property holds or the command is
  // informational, 1 when a law, ideal, well-definedness or isomorphism
  // check fails, 2 on input errors.
  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_check_failed = 1;
  inline constexpr int exit_input_error  = 2;

  // Runs the command line `args` (args[0] is the program name).
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace lahyper
