#ifndef ENDSLAB_CLI_HPP_
#define ENDSLAB_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace endslab {

  enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

  // Subcommands: ball, ends, leaves, verify <check>, fixtures. JSON and DOT go
  // to `out`, diagnostics to `err`.
  int cli_main(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

  // Convenience overload; args excludes the program name.
  int cli_main(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // ENDSLAB_BUDGET when set to a positive integer, else the default.
  std::size_t vertex_budget_from_env();

}  // namespace endslab

#endif  // ENDSLAB_CLI_HPP_
