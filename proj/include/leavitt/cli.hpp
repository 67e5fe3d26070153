// Command line front end:
//   leavitt nf    -g FILE -e EXPR
//   leavitt basis -g FILE --mode M --vertex V --degree L -N n
//   leavitt check -g FILE --mode M -N n --degrees LO..HI --suites LIST|all
//                 [--choice2 CSV] [--seed S] [--samples K] [--json PATH]
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error,
// 3 the rewriting oracle hit its step cap.

#ifndef LEAVITT_CLI_HPP_
#define LEAVITT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "complexes.hpp"
#include "report.hpp"

namespace leavitt::cli {

  enum ExitCode : int { ok = 0, failed = 1, usage = 2, step_cap = 3 };

  inline std::vector<std::string> const all_suites = {
      "d2", "alinear", "bimodule", "homotopy", "independence", "nf-oracle"};

  struct CheckRequest {
    std::string              graph_path;
    Mode                     mode = Mode::injective;
    Window                   window;
    std::vector<std::string> suites = all_suites;
    std::vector<std::string> choice2;
    std::uint64_t            seed    = 0;
    std::size_t              samples = 500;
  };

  // "LO..HI"; throws Error on anything else or LO > HI.
  [[nodiscard]] std::pair<int, int> parse_degrees(std::string const& text);

  // Runs the requested suites concurrently; reports come back sorted by
  // suite name. Throws Error on bad input and oracle::StepCapExceeded.
  [[nodiscard]] std::vector<CheckReport> run_checks(CheckRequest const& req);

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leavitt::cli

#endif  // LEAVITT_CLI_HPP_
