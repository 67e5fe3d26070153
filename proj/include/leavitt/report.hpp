// Check reports: one line per suite run, plus a JSON mirror.

#ifndef LEAVITT_REPORT_HPP_
#define LEAVITT_REPORT_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace leavitt {

  struct CheckReport {
    std::string suite;
    std::string graph;
    std::string mode;
    std::string window;
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
    // Sampled inputs, echoed for replay.
    std::vector<std::string> samples;

    [[nodiscard]] bool passed() const noexcept { return counterexamples.empty(); }

    // Records a failure; only the first few are kept in full.
    void fail(std::string what);

    std::size_t failures = 0;
  };

  [[nodiscard]] inline CheckReport new_report(std::string suite,
                                              std::string mode,
                                              std::string window) {
    CheckReport r;
    r.suite  = std::move(suite);
    r.mode   = std::move(mode);
    r.window = std::move(window);
    return r;
  }

  // <suite> <graph> <mode> <window> PASS|FAIL checked=<n> [counterexample=...]
  [[nodiscard]] std::string format_line(CheckReport const& r);
  [[nodiscard]] nlohmann::json to_json(CheckReport const& r);
  [[nodiscard]] nlohmann::json to_json(std::vector<CheckReport> const& reports);

}  // namespace leavitt

#endif  // LEAVITT_REPORT_HPP_
