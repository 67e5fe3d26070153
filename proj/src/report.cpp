#include "leavitt/report.hpp"

namespace leavitt {

  namespace {
    constexpr std::size_t kKeptCounterexamples = 5;
  }

  void CheckReport::fail(std::string what) {
    ++failures;
    if (counterexamples.size() < kKeptCounterexamples) {
      counterexamples.push_back(std::move(what));
    }
  }

  std::string format_line(CheckReport const& r) {
    std::string out = r.suite + " " + r.graph + " " + r.mode + " " + r.window + " "
                      + (r.passed() ? "PASS" : "FAIL")
                      + " checked=" + std::to_string(r.checked);
    if (!r.passed()) {
      out += " failures=" + std::to_string(r.failures);
    }
    for (auto const& c : r.counterexamples) {
      out += " counterexample=" + c;
    }
    return out;
  }

  nlohmann::json to_json(CheckReport const& r) {
    return {{"suite", r.suite},
            {"graph", r.graph},
            {"mode", r.mode},
            {"window", r.window},
            {"status", r.passed() ? "PASS" : "FAIL"},
            {"checked", r.checked},
            {"failures", r.failures},
            {"counterexamples", r.counterexamples},
            {"samples", r.samples}};
  }

  nlohmann::json to_json(std::vector<CheckReport> const& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& r : reports) {
      out.push_back(to_json(r));
    }
    return out;
  }

}  // namespace leavitt
