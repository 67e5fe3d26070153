#include "leavitt/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "leavitt/bimodule.hpp"
#include "leavitt/homotopy.hpp"
#include "leavitt/independence.hpp"
#include "leavitt/lpa.hpp"
#include "leavitt/oracle.hpp"

namespace leavitt::cli {

  namespace {

    Mode parse_mode(std::string const& s) {
      if (s == "injective") {
        return Mode::injective;
      }
      if (s == "projective") {
        return Mode::projective;
      }
      throw Error("unknown mode '" + s + "' (expected injective or projective)");
    }

    EdgeChoice mode_choice(GraphFile const& file, Mode mode) {
      return mode == Mode::injective ? file.special_choice() : file.associated_choice();
    }

    std::vector<std::string> split_csv(std::string const& s) {
      std::vector<std::string> out;
      std::string              item;
      for (char c : s) {
        if (c == ',') {
          if (!item.empty()) {
            out.push_back(item);
          }
          item.clear();
        } else if (c != ' ') {
          item += c;
        }
      }
      if (!item.empty()) {
        out.push_back(item);
      }
      return out;
    }

  }  // namespace

  std::pair<int, int> parse_degrees(std::string const& text) {
    static std::regex const re(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$)");
    std::smatch             m;
    if (!std::regex_match(text, m, re)) {
      throw Error("degree range must look like LO..HI, got '" + text + "'");
    }
    int lo = std::stoi(m[1].str());
    int hi = std::stoi(m[2].str());
    if (lo > hi) {
      throw Error("empty degree range " + text);
    }
    return {lo, hi};
  }

  std::vector<CheckReport> run_checks(CheckRequest const& req) {
    for (auto const& s : req.suites) {
      if (std::find(all_suites.begin(), all_suites.end(), s) == all_suites.end()) {
        throw Error("unknown suite '" + s + "'");
      }
    }
    GraphFile const   file  = load_graph_file(req.graph_path);
    Graph const&      g     = file.graph;
    EdgeChoice const  c     = mode_choice(file, req.mode);
    std::vector<EdgeId> overrides;
    for (auto const& name : req.choice2) {
      auto e = g.find_edge(name);
      if (!e) {
        throw Error("--choice2 names unknown edge '" + name + "'");
      }
      overrides.push_back(*e);
    }
    EdgeChoice const c2 = c.with_overrides(g, overrides);

    LeavittComplex const cx(g, c);
    LeavittComplex const cx2(g, c2);
    Bimodule const       bm(cx);
    Bimodule const       bm2(cx2);
    SampleOptions const  opts{req.seed, req.samples};
    Window const&        w = req.window;

    std::vector<std::future<CheckReport>> jobs;
    for (auto const& s : req.suites) {
      jobs.push_back(std::async(std::launch::async, [&, s]() -> CheckReport {
        if (s == "d2") {
          return check_d_squared(cx, w);
        }
        if (s == "alinear") {
          return check_A_linearity(cx, w);
        }
        if (s == "bimodule") {
          return check_bimodule(bm, w, opts);
        }
        if (s == "homotopy") {
          return check_homotopy(bm, w, opts);
        }
        if (s == "independence") {
          return check_independence(bm, bm2, w, opts);
        }
        CheckReport r = oracle::check_nf_oracle(bm.algebra(), req.seed, req.samples);
        r.mode        = to_string(req.mode);
        return r;
      }));
    }
    // Collect every job before rethrowing so no task outlives the complexes.
    std::vector<CheckReport> reports;
    std::exception_ptr       first_error;
    for (auto& j : jobs) {
      try {
        reports.push_back(j.get());
      } catch (...) {
        if (!first_error) {
          first_error = std::current_exception();
        }
      }
    }
    if (first_error) {
      std::rethrow_exception(first_error);
    }
    std::string const name = std::filesystem::path(req.graph_path).stem().string();
    for (auto& r : reports) {
      r.graph = name;
    }
    std::sort(reports.begin(), reports.end(), [](auto const& a, auto const& b) {
      return std::tie(a.suite, a.mode, a.window) < std::tie(b.suite, b.mode, b.window);
    });
    return reports;
  }

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leavitt complexes: normal forms, index sets and identity checks"};
    app.require_subcommand(1);

    std::string graph_path;
    std::string expr;
    auto*       nf = app.add_subcommand("nf", "print the normal form of an expression");
    nf->add_option("-g,--graph", graph_path, "graph file")->required();
    nf->add_option("-e,--expr", expr, "expression, e.g. \"a* . a\"")->required();

    std::string mode_name = "injective";
    std::string vertex;
    int         degree    = 0;
    std::size_t max_len   = 4;
    auto*       basis = app.add_subcommand("basis", "list the index set at a vertex and degree");
    basis->add_option("-g,--graph", graph_path, "graph file")->required();
    basis->add_option("--mode", mode_name, "injective or projective");
    basis->add_option("--vertex", vertex, "vertex name")->required();
    basis->add_option("--degree", degree, "degree l(q)-l(p)");
    basis->add_option("-N", max_len, "maximal path length");

    CheckRequest req;
    std::string  degrees = "-2..2";
    std::string  suites  = "all";
    std::string  choice2;
    std::string  json_path;
    auto*        check = app.add_subcommand("check", "run verification suites");
    check->add_option("-g,--graph", req.graph_path, "graph file")->required();
    check->add_option("--mode", mode_name, "injective or projective");
    check->add_option("-N", req.window.max_len, "maximal path length")->capture_default_str();
    check->add_option("--degrees", degrees, "degree range LO..HI")->capture_default_str();
    check->add_option("--suites", suites, "comma separated suites, or all")
        ->capture_default_str();
    check->add_option("--choice2", choice2, "edges overriding the choice for independence");
    check->add_option("--seed", req.seed, "seed for sampled suites")->capture_default_str();
    check->add_option("--samples", req.samples, "samples per sampled suite")
        ->capture_default_str();
    check->add_option("--json", json_path, "also write the reports as JSON");

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      (void)app.exit(e, out, err);
      return usage;
    }

    try {
      if (*nf) {
        GraphFile      file = load_graph_file(graph_path);
        LeavittAlgebra algebra(file.graph, file.special_choice());
        out << to_string(file.graph, parse_expr(algebra, expr)) << "\n";
        return ok;
      }

      if (*basis) {
        GraphFile  file = load_graph_file(graph_path);
        Mode       mode = parse_mode(mode_name);
        EdgeChoice c    = mode_choice(file, mode);
        auto       v    = file.graph.find_vertex(vertex);
        if (!v) {
          throw Error("unknown vertex '" + vertex + "'");
        }
        auto pairs = enumerate_index_set(file.graph, c, *v, degree, max_len);
        out << "count=" << pairs.size() << "\n";
        for (auto const& [p, q] : pairs) {
          out << "(" << to_string(file.graph, p) << "," << to_string(file.graph, q) << ")\n";
        }
        return ok;
      }

      req.mode = parse_mode(mode_name);
      std::tie(req.window.lo, req.window.hi) = parse_degrees(degrees);
      req.suites  = suites == "all" ? all_suites : split_csv(suites);
      req.choice2 = split_csv(choice2);
      auto reports = run_checks(req);

      bool passed = true;
      for (auto const& r : reports) {
        out << format_line(r) << "\n";
        passed = passed && r.passed();
      }
      if (!json_path.empty()) {
        nlohmann::json doc = {{"graph", reports.empty() ? "" : reports.front().graph},
                              {"passed", passed},
                              {"seed", req.seed},
                              {"samples", req.samples},
                              {"reports", to_json(reports)}};
        std::ofstream f(json_path);
        if (!f) {
          throw Error("cannot write " + json_path);
        }
        f << doc.dump(2) << "\n";
      }
      return passed ? ok : failed;
    } catch (oracle::StepCapExceeded const& e) {
      err << "error: " << e.what() << "\n";
      return step_cap;
    } catch (ParseError const& e) {
      err << "parse error at line " << e.line() << ", column " << e.column() << ": "
          << e.what() << "\n";
      return usage;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return usage;
    }
  }

}  // namespace leavitt::cli
