#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "leavitt/cli.hpp"
#include "support.hpp"

using namespace testing;

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "leavitt");
    std::vector<char const*> argv;
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  std::string graph(std::string const& name) {
    return std::string(LEAVITT_CORPUS) + "/" + name + ".graph";
  }

  std::string write_temp(std::string const& name, std::string const& text) {
    std::string path = std::string("leavitt_test_") + name;
    std::ofstream(path) << text;
    return path;
  }

}  // namespace

TEST_CASE("nf") {
  CHECK(run({"nf", "-g", graph("rose2"), "-e", "a* . a"}).out == "v - b* . b\n");
  CHECK(run({"nf", "-g", graph("rose2"), "-e", "a . a*"}).out == "v\n");
  CHECK(run({"nf", "-g", graph("rose2"), "-e", "v . v"}).out == "v\n");
  CHECK(run({"nf", "-g", graph("rose2"), "-e", "2/3 . v + v"}).out == "5/3 . v\n");
  Run bad = run({"nf", "-g", graph("rose2"), "-e", "a . (b"});
  CHECK(bad.code == cli::usage);
  CHECK(bad.err.find("column") != std::string::npos);
  CHECK(run({"nf", "-g", graph("rose2"), "-e", "zz"}).code == cli::usage);
  CHECK(run({"nf", "-g", "/nonexistent.graph", "-e", "v"}).code == cli::usage);
}

TEST_CASE("basis") {
  Run r = run({"basis", "-g", graph("rose2"), "--vertex", "v", "--degree", "0", "-N", "2"});
  CHECK(r.code == cli::ok);
  CHECK(r.out.rfind("count=16\n", 0) == 0);
  Run t = run({"basis", "-g", graph("rose2"), "--vertex", "v", "--degree", "0", "-N", "0"});
  CHECK(t.out == "count=1\n(e_v,e_v)\n");
  Run p = run({"basis", "-g", graph("rose2"), "--mode", "projective", "--vertex", "v",
               "--degree", "-1", "-N", "1"});
  CHECK(p.out == "count=2\n(a,e_v)\n(b,e_v)\n");
  CHECK(run({"basis", "-g", graph("rose2"), "--vertex", "w"}).code == cli::usage);
  CHECK(run({"basis", "-g", graph("rose2"), "--vertex", "v", "--mode", "sideways"}).code
        == cli::usage);
}

TEST_CASE("check") {
  Run all = run({"check", "-g", graph("rose2"), "--mode", "injective", "-N", "4", "--degrees",
                 "-2..2", "--suites", "all"});
  CHECK(all.code == cli::ok);
  CHECK(all.out.find("FAIL") == std::string::npos);
  std::size_t lines = 0;
  for (char c : all.out) {
    lines += c == '\n' ? 1 : 0;
  }
  CHECK(lines == cli::all_suites.size());
  CHECK(all.out.find("d2 rose2 injective N=4,deg=-2..2 PASS") != std::string::npos);

  Run again = run({"check", "-g", graph("rose2"), "--mode", "injective", "-N", "4",
                   "--degrees", "-2..2", "--suites", "all"});
  CHECK(again.out == all.out);

  Run ind = run({"check", "-g", graph("rose2"), "--suites", "independence", "--choice2", "b"});
  CHECK(ind.code == cli::ok);
  Run pind = run({"check", "-g", graph("three_vertex"), "--mode", "projective", "--suites",
                  "independence,d2", "--choice2", "g,b", "-N", "3"});
  CHECK(pind.code == cli::ok);
}

TEST_CASE("check errors") {
  std::string sink = write_temp("sink.graph", "vertex u\nvertex s\nedge a u s\nedge l u u\n");
  Run r = run({"check", "-g", sink, "--mode", "injective"});
  CHECK(r.code == cli::usage);
  CHECK(r.err.find("'s' is a sink") != std::string::npos);
  Run ok = run({"check", "-g", sink, "--mode", "projective", "--suites", "d2", "-N", "2"});
  CHECK(ok.code == cli::ok);
  std::remove(sink.c_str());

  CHECK(run({"check", "-g", graph("rose2"), "--suites", "nope"}).code == cli::usage);
  CHECK(run({"check", "-g", graph("rose2"), "--degrees", "2..-2"}).code == cli::usage);
  CHECK(run({"check", "-g", graph("rose2"), "--degrees", "x"}).code == cli::usage);
  CHECK(run({"check", "-g", graph("rose2"), "--choice2", "zz"}).code == cli::usage);
  CHECK(run({"check"}).code == cli::usage);
  CHECK(run({}).code == cli::usage);
  CHECK(run({"--help"}).code == cli::ok);

  std::string bad = write_temp("bad.graph", "vertex v\nedge a v w\n");
  Run pe = run({"check", "-g", bad});
  CHECK(pe.code == cli::usage);
  CHECK(pe.err.find("line 2") != std::string::npos);
  std::remove(bad.c_str());
}

TEST_CASE("degree ranges") {
  CHECK(cli::parse_degrees("-2..2") == std::pair{-2, 2});
  CHECK(cli::parse_degrees("0..0") == std::pair{0, 0});
  CHECK(cli::parse_degrees("-5..-3") == std::pair{-5, -3});
  CHECK_THROWS_AS((void)cli::parse_degrees("3..1"), Error);
  CHECK_THROWS_AS((void)cli::parse_degrees("1.2"), Error);
}

TEST_CASE("json report") {
  std::string path = "leavitt_test_report.json";
  Run r = run({"check", "-g", graph("two_cycle"), "--mode", "projective", "--suites",
               "homotopy,bimodule", "-N", "3", "--samples", "20", "--seed", "9", "--json",
               path});
  CHECK(r.code == cli::ok);
  std::ifstream  in(path);
  nlohmann::json doc = nlohmann::json::parse(in);
  CHECK(doc["passed"] == true);
  CHECK(doc["seed"] == 9);
  REQUIRE(doc["reports"].size() == 2);
  CHECK(doc["reports"][0]["suite"] == "bimodule");
  CHECK(doc["reports"][1]["suite"] == "homotopy");
  CHECK(doc["reports"][0]["graph"] == "two_cycle");
  CHECK(doc["reports"][0]["samples"].size() == 20);
  std::remove(path.c_str());
}
