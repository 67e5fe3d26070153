#ifndef LEAVITT_TESTS_SUPPORT_HPP_
#define LEAVITT_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "leavitt/bimodule.hpp"
#include "leavitt/complexes.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/lpa.hpp"

namespace testing {

  using namespace leavitt;

  inline std::vector<std::string> const corpus_names = {"rose2", "rose3", "two_cycle",
                                                        "three_vertex"};

  inline GraphFile corpus(std::string const& name) {
    return load_graph_file(std::string(LEAVITT_CORPUS) + "/" + name + ".graph");
  }

  inline EdgeId E(Graph const& g, std::string const& name) {
    auto e = g.find_edge(name);
    if (!e) {
      throw Error("test: no edge " + name);
    }
    return *e;
  }

  inline VertexId V(Graph const& g, std::string const& name) {
    auto v = g.find_vertex(name);
    if (!v) {
      throw Error("test: no vertex " + name);
    }
    return *v;
  }

  // "c.b.a" is a then b then c; "e_v" is trivial at v.
  inline Path P(Graph const& g, std::string const& text) {
    if (text.rfind("e_", 0) == 0) {
      return Path::trivial(V(g, text.substr(2)));
    }
    std::vector<EdgeId> edges;
    std::size_t         start = 0;
    while (true) {
      auto dot = text.find('.', start);
      edges.insert(edges.begin(), E(g, text.substr(start, dot - start)));
      if (dot == std::string::npos) {
        break;
      }
      start = dot + 1;
    }
    auto p = Path::from_edges(g, edges);
    if (!p) {
      throw Error("test: not a path " + text);
    }
    return *p;
  }

  // Symbol "" is the unit e_i; otherwise an edge name.
  inline CxBasis X(Graph const&       g,
                   Mode               mode,
                   std::string const& sym,
                   std::string const& p,
                   std::string const& q) {
    std::optional<EdgeId> s;
    if (!sym.empty()) {
      s = E(g, sym);
    }
    return CxBasis{mode, s, P(g, p), P(g, q)};
  }

  inline Monomial M(Graph const& g, std::string const& p, std::string const& q) {
    return Monomial{P(g, p), P(g, q)};
  }

}  // namespace testing

#endif  // LEAVITT_TESTS_SUPPORT_HPP_
