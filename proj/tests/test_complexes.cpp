#include <doctest.h>

#include "leavitt/homotopy.hpp"
#include "support.hpp"

using namespace testing;

namespace {

  LeavittComplex complex_of(GraphFile const& f, Mode m, ComplexOptions opts = {}) {
    return LeavittComplex(f.graph,
                          m == Mode::injective ? f.special_choice() : f.associated_choice(),
                          opts);
  }

  auto const inj  = Mode::injective;
  auto const proj = Mode::projective;

}  // namespace

TEST_CASE("injective differential on the rose") {
  for (std::string name : {"rose2", "rose3"}) {
    GraphFile      f = corpus(name);
    Graph const&   g = f.graph;
    LeavittComplex cx = complex_of(f, inj);
    ChainVector    expected(X(g, inj, "", "e_v", "e_v"));
    for (auto e : g.edges()) {
      if (g.name(e) != "a") {
        expected.add(CxBasis{inj, std::nullopt, Path::edge(g, e), Path::edge(g, e)}, -1);
      }
    }
    CHECK(cx.differential(X(g, inj, "a", "a", "e_v")) == expected);
  }

  GraphFile      f = corpus("rose2");
  Graph const&   g = f.graph;
  LeavittComplex cx = complex_of(f, inj);
  CHECK(cx.differential(X(g, inj, "b", "b", "e_v"))
        == ChainVector(X(g, inj, "", "b", "b")));
  CHECK(cx.differential(X(g, inj, "b", "a", "b.a"))
        == ChainVector(X(g, inj, "", "a", "b.a.b")));
  CHECK(cx.differential(X(g, inj, "a", "b", "a"))
        == ChainVector(X(g, inj, "", "b", "a.a")));
  // The special case needs the last edge of p, not the first.
  CHECK(cx.differential(X(g, inj, "a", "b.a", "e_v"))
        == ChainVector(X(g, inj, "", "b.a", "a")));
  CHECK(cx.differential(X(g, inj, "a", "a.b", "e_v"))
        == ChainVector(X(g, inj, "", "b", "e_v")) - ChainVector(X(g, inj, "", "b.b", "b")));
  CHECK(cx.differential(X(g, inj, "", "a", "b")).is_zero());
}

TEST_CASE("projective differential on the rose") {
  for (std::string name : {"rose2", "rose3"}) {
    GraphFile      f = corpus(name);
    Graph const&   g = f.graph;
    LeavittComplex cx = complex_of(f, proj);
    for (std::string q : {"e_v", "a", "b.a"}) {
      ChainVector expected;
      for (auto e : g.edges()) {
        expected.add(CxBasis{proj, e, P(g, "e_v"), edge_then(g, e, P(g, q))}, 1);
      }
      CHECK(cx.differential(X(g, proj, "", "e_v", q)) == expected);
    }
  }
  GraphFile      f = corpus("rose2");
  Graph const&   g = f.graph;
  LeavittComplex cx = complex_of(f, proj);
  CHECK(cx.differential(X(g, proj, "", "b.a", "b"))
        == ChainVector(X(g, proj, "b", "a", "b")));
  CHECK(cx.differential(X(g, proj, "b", "a", "b")).is_zero());
  CHECK(cx.differential(X(g, proj, "a", "e_v", "e_v")).is_zero());
}

TEST_CASE("differentials raise degree and stay in the basis") {
  for (auto const& name : corpus_names) {
    GraphFile f = corpus(name);
    for (auto m : {inj, proj}) {
      LeavittComplex cx = complex_of(f, m);
      for (auto const& x : cx.window_basis({3, -2, 2})) {
        CHECK(cx.is_basis(x));
        for (auto const& [y, c] : cx.differential(x)) {
          CHECK(y.degree() == x.degree() + 1);
          CHECK(cx.is_basis(y));
        }
      }
    }
  }
}

TEST_CASE("window basis") {
  GraphFile      f = corpus("rose2");
  LeavittComplex cx = complex_of(f, inj);
  auto           deg0 = cx.window_basis({2, 0, 0});
  CHECK(deg0.size() == 48);
  CHECK(std::is_sorted(deg0.begin(), deg0.end()));
  CHECK(cx.window_basis({2, 1, 0}).empty());

  GraphFile      t = corpus("three_vertex");
  LeavittComplex tx = complex_of(t, inj);
  // One pair (e_i, e_i) per vertex times the symbols e_i^# and in-edges.
  CHECK(tx.window_basis({0, 0, 0}).size() == 3 + t.graph.edge_count());
  LeavittComplex tp = complex_of(t, proj);
  CHECK(tp.window_basis({0, 0, 0}).size() == 3 + t.graph.edge_count());
}

TEST_CASE("window safety") {
  GraphFile      f = corpus("rose2");
  Graph const&   g = f.graph;
  LeavittComplex cx = complex_of(f, inj);
  Bimodule       bm(cx);
  BasisMap       d = [&](CxBasis const& b) { return cx.differential(b); };
  BasisMap       h = [&](CxBasis const& b) { return homotopy(bm, b); };
  Op const       just_d[] = {Op::d};
  Op const       all[]    = {Op::d, Op::h, Op::dh, Op::hd};

  Window w{2, -2, 2};
  CHECK_FALSE(window_safe(X(g, inj, "b", "e_v", "a.a"), w, just_d, d));
  CHECK(window_safe(X(g, inj, "b", "e_v", "a"), w, just_d, d));
  CHECK_FALSE(window_safe(X(g, inj, "b", "e_v", "a.a"), Window{4, -2, 2}, just_d, d));
  CHECK(window_safe(X(g, inj, "a", "a", "e_v"), w, all, d, h));
  CHECK(window_safe(X(g, inj, "a", "a", "e_v"), Window{5, -2, 2}, all, d, h));
  CHECK(window_safe(X(g, inj, "", "a", "e_v"), Window{5, -2, 2}, all, d, h));
  CHECK_FALSE(window_safe(X(g, inj, "", "a", "e_v"), Window{5, -1, 2}, all, d, h));
  CHECK_THROWS_AS((void)window_safe(X(g, inj, "a", "a", "e_v"), w, all, d), Error);
}

TEST_CASE("d squared and A-linearity on the corpus") {
  for (auto const& name : corpus_names) {
    GraphFile f = corpus(name);
    for (auto m : {inj, proj}) {
      LeavittComplex cx = complex_of(f, m);
      Window         w{4, -2, 2};
      CheckReport    d2 = check_d_squared(cx, w);
      CHECK_MESSAGE(d2.passed(), name, " ", format_line(d2));
      if (name == "two_cycle") {
        // One edge in and out of each vertex: the default window holds 18.
        CHECK(d2.checked == 18);
      } else {
        CHECK(d2.checked >= 200);
      }
      CheckReport al = check_A_linearity(cx, w);
      CHECK_MESSAGE(al.passed(), name, " ", format_line(al));
    }
  }
}

TEST_CASE("modes need sink-free or source-free graphs") {
  GraphFile f = parse_graph("vertex u\nvertex s\nedge a u s\nedge l u u\n");
  // s is a sink; every vertex has an incoming edge.
  CHECK_THROWS_WITH_AS((void)f.special_choice(), doctest::Contains("'s' is a sink"), Error);
  LeavittComplex ok(f.graph, f.associated_choice());
  CHECK(ok.mode() == proj);
}

TEST_CASE("report line format") {
  GraphFile      f = corpus("rose2");
  LeavittComplex cx = complex_of(f, inj);
  CheckReport    r = check_d_squared(cx, {2, -1, 1});
  r.graph = "rose2";
  CHECK(format_line(r).rfind("d2 rose2 injective N=2,deg=-1..1 PASS checked=", 0) == 0);
  r.fail("a^#@(a,e_v)");
  CHECK(format_line(r).find("FAIL") != std::string::npos);
  CHECK(format_line(r).find("counterexample=a^#@(a,e_v)") != std::string::npos);
  CHECK(to_json(r)["status"] == "FAIL");
  CHECK(to_string(f.graph, X(f.graph, inj, "a", "a", "e_v")) == "a^#@(a,e_v)");
  CHECK(to_string(f.graph, X(f.graph, proj, "", "b.a", "e_v")) == "e_v@(b.a,e_v)");
}
