#include <doctest.h>

#include "leavitt/homotopy.hpp"
#include "support.hpp"

using namespace testing;

namespace {

  auto const inj  = Mode::injective;
  auto const proj = Mode::projective;

}  // namespace

TEST_CASE("injective homotopy on the rose") {
  GraphFile      f = corpus("rose2");
  Graph const&   g = f.graph;
  LeavittComplex cx(g, f.special_choice());
  Bimodule       bm(cx);
  CHECK(h_inj(bm, X(g, inj, "", "e_v", "e_v"))
        == ChainVector(X(g, inj, "a", "a", "e_v")) + ChainVector(X(g, inj, "b", "b", "e_v")));
  CHECK(h_inj(bm, X(g, inj, "a", "b", "a")).is_zero());
  CHECK(h_inj(bm, X(g, inj, "b", "e_v", "e_v")).is_zero());
  // Only the first edge of q survives the cancellation.
  CHECK(h_inj(bm, X(g, inj, "", "b", "a.b")) == ChainVector(X(g, inj, "b", "b", "a")));
  CHECK(h_inj(bm, X(g, inj, "", "a.a", "b.a")) == ChainVector(X(g, inj, "a", "a.a", "b")));
  for (auto const& x : cx.window_basis({3, -2, 2})) {
    if (!x.symbol && x.q.length() >= 1) {
      ChainVector hx = h_inj(bm, x);
      REQUIRE(hx.size() == 1);
      CHECK(hx.begin()->first.symbol == x.q.first_edge());
      CHECK(hx.begin()->first.q == truncations(g, x.q).tilde);
    }
  }
}

TEST_CASE("projective homotopy on the rose") {
  GraphFile      f = corpus("rose2");
  Graph const&   g = f.graph;
  LeavittComplex cx(g, f.associated_choice());
  CHECK(h_proj(cx, X(g, proj, "", "b", "a")).is_zero());
  CHECK(h_proj(cx, X(g, proj, "b", "e_v", "a")) == ChainVector(X(g, proj, "", "b", "a")));
  CHECK(h_proj(cx, X(g, proj, "a", "b", "a")) == ChainVector(X(g, proj, "", "a.b", "a")));
  // a is associated: q = q~ a with p trivial.
  CHECK(h_proj(cx, X(g, proj, "a", "e_v", "b.a"))
        == ChainVector(X(g, proj, "", "e_v", "b")) - ChainVector(X(g, proj, "", "b", "b.b")));
  CHECK(h_proj(cx, X(g, proj, "a", "e_v", "a"))
        == ChainVector(X(g, proj, "", "e_v", "e_v")) - ChainVector(X(g, proj, "", "b", "b")));

  GraphFile      r3 = corpus("rose3");
  LeavittComplex c3(r3.graph, r3.associated_choice());
  Graph const&   h = r3.graph;
  CHECK(h_proj(c3, X(h, proj, "a", "e_v", "c.a"))
        == ChainVector(X(h, proj, "", "e_v", "c")) - ChainVector(X(h, proj, "", "b", "c.b"))
               - ChainVector(X(h, proj, "", "c", "c.c")));
}

TEST_CASE("dh + hd = Id on the corpus") {
  for (auto const& name : corpus_names) {
    GraphFile f = corpus(name);
    for (auto mode : {inj, proj}) {
      LeavittComplex cx(f.graph, mode == inj ? f.special_choice() : f.associated_choice());
      Bimodule       bm(cx);
      CheckReport    r = check_homotopy(bm, {4, -2, 2}, {5, 100});
      CHECK_MESSAGE(r.passed(), name, " ", format_line(r));
      CHECK(r.checked > 100);
    }
  }
}

TEST_CASE("homotopy is linear, lowers degree and squares to zero on the injective side") {
  GraphFile      f = corpus("three_vertex");
  LeavittComplex cx(f.graph, f.special_choice());
  Bimodule       bm(cx);
  auto           basis = cx.window_basis({3, -2, 2});
  ChainVector    sum;
  ChainVector    images;
  for (std::size_t k = 0; k < basis.size(); k += 7) {
    Scalar c(static_cast<long>(k % 5) - 2, 3);
    sum.add(basis[k], c);
    images.add(homotopy(bm, basis[k]), c);
  }
  CHECK(homotopy(bm, sum) == images);
  for (auto const& x : basis) {
    for (auto const& [y, c] : homotopy(bm, x)) {
      CHECK(y.degree() == x.degree() - 1);
    }
    CHECK(homotopy(bm, homotopy(bm, x)).is_zero());
  }
}

TEST_CASE("negative control: dropping the sibling sum breaks the homotopy") {
  GraphFile      f = corpus("rose2");
  Graph const&   g = f.graph;
  LeavittComplex broken(g, f.special_choice(), ComplexOptions{true});
  Bimodule       bm(broken);
  CHECK(broken.differential(X(g, inj, "a", "a", "e_v"))
        == ChainVector(X(g, inj, "", "e_v", "e_v")));
  CheckReport r = check_homotopy(bm, {4, -2, 2}, {0, 100});
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.counterexamples.empty());
  // The differential still squares to zero: it always lands on unit duals,
  // which it kills.
  CHECK(check_d_squared(broken, {4, -2, 2}).passed());
}
