#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

  struct Rose2 {
    GraphFile      file = corpus("rose2");
    Graph const&   g    = file.graph;
    LeavittAlgebra L{file.graph, file.special_choice()};

    AlgebraElement el(Monomial const& m) const { return AlgebraElement(m); }
  };

}  // namespace

TEST_CASE("generators") {
  Rose2 r;
  CHECK(r.L.vertex(V(r.g, "v")) == r.el(M(r.g, "e_v", "e_v")));
  CHECK(r.L.edge(E(r.g, "a")) == r.el(M(r.g, "e_v", "a")));
  CHECK(r.L.ghost(E(r.g, "a")) == r.el(M(r.g, "a", "e_v")));
  CHECK(degree(r.L.edge(E(r.g, "a"))) == Degree{Degree::Kind::homogeneous, 1});
  CHECK(degree(r.L.ghost(E(r.g, "a"))) == Degree{Degree::Kind::homogeneous, -1});
  CHECK(r.L.generator("a", true) == r.L.ghost(E(r.g, "a")));
  CHECK_THROWS_AS((void)r.L.generator("zz"), Error);
  CHECK_THROWS_AS((void)r.L.generator("v", true), Error);
}

TEST_CASE("Cuntz-Krieger relations on the rose") {
  Rose2 r;
  auto a = r.L.edge(E(r.g, "a")), b = r.L.edge(E(r.g, "b"));
  auto as = r.L.ghost(E(r.g, "a")), bs = r.L.ghost(E(r.g, "b"));
  auto v = r.L.vertex(V(r.g, "v"));
  CHECK(r.L.multiply(a, as) == v);
  CHECK(r.L.multiply(b, bs) == v);
  CHECK(r.L.multiply(a, bs).is_zero());
  CHECK(r.L.multiply(as, a) == v - r.el(M(r.g, "b", "b")));
  CHECK(r.L.multiply(as, a) + r.L.multiply(bs, b) == v);
  CHECK(r.L.multiply(v, a) == a);
  CHECK(r.L.multiply(a, v) == a);
  CHECK(r.L.one() == v);
}

TEST_CASE("orthogonal vertices") {
  GraphFile f = corpus("two_cycle");
  LeavittAlgebra L(f.graph, f.special_choice());
  auto v = L.vertex(V(f.graph, "v")), w = L.vertex(V(f.graph, "w"));
  CHECK(L.multiply(v, w).is_zero());
  CHECK(L.multiply(v, v) == v);
  // a: v -> w, so w a = a = a v.
  auto a = L.edge(E(f.graph, "a"));
  CHECK(L.multiply(w, a) == a);
  CHECK(L.multiply(a, v) == a);
  CHECK(L.multiply(v, a).is_zero());
  // b^* ends at w, a starts at v.
  CHECK(L.multiply(a, L.ghost(E(f.graph, "b"))).is_zero());
  // Forced choice: a^* a = v exactly.
  CHECK(L.multiply(L.ghost(E(f.graph, "a")), a) == v);
}

TEST_CASE("degree and homogeneous components") {
  Rose2 r;
  auto v  = r.L.vertex(V(r.g, "v"));
  auto a  = r.L.edge(E(r.g, "a"));
  auto bb = r.el(M(r.g, "b", "b"));
  CHECK(degree(v - bb) == Degree{Degree::Kind::homogeneous, 0});
  CHECK(degree(v + a).kind == Degree::Kind::mixed);
  CHECK(degree(AlgebraElement()).kind == Degree::Kind::zero);
  CHECK(homogeneous_component(v + a, 1) == a);
  CHECK(homogeneous_component(AlgebraElement(), 3).is_zero());
  CHECK(homogeneous_component(v + a, 0) + homogeneous_component(v + a, 1) == v + a);
}

TEST_CASE("normal form is closed and sorted") {
  Rose2 r;
  // (a, a) is not admissible: CK2 rewrites it.
  CHECK(r.L.normalize(P(r.g, "a"), P(r.g, "a"))
        == r.el(M(r.g, "e_v", "e_v")) - r.el(M(r.g, "b", "b")));
  CHECK(r.L.normalize(P(r.g, "a.b"), P(r.g, "a.a"))
        == r.el(M(r.g, "b", "a")) - r.el(M(r.g, "b.b", "b.a")));
  auto x = r.L.normalize(P(r.g, "a.a"), P(r.g, "a.a"));
  for (auto const& [m, c] : x) {
    CHECK(r.L.is_basis(m));
  }
  CHECK(x.size() == 3);
}

TEST_CASE("p*q times q*p is p*p") {
  Rose2 r;
  auto paths = enumerate_paths(r.g, 2);
  for (auto const& p : paths) {
    for (auto const& q : paths) {
      Monomial pq{p, q}, qp{q, p}, pp{p, p};
      if (!r.L.is_basis(pq) || !r.L.is_basis(qp) || !r.L.is_basis(pp)) {
        continue;
      }
      CHECK(r.L.multiply(pq, qp) == AlgebraElement(pp));
    }
  }
}

TEST_CASE("associativity on normal-form monomials") {
  for (auto const& name : corpus_names) {
    GraphFile      f = corpus(name);
    LeavittAlgebra L(f.graph, f.special_choice());
    std::vector<Monomial> ms;
    for (auto const& p : enumerate_paths(f.graph, 2)) {
      for (auto const& q : enumerate_paths(f.graph, 2)) {
        Monomial m{p, q};
        if (p.target() == q.target() && L.is_basis(m)) {
          ms.push_back(m);
        }
      }
    }
    std::size_t step = std::max<std::size_t>(1, ms.size() / 12);
    for (std::size_t i = 0; i < ms.size(); i += step) {
      for (std::size_t j = 0; j < ms.size(); j += step) {
        for (std::size_t k = 0; k < ms.size(); k += step) {
          AlgebraElement x(ms[i]), y(ms[j]), z(ms[k]);
          CHECK(L.multiply(L.multiply(x, y), z) == L.multiply(x, L.multiply(y, z)));
        }
      }
    }
  }
}

TEST_CASE("right multiplication") {
  Rose2 r;
  auto v  = r.L.vertex(V(r.g, "v"));
  auto as = r.L.ghost(E(r.g, "a"));
  CHECK(r.L.right_mult(v, as) == r.el(M(r.g, "a", "e_v")));
  // Cancels the first edge of q.
  auto pq = r.el(M(r.g, "b", "b.a"));
  CHECK(r.L.right_mult(pq, as) == r.el(M(r.g, "b", "b")));
  CHECK(r.L.right_mult(pq, r.L.ghost(E(r.g, "b"))).is_zero());

  GraphFile f = corpus("two_cycle");
  LeavittAlgebra L(f.graph, f.special_choice());
  auto x = AlgebraElement(M(f.graph, "e_w", "a"));
  CHECK(L.right_mult(x, L.vertex(V(f.graph, "v"))) == x);
  CHECK(L.right_mult(x, L.vertex(V(f.graph, "w"))).is_zero());
}

TEST_CASE("expressions") {
  Rose2 r;
  auto v = r.L.vertex(V(r.g, "v"));
  CHECK(parse_expr(r.L, "a* . a") == v - r.el(M(r.g, "b", "b")));
  CHECK(to_string(r.g, parse_expr(r.L, "a* . a")) == "v - b* . b");
  CHECK(to_string(r.g, parse_expr(r.L, "a . a*")) == "v");
  CHECK(to_string(r.g, parse_expr(r.L, "v . v")) == "v");
  CHECK(parse_expr(r.L, "2/3 . v + v") == Scalar(5, 3) * v);
  CHECK(parse_expr(r.L, "-(a - a)").is_zero());
  CHECK(to_string(r.g, AlgebraElement()) == "0");

  // Printing round-trips.
  auto x = r.L.normalize(P(r.g, "a.a"), P(r.g, "b.a"));
  x += Scalar(-3, 4) * r.L.edge(E(r.g, "b"));
  CHECK(parse_expr(r.L, to_string(r.g, x)) == x);

  GraphFile f = corpus("two_cycle");
  LeavittAlgebra L(f.graph, f.special_choice());
  CHECK(parse_expr(L, "a . b*").is_zero());

  auto column = [&](std::string const& text) -> std::size_t {
    try {
      (void)parse_expr(r.L, text);
    } catch (ParseError const& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column("a . ") > 0);
  CHECK(column("a . q") == 5);
  CHECK(column("a + + b") == 5);
  CHECK(column("(a") > 0);
  CHECK(column("1/0") > 0);
}
