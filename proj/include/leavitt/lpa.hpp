// The Leavitt path algebra L(E) over the rationals, in the basis of
// admissible pairs.
//
// Product convention. Products compose like functions: in x*y the factor y
// acts first. The basis monomial (p, q) stands for p^* q, where q is traversed
// first (from s(q) to t(q) = t(p)) and p^* then returns to s(p). Relation (1)
// reads t(e) e = e s(e) = e, CK1 reads e f^* = delta_{e,f} t(e) and CK2 reads
// sum_{s(e)=v} e^* e = v.
//
// In (p^* q)(u^* v) the middle q u^* cancels edge by edge starting from the
// FIRST traversed edges of q and u. A monomial whose two paths end in the same
// special edge g is rewritten with CK2:
//   (g p')^* (g q') = p'^* q' - sum_{b in S(g)} (b p')^* (b q').

#ifndef LEAVITT_LPA_HPP_
#define LEAVITT_LPA_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "graph.hpp"
#include "scalar.hpp"

namespace leavitt {

  struct Monomial {
    Path p;
    Path q;

    [[nodiscard]] int degree() const noexcept {
      return static_cast<int>(q.length()) - static_cast<int>(p.length());
    }

    // Ordered by (degree, p, q).
    friend std::strong_ordering operator<=>(Monomial const& a, Monomial const& b);
    friend bool operator==(Monomial const&, Monomial const&) = default;
  };

  using AlgebraElement = LinearCombination<Monomial>;

  struct Degree {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind  = Kind::zero;
    int  value = 0;

    friend bool operator==(Degree const&, Degree const&) = default;
  };

  [[nodiscard]] Degree degree(AlgebraElement const& x);
  [[nodiscard]] AlgebraElement homogeneous_component(AlgebraElement const& x, int l);

  class LeavittAlgebra {
   public:
    // Needs a special choice; the graph must have no sinks.
    LeavittAlgebra(Graph graph, EdgeChoice special);

    [[nodiscard]] Graph const&      graph() const noexcept { return _graph; }
    [[nodiscard]] EdgeChoice const& choice() const noexcept { return _special; }

    [[nodiscard]] AlgebraElement vertex(VertexId v) const;
    [[nodiscard]] AlgebraElement edge(EdgeId e) const;
    [[nodiscard]] AlgebraElement ghost(EdgeId e) const;
    [[nodiscard]] AlgebraElement one() const;

    // Looks up a vertex or edge by name; ghost=true asks for e^*.
    // Throws Error on an unknown id or a ghost vertex.
    [[nodiscard]] AlgebraElement generator(std::string_view name,
                                           bool             ghost = false) const;

    [[nodiscard]] bool is_basis(Monomial const& m) const;

    // p^* q in normal form; zero when t(p) != t(q).
    [[nodiscard]] AlgebraElement normalize(Path const& p, Path const& q) const;
    [[nodiscard]] AlgebraElement normalize(AlgebraElement const& x) const;

    [[nodiscard]] AlgebraElement multiply(Monomial const& x, Monomial const& y) const;
    [[nodiscard]] AlgebraElement multiply(AlgebraElement const& x,
                                          AlgebraElement const& y) const;

    // x * g in L(E), with g acting first. Named for the right-multiplication
    // steps (p^* q) b^* used by the injective homotopy.
    [[nodiscard]] AlgebraElement right_mult(AlgebraElement const& x,
                                            AlgebraElement const& g) const {
      return multiply(x, g);
    }

   private:
    Graph      _graph;
    EdgeChoice _special;
  };

  // Expression form, e.g. "v - b* . b" or "2/3 . a* . a". Parses back with
  // parse_expr.
  [[nodiscard]] std::string to_string(Graph const& g, Monomial const& m);
  [[nodiscard]] std::string to_string(Graph const& g, AlgebraElement const& x);

  // Grammar:
  //   expr     := ['-'] term (('+'|'-') term)*
  //   term     := (rational '.')? factor ('.' factor)*  |  rational
  //   factor   := IDENT '*'? | '(' expr ')'
  //   rational := INT ('/' INT)?
  // Throws ParseError (line 1, column of the offending token).
  [[nodiscard]] AlgebraElement parse_expr(LeavittAlgebra const& algebra,
                                          std::string_view      text);

}  // namespace leavitt

#endif  // LEAVITT_LPA_HPP_
