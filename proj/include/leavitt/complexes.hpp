// Window truncations of the injective Leavitt complex (components
// I^l = sum_i I_i^(B^l_i)) and the projective Leavitt complex
// (P^l = sum_i P_i^(Lambda^l_i)).
//
// Only basis vectors exist: a module basis symbol paired with a zeta index
// (p, q). Differentials are computed without any cap; a Window only decides
// which vectors are enumerated and which identities are asserted.

#ifndef LEAVITT_COMPLEXES_HPP_
#define LEAVITT_COMPLEXES_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "report.hpp"
#include "rsz.hpp"
#include "scalar.hpp"

namespace leavitt {

  enum class Mode { injective, projective };

  [[nodiscard]] std::string to_string(Mode m);
  [[nodiscard]] ChoiceKind  choice_kind(Mode m);

  struct Window {
    std::size_t max_len = 4;
    int         lo      = -2;
    int         hi      = 2;
  };

  [[nodiscard]] std::string to_string(Window const& w);

  // symbol empty: e_i^# (injective) or e_i (projective); otherwise the edge
  // alpha^# with t(alpha) = i, or alpha with s(alpha) = i. The vertex i is
  // s(q) for injective vectors and t(p) for projective ones.
  struct CxBasis {
    Mode                  mode = Mode::injective;
    std::optional<EdgeId> symbol;
    Path                  p;
    Path                  q;

    [[nodiscard]] VertexId vertex() const {
      return mode == Mode::injective ? q.source() : p.target();
    }
    [[nodiscard]] int degree() const noexcept {
      return static_cast<int>(q.length()) - static_cast<int>(p.length());
    }

    friend std::strong_ordering operator<=>(CxBasis const& a, CxBasis const& b);
    friend bool operator==(CxBasis const&, CxBasis const&) = default;
  };

  using ChainVector = LinearCombination<CxBasis>;
  using BasisMap    = std::function<ChainVector(CxBasis const&)>;

  [[nodiscard]] std::string to_string(Graph const& g, CxBasis const& x);
  // No spaces, so it can sit inside a report line.
  [[nodiscard]] std::string to_string(Graph const& g, ChainVector const& x);

  [[nodiscard]] ChainVector apply(BasisMap const& f, ChainVector const& x);

  [[nodiscard]] bool in_window(CxBasis const& x, Window const& w);
  [[nodiscard]] bool in_window(ChainVector const& x, Window const& w);

  struct ComplexOptions {
    // Negative control: omit the S(alpha) sum from the special case of the
    // injective differential.
    bool drop_special_sum = false;
  };

  class LeavittComplex {
   public:
    // Injective for a special choice, projective for an associated one.
    // Throws Error naming a sink (injective) or a source (projective).
    LeavittComplex(Graph graph, EdgeChoice choice, ComplexOptions opts = {});

    [[nodiscard]] Mode                     mode() const noexcept { return _mode; }
    [[nodiscard]] Graph const&             graph() const noexcept { return _graph; }
    [[nodiscard]] EdgeChoice const&        choice() const noexcept { return _choice; }
    [[nodiscard]] RadicalSquareZero const& ring() const noexcept { return _ring; }

    [[nodiscard]] bool is_basis(CxBasis const& x) const;

    [[nodiscard]] ChainVector differential(CxBasis const& x) const;
    [[nodiscard]] ChainVector differential(ChainVector const& x) const;

    // Left A-action on the module symbol; the zeta index is untouched.
    [[nodiscard]] ChainVector act(ABasis const& a, CxBasis const& x) const;
    [[nodiscard]] ChainVector act(AElement const& a, ChainVector const& x) const;

    // Module basis symbols at vertex i, unit first.
    [[nodiscard]] std::vector<std::optional<EdgeId>> symbols(VertexId i) const;

    // Every basis vector with degree in [lo, hi] and both paths of length at
    // most max_len, in CxBasis order.
    [[nodiscard]] std::vector<CxBasis> window_basis(Window const& w) const;

   private:
    Graph             _graph;
    EdgeChoice        _choice;
    Mode              _mode;
    RadicalSquareZero _ring;
    ComplexOptions    _opts;
  };

  // Operators whose images a vector must keep inside the window before an
  // identity involving them is asserted on it.
  enum class Op { d, dd, h, dh, hd };

  [[nodiscard]] bool window_safe(CxBasis const&     x,
                                 Window const&      w,
                                 std::span<Op const> ops,
                                 BasisMap const&    d,
                                 BasisMap const&    h = {});

  // d(d(x)) = 0 on every doubly safe window vector; also checks that d raises
  // degree by one and lands on basis vectors.
  [[nodiscard]] CheckReport check_d_squared(LeavittComplex const& cx, Window const& w);

  // d(a.x) = a.d(x) for every basis element a of A and every d-safe x.
  [[nodiscard]] CheckReport check_A_linearity(LeavittComplex const& cx,
                                              Window const&         w);

}  // namespace leavitt

#endif  // LEAVITT_COMPLEXES_HPP_
