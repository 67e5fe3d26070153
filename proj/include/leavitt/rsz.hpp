// The radical square zero algebra A = kE / kE^{>=2} and its indecomposable
// modules P_i = A e_i and I_i = D(e_i A).

#ifndef LEAVITT_RSZ_HPP_
#define LEAVITT_RSZ_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "graph.hpp"
#include "scalar.hpp"

namespace leavitt {

  // A vertex e_i or an edge alpha, as an element of A.
  struct ABasis {
    std::optional<EdgeId> edge;  // nullopt: the vertex idempotent
    VertexId              vertex;  // meaningful only when edge is empty

    static ABasis of(VertexId v) { return {std::nullopt, v}; }
    static ABasis of(EdgeId e) { return {e, VertexId{}}; }

    friend auto operator<=>(ABasis const&, ABasis const&) = default;
  };

  using AElement = LinearCombination<ABasis>;

  // e_i^# (edge empty) or alpha^# with t(alpha) = i.
  struct InjBasis {
    VertexId              vertex;
    std::optional<EdgeId> edge;

    friend auto operator<=>(InjBasis const&, InjBasis const&) = default;
  };

  // e_i (edge empty) or alpha with s(alpha) = i.
  struct ProjBasis {
    VertexId              vertex;
    std::optional<EdgeId> edge;

    friend auto operator<=>(ProjBasis const&, ProjBasis const&) = default;
  };

  class RadicalSquareZero {
   public:
    explicit RadicalSquareZero(Graph graph);

    [[nodiscard]] Graph const& graph() const noexcept { return _graph; }

    // e_v and every edge, in id order.
    [[nodiscard]] std::vector<ABasis> basis() const;
    [[nodiscard]] AElement            one() const;

    [[nodiscard]] AElement multiply(ABasis const& x, ABasis const& y) const;
    [[nodiscard]] AElement multiply(AElement const& x, AElement const& y) const;

    [[nodiscard]] std::vector<InjBasis>  injective_basis(VertexId i) const;
    [[nodiscard]] std::vector<ProjBasis> projective_basis(VertexId i) const;

    // (a.f)(m) = f(m a) on the basis of e_i A; tabulated at construction.
    [[nodiscard]] LinearCombination<InjBasis> act(ABasis const& a,
                                                  InjBasis const& x) const;
    [[nodiscard]] LinearCombination<InjBasis> act(AElement const& a,
                                                  InjBasis const& x) const;

    // Multiplication in A restricted to A e_i.
    [[nodiscard]] LinearCombination<ProjBasis> act(ABasis const&    a,
                                                   ProjBasis const& x) const;
    [[nodiscard]] LinearCombination<ProjBasis> act(AElement const&  a,
                                                   ProjBasis const& x) const;

   private:
    Graph _graph;
    std::map<std::pair<ABasis, InjBasis>, LinearCombination<InjBasis>> _inj_action;
  };

  [[nodiscard]] std::string to_string(Graph const& g, ABasis const& a);
  [[nodiscard]] std::string to_string(Graph const& g, InjBasis const& x);
  [[nodiscard]] std::string to_string(Graph const& g, ProjBasis const& x);

}  // namespace leavitt

#endif  // LEAVITT_RSZ_HPP_
