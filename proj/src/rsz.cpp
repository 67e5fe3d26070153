#include "leavitt/rsz.hpp"

namespace leavitt {

  namespace {

    // The element of A that a basis symbol of e_i A (or A e_i) stands for.
    ABasis as_element(VertexId i, std::optional<EdgeId> edge) {
      return edge ? ABasis::of(*edge) : ABasis::of(i);
    }

  }  // namespace

  RadicalSquareZero::RadicalSquareZero(Graph graph) : _graph(std::move(graph)) {
    // Dual basis: the functional x^# sends the basis element m_x of e_i A to
    // 1 and every other basis element to 0, so the coordinate of y^# in
    // a.x^# is x^#(m_y a), the coefficient of m_x in m_y a.
    for (auto const& a : basis()) {
      for (auto i : _graph.vertices()) {
        auto dual = injective_basis(i);
        for (auto const& x : dual) {
          LinearCombination<InjBasis> image;
          ABasis m_x = as_element(i, x.edge);
          for (auto const& y : dual) {
            AElement m_y_a = multiply(as_element(i, y.edge), a);
            image.add(y, m_y_a.coefficient(m_x));
          }
          _inj_action.emplace(std::make_pair(a, x), std::move(image));
        }
      }
    }
  }

  std::vector<ABasis> RadicalSquareZero::basis() const {
    std::vector<ABasis> out;
    for (auto v : _graph.vertices()) {
      out.push_back(ABasis::of(v));
    }
    for (auto e : _graph.edges()) {
      out.push_back(ABasis::of(e));
    }
    return out;
  }

  AElement RadicalSquareZero::one() const {
    AElement out;
    for (auto v : _graph.vertices()) {
      out.add(ABasis::of(v), 1);
    }
    return out;
  }

  AElement RadicalSquareZero::multiply(ABasis const& x, ABasis const& y) const {
    // Left factor acts last: e_{t(a)} a = a = a e_{s(a)}.
    if (!x.edge && !y.edge) {
      return x.vertex == y.vertex ? AElement(x) : AElement();
    }
    if (!x.edge) {
      return _graph.dst(*y.edge) == x.vertex ? AElement(y) : AElement();
    }
    if (!y.edge) {
      return _graph.src(*x.edge) == y.vertex ? AElement(x) : AElement();
    }
    return {};
  }

  AElement RadicalSquareZero::multiply(AElement const& x, AElement const& y) const {
    AElement out;
    for (auto const& [a, ca] : x) {
      for (auto const& [b, cb] : y) {
        out.add(multiply(a, b), ca * cb);
      }
    }
    return out;
  }

  std::vector<InjBasis> RadicalSquareZero::injective_basis(VertexId i) const {
    std::vector<InjBasis> out{{i, std::nullopt}};
    for (auto e : _graph.in_edges(i)) {
      out.push_back({i, e});
    }
    return out;
  }

  std::vector<ProjBasis> RadicalSquareZero::projective_basis(VertexId i) const {
    std::vector<ProjBasis> out{{i, std::nullopt}};
    for (auto e : _graph.out_edges(i)) {
      out.push_back({i, e});
    }
    return out;
  }

  LinearCombination<InjBasis> RadicalSquareZero::act(ABasis const&   a,
                                                     InjBasis const& x) const {
    return _inj_action.at({a, x});
  }

  LinearCombination<InjBasis> RadicalSquareZero::act(AElement const& a,
                                                     InjBasis const& x) const {
    LinearCombination<InjBasis> out;
    for (auto const& [b, c] : a) {
      out.add(act(b, x), c);
    }
    return out;
  }

  LinearCombination<ProjBasis> RadicalSquareZero::act(ABasis const&    a,
                                                      ProjBasis const& x) const {
    LinearCombination<ProjBasis> out;
    for (auto const& [m, c] : multiply(a, as_element(x.vertex, x.edge))) {
      // A e_i is spanned by e_i and the edges leaving i.
      out.add(ProjBasis{x.vertex, m.edge}, c);
    }
    return out;
  }

  LinearCombination<ProjBasis> RadicalSquareZero::act(AElement const&  a,
                                                      ProjBasis const& x) const {
    LinearCombination<ProjBasis> out;
    for (auto const& [b, c] : a) {
      out.add(act(b, x), c);
    }
    return out;
  }

  std::string to_string(Graph const& g, ABasis const& a) {
    return a.edge ? g.name(*a.edge) : "e_" + g.name(a.vertex);
  }

  std::string to_string(Graph const& g, InjBasis const& x) {
    return (x.edge ? g.name(*x.edge) : "e_" + g.name(x.vertex)) + "^#";
  }

  std::string to_string(Graph const& g, ProjBasis const& x) {
    return x.edge ? g.name(*x.edge) : "e_" + g.name(x.vertex);
  }

}  // namespace leavitt
