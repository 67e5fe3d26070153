#include "leavitt/lpa.hpp"

#include <set>
#include <vector>

namespace leavitt {

  std::string to_string(Scalar const& s) {
    return s.get_str();
  }

  std::strong_ordering operator<=>(Monomial const& a, Monomial const& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
      return c;
    }
    if (auto c = a.p <=> b.p; c != 0) {
      return c;
    }
    return a.q <=> b.q;
  }

  Degree degree(AlgebraElement const& x) {
    if (x.is_zero()) {
      return {};
    }
    std::set<int> seen;
    for (auto const& [m, c] : x) {
      seen.insert(m.degree());
    }
    if (seen.size() > 1) {
      return {Degree::Kind::mixed, 0};
    }
    return {Degree::Kind::homogeneous, *seen.begin()};
  }

  AlgebraElement homogeneous_component(AlgebraElement const& x, int l) {
    AlgebraElement out;
    for (auto const& [m, c] : x) {
      if (m.degree() == l) {
        out.add(m, c);
      }
    }
    return out;
  }

  LeavittAlgebra::LeavittAlgebra(Graph graph, EdgeChoice special)
      : _graph(std::move(graph)), _special(std::move(special)) {
    if (_special.kind() != ChoiceKind::special) {
      throw Error("the Leavitt algebra basis needs a special edge choice");
    }
  }

  AlgebraElement LeavittAlgebra::vertex(VertexId v) const {
    return AlgebraElement(Monomial{Path::trivial(v), Path::trivial(v)});
  }

  AlgebraElement LeavittAlgebra::edge(EdgeId e) const {
    return AlgebraElement(
        Monomial{Path::trivial(_graph.dst(e)), Path::edge(_graph, e)});
  }

  AlgebraElement LeavittAlgebra::ghost(EdgeId e) const {
    return AlgebraElement(
        Monomial{Path::edge(_graph, e), Path::trivial(_graph.dst(e))});
  }

  AlgebraElement LeavittAlgebra::one() const {
    AlgebraElement out;
    for (auto v : _graph.vertices()) {
      out += vertex(v);
    }
    return out;
  }

  AlgebraElement LeavittAlgebra::generator(std::string_view name, bool ghost) const {
    if (auto v = _graph.find_vertex(name)) {
      if (ghost) {
        throw Error("vertex '" + std::string(name) + "' has no ghost");
      }
      return vertex(*v);
    }
    if (auto e = _graph.find_edge(name)) {
      return ghost ? this->ghost(*e) : edge(*e);
    }
    throw Error("unknown identifier '" + std::string(name) + "'");
  }

  bool LeavittAlgebra::is_basis(Monomial const& m) const {
    return is_admissible(m.p, m.q, _special);
  }

  AlgebraElement LeavittAlgebra::normalize(Path const& p, Path const& q) const {
    AlgebraElement out;
    if (p.target() != q.target()) {
      return out;
    }
    Path   pp    = p;
    Path   qq    = q;
    Scalar coeff = 1;
    // Each CK2 step strips the shared special edge; the leftover summands
    // end in a non-special edge and are already admissible.
    while (!pp.is_trivial() && !qq.is_trivial() && pp.last_edge() == qq.last_edge()
           && _special.is_chosen(pp.last_edge())) {
      EdgeId gamma = pp.last_edge();
      Path   p_hat = truncations(_graph, pp).hat;
      Path   q_hat = truncations(_graph, qq).hat;
      for (auto beta : siblings(_graph, _special, gamma)) {
        out.add(Monomial{then_edge(_graph, p_hat, beta), then_edge(_graph, q_hat, beta)},
                -coeff);
      }
      pp = std::move(p_hat);
      qq = std::move(q_hat);
    }
    out.add(Monomial{std::move(pp), std::move(qq)}, coeff);
    return out;
  }

  AlgebraElement LeavittAlgebra::normalize(AlgebraElement const& x) const {
    AlgebraElement out;
    for (auto const& [m, c] : x) {
      out.add(normalize(m.p, m.q), c);
    }
    return out;
  }

  AlgebraElement LeavittAlgebra::multiply(Monomial const& x, Monomial const& y) const {
    // (p^* q)(u^* v): cancel q u^* from the first edges.
    Path const& p = x.p;
    Path const& q = x.q;
    Path const& u = y.p;
    Path const& v = y.q;
    if (q.source() != u.source()) {
      return {};
    }
    auto const& qe = q.edges();
    auto const& ue = u.edges();
    std::size_t k  = 0;
    for (; k < qe.size() && k < ue.size(); ++k) {
      if (qe[k] != ue[k]) {
        return {};
      }
    }
    if (k == ue.size()) {
      // u is an initial segment of q: q = q'' u, leaving p^* (q'' v).
      std::vector<EdgeId> edges = v.edges();
      edges.insert(edges.end(), qe.begin() + static_cast<long>(k), qe.end());
      return normalize(p, Path::unchecked(v.source(), q.target(), std::move(edges)));
    }
    // q is an initial segment of u: u = u'' q, leaving (u'' p)^* v.
    std::vector<EdgeId> edges = p.edges();
    edges.insert(edges.end(), ue.begin() + static_cast<long>(k), ue.end());
    return normalize(Path::unchecked(p.source(), u.target(), std::move(edges)), v);
  }

  AlgebraElement LeavittAlgebra::multiply(AlgebraElement const& x,
                                          AlgebraElement const& y) const {
    AlgebraElement out;
    for (auto const& [mx, cx] : x) {
      for (auto const& [my, cy] : y) {
        out.add(multiply(mx, my), cx * cy);
      }
    }
    return out;
  }

  std::string to_string(Graph const& g, Monomial const& m) {
    std::vector<std::string> factors;
    // p^* = a_1^* a_2^* ... a_n^*
    for (auto e : m.p.edges()) {
      factors.push_back(g.name(e) + "*");
    }
    // q = b_n ... b_1
    for (auto it = m.q.edges().rbegin(); it != m.q.edges().rend(); ++it) {
      factors.push_back(g.name(*it));
    }
    if (factors.empty()) {
      return g.name(m.p.source());
    }
    std::string out;
    for (auto const& f : factors) {
      if (!out.empty()) {
        out += " . ";
      }
      out += f;
    }
    return out;
  }

  std::string to_string(Graph const& g, AlgebraElement const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [m, c] : x) {
      Scalar mag = abs(c);
      if (first) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (mag != 1) {
        out += to_string(mag) + " . ";
      }
      out += to_string(g, m);
    }
    return out;
  }

}  // namespace leavitt
