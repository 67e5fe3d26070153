#include "leavitt/complexes.hpp"

#include <algorithm>

namespace leavitt {

  std::string to_string(Mode m) {
    return m == Mode::injective ? "injective" : "projective";
  }

  ChoiceKind choice_kind(Mode m) {
    return m == Mode::injective ? ChoiceKind::special : ChoiceKind::associated;
  }

  std::string to_string(Window const& w) {
    return "N=" + std::to_string(w.max_len) + ",deg=" + std::to_string(w.lo) + ".."
           + std::to_string(w.hi);
  }

  std::strong_ordering operator<=>(CxBasis const& a, CxBasis const& b) {
    if (auto c = a.mode <=> b.mode; c != 0) {
      return c;
    }
    if (auto c = a.degree() <=> b.degree(); c != 0) {
      return c;
    }
    if (auto c = a.p <=> b.p; c != 0) {
      return c;
    }
    if (auto c = a.q <=> b.q; c != 0) {
      return c;
    }
    return a.symbol <=> b.symbol;
  }

  std::string to_string(Graph const& g, CxBasis const& x) {
    std::string sym;
    if (x.symbol) {
      sym = g.name(*x.symbol);
    } else {
      sym = "e_" + g.name(x.vertex());
    }
    if (x.mode == Mode::injective) {
      sym += "^#";
    }
    return sym + "@(" + to_string(g, x.p) + "," + to_string(g, x.q) + ")";
  }

  std::string to_string(Graph const& g, ChainVector const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    for (auto const& [b, c] : x) {
      if (!out.empty() || c < 0) {
        out += c < 0 ? "-" : "+";
      }
      if (abs(c) != 1) {
        out += to_string(Scalar(abs(c))) + "*";
      }
      out += to_string(g, b);
    }
    return out;
  }

  ChainVector apply(BasisMap const& f, ChainVector const& x) {
    return apply_linear<CxBasis>(f, x);
  }

  bool in_window(CxBasis const& x, Window const& w) {
    return x.p.length() <= w.max_len && x.q.length() <= w.max_len
           && x.degree() >= w.lo && x.degree() <= w.hi;
  }

  bool in_window(ChainVector const& x, Window const& w) {
    return std::all_of(x.begin(), x.end(),
                       [&](auto const& term) { return in_window(term.first, w); });
  }

  ////////////////////////////////////////////////////////////////////////
  // LeavittComplex
  ////////////////////////////////////////////////////////////////////////

  LeavittComplex::LeavittComplex(Graph graph, EdgeChoice choice, ComplexOptions opts)
      : _graph(std::move(graph)),
        _choice(std::move(choice)),
        _mode(_choice.kind() == ChoiceKind::special ? Mode::injective
                                                    : Mode::projective),
        _ring(_graph),
        _opts(opts) {
    auto bad = _mode == Mode::injective ? sinks(_graph) : sources(_graph);
    if (!bad.empty()) {
      throw Error("the " + to_string(_mode) + " Leavitt complex needs a graph without "
                  + (_mode == Mode::injective ? "sinks" : "sources") + ", but vertex '"
                  + _graph.name(bad.front()) + "' is a "
                  + (_mode == Mode::injective ? "sink" : "source"));
    }
  }

  std::vector<std::optional<EdgeId>> LeavittComplex::symbols(VertexId i) const {
    std::vector<std::optional<EdgeId>> out{std::nullopt};
    auto edges = _mode == Mode::injective ? _graph.in_edges(i) : _graph.out_edges(i);
    for (auto e : edges) {
      out.emplace_back(e);
    }
    return out;
  }

  bool LeavittComplex::is_basis(CxBasis const& x) const {
    if (x.mode != _mode || !is_index_pair(x.p, x.q, _choice)) {
      return false;
    }
    if (!x.symbol) {
      return true;
    }
    VertexId end = _mode == Mode::injective ? _graph.dst(*x.symbol)
                                            : _graph.src(*x.symbol);
    return end == x.vertex();
  }

  ChainVector LeavittComplex::differential(CxBasis const& x) const {
    ChainVector out;
    if (_mode == Mode::injective) {
      if (!x.symbol) {
        return out;
      }
      EdgeId   alpha = *x.symbol;
      VertexId s     = _graph.src(alpha);
      if (x.q.is_trivial() && !x.p.is_trivial() && x.p.last_edge() == alpha
          && _choice.is_chosen(alpha)) {
        // p = alpha p^ with alpha special, q = e_i.
        Path p_hat = truncations(_graph, x.p).hat;
        out.add(CxBasis{_mode, std::nullopt, p_hat, Path::trivial(s)}, 1);
        if (!_opts.drop_special_sum) {
          for (auto beta : siblings(_graph, _choice, alpha)) {
            out.add(CxBasis{_mode, std::nullopt, then_edge(_graph, p_hat, beta),
                            Path::edge(_graph, beta)},
                    -1);
          }
        }
        return out;
      }
      out.add(CxBasis{_mode, std::nullopt, x.p, edge_then(_graph, alpha, x.q)}, 1);
      return out;
    }

    if (x.symbol) {
      return out;
    }
    if (!x.p.is_trivial()) {
      // p = beta p^
      EdgeId beta = x.p.last_edge();
      out.add(CxBasis{_mode, beta, truncations(_graph, x.p).hat, x.q}, 1);
      return out;
    }
    for (auto beta : _graph.in_edges(x.vertex())) {
      out.add(CxBasis{_mode, beta, Path::trivial(_graph.src(beta)),
                      edge_then(_graph, beta, x.q)},
              1);
    }
    return out;
  }

  ChainVector LeavittComplex::differential(ChainVector const& x) const {
    return apply([this](CxBasis const& b) { return differential(b); }, x);
  }

  ChainVector LeavittComplex::act(ABasis const& a, CxBasis const& x) const {
    ChainVector out;
    if (_mode == Mode::injective) {
      for (auto const& [y, c] : _ring.act(a, InjBasis{x.vertex(), x.symbol})) {
        out.add(CxBasis{_mode, y.edge, x.p, x.q}, c);
      }
    } else {
      for (auto const& [y, c] : _ring.act(a, ProjBasis{x.vertex(), x.symbol})) {
        out.add(CxBasis{_mode, y.edge, x.p, x.q}, c);
      }
    }
    return out;
  }

  ChainVector LeavittComplex::act(AElement const& a, ChainVector const& x) const {
    ChainVector out;
    for (auto const& [b, cb] : a) {
      for (auto const& [y, cy] : x) {
        out.add(act(b, y), cb * cy);
      }
    }
    return out;
  }

  std::vector<CxBasis> LeavittComplex::window_basis(Window const& w) const {
    std::vector<CxBasis> out;
    if (w.lo > w.hi) {
      return out;
    }
    std::vector<Path> paths = enumerate_paths(_graph, w.max_len);
    for (auto const& q : paths) {
      for (auto const& p : paths) {
        int deg = static_cast<int>(q.length()) - static_cast<int>(p.length());
        if (deg < w.lo || deg > w.hi || !is_index_pair(p, q, _choice)) {
          continue;
        }
        VertexId i = _mode == Mode::injective ? q.source() : p.target();
        for (auto const& sym : symbols(i)) {
          out.push_back(CxBasis{_mode, sym, p, q});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Safety and checks
  ////////////////////////////////////////////////////////////////////////

  bool window_safe(CxBasis const&      x,
                   Window const&       w,
                   std::span<Op const> ops,
                   BasisMap const&     d,
                   BasisMap const&     h) {
    if (!in_window(x, w)) {
      return false;
    }
    auto need_h = [&]() -> BasisMap const& {
      if (!h) {
        throw Error("window_safe: homotopy operator requested but not supplied");
      }
      return h;
    };
    for (Op op : ops) {
      ChainVector image;
      switch (op) {
        case Op::d: image = d(x); break;
        case Op::dd: image = leavitt::apply(d, d(x)); break;
        case Op::h: image = need_h()(x); break;
        case Op::dh: image = leavitt::apply(d, need_h()(x)); break;
        case Op::hd: image = leavitt::apply(need_h(), d(x)); break;
      }
      if (!in_window(image, w)) {
        return false;
      }
    }
    return true;
  }

  CheckReport check_d_squared(LeavittComplex const& cx, Window const& w) {
    CheckReport r = new_report("d2", to_string(cx.mode()), to_string(w));
    BasisMap    d = [&](CxBasis const& b) { return cx.differential(b); };
    Op const    ops[] = {Op::d, Op::dd};
    Graph const& g    = cx.graph();
    for (auto const& x : cx.window_basis(w)) {
      if (!window_safe(x, w, ops, d)) {
        continue;
      }
      ++r.checked;
      ChainVector dx = d(x);
      for (auto const& [y, c] : dx) {
        if (y.degree() != x.degree() + 1 || !cx.is_basis(y)) {
          r.fail(to_string(g, x) + "->" + to_string(g, y));
        }
      }
      ChainVector ddx = cx.differential(dx);
      if (!ddx.is_zero()) {
        r.fail(to_string(g, x) + ";dd=" + to_string(g, ddx));
      }
    }
    return r;
  }

  CheckReport check_A_linearity(LeavittComplex const& cx, Window const& w) {
    CheckReport r = new_report("alinear", to_string(cx.mode()), to_string(w));
    BasisMap    d = [&](CxBasis const& b) { return cx.differential(b); };
    Op const    ops[] = {Op::d};
    Graph const& g    = cx.graph();
    auto const  gens  = cx.ring().basis();
    for (auto const& x : cx.window_basis(w)) {
      if (!window_safe(x, w, ops, d)) {
        continue;
      }
      ChainVector dx = d(x);
      for (auto const& a : gens) {
        ++r.checked;
        ChainVector lhs = cx.differential(cx.act(a, x));
        ChainVector rhs = cx.act(AElement(a), dx);
        if (lhs != rhs) {
          r.fail("a=" + to_string(g, a) + ";x=" + to_string(g, x) + ";d(ax)="
                 + to_string(g, lhs) + ";a.dx=" + to_string(g, rhs));
        }
      }
    }
    return r;
  }

}  // namespace leavitt
