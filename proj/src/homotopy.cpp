#include "leavitt/homotopy.hpp"

#include <random>

namespace leavitt {

  ChainVector h_inj(Bimodule const& bm, CxBasis const& x) {
    ChainVector out;
    if (x.symbol) {
      return out;
    }
    LeavittAlgebra const& L = bm.algebra();
    AlgebraElement const  m(Monomial{x.p, x.q});
    for (auto beta : L.graph().out_edges(x.vertex())) {
      out += bm.psi_beta(L.right_mult(m, L.ghost(beta)), beta);
    }
    return out;
  }

  ChainVector h_proj(LeavittComplex const& cx, CxBasis const& x) {
    ChainVector out;
    if (!x.symbol) {
      return out;
    }
    Graph const& g     = cx.graph();
    EdgeId       alpha = *x.symbol;
    VertexId     t     = g.dst(alpha);
    if (x.p.is_trivial() && !x.q.is_trivial() && x.q.first_edge() == alpha
        && cx.choice().is_chosen(alpha)) {
      Path q_tilde = truncations(g, x.q).tilde;
      out.add(CxBasis{Mode::projective, std::nullopt, Path::trivial(t), q_tilde}, 1);
      for (auto beta : siblings(g, cx.choice(), alpha)) {
        out.add(CxBasis{Mode::projective, std::nullopt, Path::edge(g, beta),
                        edge_then(g, beta, q_tilde)},
                -1);
      }
      return out;
    }
    out.add(CxBasis{Mode::projective, std::nullopt, then_edge(g, x.p, alpha), x.q}, 1);
    return out;
  }

  ChainVector homotopy(Bimodule const& bm, CxBasis const& x) {
    return bm.mode() == Mode::injective ? h_inj(bm, x) : h_proj(bm.complex(), x);
  }

  ChainVector homotopy(Bimodule const& bm, ChainVector const& x) {
    return leavitt::apply([&](CxBasis const& b) { return homotopy(bm, b); }, x);
  }

  CheckReport check_homotopy(Bimodule const& bm, Window const& w, SampleOptions const& opts) {
    LeavittComplex const& cx = bm.complex();
    Graph const&          g  = cx.graph();
    CheckReport           r  = new_report("homotopy", to_string(cx.mode()), to_string(w));
    BasisMap              d  = [&](CxBasis const& b) { return cx.differential(b); };
    BasisMap              h  = [&](CxBasis const& b) { return homotopy(bm, b); };
    Op const              ops[] = {Op::d, Op::h, Op::dh, Op::hd};

    auto const basis = cx.window_basis(w);
    std::vector<CxBasis> safe;
    for (auto const& x : basis) {
      if (!window_safe(x, w, ops, d, h)) {
        continue;
      }
      safe.push_back(x);
      ++r.checked;
      ChainVector hx  = h(x);
      ChainVector sum = cx.differential(hx) + leavitt::apply(h, d(x));
      if (sum != ChainVector(x)) {
        r.fail("x=" + to_string(g, x) + ";dh+hd=" + to_string(g, sum));
      }
      for (auto const& [y, c] : hx) {
        if (y.degree() != x.degree() - 1 || !cx.is_basis(y)) {
          r.fail("degree:x=" + to_string(g, x) + "->" + to_string(g, y));
        }
      }
      ChainVector hh = leavitt::apply(h, hx);
      if (!hh.is_zero()) {
        if (cx.mode() == Mode::injective) {
          r.fail("hh:x=" + to_string(g, x) + ";hh=" + to_string(g, hh));
        } else {
          r.samples.push_back("info:hh-nonzero:x=" + to_string(g, x));
        }
      }
    }

    if (basis.empty()) {
      return r;
    }
    auto const      pool = bm.monomials(2);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::size_t const n = std::max<std::size_t>(opts.samples, 100);
    for (std::size_t k = 0; k < n; ++k) {
      CxBasis const& x   = basis[pick(rng)];
      AlgebraElement b   = sample_b(pool, rng);
      std::string    tag = "x=" + to_string(g, x) + ";b=" + to_string(bm.algebra().graph(), b);
      for (char& c : tag) {
        if (c == ' ') {
          c = '_';
        }
      }
      r.samples.push_back(tag);
      ++r.checked;
      if (homotopy(bm, bm.right_action(x, b)) != bm.right_action(h(x), b)) {
        r.fail("blinear:" + tag);
      }
    }
    return r;
  }

}  // namespace leavitt
