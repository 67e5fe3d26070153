#include "leavitt/independence.hpp"

#include <map>
#include <random>
#include <set>

namespace leavitt {

  PathPair pair_bijection(Graph const&      g,
                          EdgeChoice const& c,
                          EdgeChoice const& c2,
                          PathPair const&   pq) {
    auto const& [p, q] = pq;
    if (!is_index_pair(p, q, c)) {
      throw Error("(" + to_string(g, p) + "," + to_string(g, q)
                  + ") is not an index pair for the first choice");
    }
    if (p.is_trivial() || q.is_trivial()) {
      return pq;
    }
    if (c.kind() == ChoiceKind::special) {
      EdgeId shared = p.last_edge();
      if (q.last_edge() != shared || !c2.is_chosen(shared)) {
        return pq;
      }
      EdgeId alpha = c.pick(g.src(shared));
      return {then_edge(g, truncations(g, p).hat, alpha),
              then_edge(g, truncations(g, q).hat, alpha)};
    }
    EdgeId shared = p.first_edge();
    if (q.first_edge() != shared || !c2.is_chosen(shared)) {
      return pq;
    }
    EdgeId alpha = c.pick(g.dst(shared));
    return {edge_then(g, alpha, truncations(g, p).tilde),
            edge_then(g, alpha, truncations(g, q).tilde)};
  }

  ChainVector change_choice(Bimodule const& from, Bimodule const& to, CxBasis const& x) {
    Monomial m = from.index_monomial(x);
    return to.embed(to.algebra().normalize(m.p, m.q), x.symbol);
  }

  ChainVector change_choice(Bimodule const&    from,
                            Bimodule const&    to,
                            ChainVector const& x) {
    ChainVector out;
    for (auto const& [y, c] : x) {
      out.add(change_choice(from, to, y), c);
    }
    return out;
  }

  std::size_t rank(std::vector<ChainVector> const& vectors) {
    // Pivot rows keyed by their leading basis vector.
    std::map<CxBasis, ChainVector> pivots;
    for (ChainVector v : vectors) {
      while (!v.is_zero()) {
        auto const& [lead, coeff] = *v.begin();
        auto it = pivots.find(lead);
        if (it == pivots.end()) {
          CxBasis key = lead;
          pivots.emplace(std::move(key), std::move(v));
          break;
        }
        Scalar factor = coeff / it->second.begin()->second;
        v.add(it->second, -factor);
      }
    }
    return pivots.size();
  }

  CheckReport check_independence(Bimodule const&      from,
                                 Bimodule const&      to,
                                 Window const&        w,
                                 SampleOptions const& opts) {
    LeavittComplex const& cx  = from.complex();
    LeavittComplex const& cx2 = to.complex();
    Graph const&          g   = cx.graph();
    CheckReport r = new_report("independence", to_string(cx.mode()), to_string(w));
    if (cx.mode() != cx2.mode()) {
      r.fail("mode-mismatch");
      return r;
    }
    bool const same = cx.choice().picks() == cx2.choice().picks();

    auto omega  = [&](auto const& x) { return change_choice(from, to, x); };
    auto omega2 = [&](auto const& x) { return change_choice(to, from, x); };

    auto const basis  = cx.window_basis(w);
    auto const basis2 = cx2.window_basis(w);
    auto const gens   = cx.ring().basis();

    for (auto const& x : basis) {
      ++r.checked;
      std::string tag = "x=" + to_string(g, x);
      ChainVector wx  = omega(x);
      if (same && wx != ChainVector(x)) {
        r.fail("identity:" + tag);
      }
      if (cx2.differential(wx) != omega(cx.differential(x))) {
        r.fail("chain:" + tag);
      }
      for (auto const& a : gens) {
        if (omega(cx.act(a, x)) != cx2.act(AElement(a), wx)) {
          r.fail("alinear:a=" + to_string(g, a) + ";" + tag);
        }
      }
      if (omega2(wx) != ChainVector(x)) {
        r.fail("left-inverse:" + tag);
      }
      if (!in_window(wx, w)) {
        r.fail("window:" + tag);
      }
    }
    for (auto const& y : basis2) {
      ++r.checked;
      if (omega(omega2(y)) != ChainVector(y)) {
        r.fail("right-inverse:y=" + to_string(g, y));
      }
    }

    // Slice dimensions: the index bijection and the rank of omega.
    for (int l = w.lo; l <= w.hi; ++l) {
      std::vector<ChainVector> images;
      std::size_t              dim2 = 0;
      for (auto const& x : basis) {
        if (x.degree() == l) {
          images.push_back(omega(x));
        }
      }
      for (auto const& y : basis2) {
        dim2 += y.degree() == l ? 1 : 0;
      }
      ++r.checked;
      if (images.size() != dim2 || rank(images) != dim2) {
        r.fail("rank:deg=" + std::to_string(l) + ",dim=" + std::to_string(images.size())
               + ",dim'=" + std::to_string(dim2));
      }
      for (auto i : g.vertices()) {
        auto src = enumerate_index_set(g, cx.choice(), i, l, w.max_len);
        auto dst = enumerate_index_set(g, cx2.choice(), i, l, w.max_len);
        std::set<PathPair> target(dst.begin(), dst.end());
        std::set<PathPair> image;
        ++r.checked;
        for (auto const& pq : src) {
          PathPair out = pair_bijection(g, cx.choice(), cx2.choice(), pq);
          if (!target.contains(out)
              || pair_bijection(g, cx2.choice(), cx.choice(), out) != pq) {
            r.fail("bijection:(" + to_string(g, pq.first) + "," + to_string(g, pq.second)
                   + ")");
          }
          image.insert(std::move(out));
        }
        if (src.size() != dst.size() || image.size() != src.size()) {
          r.fail("cardinality:vertex=" + g.name(i) + ",deg=" + std::to_string(l) + ","
                 + std::to_string(src.size()) + "/" + std::to_string(dst.size()));
        }
      }
    }

    if (basis.empty()) {
      return r;
    }
    auto const      pool = from.monomials(2);
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (std::size_t k = 0; k < opts.samples; ++k) {
      CxBasis const& x  = basis[pick(rng)];
      AlgebraElement b  = sample_b(pool, rng);
      AlgebraElement b2 = to.algebra().normalize(b);
      std::string tag = "x=" + to_string(g, x) + ";b=" + to_string(from.algebra().graph(), b);
      for (char& c : tag) {
        if (c == ' ') {
          c = '_';
        }
      }
      r.samples.push_back(tag);
      ++r.checked;
      if (omega(from.right_action(x, b)) != to.right_action(omega(x), b2)) {
        r.fail("blinear:" + tag);
      }
    }
    return r;
  }

}  // namespace leavitt
