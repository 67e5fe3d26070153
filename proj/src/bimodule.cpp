#include "leavitt/bimodule.hpp"

#include <algorithm>
#include <set>

namespace leavitt {

  namespace {

    LeavittAlgebra make_algebra(LeavittComplex const& cx) {
      if (cx.mode() == Mode::injective) {
        return LeavittAlgebra(cx.graph(), cx.choice());
      }
      return LeavittAlgebra(opposite(cx.graph()), cx.choice().opposite());
    }

    std::string b_string(Bimodule const& bm, AlgebraElement const& b) {
      std::string s = to_string(bm.algebra().graph(), b);
      for (char& c : s) {
        if (c == ' ') {
          c = '_';
        }
      }
      return s;
    }

  }  // namespace

  void FreeCover::prune() {
    std::erase_if(slots, [](auto const& kv) { return kv.second.is_zero(); });
  }

  Bimodule::Bimodule(LeavittComplex const& cx) : _cx(&cx), _algebra(make_algebra(cx)) {}

  Monomial Bimodule::index_monomial(CxBasis const& x) const {
    if (mode() == Mode::injective) {
      return Monomial{x.p, x.q};
    }
    return Monomial{opposite_path(x.p), opposite_path(x.q)};
  }

  PathPair Bimodule::index_pair(Monomial const& m) const {
    if (mode() == Mode::injective) {
      return {m.p, m.q};
    }
    return {opposite_path(m.p), opposite_path(m.q)};
  }

  ChainVector Bimodule::embed(AlgebraElement const&        b,
                              std::optional<EdgeId> const& edge) const {
    Graph const& g = _cx->graph();
    ChainVector  out;
    for (auto const& [m, c] : b) {
      auto [p, q] = index_pair(m);
      if (!_cx->is_basis(CxBasis{mode(), std::nullopt, p, q})) {
        throw Error("index pair (" + to_string(g, p) + "," + to_string(g, q)
                    + ") is not valid for the " + to_string(mode()) + " complex");
      }
      CxBasis x{mode(), edge, p, q};
      if (edge) {
        VertexId end = mode() == Mode::injective ? g.dst(*edge) : g.src(*edge);
        if (end != x.vertex()) {
          continue;
        }
      }
      out.add(x, c);
    }
    return out;
  }

  ChainVector Bimodule::psi(AlgebraElement const& b) const {
    return embed(b, std::nullopt);
  }

  ChainVector Bimodule::psi_beta(AlgebraElement const& b, EdgeId beta) const {
    return embed(b, beta);
  }

  ChainVector Bimodule::phi(AlgebraElement const& b) const {
    return embed(b, std::nullopt);
  }

  ChainVector Bimodule::phi_beta(AlgebraElement const& b, EdgeId beta) const {
    return embed(b, beta);
  }

  AlgebraElement Bimodule::act_on_index(AlgebraElement const& m,
                                        AlgebraElement const& b) const {
    return mode() == Mode::injective ? _algebra.multiply(b, m) : _algebra.multiply(m, b);
  }

  AlgebraElement Bimodule::b_multiply(AlgebraElement const& b,
                                      AlgebraElement const& b2) const {
    return mode() == Mode::injective ? _algebra.multiply(b2, b)
                                     : _algebra.multiply(b, b2);
  }

  ChainVector Bimodule::right_action(CxBasis const& x, AlgebraElement const& b) const {
    return embed(act_on_index(AlgebraElement(index_monomial(x)), b), x.symbol);
  }

  ChainVector Bimodule::right_action(ChainVector const& x, AlgebraElement const& b) const {
    ChainVector out;
    for (auto const& [y, c] : x) {
      out.add(right_action(y, b), c);
    }
    return out;
  }

  ChainVector Bimodule::signed_right_action(ChainVector const&    x,
                                            AlgebraElement const& b) const {
    Degree db = degree(b);
    if (db.kind == Degree::Kind::mixed) {
      throw Error("signed right action needs a homogeneous element");
    }
    ChainVector out;
    for (auto const& [y, c] : x) {
      bool odd = (db.value * y.degree()) % 2 != 0;
      out.add(right_action(y, b), odd ? -c : c);
    }
    return out;
  }

  FreeCover Bimodule::split(CxBasis const& x) const {
    FreeCover      f;
    AlgebraElement m(index_monomial(x));
    if (x.symbol) {
      f.slots[*x.symbol] = m;
    } else {
      f.slot0 = m;
    }
    return f;
  }

  FreeCover Bimodule::split(ChainVector const& x) const {
    FreeCover f;
    for (auto const& [y, c] : x) {
      FreeCover part = split(y);
      f.slot0.add(part.slot0, c);
      for (auto const& [e, b] : part.slots) {
        f.slots[e].add(b, c);
      }
    }
    f.prune();
    return f;
  }

  ChainVector Bimodule::cover_map(FreeCover const& f) const {
    ChainVector out = embed(f.slot0, std::nullopt);
    for (auto const& [e, b] : f.slots) {
      out += embed(b, e);
    }
    return out;
  }

  FreeCover Bimodule::cover_action(FreeCover const& f, AlgebraElement const& b) const {
    FreeCover out;
    out.slot0 = act_on_index(f.slot0, b);
    for (auto const& [e, s] : f.slots) {
      out.slots[e] = act_on_index(s, b);
    }
    out.prune();
    return out;
  }

  std::vector<Monomial> Bimodule::monomials(std::size_t max_len) const {
    std::vector<Monomial> out;
    auto                  paths = enumerate_paths(_algebra.graph(), max_len);
    for (auto const& p : paths) {
      for (auto const& q : paths) {
        Monomial m{p, q};
        if (p.target() == q.target() && _algebra.is_basis(m)) {
          out.push_back(std::move(m));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  AlgebraElement sample_b(std::vector<Monomial> const& pool, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Monomial const& m = pool[pick(rng)];
    AlgebraElement  b(m);
    if (rng() % 5 == 0) {
      for (int tries = 0; tries < 8; ++tries) {
        Monomial const& m2 = pool[pick(rng)];
        if (m2.degree() == m.degree() && !(m2 == m)) {
          b.add(m2, Scalar(-2, 3));
          break;
        }
      }
    }
    return b;
  }

  CheckReport check_bimodule(Bimodule const& bm, Window const& w, SampleOptions const& opts) {
    LeavittComplex const& cx = bm.complex();
    Graph const&          g  = cx.graph();
    CheckReport           r  = new_report("bimodule", to_string(cx.mode()), to_string(w));
    auto const            basis = cx.window_basis(w);
    AlgebraElement const  one   = bm.algebra().one();

    // Unit law, splitting and the direct sum decomposition on the full window.
    for (auto const& x : basis) {
      ++r.checked;
      ChainVector xv(x);
      if (bm.right_action(x, one) != xv) {
        r.fail("unit:x=" + to_string(g, x));
      }
      FreeCover f         = bm.split(x);
      int       occupied  = (f.slot0.is_zero() ? 0 : 1) + static_cast<int>(f.slots.size());
      if (occupied != 1 || bm.cover_map(f) != xv) {
        r.fail("split:x=" + to_string(g, x));
      }
    }

    // psi and psi_beta are injective, degree preserving and jointly hit the
    // window basis exactly once.
    std::set<CxBasis> hit;
    std::size_t       images = 0;
    for (auto const& m : bm.monomials(w.max_len)) {
      if (m.degree() < w.lo || m.degree() > w.hi) {
        continue;
      }
      AlgebraElement b(m);
      std::vector<ChainVector> parts{bm.embed(b, std::nullopt)};
      for (auto e : g.edges()) {
        parts.push_back(bm.embed(b, e));
      }
      for (auto const& v : parts) {
        if (v.is_zero()) {
          continue;
        }
        ++images;
        if (v.size() != 1 || v.begin()->second != 1
            || v.begin()->first.degree() != m.degree()) {
          r.fail("embed:m=" + b_string(bm, b));
          continue;
        }
        hit.insert(v.begin()->first);
      }
    }
    if (hit.size() != images || hit.size() != basis.size()) {
      r.fail("decomposition:images=" + std::to_string(images) + ",distinct="
             + std::to_string(hit.size()) + ",window=" + std::to_string(basis.size()));
    }

    if (basis.empty()) {
      return r;
    }

    auto const pool = bm.monomials(2);
    auto const gens = cx.ring().basis();
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (std::size_t k = 0; k < opts.samples; ++k) {
      CxBasis const& x  = basis[pick(rng)];
      AlgebraElement b  = sample_b(pool, rng);
      AlgebraElement b2 = sample_b(pool, rng);
      std::string    tag = "x=" + to_string(g, x) + ";b=" + b_string(bm, b) + ";b'="
                        + b_string(bm, b2);
      r.samples.push_back(tag);
      ++r.checked;

      ChainVector xb = bm.right_action(x, b);
      if (bm.right_action(xb, b2) != bm.right_action(x, bm.b_multiply(b, b2))) {
        r.fail("assoc:" + tag);
      }
      int db = degree(b).value;
      for (auto const& [y, c] : xb) {
        if (y.degree() != x.degree() + db) {
          r.fail("degree:" + tag);
          break;
        }
      }
      if (cx.differential(xb) != bm.right_action(cx.differential(x), b)) {
        r.fail("dg:" + tag);
      }
      for (auto const& a : gens) {
        if (cx.act(AElement(a), xb) != bm.right_action(cx.act(a, x), b)) {
          r.fail("balanced:a=" + to_string(g, a) + ";" + tag);
        }
      }
      if (bm.split(xb) != bm.cover_action(bm.split(x), b)) {
        r.fail("split-linear:" + tag);
      }

      // d psi_beta(b) = psi(b beta); projective: d phi(b) = sum phi_beta(beta b).
      if (cx.mode() == Mode::injective) {
        for (auto beta : g.edges()) {
          ChainVector lhs = cx.differential(bm.psi_beta(b, beta));
          ChainVector rhs = bm.psi(bm.algebra().multiply(b, bm.algebra().edge(beta)));
          if (lhs != rhs) {
            r.fail("d-psi:beta=" + g.name(beta) + ";" + tag);
          }
        }
      } else {
        ChainVector rhs;
        for (auto beta : g.edges()) {
          rhs += bm.phi_beta(bm.algebra().multiply(bm.algebra().edge(beta), b), beta);
        }
        if (cx.differential(bm.phi(b)) != rhs) {
          r.fail("d-phi:" + tag);
        }
      }
    }
    return r;
  }

}  // namespace leavitt
