#include "leavitt/oracle.hpp"

#include <map>
#include <optional>

namespace leavitt::oracle {

  namespace {

    using Kind = Symbol::Kind;
    using WordSum = std::map<Word, Scalar>;

    Symbol vtx(VertexId v) { return {Kind::vertex, v.value}; }
    Symbol edg(std::uint32_t e) { return {Kind::edge, e}; }
    Symbol gst(std::uint32_t e) { return {Kind::ghost, e}; }

    // Replacement for an adjacent pair (x, y): nullopt if the pair is not a
    // redex, otherwise a linear combination of replacement words (empty map
    // meaning zero).
    std::optional<WordSum> rewrite_pair(Graph const&      g,
                                        EdgeChoice const& special,
                                        Symbol            x,
                                        Symbol            y) {
      auto s = [&](std::uint32_t e) { return g.src(EdgeId{e}).value; };
      auto t = [&](std::uint32_t e) { return g.dst(EdgeId{e}).value; };
      auto one = [](Word w) { return WordSum{{std::move(w), Scalar(1)}}; };
      auto keep_if = [&](bool cond, Symbol sym) {
        return cond ? one({sym}) : WordSum{};
      };

      switch (x.kind) {
        case Kind::vertex:
          switch (y.kind) {
            case Kind::vertex:  // v w = delta v
              return keep_if(x.id == y.id, x);
            case Kind::edge:  // t(e) e = e
              return keep_if(x.id == t(y.id), y);
            case Kind::ghost:  // s(e) e^* = e^*
              return keep_if(x.id == s(y.id), y);
          }
          break;
        case Kind::edge:
          switch (y.kind) {
            case Kind::vertex:  // e s(e) = e
              return keep_if(y.id == s(x.id), x);
            case Kind::edge:  // e f with t(f) != s(e)
              if (t(y.id) != s(x.id)) {
                return WordSum{};
              }
              return std::nullopt;
            case Kind::ghost:  // CK1
              if (x.id == y.id) {
                return one({vtx(VertexId{t(x.id)})});
              }
              return WordSum{};
          }
          break;
        case Kind::ghost:
          switch (y.kind) {
            case Kind::vertex:  // e^* t(e) = e^*
              return keep_if(y.id == t(x.id), x);
            case Kind::ghost:  // e^* f^* with s(f) != t(e)
              if (s(y.id) != t(x.id)) {
                return WordSum{};
              }
              return std::nullopt;
            case Kind::edge:  // e^* f
              if (t(y.id) != t(x.id)) {
                return WordSum{};
              }
              if (x.id == y.id && special.is_chosen(EdgeId{x.id})) {
                // CK2 solved for the special edge.
                WordSum out;
                out[{vtx(VertexId{s(x.id)})}] = 1;
                for (auto beta : siblings(g, special, EdgeId{x.id})) {
                  out[{gst(beta.value), edg(beta.value)}] = -1;
                }
                return out;
              }
              return std::nullopt;
          }
          break;
      }
      return std::nullopt;
    }

    Monomial read_monomial(Graph const& g, Word const& w) {
      if (w.size() == 1 && w[0].kind == Kind::vertex) {
        VertexId v{w[0].id};
        return {Path::trivial(v), Path::trivial(v)};
      }
      // w = a_1^* ... a_m^* b_n ... b_1 with p = a_m ... a_1, q = b_n ... b_1.
      std::vector<EdgeId> p_edges;
      std::vector<EdgeId> q_edges;
      for (auto const& sym : w) {
        if (sym.kind == Kind::ghost) {
          p_edges.push_back(EdgeId{sym.id});
        } else if (sym.kind == Kind::edge) {
          q_edges.insert(q_edges.begin(), EdgeId{sym.id});
        } else {
          throw Error("oracle: vertex left inside an irreducible word");
        }
      }
      auto p = Path::from_edges(g, p_edges);
      auto q = Path::from_edges(g, q_edges);
      if ((!p_edges.empty() && !p) || (!q_edges.empty() && !q)) {
        throw Error("oracle: irreducible word is not composable");
      }
      if (p_edges.empty()) {
        return {Path::trivial(q->target()), *q};
      }
      if (q_edges.empty()) {
        return {*p, Path::trivial(p->target())};
      }
      return {*p, *q};
    }

  }  // namespace

  StepCapExceeded::StepCapExceeded(std::size_t cap)
      : Error("oracle rewrite step cap of " + std::to_string(cap) + " exceeded") {}

  AlgebraElement normalize_word(Graph const&      g,
                                EdgeChoice const& special,
                                Word const&       w,
                                Options const&    opts) {
    std::mt19937_64 rng(opts.seed);
    WordSum         pending;
    AlgebraElement  result;
    if (w.empty()) {
      throw Error("oracle: the empty word has no value in a graph algebra");
    }
    pending[w] = 1;
    std::size_t steps = 0;

    while (!pending.empty()) {
      auto node   = pending.extract(pending.begin());
      Word word   = std::move(node.key());
      Scalar coef = node.mapped();

      std::vector<std::pair<std::size_t, WordSum>> redexes;
      for (std::size_t k = 0; k + 1 < word.size(); ++k) {
        if (auto r = rewrite_pair(g, special, word[k], word[k + 1])) {
          redexes.emplace_back(k, std::move(*r));
          if (opts.strategy == Strategy::leftmost) {
            break;
          }
        }
      }
      if (redexes.empty()) {
        result.add(read_monomial(g, word), coef);
        continue;
      }
      if (++steps > opts.step_cap) {
        throw StepCapExceeded(opts.step_cap);
      }
      std::size_t pick = 0;
      if (opts.strategy == Strategy::rightmost) {
        pick = redexes.size() - 1;
      } else if (opts.strategy == Strategy::random) {
        pick = std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng);
      }
      auto const& [pos, replacement] = redexes[pick];
      for (auto const& [middle, c] : replacement) {
        Word next(word.begin(), word.begin() + static_cast<long>(pos));
        next.insert(next.end(), middle.begin(), middle.end());
        next.insert(next.end(), word.begin() + static_cast<long>(pos) + 2, word.end());
        auto [it, inserted] = pending.try_emplace(std::move(next), coef * c);
        if (!inserted) {
          it->second += coef * c;
          if (it->second == 0) {
            pending.erase(it);
          }
        }
      }
    }
    return result;
  }

  bool confluence_probe(Graph const&      g,
                        EdgeChoice const& special,
                        Word const&       w,
                        std::size_t       step_cap) {
    AlgebraElement reference
        = normalize_word(g, special, w, {Strategy::leftmost, 0, step_cap});
    if (normalize_word(g, special, w, {Strategy::rightmost, 0, step_cap}) != reference) {
      return false;
    }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      if (normalize_word(g, special, w, {Strategy::random, seed, step_cap})
          != reference) {
        return false;
      }
    }
    return true;
  }

  Word random_word(Graph const& g, std::size_t max_len, std::mt19937_64& rng) {
    std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
    std::vector<Symbol> alphabet;
    for (auto v : g.vertices()) {
      alphabet.push_back(vtx(v));
    }
    for (auto e : g.edges()) {
      alphabet.push_back(edg(e.value));
      alphabet.push_back(gst(e.value));
    }
    Word w;
    if (std::bernoulli_distribution(0.5)(rng)) {
      std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
      for (std::size_t k = 0; k < len; ++k) {
        w.push_back(alphabet[pick(rng)]);
      }
      return w;
    }
    // Composable walk built right to left: `at` is where the next symbol to
    // the left must start.
    auto start = [&](Symbol sym) {
      switch (sym.kind) {
        case Kind::vertex: return sym.id;
        case Kind::edge: return g.src(EdgeId{sym.id}).value;
        case Kind::ghost: return g.dst(EdgeId{sym.id}).value;
      }
      return sym.id;
    };
    auto finish = [&](Symbol sym) {
      switch (sym.kind) {
        case Kind::vertex: return sym.id;
        case Kind::edge: return g.dst(EdgeId{sym.id}).value;
        case Kind::ghost: return g.src(EdgeId{sym.id}).value;
      }
      return sym.id;
    };
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    Symbol first = alphabet[pick(rng)];
    w.push_back(first);
    std::uint32_t at = finish(first);
    while (w.size() < len) {
      std::vector<Symbol> options;
      for (auto const& sym : alphabet) {
        if (start(sym) == at) {
          options.push_back(sym);
        }
      }
      Symbol sym = options[std::uniform_int_distribution<std::size_t>(
          0, options.size() - 1)(rng)];
      w.insert(w.begin(), sym);
      at = finish(sym);
    }
    return w;
  }

  std::string to_string(Graph const& g, Word const& w) {
    std::string out;
    for (auto const& sym : w) {
      if (!out.empty()) {
        out += " . ";
      }
      switch (sym.kind) {
        case Kind::vertex: out += g.name(VertexId{sym.id}); break;
        case Kind::edge: out += g.name(EdgeId{sym.id}); break;
        case Kind::ghost: out += g.name(EdgeId{sym.id}) + "*"; break;
      }
    }
    return out;
  }

  AlgebraElement evaluate(LeavittAlgebra const& algebra, Word const& w) {
    AlgebraElement acc = algebra.one();
    for (auto const& sym : w) {
      AlgebraElement gen;
      switch (sym.kind) {
        case Symbol::Kind::vertex: gen = algebra.vertex(VertexId{sym.id}); break;
        case Symbol::Kind::edge: gen = algebra.edge(EdgeId{sym.id}); break;
        case Symbol::Kind::ghost: gen = algebra.ghost(EdgeId{sym.id}); break;
      }
      acc = algebra.multiply(acc, gen);
    }
    return acc;
  }

  CheckReport check_nf_oracle(LeavittAlgebra const& algebra,
                              std::uint64_t         seed,
                              std::size_t           samples,
                              std::size_t           max_len,
                              std::size_t           step_cap) {
    Graph const&      g = algebra.graph();
    EdgeChoice const& c = algebra.choice();
    CheckReport       r;
    r.suite  = "nf-oracle";
    r.window = "len<=" + std::to_string(max_len);
    std::mt19937_64 rng(seed);
    Options const   opts{Strategy::leftmost, 0, step_cap};
    for (std::size_t k = 0; k < samples; ++k) {
      Word        w   = random_word(g, max_len, rng);
      std::string tag = to_string(g, w);
      for (char& ch : tag) {
        if (ch == ' ') {
          ch = '_';
        }
      }
      r.samples.push_back(tag);
      ++r.checked;
      AlgebraElement nf = normalize_word(g, c, w, opts);
      if (nf != evaluate(algebra, w)) {
        r.fail("multiply:w=" + tag);
      }
      if (w.size() > 1) {
        std::size_t cut = std::uniform_int_distribution<std::size_t>(1, w.size() - 1)(rng);
        Word        lhs(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
        Word        rhs(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        if (algebra.multiply(normalize_word(g, c, lhs, opts),
                             normalize_word(g, c, rhs, opts))
            != nf) {
          r.fail("split:w=" + tag + ";cut=" + std::to_string(cut));
        }
      }
      if (!confluence_probe(g, c, w, step_cap)) {
        r.fail("confluence:w=" + tag);
      }
    }
    return r;
  }

}  // namespace leavitt::oracle
