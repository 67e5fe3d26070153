#include "leavitt/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace leavitt {

  ParseError::ParseError(std::string const& msg,
                         std::size_t        line,
                         std::size_t        column)
      : Error(column == 0 ? "line " + std::to_string(line) + ": " + msg
                          : "line " + std::to_string(line) + ", column "
                                + std::to_string(column) + ": " + msg),
        _line(line),
        _column(column) {}

  ////////////////////////////////////////////////////////////////////////
  // Graph
  ////////////////////////////////////////////////////////////////////////

  Graph::Graph(std::vector<std::string> vertex_names,
               std::vector<EdgeSpec>    edges) {
    std::sort(vertex_names.begin(), vertex_names.end());
    if (auto it = std::adjacent_find(vertex_names.begin(), vertex_names.end());
        it != vertex_names.end()) {
      throw Error("duplicate vertex id '" + *it + "'");
    }
    std::sort(edges.begin(), edges.end(), [](auto const& a, auto const& b) {
      return a.name < b.name;
    });
    for (std::size_t k = 1; k < edges.size(); ++k) {
      if (edges[k].name == edges[k - 1].name) {
        throw Error("duplicate edge id '" + edges[k].name + "'");
      }
    }
    _vertex_names = std::move(vertex_names);
    _out.resize(_vertex_names.size());
    _in.resize(_vertex_names.size());
    for (auto const& spec : edges) {
      auto s = find_vertex(spec.src);
      auto t = find_vertex(spec.dst);
      if (!s || !t) {
        throw Error("edge '" + spec.name + "' references unknown vertex '"
                    + (s ? spec.dst : spec.src) + "'");
      }
      EdgeId id{static_cast<std::uint32_t>(_edge_names.size())};
      _edge_names.push_back(spec.name);
      _src.push_back(*s);
      _dst.push_back(*t);
      _out[s->value].push_back(id);
      _in[t->value].push_back(id);
    }
  }

  std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
    auto it = std::lower_bound(_vertex_names.begin(), _vertex_names.end(), name);
    if (it == _vertex_names.end() || *it != name) {
      return std::nullopt;
    }
    return VertexId{static_cast<std::uint32_t>(it - _vertex_names.begin())};
  }

  std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
    auto it = std::lower_bound(_edge_names.begin(), _edge_names.end(), name);
    if (it == _edge_names.end() || *it != name) {
      return std::nullopt;
    }
    return EdgeId{static_cast<std::uint32_t>(it - _edge_names.begin())};
  }

  std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    for (std::uint32_t k = 0; k < _vertex_names.size(); ++k) {
      out.push_back(VertexId{k});
    }
    return out;
  }

  std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> out;
    for (std::uint32_t k = 0; k < _edge_names.size(); ++k) {
      out.push_back(EdgeId{k});
    }
    return out;
  }

  std::vector<VertexId> sinks(Graph const& g) {
    std::vector<VertexId> out;
    for (auto v : g.vertices()) {
      if (g.out_edges(v).empty()) {
        out.push_back(v);
      }
    }
    return out;
  }

  std::vector<VertexId> sources(Graph const& g) {
    std::vector<VertexId> out;
    for (auto v : g.vertices()) {
      if (g.in_edges(v).empty()) {
        out.push_back(v);
      }
    }
    return out;
  }

  bool has_sinks(Graph const& g) {
    return !sinks(g).empty();
  }

  bool has_sources(Graph const& g) {
    return !sources(g).empty();
  }

  Graph opposite(Graph const& g) {
    std::vector<std::string> vs;
    for (auto v : g.vertices()) {
      vs.push_back(g.name(v));
    }
    std::vector<EdgeSpec> es;
    for (auto e : g.edges()) {
      es.push_back({g.name(e), g.name(g.dst(e)), g.name(g.src(e))});
    }
    return Graph(std::move(vs), std::move(es));
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  Path Path::edge(Graph const& g, EdgeId e) {
    return Path(g.src(e), g.dst(e), {e});
  }

  std::optional<Path> Path::from_edges(Graph const& g, std::vector<EdgeId> edges) {
    if (edges.empty()) {
      return std::nullopt;
    }
    for (std::size_t k = 1; k < edges.size(); ++k) {
      if (g.dst(edges[k - 1]) != g.src(edges[k])) {
        return std::nullopt;
      }
    }
    VertexId s = g.src(edges.front());
    VertexId t = g.dst(edges.back());
    return Path(s, t, std::move(edges));
  }

  std::strong_ordering operator<=>(Path const& a, Path const& b) {
    if (auto c = a._edges.size() <=> b._edges.size(); c != 0) {
      return c;
    }
    if (auto c = a._edges <=> b._edges; c != 0) {
      return c;
    }
    return a._source <=> b._source;
  }

  std::optional<Path> compose(Path const& p, Path const& q) {
    if (p.source() != q.target()) {
      return std::nullopt;
    }
    std::vector<EdgeId> edges = q.edges();
    edges.insert(edges.end(), p.edges().begin(), p.edges().end());
    return Path::unchecked(q.source(), p.target(), std::move(edges));
  }

  Path then_edge(Graph const& g, Path const& p, EdgeId e) {
    auto r = compose(Path::edge(g, e), p);
    if (!r) {
      throw Error("edge '" + g.name(e) + "' does not compose after path "
                  + to_string(g, p));
    }
    return *std::move(r);
  }

  Path edge_then(Graph const& g, EdgeId e, Path const& p) {
    auto r = compose(p, Path::edge(g, e));
    if (!r) {
      throw Error("path " + to_string(g, p) + " does not compose after edge '"
                  + g.name(e) + "'");
    }
    return *std::move(r);
  }

  Truncations truncations(Graph const& g, Path const& p) {
    if (p.is_trivial()) {
      throw Error("truncations of a trivial path are undefined");
    }
    auto const& es = p.edges();
    std::vector<EdgeId> hat(es.begin(), es.end() - 1);
    std::vector<EdgeId> tilde(es.begin() + 1, es.end());
    return {Path::unchecked(p.source(), g.src(es.back()), std::move(hat)),
            Path::unchecked(g.dst(es.front()), p.target(), std::move(tilde))};
  }

  Path opposite_path(Path const& p) {
    std::vector<EdgeId> edges(p.edges().rbegin(), p.edges().rend());
    return Path::unchecked(p.target(), p.source(), std::move(edges));
  }

  std::string to_string(Graph const& g, Path const& p) {
    if (p.is_trivial()) {
      return "e_" + g.name(p.source());
    }
    std::string out;
    for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) {
      if (!out.empty()) {
        out += '.';
      }
      out += g.name(*it);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Edge choices
  ////////////////////////////////////////////////////////////////////////

  EdgeChoice::EdgeChoice(Graph const& g, ChoiceKind kind, std::vector<EdgeId> picks)
      : _kind(kind), _picks(std::move(picks)), _chosen(g.edge_count(), 0) {
    if (_picks.size() != g.vertex_count()) {
      throw Error("edge choice must pick exactly one edge per vertex");
    }
    for (auto v : g.vertices()) {
      EdgeId e = _picks[v.value];
      if (e.value >= g.edge_count()) {
        throw Error("edge choice at vertex '" + g.name(v) + "' names no edge");
      }
      VertexId end = kind == ChoiceKind::special ? g.src(e) : g.dst(e);
      if (end != v) {
        throw Error("edge '" + g.name(e) + "' cannot be the "
                    + (kind == ChoiceKind::special ? "special" : "associated")
                    + " edge at vertex '" + g.name(v) + "'");
      }
      _chosen[e.value] = 1;
    }
  }

  bool EdgeChoice::is_chosen(EdgeId e) const {
    return e.value < _chosen.size() && _chosen[e.value] != 0;
  }

  EdgeChoice EdgeChoice::opposite() const {
    EdgeChoice out = *this;
    out._kind = _kind == ChoiceKind::special ? ChoiceKind::associated
                                             : ChoiceKind::special;
    return out;
  }

  EdgeChoice EdgeChoice::with_overrides(Graph const&            g,
                                        std::span<EdgeId const> edges) const {
    std::vector<EdgeId> picks = _picks;
    for (auto e : edges) {
      VertexId v = _kind == ChoiceKind::special ? g.src(e) : g.dst(e);
      picks[v.value] = e;
    }
    return EdgeChoice(g, _kind, std::move(picks));
  }

  EdgeChoice make_choice(Graph const&                      g,
                         ChoiceKind                        kind,
                         std::map<VertexId, EdgeId> const& declared) {
    std::vector<EdgeId> picks;
    for (auto v : g.vertices()) {
      if (auto it = declared.find(v); it != declared.end()) {
        picks.push_back(it->second);
        continue;
      }
      auto candidates
          = kind == ChoiceKind::special ? g.out_edges(v) : g.in_edges(v);
      if (candidates.empty()) {
        throw Error(std::string("vertex '") + g.name(v) + "' is a "
                    + (kind == ChoiceKind::special ? "sink" : "source")
                    + "; no " + (kind == ChoiceKind::special ? "special" : "associated")
                    + " edge exists");
      }
      picks.push_back(candidates.front());
    }
    return EdgeChoice(g, kind, std::move(picks));
  }

  std::vector<EdgeId> siblings(Graph const& g, EdgeChoice const& c, EdgeId alpha) {
    if (!c.is_chosen(alpha)) {
      throw Error("edge '" + g.name(alpha) + "' is not a "
                  + (c.kind() == ChoiceKind::special ? "special" : "associated")
                  + " edge");
    }
    auto range = c.kind() == ChoiceKind::special ? g.out_edges(g.src(alpha))
                                                 : g.in_edges(g.dst(alpha));
    std::vector<EdgeId> out;
    for (auto e : range) {
      if (e != alpha) {
        out.push_back(e);
      }
    }
    return out;
  }

  EdgeChoice GraphFile::special_choice() const {
    return make_choice(graph, ChoiceKind::special, special);
  }

  EdgeChoice GraphFile::associated_choice() const {
    return make_choice(graph, ChoiceKind::associated, associated);
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph file parser
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool is_identifier(std::string const& s) {
      if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
      });
    }

    struct Decl {
      std::size_t              line;
      std::vector<std::string> words;
    };

  }  // namespace

  GraphFile parse_graph(std::string_view text) {
    std::vector<Decl> decls;
    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.erase(hash);
      }
      std::istringstream words(raw);
      Decl               d{line_no, {}};
      for (std::string w; words >> w;) {
        d.words.push_back(w);
      }
      if (!d.words.empty()) {
        decls.push_back(std::move(d));
      }
    }

    std::vector<std::string>                 vertex_names;
    std::vector<EdgeSpec>                    edge_specs;
    std::map<std::string, std::size_t>       vertex_line, edge_line;
    std::vector<std::pair<Decl, ChoiceKind>> choices;

    auto expect_arity = [](Decl const& d, std::size_t n) {
      if (d.words.size() != n) {
        throw ParseError("'" + d.words[0] + "' expects " + std::to_string(n - 1)
                             + " argument(s), got "
                             + std::to_string(d.words.size() - 1),
                         d.line);
      }
      for (std::size_t k = 1; k < n; ++k) {
        if (!is_identifier(d.words[k])) {
          throw ParseError("invalid identifier '" + d.words[k] + "'", d.line);
        }
      }
    };

    for (auto const& d : decls) {
      auto const& kw = d.words[0];
      if (kw == "vertex") {
        expect_arity(d, 2);
        if (!vertex_line.emplace(d.words[1], d.line).second) {
          throw ParseError("duplicate vertex id '" + d.words[1] + "'", d.line);
        }
        vertex_names.push_back(d.words[1]);
      } else if (kw == "edge") {
        expect_arity(d, 4);
        if (!edge_line.emplace(d.words[1], d.line).second) {
          throw ParseError("duplicate edge id '" + d.words[1] + "'", d.line);
        }
        edge_specs.push_back({d.words[1], d.words[2], d.words[3]});
      } else if (kw == "special") {
        expect_arity(d, 2);
        choices.emplace_back(d, ChoiceKind::special);
      } else if (kw == "associated") {
        expect_arity(d, 2);
        choices.emplace_back(d, ChoiceKind::associated);
      } else {
        throw ParseError("unknown declaration '" + kw + "'", d.line);
      }
    }

    for (auto const& spec : edge_specs) {
      for (auto const* end : {&spec.src, &spec.dst}) {
        if (vertex_line.count(*end) == 0) {
          throw ParseError("edge '" + spec.name + "' references undeclared vertex '"
                               + *end + "'",
                           edge_line.at(spec.name));
        }
      }
    }

    GraphFile out{Graph(std::move(vertex_names), std::move(edge_specs)), {}, {}};
    Graph const& g = out.graph;

    for (auto const& [d, kind] : choices) {
      auto e = g.find_edge(d.words[1]);
      if (!e) {
        throw ParseError("unknown edge '" + d.words[1] + "'", d.line);
      }
      bool special = kind == ChoiceKind::special;
      VertexId v    = special ? g.src(*e) : g.dst(*e);
      auto&    slot = special ? out.special : out.associated;
      if (!slot.emplace(v, *e).second) {
        throw ParseError("vertex '" + g.name(v) + "' already has "
                             + (special ? "a special" : "an associated") + " edge",
                         d.line);
      }
    }
    return out;
  }

  GraphFile load_graph_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open graph file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and pair predicates
  ////////////////////////////////////////////////////////////////////////

  std::vector<Path> enumerate_paths(Graph const&                 g,
                                    std::size_t                  max_len,
                                    std::optional<EndConstraint> constraint) {
    std::vector<Path> all;
    std::vector<Path> layer;
    for (auto v : g.vertices()) {
      layer.push_back(Path::trivial(v));
    }
    for (std::size_t len = 0;; ++len) {
      all.insert(all.end(), layer.begin(), layer.end());
      if (len == max_len) {
        break;
      }
      std::vector<Path> next;
      for (auto const& p : layer) {
        for (auto e : g.out_edges(p.target())) {
          next.push_back(then_edge(g, p, e));
        }
      }
      std::sort(next.begin(), next.end());
      if (next.empty()) {
        break;
      }
      layer = std::move(next);
    }
    if (constraint) {
      std::erase_if(all, [&](Path const& p) {
        VertexId end
            = constraint->end == Endpoint::source ? p.source() : p.target();
        return end != constraint->vertex;
      });
    }
    return all;
  }

  bool is_admissible(Path const& p, Path const& q, EdgeChoice const& special) {
    if (p.target() != q.target()) {
      return false;
    }
    if (p.is_trivial() || q.is_trivial()) {
      return true;
    }
    return p.last_edge() != q.last_edge() || !special.is_chosen(p.last_edge());
  }

  bool is_associated_pair(Path const& p, Path const& q, EdgeChoice const& associated) {
    if (p.source() != q.source()) {
      return false;
    }
    if (p.is_trivial() || q.is_trivial()) {
      return true;
    }
    return p.first_edge() != q.first_edge()
           || !associated.is_chosen(p.first_edge());
  }

  bool is_index_pair(Path const& p, Path const& q, EdgeChoice const& c) {
    return c.kind() == ChoiceKind::special ? is_admissible(p, q, c)
                                           : is_associated_pair(p, q, c);
  }

  std::vector<PathPair> enumerate_index_set(Graph const&      g,
                                            EdgeChoice const& c,
                                            VertexId          i,
                                            int               l,
                                            std::size_t       cap) {
    bool const        injective = c.kind() == ChoiceKind::special;
    std::vector<Path> paths     = enumerate_paths(g, cap);
    // Anchored side: q with s(q) = i (injective) or p with t(p) = i.
    std::vector<PathPair> out;
    for (auto const& q : paths) {
      if (injective && q.source() != i) {
        continue;
      }
      long want = static_cast<long>(q.length()) - l;
      if (want < 0 || want > static_cast<long>(cap)) {
        continue;
      }
      for (auto const& p : paths) {
        if (p.length() != static_cast<std::size_t>(want)) {
          continue;
        }
        if (!injective && p.target() != i) {
          continue;
        }
        if (is_index_pair(p, q, c)) {
          out.emplace_back(p, q);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace leavitt
