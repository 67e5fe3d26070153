// Finite directed graphs, paths, distinguished-edge choices and the
// admissible/associated pair predicates that index everything else.
//
// Paths follow the right-to-left convention: the path written a_n ... a_2 a_1
// traverses a_1 first. Path::edges() stores edges in traversal order, so
// edges().front() is a_1 and edges().back() is a_n.

#ifndef LEAVITT_GRAPH_HPP_
#define LEAVITT_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leavitt {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Syntax or validation problem in an input file or expression.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column = 0);

    [[nodiscard]] std::size_t line() const noexcept { return _line; }
    [[nodiscard]] std::size_t column() const noexcept { return _column; }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  struct VertexId {
    std::uint32_t value = 0;
    friend auto operator<=>(VertexId, VertexId) = default;
  };

  struct EdgeId {
    std::uint32_t value = 0;
    friend auto operator<=>(EdgeId, EdgeId) = default;
  };

  struct EdgeSpec {
    std::string name;
    std::string src;
    std::string dst;
  };

  // Vertex and edge ids are ranks in the lexicographic order of their names,
  // so iterating ids is the deterministic order used everywhere.
  class Graph {
   public:
    Graph() = default;
    Graph(std::vector<std::string> vertex_names, std::vector<EdgeSpec> edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept {
      return _vertex_names.size();
    }
    [[nodiscard]] std::size_t edge_count() const noexcept {
      return _edge_names.size();
    }

    [[nodiscard]] VertexId src(EdgeId e) const { return _src.at(e.value); }
    [[nodiscard]] VertexId dst(EdgeId e) const { return _dst.at(e.value); }

    [[nodiscard]] std::string const& name(VertexId v) const {
      return _vertex_names.at(v.value);
    }
    [[nodiscard]] std::string const& name(EdgeId e) const {
      return _edge_names.at(e.value);
    }

    [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view) const;
    [[nodiscard]] std::optional<EdgeId>   find_edge(std::string_view) const;

    [[nodiscard]] std::span<EdgeId const> out_edges(VertexId v) const {
      return _out.at(v.value);
    }
    [[nodiscard]] std::span<EdgeId const> in_edges(VertexId v) const {
      return _in.at(v.value);
    }

    [[nodiscard]] std::vector<VertexId> vertices() const;
    [[nodiscard]] std::vector<EdgeId>   edges() const;

    friend bool operator==(Graph const&, Graph const&) = default;

   private:
    std::vector<std::string>         _vertex_names;
    std::vector<std::string>         _edge_names;
    std::vector<VertexId>            _src;
    std::vector<VertexId>            _dst;
    std::vector<std::vector<EdgeId>> _out;
    std::vector<std::vector<EdgeId>> _in;
  };

  [[nodiscard]] bool has_sinks(Graph const& g);
  [[nodiscard]] bool has_sources(Graph const& g);
  [[nodiscard]] std::vector<VertexId> sinks(Graph const& g);
  [[nodiscard]] std::vector<VertexId> sources(Graph const& g);

  // Same vertices and edge names, every edge reversed.
  [[nodiscard]] Graph opposite(Graph const& g);

  class Path {
   public:
    Path() = default;

    static Path trivial(VertexId v) { return Path(v, v, {}); }
    static Path edge(Graph const& g, EdgeId e);
    // Edges in traversal order; nullopt unless consecutive edges compose.
    static std::optional<Path> from_edges(Graph const&       g,
                                          std::vector<EdgeId> edges);

    [[nodiscard]] VertexId source() const noexcept { return _source; }
    [[nodiscard]] VertexId target() const noexcept { return _target; }
    [[nodiscard]] std::size_t length() const noexcept { return _edges.size(); }
    [[nodiscard]] bool        is_trivial() const noexcept { return _edges.empty(); }
    [[nodiscard]] std::vector<EdgeId> const& edges() const noexcept {
      return _edges;
    }
    // First edge traversed (a_1) and last edge traversed (a_n).
    [[nodiscard]] EdgeId first_edge() const { return _edges.front(); }
    [[nodiscard]] EdgeId last_edge() const { return _edges.back(); }

    // Total order: length, then edge ids in traversal order, then base vertex.
    friend std::strong_ordering operator<=>(Path const& a, Path const& b);
    friend bool operator==(Path const& a, Path const& b) {
      return a._source == b._source && a._edges == b._edges;
    }

    // No composability check; the caller guarantees the endpoints match.
    static Path unchecked(VertexId source, VertexId target,
                          std::vector<EdgeId> edges) {
      return Path(source, target, std::move(edges));
    }

   private:
    Path(VertexId source, VertexId target, std::vector<EdgeId> edges)
        : _source(source), _target(target), _edges(std::move(edges)) {}

    VertexId            _source;
    VertexId            _target;
    std::vector<EdgeId> _edges;
  };

  // p after q (q traversed first); nullopt when s(p) != t(q).
  [[nodiscard]] std::optional<Path> compose(Path const& p, Path const& q);

  // Convenience wrappers around compose for a single edge, which must compose.
  [[nodiscard]] Path then_edge(Graph const& g, Path const& p, EdgeId e);
  [[nodiscard]] Path edge_then(Graph const& g, EdgeId e, Path const& p);

  struct Truncations {
    Path hat;    // last edge dropped
    Path tilde;  // first edge dropped
  };

  // Throws Error on a trivial path.
  [[nodiscard]] Truncations truncations(Graph const& g, Path const& p);

  // The same path read in the opposite graph.
  [[nodiscard]] Path opposite_path(Path const& p);

  // Written form a_n.a_(n-1)...a_1, or e_<vertex> for a trivial path.
  [[nodiscard]] std::string to_string(Graph const& g, Path const& p);

  enum class ChoiceKind { special, associated };

  // One distinguished edge per vertex: leaving it (special) or entering it
  // (associated).
  class EdgeChoice {
   public:
    EdgeChoice() = default;

    // Throws Error naming the vertex if a pick is missing or has the wrong
    // endpoint.
    EdgeChoice(Graph const& g, ChoiceKind kind, std::vector<EdgeId> picks);

    [[nodiscard]] ChoiceKind kind() const noexcept { return _kind; }
    [[nodiscard]] EdgeId     pick(VertexId v) const { return _picks.at(v.value); }
    [[nodiscard]] bool       is_chosen(EdgeId e) const;
    [[nodiscard]] std::vector<EdgeId> const& picks() const noexcept {
      return _picks;
    }

    // The same edges, viewed as the dual kind on the opposite graph.
    [[nodiscard]] EdgeChoice opposite() const;

    // Replaces the pick at the endpoint of every listed edge.
    [[nodiscard]] EdgeChoice with_overrides(Graph const&          g,
                                            std::span<EdgeId const> edges) const;

    friend bool operator==(EdgeChoice const&, EdgeChoice const&) = default;

   private:
    ChoiceKind          _kind = ChoiceKind::special;
    std::vector<EdgeId> _picks;
    std::vector<char>   _chosen;  // indexed by edge id
  };

  // The default choice: lexicographically smallest outgoing (special) or
  // incoming (associated) edge at each vertex, overridden by `declared`.
  [[nodiscard]] EdgeChoice make_choice(Graph const&                   g,
                                       ChoiceKind                     kind,
                                       std::map<VertexId, EdgeId> const& declared
                                       = {});

  // S(alpha) for a special edge, T(alpha) for an associated edge: the other
  // edges sharing its source (resp. target). Throws if alpha is not chosen.
  [[nodiscard]] std::vector<EdgeId> siblings(Graph const&      g,
                                             EdgeChoice const& c,
                                             EdgeId            alpha);

  struct GraphFile {
    Graph                      graph;
    std::map<VertexId, EdgeId> special;
    std::map<VertexId, EdgeId> associated;

    // Throws Error naming a sink (resp. source) when the mode is unusable.
    [[nodiscard]] EdgeChoice special_choice() const;
    [[nodiscard]] EdgeChoice associated_choice() const;
  };

  // Line format:  vertex <id> | edge <id> <src> <dst> | special <edge> |
  // associated <edge>, with '#' comments. Throws ParseError.
  [[nodiscard]] GraphFile parse_graph(std::string_view text);
  [[nodiscard]] GraphFile load_graph_file(std::string const& path);

  enum class Endpoint { source, target };

  struct EndConstraint {
    Endpoint end;
    VertexId vertex;
  };

  // All paths of length <= max_len, ordered by (length, edge ids).
  [[nodiscard]] std::vector<Path>
  enumerate_paths(Graph const&                 g,
                  std::size_t                  max_len,
                  std::optional<EndConstraint> constraint = std::nullopt);

  [[nodiscard]] bool is_admissible(Path const& p, Path const& q,
                                   EdgeChoice const& special);
  [[nodiscard]] bool is_associated_pair(Path const& p, Path const& q,
                                        EdgeChoice const& associated);

  // Dispatches on the choice kind.
  [[nodiscard]] bool is_index_pair(Path const& p, Path const& q,
                                   EdgeChoice const& c);

  using PathPair = std::pair<Path, Path>;

  // B^l_i (special choice: s(q) = i) or Lambda^l_i (associated: t(p) = i),
  // restricted to l(p), l(q) <= cap.
  [[nodiscard]] std::vector<PathPair> enumerate_index_set(Graph const&      g,
                                                          EdgeChoice const& c,
                                                          VertexId          i,
                                                          int               l,
                                                          std::size_t       cap);

}  // namespace leavitt

#endif  // LEAVITT_GRAPH_HPP_
