#ifndef PCG_GRAPH_HPP_
#define PCG_GRAPH_HPP_

// Finite simple graphs with named vertices. A graph doubles as the
// commutation graph of a partially commutative group: its vertices are the
// generators and its edges the commuting pairs.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcg/adjacency.hpp"

namespace pcg {

  // Vertex subsets are held as sets of indices into a graph's vertex order.
  using VertexSet = std::set<std::size_t>;

  class Graph {
   public:
    Graph() = default;

    // Throws InvalidArgument on duplicate or ill-formed names, unknown edge
    // endpoints and self-loops. Repeated edges are rejected as well.
    Graph(std::vector<std::string>                               vertices,
          std::vector<std::pair<std::string, std::string>> const& edges);

    // Index-based constructor; edges are pairs of indices into `vertices`.
    Graph(std::vector<std::string>                               vertices,
          std::vector<std::pair<std::size_t, std::size_t>> const& edges);

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::size_t edge_count() const noexcept {
      return _adj.edge_count();
    }

    std::string const& name(std::size_t v) const {
      return _names.at(v);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<std::size_t> find(std::string_view name) const;

    // Like find(), but throws InvalidArgument naming the vertex.
    std::size_t index(std::string_view name) const;

    bool adjacent(std::size_t u, std::size_t v) const noexcept {
      return _adj.test(u, v);
    }

    std::size_t degree(std::size_t v) const noexcept {
      return _adj.degree(v);
    }

    // Edges as index pairs (u < v), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    AdjacencyMatrix const& adjacency() const noexcept {
      return _adj;
    }

    // Same vertex order and same edge set.
    bool operator==(Graph const& other) const {
      return _names == other._names && _adj == other._adj;
    }

   private:
    void add_edge(std::size_t u, std::size_t v);

    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
    AdjacencyMatrix                              _adj;
  };

  // Induced embedding of one graph in another; image[i] is the host vertex
  // assigned to pattern vertex i.
  struct GraphEmbedding {
    std::vector<std::size_t> image;

    // (pattern name, host name) pairs in pattern order.
    std::vector<std::pair<std::string, std::string>>
    named(Graph const& pattern, Graph const& host) const;

    bool operator==(GraphEmbedding const&) const = default;
  };

  // True for the identifiers accepted as plain vertex names:
  // [A-Za-z][A-Za-z0-9_]*
  bool is_identifier(std::string_view name);

  // True for plain identifiers and for extension-ball labels "x@w" where w is
  // a '.'-separated list of identifiers, each optionally suffixed "^-1".
  bool is_vertex_name(std::string_view name);

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  // Parses
  //
  //   vertices: <name> <name> ...
  //   edges: <u>-<v> <u>-<v> ...
  //
  // '#' starts a comment; blank lines are ignored. Errors are ParseError
  // carrying the offending line number.
  Graph parse_graph(std::string_view text);

  // Inverse of parse_graph: edges are written in sorted index order.
  std::string format_graph(Graph const& g);

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Graph complement(Graph const& g);

  // C_n on vertices v0 .. v(n-1); requires n >= 3.
  Graph cycle_graph(std::size_t n);

  // P_n: the path with n edges, hence n + 1 vertices v0 .. vn.
  Graph path_graph(std::size_t n);

  Graph complete_graph(std::size_t n);

  Graph edgeless_graph(std::size_t n);

  // The subgraph on `names`, kept in g's vertex order.
  Graph induced_subgraph(Graph const& g, std::vector<std::string> const& names);
  Graph induced_subgraph(Graph const& g, VertexSet const& vertices);

  // Vertices of g named by indices in s, in g's order.
  std::vector<std::string> names_of(Graph const& g, VertexSet const& s);

  // Throws InvalidArgument for unknown names.
  VertexSet vertex_set(Graph const& g, std::vector<std::string> const& names);

  ////////////////////////////////////////////////////////////////////////
  // Search and recognition
  ////////////////////////////////////////////////////////////////////////

  // First induced embedding in backtracking order, if any.
  std::optional<GraphEmbedding> find_induced(Graph const& pattern,
                                             Graph const& host);

  // A bijection preserving edges and non-edges, if any.
  std::optional<GraphEmbedding> graph_isomorphic(Graph const& g1,
                                                 Graph const& g2);

  // Connected components as vertex sets, ordered by smallest member.
  std::vector<VertexSet> connected_components(Graph const& g,
                                              VertexSet const& within);

  // No induced C_n, n >= 4.
  bool is_chordal(Graph const& g);

  // No induced C_n and no induced complement of C_n, n >= 5.
  bool is_weakly_chordal(Graph const& g);

  // No induced C_4 and no induced P_3 (the path with three edges).
  bool is_thin_chordal(Graph const& g);

}  // namespace pcg

#endif  // PCG_GRAPH_HPP_
