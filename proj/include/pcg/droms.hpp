#ifndef PCG_DROMS_HPP_
#define PCG_DROMS_HPP_

// Recursive structure of thin-chordal (C4- and P3-free) graphs: every such
// graph is a disjoint union of connected pieces, and every connected piece
// has a cone vertex whose removal leaves a smaller thin-chordal graph. The
// group of the graph is correspondingly an iterated free product of direct
// products with infinite cyclic factors.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcg/graph.hpp"

namespace pcg {

  struct DecompositionNode {
    enum class Kind { free_product, cone, leaf };

    Kind      kind = Kind::leaf;
    VertexSet vertices;         // the vertex set this node describes
    std::size_t apex = 0;       // cone apex or leaf vertex
    std::vector<DecompositionNode> children;

    bool operator==(DecompositionNode const&) const = default;
  };

  // A connected vertex set without a cone vertex.
  struct DecompositionFailure {
    VertexSet component;
  };

  using DecompositionResult
      = std::variant<DecompositionNode, DecompositionFailure>;

  // First vertex (declaration order) adjacent to every other vertex.
  std::optional<std::size_t> cone_vertex(Graph const& g);

  // Cone vertex of the subgraph induced on `within`.
  std::optional<std::size_t> cone_vertex(Graph const& g,
                                         VertexSet const& within);

  // Splits disconnected sets into components (free product) and connected
  // sets at their first cone vertex (cone), down to single vertices. Fails
  // on the first connected set that has no cone vertex. The empty graph
  // gives a free product with no factors.
  DecompositionResult decompose_thin_chordal(Graph const& g);

  // "(free t1 t2 ...)", "(cone z t)", "(leaf x)".
  std::string to_sexpr(Graph const& g, DecompositionNode const& node);

  // Canonical product term for the group, e.g. "Z × Z" or "Z ∗ (Z × Z)".
  // Products are flattened and their factors sorted; "1" for the trivial
  // group.
  std::string tree_group_signature(DecompositionNode const& node);

  // Graph described by the tree: disjoint union for free products, a new
  // apex joined to everything for cones. Vertices keep g's names and order.
  Graph rebuild_graph(Graph const& g, DecompositionNode const& node);

  std::size_t node_count(DecompositionNode const& node);

}  // namespace pcg

#endif  // PCG_DROMS_HPP_
