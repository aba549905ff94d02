#include <doctest.h>

#include "../fixtures.hpp"
#include "pcg/droms.hpp"

using namespace pcg;
using pcg::test::gamma1;
using pcg::test::gamma2;

namespace {

  DecompositionNode tree_of(Graph const& g) {
    auto r = decompose_thin_chordal(g);
    REQUIRE(std::holds_alternative<DecompositionNode>(r));
    return std::get<DecompositionNode>(r);
  }

  Graph two_edges() {
    return parse_graph("vertices: p q r s\nedges: p-q r-s\n");
  }

}  // namespace

TEST_CASE("cone_vertex") {
  CHECK(cone_vertex(complete_graph(3)) == std::size_t{0});
  CHECK_FALSE(cone_vertex(gamma1()).has_value());
  CHECK_FALSE(cone_vertex(gamma2()).has_value());
  auto star3 = parse_graph("vertices: a b c z\nedges: z-a z-b z-c\n");
  CHECK(cone_vertex(star3) == star3.index("z"));
  CHECK(cone_vertex(edgeless_graph(1)) == std::size_t{0});
  CHECK_FALSE(cone_vertex(edgeless_graph(2)).has_value());
  auto g1 = gamma1();
  CHECK(cone_vertex(g1, vertex_set(g1, {"a", "d", "e"})) == g1.index("a"));
  CHECK(cone_vertex(g1, vertex_set(g1, {"c", "d", "e"})) == g1.index("d"));
}

TEST_CASE("decompositions") {
  auto k2 = complete_graph(2);
  auto t  = tree_of(k2);
  CHECK(to_sexpr(k2, t) == "(cone v0 (leaf v1))");
  CHECK(tree_group_signature(t) == "Z × Z");

  auto e2 = edgeless_graph(2);
  CHECK(to_sexpr(e2, tree_of(e2)) == "(free (leaf v0) (leaf v1))");
  CHECK(tree_group_signature(tree_of(e2)) == "Z ∗ Z");

  auto p2 = path_graph(2);  // v0 - v1 - v2
  CHECK(tree_group_signature(tree_of(p2)) == "Z × (Z ∗ Z)");

  auto te = two_edges();
  CHECK(tree_group_signature(tree_of(te)) == "(Z × Z) ∗ (Z × Z)");

  auto mixed = parse_graph("vertices: x y z\nedges: y-z\n");
  CHECK(tree_group_signature(tree_of(mixed)) == "Z ∗ (Z × Z)");

  CHECK(tree_group_signature(tree_of(complete_graph(4))) == "Z × Z × Z × Z");
  CHECK(tree_group_signature(tree_of(edgeless_graph(1))) == "Z");

  auto empty = tree_of(Graph{});
  CHECK(empty.kind == DecompositionNode::Kind::free_product);
  CHECK(empty.children.empty());
  CHECK(tree_group_signature(empty) == "1");
}

TEST_CASE("decomposition failures") {
  auto g1 = gamma1();
  auto r  = decompose_thin_chordal(g1);
  REQUIRE(std::holds_alternative<DecompositionFailure>(r));
  CHECK(std::get<DecompositionFailure>(r).component.size() == 5);

  // The failing component is the one without a cone vertex.
  auto g = parse_graph("vertices: a b c d x y\nedges: a-b b-c c-d x-y\n");
  auto f = decompose_thin_chordal(g);
  REQUIRE(std::holds_alternative<DecompositionFailure>(f));
  CHECK(test::names(g, std::get<DecompositionFailure>(f).component)
        == "a b c d");

  CHECK(std::holds_alternative<DecompositionFailure>(
      decompose_thin_chordal(cycle_graph(4))));
}

TEST_CASE("rebuilding and node counts") {
  for (auto const& g :
       {complete_graph(2), edgeless_graph(3), path_graph(2), two_edges(),
        complete_graph(5),
        parse_graph("vertices: a b c d e\nedges: a-b a-c a-d b-c e-a\n")}) {
    CAPTURE(format_graph(g));
    REQUIRE(is_thin_chordal(g));
    auto t = tree_of(g);
    CHECK(rebuild_graph(g, t) == g);
    CHECK(node_count(t) <= 2 * g.size());
    CHECK(t.vertices.size() == g.size());
  }
}
