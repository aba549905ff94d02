#ifndef PCG_CENTRALIZERS_HPP_
#define PCG_CENTRALIZERS_HPP_

// Centralizers of canonical generators and generator sets, and membership in
// parabolic subgroups. The centralizer of a generator x is the parabolic
// subgroup on the star of x; for a set of generators it is the parabolic on
// the intersection of their stars.

#include <string>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/word.hpp"

namespace pcg {

  // The subgroup <Y> of G(graph) generated by a set Y of vertices.
  struct ParabolicSubgroup {
    Graph     graph;
    VertexSet generators;

    std::vector<std::string> generator_names() const {
      return names_of(graph, generators);
    }

    bool operator==(ParabolicSubgroup const&) const = default;
  };

  VertexSet link(Graph const& g, std::size_t x);
  VertexSet star(Graph const& g, std::size_t x);

  ParabolicSubgroup generator_centralizer(Graph const& g, std::size_t x);

  // Throws InvalidArgument for an empty set.
  ParabolicSubgroup set_centralizer(Graph const& g, VertexSet const& xs);

  // Generators of p adjacent to every other generator of p.
  VertexSet parabolic_center(ParabolicSubgroup const& p);

  // True when the reduced form of w only uses generators in ys.
  bool in_parabolic(Graph const& g, Word const& w, VertexSet const& ys);

  bool commutes(Graph const& g, Word const& u, Word const& v);

}  // namespace pcg

#endif  // PCG_CENTRALIZERS_HPP_
