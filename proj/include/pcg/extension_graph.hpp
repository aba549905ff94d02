#ifndef PCG_EXTENSION_GRAPH_HPP_
#define PCG_EXTENSION_GRAPH_HPP_

// Finite pieces of the extension graph of a commutation graph: the graph on
// all conjugates w^-1 x w of generators, with an edge between two conjugates
// when they commute. The full graph is infinite; a ball of radius L keeps
// the conjugates by normal-form conjugators of length at most L.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pcg/adjacency.hpp"
#include "pcg/graph.hpp"
#include "pcg/morphisms.hpp"
#include "pcg/word.hpp"

namespace pcg {

  inline constexpr std::size_t default_vertex_cap = 20000;

  struct ExtVertex {
    std::size_t base = 0;
    NormalForm  conjugator;  // the first conjugator found for this vertex
    NormalForm  canonical;   // normal form of conjugator^-1 base conjugator

    // Equality is equality of group elements.
    bool operator==(ExtVertex const& other) const {
      return canonical == other.canonical;
    }
  };

  ExtVertex conj_vertex(Graph const& g, std::size_t x, Word const& w);

  class ExtBall {
   public:
    Graph const& source() const noexcept {
      return _source;
    }

    std::size_t radius() const noexcept {
      return _radius;
    }

    std::size_t size() const noexcept {
      return _vertices.size();
    }

    std::vector<ExtVertex> const& vertices() const noexcept {
      return _vertices;
    }

    AdjacencyMatrix const& adjacency() const noexcept {
      return _adjacency;
    }

    bool adjacent(std::size_t u, std::size_t v) const noexcept {
      return _adjacency.test(u, v);
    }

    // "x@w", with the letters of the conjugator w joined by '.'; plain "x"
    // for the empty conjugator.
    std::string label(std::size_t v) const;

    // The ball as an ordinary graph on its labels.
    Graph as_graph() const;

   private:
    friend ExtBall build_ball(Graph const&, std::size_t, std::size_t);

    Graph                  _source;
    std::size_t            _radius = 0;
    std::vector<ExtVertex> _vertices;
    AdjacencyMatrix        _adjacency;
  };

  // All conjugates of generators by normal forms of length <= radius,
  // deduplicated, ordered by base and then by conjugator in shortlex order.
  // Throws CapacityError if more than vertex_cap vertices arise.
  ExtBall build_ball(Graph const& g, std::size_t radius,
                     std::size_t vertex_cap = default_vertex_cap);

  // First induced embedding of pattern into the ball; image[i] indexes
  // ball.vertices().
  std::optional<std::vector<std::size_t>>
  find_induced_in_ball(Graph const& pattern, ExtBall const& ball);

  // The map sending each pattern generator to the conjugate it is embedded
  // as. Throws InvalidArgument if image is not an induced embedding.
  GeneratorMap embedding_to_homomorphism(Graph const& pattern,
                                         ExtBall const& ball,
                                         std::vector<std::size_t> const& image);

}  // namespace pcg

#endif  // PCG_EXTENSION_GRAPH_HPP_
