#include "pcg/extension_graph.hpp"

#include <map>

#include "pcg/centralizers.hpp"
#include "pcg/errors.hpp"
#include "pcg/induced_search.hpp"
#include "pcg/parallel.hpp"

namespace pcg {

  ExtVertex conj_vertex(Graph const& g, std::size_t x, Word const& w) {
    if (x >= g.size()) {
      throw InvalidArgument("unknown vertex index " + std::to_string(x));
    }
    ExtVertex v;
    v.base       = x;
    v.conjugator = normal_form(g, w);
    v.canonical  = normal_form(g, concat(concat(inverse(w), generator_word(x)), w));
    return v;
  }

  std::string ExtBall::label(std::size_t v) const {
    auto const& vertex = _vertices.at(v);
    std::string out    = _source.name(vertex.base);
    if (!vertex.conjugator.empty()) {
      out += '@';
      out += format_word(_source, vertex.conjugator.word(), ".");
    }
    return out;
  }

  Graph ExtBall::as_graph() const {
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < size(); ++v) {
      labels.push_back(label(v));
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v = u + 1; v < size(); ++v) {
        if (adjacent(u, v)) {
          edges.emplace_back(u, v);
        }
      }
    }
    return Graph(std::move(labels), edges);
  }

  ExtBall build_ball(Graph const& g, std::size_t radius,
                     std::size_t vertex_cap) {
    std::vector<Word> conjugators;
    for_each_normal_form(g, letters_over(g), radius, [&](Word const& w) {
      conjugators.push_back(w);
      return true;
    });

    ExtBall ball;
    ball._source = g;
    ball._radius = radius;
    std::map<Word, std::size_t> seen;
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (auto const& w : conjugators) {
        // A conjugator starting with a letter of star(x) repeats a shorter one.
        if (!w.empty() && (w.front().base == x || g.adjacent(w.front().base, x))) {
          continue;
        }
        auto v = conj_vertex(g, x, w);
        if (seen.emplace(v.canonical.word(), ball._vertices.size()).second) {
          ball._vertices.push_back(std::move(v));
          if (ball._vertices.size() > vertex_cap) {
            throw CapacityError("extension ball of radius "
                                + std::to_string(radius) + " exceeds "
                                + std::to_string(vertex_cap) + " vertices");
          }
        }
      }
    }

    std::size_t const n = ball._vertices.size();
    std::vector<std::vector<char>> rows(n);
    parallel_for(n, [&](std::size_t u) {
      rows[u].assign(n, 0);
      for (std::size_t v = u + 1; v < n; ++v) {
        rows[u][v] = commutes(g, ball._vertices[u].canonical.word(),
                              ball._vertices[v].canonical.word());
      }
    });
    ball._adjacency = AdjacencyMatrix(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rows[u][v]) {
          ball._adjacency.set(u, v);
        }
      }
    }
    return ball;
  }

  std::optional<std::vector<std::size_t>>
  find_induced_in_ball(Graph const& pattern, ExtBall const& ball) {
    return find_induced_embedding(pattern.adjacency(), ball.adjacency());
  }

  GeneratorMap embedding_to_homomorphism(Graph const& pattern,
                                         ExtBall const& ball,
                                         std::vector<std::size_t> const& image) {
    if (!is_induced_embedding(pattern.adjacency(), ball.adjacency(), image)) {
      throw InvalidArgument("mapping is not an induced embedding into the ball");
    }
    GeneratorMap m{pattern, ball.source(), {}};
    for (auto v : image) {
      m.images.push_back(ball.vertices()[v].canonical.word());
    }
    return m;
  }

}  // namespace pcg
