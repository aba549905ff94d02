#ifndef PCG_INDUCED_SEARCH_HPP_
#define PCG_INDUCED_SEARCH_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "pcg/adjacency.hpp"

namespace pcg {

  // Backtracking search for an induced embedding of `pattern` into `host`:
  // an injective map preserving both edges and non-edges.
  //
  // Pattern vertices are assigned in index order and host candidates are
  // tried in index order, so the result is the first embedding in that
  // lexicographic order. Candidates are filtered by degree and by adjacency
  // to every vertex already placed. When the host is large the top-level
  // branches are split across worker threads; the lowest branch that
  // succeeds wins, so the answer does not depend on the thread count.
  std::optional<std::vector<std::size_t>>
  find_induced_embedding(AdjacencyMatrix const& pattern,
                         AdjacencyMatrix const& host);

  // True if `image` is injective and preserves edges and non-edges.
  bool is_induced_embedding(AdjacencyMatrix const&          pattern,
                            AdjacencyMatrix const&          host,
                            std::vector<std::size_t> const& image);

}  // namespace pcg

#endif  // PCG_INDUCED_SEARCH_HPP_
