#include "pcg/centralizers.hpp"

#include <algorithm>
#include <iterator>

#include "pcg/errors.hpp"

namespace pcg {

  namespace {
    void check_vertex(Graph const& g, std::size_t x) {
      if (x >= g.size()) {
        throw InvalidArgument("unknown vertex index " + std::to_string(x));
      }
    }
  }  // namespace

  VertexSet link(Graph const& g, std::size_t x) {
    check_vertex(g, x);
    VertexSet out;
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (g.adjacent(x, y)) {
        out.insert(y);
      }
    }
    return out;
  }

  VertexSet star(Graph const& g, std::size_t x) {
    auto out = link(g, x);
    out.insert(x);
    return out;
  }

  ParabolicSubgroup generator_centralizer(Graph const& g, std::size_t x) {
    return ParabolicSubgroup{g, star(g, x)};
  }

  ParabolicSubgroup set_centralizer(Graph const& g, VertexSet const& xs) {
    if (xs.empty()) {
      throw InvalidArgument("set_centralizer requires a nonempty set");
    }
    auto common = star(g, *xs.begin());
    for (auto x : xs) {
      auto const s = star(g, x);
      VertexSet  meet;
      std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                            std::inserter(meet, meet.end()));
      common = std::move(meet);
    }
    return ParabolicSubgroup{g, std::move(common)};
  }

  VertexSet parabolic_center(ParabolicSubgroup const& p) {
    VertexSet out;
    for (auto y : p.generators) {
      if (std::all_of(p.generators.begin(), p.generators.end(), [&](auto z) {
            return z == y || p.graph.adjacent(y, z);
          })) {
        out.insert(y);
      }
    }
    return out;
  }

  bool in_parabolic(Graph const& g, Word const& w, VertexSet const& ys) {
    auto const a = alphabet(g, w);
    return std::includes(ys.begin(), ys.end(), a.begin(), a.end());
  }

  bool commutes(Graph const& g, Word const& u, Word const& v) {
    return is_trivial(g, commutator(u, v));
  }

}  // namespace pcg
