#ifndef PCG_TESTS_FIXTURES_HPP_
#define PCG_TESTS_FIXTURES_HPP_

#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/reproduction.hpp"
#include "pcg/word.hpp"

namespace pcg::test {

  inline Graph gamma1() {
    return builtin_graph("gamma1");
  }

  inline Graph gamma2() {
    return builtin_graph("gamma2");
  }

  inline Graph k3_plus_k1() {
    return Graph({"p", "q", "r", "s"},
                 std::vector<std::pair<std::size_t, std::size_t>>{
                     {0, 1}, {1, 2}, {0, 2}});
  }

  // The small graphs used for exhaustive word-problem checks.
  inline std::vector<std::pair<std::string, Graph>> small_fixtures() {
    return {{"gamma1", gamma1()},
            {"C5", cycle_graph(5)},
            {"C5bar", complement(cycle_graph(5))},
            {"P3", path_graph(3)},
            {"C4", cycle_graph(4)},
            {"K3+K1", k3_plus_k1()}};
  }

  inline Word word(Graph const& g, std::string_view text) {
    return parse_word(g, text);
  }

  inline std::string text(Graph const& g, Word const& w) {
    return format_word(g, w);
  }

  inline Word random_word(Graph const& g, std::size_t length,
                          std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> key(
        0, static_cast<std::uint32_t>(2 * g.size() - 1));
    Word w;
    for (std::size_t i = 0; i < length; ++i) {
      w.push_back(Letter::from_key(key(rng)));
    }
    return w;
  }

  inline std::string names(Graph const& g, VertexSet const& s) {
    std::string out;
    for (auto const& n : names_of(g, s)) {
      out += (out.empty() ? "" : " ") + n;
    }
    return out;
  }

}  // namespace pcg::test

#endif  // PCG_TESTS_FIXTURES_HPP_
