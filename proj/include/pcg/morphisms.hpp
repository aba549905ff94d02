#ifndef PCG_MORPHISMS_HPP_
#define PCG_MORPHISMS_HPP_

// Maps between partially commutative groups given by the images of the
// source generators: application to words, relator-by-relator homomorphism
// checks, and bounded searches for kernel elements.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/word.hpp"

namespace pcg {

  struct GeneratorMap {
    Graph             source;
    Graph             target;
    std::vector<Word> images;  // images[x] is a word over target

    bool operator==(GeneratorMap const&) const = default;
  };

  // One line per source generator: "name -> token token ...". An image of
  // "1" (or nothing) is the identity. '#' starts a comment.
  GeneratorMap parse_map(Graph const& source, Graph const& target,
                         std::string_view text);

  std::string format_map(GeneratorMap const& m);

  // Letterwise substitution, without reduction.
  Word apply_map(GeneratorMap const& m, Word const& w);

  struct RelatorCheck {
    std::size_t x = 0, y = 0;  // the source edge {x, y}
    Word        image;          // apply_map(m, [x, y]), unreduced
    NormalForm  reduced;

    bool trivial() const noexcept {
      return reduced.empty();
    }
  };

  struct HomomorphismReport {
    std::vector<RelatorCheck> relators;  // one per source edge, edge order

    bool holds() const;

    // Index of the first relator whose image is nontrivial.
    std::optional<std::size_t> first_failure() const;
  };

  // Checks that every defining relator [x, y] of the source (one per edge)
  // maps to the identity of the target.
  HomomorphismReport check_homomorphism(GeneratorMap const& m);

  bool is_homomorphism(GeneratorMap const& m);

  struct KernelSearchResult {
    std::optional<Word>      witness;  // least kernel element, if found
    std::size_t              max_len = 0;
    std::vector<std::size_t> elements_per_length;  // nontrivial lengths only
  };

  // Enumerates the nontrivial source elements of normal-form length up to
  // max_len (by length, then shortlex), each exactly once, and returns the
  // first one mapped to the identity. With `restrict_to` set, only words over
  // those source generators are enumerated. Throws NotHomomorphismError when
  // m fails check_homomorphism.
  KernelSearchResult kernel_search(GeneratorMap const& m, std::size_t max_len,
                                   std::optional<VertexSet> const& restrict_to
                                   = std::nullopt);

  // No kernel element of length <= max_len inside the parabolic <ys>.
  bool parabolic_restriction_injective(GeneratorMap const& m,
                                       VertexSet const&    ys,
                                       std::size_t         max_len);

  // True when every occurrence of `first`^{+-1} in w lies in a subword
  // (first second)^{+-1}, i.e. first is followed by second, or first^-1 is
  // preceded by second^-1.
  bool occurs_only_in_pairs(Word const& w, std::size_t first,
                            std::size_t second);

}  // namespace pcg

#endif  // PCG_MORPHISMS_HPP_
