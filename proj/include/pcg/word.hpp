#ifndef PCG_WORD_HPP_
#define PCG_WORD_HPP_

// Words over the generators of a partially commutative group and the word
// problem, solved through shortlex normal forms.
//
// Letters are ordered by vertex declaration order, and within one vertex the
// generator comes before its inverse. The normal form of a word is the
// shortlex-least word among all words representing the same element.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcg/graph.hpp"

namespace pcg {

  struct Letter {
    std::uint32_t base    = 0;
    bool          inverse = false;

    constexpr int sign() const noexcept {
      return inverse ? -1 : 1;
    }

    constexpr Letter inverted() const noexcept {
      return Letter{base, !inverse};
    }

    // Position in the letter order: x < x^-1 < y < y^-1 < ...
    constexpr std::uint32_t key() const noexcept {
      return 2 * base + (inverse ? 1 : 0);
    }

    static constexpr Letter from_key(std::uint32_t key) noexcept {
      return Letter{key / 2, (key % 2) == 1};
    }

    constexpr bool operator==(Letter const&) const = default;

    constexpr auto operator<=>(Letter const& other) const noexcept {
      return key() <=> other.key();
    }
  };

  using Word = std::vector<Letter>;

  // The one-letter word x.
  inline Word generator_word(std::size_t x) {
    return Word{Letter{static_cast<std::uint32_t>(x), false}};
  }

  Word inverse(Word const& w);
  Word concat(Word const& u, Word const& v);

  // u^-1 v^-1 u v
  Word commutator(Word const& u, Word const& v);

  // Shortlex comparison: by length, then lexicographically by letter key.
  bool shortlex_less(Word const& u, Word const& v);

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  // Whitespace-separated tokens, each a generator name optionally suffixed
  // "^-1". Empty text is the identity. Throws ParseError for malformed
  // tokens and unknown generators.
  Word parse_word(Graph const& g, std::string_view text);

  // Tokens joined by `separator`; the identity is the empty string.
  std::string format_word(Graph const& g, Word const& w,
                          std::string_view separator = " ");

  ////////////////////////////////////////////////////////////////////////
  // Normal forms
  ////////////////////////////////////////////////////////////////////////

  class NormalForm {
   public:
    NormalForm() = default;

    Word const& word() const noexcept {
      return _word;
    }

    std::size_t size() const noexcept {
      return _word.size();
    }

    bool empty() const noexcept {
      return _word.empty();
    }

    bool operator==(NormalForm const&) const = default;

    friend bool operator<(NormalForm const& a, NormalForm const& b) {
      return shortlex_less(a._word, b._word);
    }

   private:
    friend NormalForm normal_form(Graph const&, Word const&);
    explicit NormalForm(Word w) : _word(std::move(w)) {}

    Word _word;
  };

  // Reduces w by piling: each generator has a stack; pushing x also pushes a
  // blocker onto the stack of every generator not commuting with x, and an
  // incoming x^-e cancels an x^e found on top of x's stack. The surviving
  // letters are then linearised by always emitting the least letter whose
  // predecessors in the dependence order have been emitted.
  NormalForm normal_form(Graph const& g, Word const& w);

  bool is_trivial(Graph const& g, Word const& w);
  bool words_equal(Graph const& g, Word const& u, Word const& v);

  // Bases occurring in the normal form of w; an invariant of the element.
  VertexSet alphabet(Graph const& g, Word const& w);

  // Bases occurring in w as written.
  VertexSet raw_alphabet(Word const& w);

  // True if w is a reduced word: no shorter word represents the same element.
  bool is_reduced(Graph const& g, Word const& w);

  // All |w| rotations of w, starting with w itself; {""} for the empty word.
  std::vector<Word> cyclic_permutations(Word const& w);

  ////////////////////////////////////////////////////////////////////////
  // Cancellation pairings
  ////////////////////////////////////////////////////////////////////////

  // Perfect matching of the positions of a trivial word in which each pair
  // joins mutually inverse letters. Pairs are (i, j) with i < j, listed in
  // the order the piling cancelled them, which is also a valid elimination
  // order.
  struct Pairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    // partner[i] for every position i of the word.
    std::vector<std::size_t> partners(std::size_t word_length) const;
  };

  // Pairs each letter with the letter it annihilated during piling. Throws
  // NotTrivialError if w does not represent the identity.
  Pairing cancellation_pairing(Graph const& g, Word const& w);

  // Pairs of base x with no occurrence of x strictly between their ends.
  // Throws InvalidArgument if x does not occur in w.
  std::vector<std::pair<std::size_t, std::size_t>>
  outside_pairs(Word const& w, Pairing const& p, std::size_t x);

  // Checks that p matches every position of w with an inverse letter and
  // that the pairs can be removed one at a time, each time with only letters
  // commuting with the pair's base left strictly inside it.
  bool is_eliminable(Graph const& g, Word const& w, Pairing const& p);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  // The words w x, for x in `letters` (taken in order), that are normal
  // forms. w must itself be a normal form.
  std::vector<Word> normal_form_successors(Graph const& g, Word const& w,
                                           std::vector<Letter> const& letters);

  // All letters over the given bases, in letter order.
  std::vector<Letter> letters_over(VertexSet const& bases);
  std::vector<Letter> letters_over(Graph const& g);

  // Visits every group element with normal form of length <= max_len over
  // `letters`, exactly once, ordered by length and then shortlex. Visiting
  // stops early when visit returns false.
  void for_each_normal_form(Graph const& g, std::vector<Letter> const& letters,
                            std::size_t                             max_len,
                            std::function<bool(Word const&)> const& visit);

}  // namespace pcg

#endif  // PCG_WORD_HPP_
