#include "pcg/word.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "pcg/errors.hpp"

namespace pcg {

  namespace {

    constexpr long blocker = -1;

    bool dependent(Graph const& g, std::uint32_t x, std::uint32_t y) {
      return x != y && !g.adjacent(x, y);
    }

    // Per-thread buffers reused across calls; the word routines are called
    // millions of times on short words by the searches.
    struct Scratch {
      using Entry = std::pair<std::uint32_t, std::size_t>;  // (key, survivor)

      std::vector<std::vector<long>>        stacks;
      std::vector<std::size_t>              positions, pending, latest;
      std::vector<std::vector<std::size_t>> successors;
      std::vector<Entry>                    ready;
    };

    Scratch& scratch() {
      thread_local Scratch s;
      return s;
    }

    struct Piling {
      std::vector<char>                                alive;
      std::vector<std::pair<std::size_t, std::size_t>> cancelled;
    };

    Piling pile(Graph const& g, Word const& w) {
      auto& stacks = scratch().stacks;
      if (stacks.size() < g.size()) {
        stacks.resize(g.size());
      }
      for (std::size_t x = 0; x < g.size(); ++x) {
        stacks[x].clear();
      }
      auto const n = static_cast<std::uint32_t>(g.size());
      Piling     result;
      result.alive.assign(w.size(), 0);

      for (std::size_t k = 0; k < w.size(); ++k) {
        auto const x     = w[k].base;
        auto&      stack = stacks[x];
        if (!stack.empty() && stack.back() != blocker
            && w[static_cast<std::size_t>(stack.back())].inverse
                   != w[k].inverse) {
          auto const i = static_cast<std::size_t>(stack.back());
          stack.pop_back();
          for (std::uint32_t y = 0; y < n; ++y) {
            if (dependent(g, x, y)) {
              stacks[y].pop_back();
            }
          }
          result.alive[i] = 0;
          result.cancelled.emplace_back(i, k);
        } else {
          stack.push_back(static_cast<long>(k));
          for (std::uint32_t y = 0; y < n; ++y) {
            if (dependent(g, x, y)) {
              stacks[y].push_back(blocker);
            }
          }
          result.alive[k] = 1;
        }
      }
      return result;
    }

    // Least linear extension of the dependence order on the surviving
    // letters. Two letters are dependent when their bases are equal or do
    // not commute; it suffices to link each letter to the latest earlier
    // survivor of every dependent base.
    Word linearise(Graph const& g, Word const& w, std::vector<char> const& alive) {
      auto& sc        = scratch();
      auto& positions = sc.positions;
      positions.clear();
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (alive[k]) {
          positions.push_back(k);
        }
      }
      std::size_t const     m     = positions.size();
      constexpr std::size_t unset = static_cast<std::size_t>(-1);
      auto&                 successors = sc.successors;
      if (successors.size() < m) {
        successors.resize(m);
      }
      for (std::size_t s = 0; s < m; ++s) {
        successors[s].clear();
      }
      auto& pending = sc.pending;
      pending.assign(m, 0);
      auto& latest = sc.latest;
      latest.assign(g.size(), unset);

      for (std::size_t s = 0; s < m; ++s) {
        auto const x = w[positions[s]].base;
        for (std::uint32_t y = 0; y < g.size(); ++y) {
          if ((y == x || !g.adjacent(x, y)) && latest[y] != unset) {
            successors[latest[y]].push_back(s);
            ++pending[s];
          }
        }
        latest[x] = s;
      }

      auto& ready = sc.ready;
      ready.clear();
      auto const push = [&](std::size_t s) {
        ready.emplace_back(w[positions[s]].key(), s);
        std::push_heap(ready.begin(), ready.end(), std::greater<>{});
      };
      for (std::size_t s = 0; s < m; ++s) {
        if (pending[s] == 0) {
          push(s);
        }
      }
      Word out;
      out.reserve(m);
      while (!ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), std::greater<>{});
        auto const [key, s] = ready.back();
        ready.pop_back();
        out.push_back(Letter::from_key(key));
        for (auto t : successors[s]) {
          if (--pending[t] == 0) {
            push(t);
          }
        }
      }
      return out;
    }

    void check_letters(Graph const& g, Word const& w) {
      for (auto const& l : w) {
        if (l.base >= g.size()) {
          throw InvalidArgument("letter base " + std::to_string(l.base)
                                + " is not a vertex of the graph");
        }
      }
    }

  }  // namespace

  Word inverse(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inverted());
    }
    return out;
  }

  Word concat(Word const& u, Word const& v) {
    Word out(u);
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  Word commutator(Word const& u, Word const& v) {
    return concat(concat(inverse(u), inverse(v)), concat(u, v));
  }

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

  Word parse_word(Graph const& g, std::string_view text) {
    Word        out;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      std::string_view token = text.substr(i, j - i);
      i                      = j;
      bool inverse           = false;
      if (auto caret = token.find('^'); caret != std::string_view::npos) {
        if (token.substr(caret) != "^-1") {
          throw ParseError(0, "malformed token \"" + std::string(token) + "\"");
        }
        inverse = true;
        token   = token.substr(0, caret);
      }
      if (!is_identifier(token)) {
        throw ParseError(0, "malformed token \"" + std::string(token) + "\"");
      }
      auto const base = g.find(token);
      if (!base) {
        throw ParseError(0, "unknown generator \"" + std::string(token) + "\"");
      }
      out.push_back(Letter{static_cast<std::uint32_t>(*base), inverse});
    }
    return out;
  }

  std::string format_word(Graph const& g, Word const& w,
                          std::string_view separator) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) {
        out += separator;
      }
      out += g.name(w[i].base);
      if (w[i].inverse) {
        out += "^-1";
      }
    }
    return out;
  }

  NormalForm normal_form(Graph const& g, Word const& w) {
    check_letters(g, w);
    auto const piling = pile(g, w);
    return NormalForm(linearise(g, w, piling.alive));
  }

  bool is_trivial(Graph const& g, Word const& w) {
    return normal_form(g, w).empty();
  }

  bool words_equal(Graph const& g, Word const& u, Word const& v) {
    return normal_form(g, u) == normal_form(g, v);
  }

  VertexSet alphabet(Graph const& g, Word const& w) {
    return raw_alphabet(normal_form(g, w).word());
  }

  VertexSet raw_alphabet(Word const& w) {
    VertexSet out;
    for (auto const& l : w) {
      out.insert(l.base);
    }
    return out;
  }

  bool is_reduced(Graph const& g, Word const& w) {
    return normal_form(g, w).size() == w.size();
  }

  std::vector<Word> cyclic_permutations(Word const& w) {
    if (w.empty()) {
      return {Word{}};
    }
    std::vector<Word> out;
    for (std::size_t r = 0; r < w.size(); ++r) {
      Word rotated(w.begin() + static_cast<long>(r), w.end());
      rotated.insert(rotated.end(), w.begin(), w.begin() + static_cast<long>(r));
      out.push_back(std::move(rotated));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cancellation pairings
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> Pairing::partners(std::size_t word_length) const {
    std::vector<std::size_t> out(word_length, static_cast<std::size_t>(-1));
    for (auto const& [i, j] : pairs) {
      out.at(i) = j;
      out.at(j) = i;
    }
    return out;
  }

  Pairing cancellation_pairing(Graph const& g, Word const& w) {
    check_letters(g, w);
    auto piling = pile(g, w);
    if (std::any_of(piling.alive.begin(), piling.alive.end(),
                    [](char a) { return a != 0; })) {
      throw NotTrivialError("word does not represent the identity: "
                            + format_word(g, w));
    }
    return Pairing{std::move(piling.cancelled)};
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  outside_pairs(Word const& w, Pairing const& p, std::size_t x) {
    if (!raw_alphabet(w).count(x)) {
      throw InvalidArgument("generator " + std::to_string(x)
                            + " does not occur in the word");
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto const& [i, j] : p.pairs) {
      if (w.at(i).base != x) {
        continue;
      }
      bool clear = true;
      for (std::size_t k = i + 1; k < j && clear; ++k) {
        clear = w[k].base != x;
      }
      if (clear) {
        out.emplace_back(i, j);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_eliminable(Graph const& g, Word const& w, Pairing const& p) {
    std::vector<char> matched(w.size(), 0);
    for (auto const& [i, j] : p.pairs) {
      if (i >= j || j >= w.size() || matched[i] || matched[j]
          || w[i].base != w[j].base || w[i].inverse == w[j].inverse) {
        return false;
      }
      matched[i] = matched[j] = 1;
    }
    if (std::find(matched.begin(), matched.end(), 0) != matched.end()) {
      return false;
    }
    // Removing a pair never blocks another, so greedy elimination decides.
    std::vector<char> present(w.size(), 1);
    std::vector<char> done(p.pairs.size(), 0);
    for (std::size_t removed = 0; removed < p.pairs.size();) {
      bool progress = false;
      for (std::size_t q = 0; q < p.pairs.size(); ++q) {
        if (done[q]) {
          continue;
        }
        auto const [i, j] = p.pairs[q];
        auto const x      = w[i].base;
        bool       ok     = true;
        for (std::size_t k = i + 1; k < j && ok; ++k) {
          ok = !present[k] || (w[k].base != x && g.adjacent(w[k].base, x));
        }
        if (ok) {
          present[i] = present[j] = 0;
          done[q]                 = 1;
          ++removed;
          progress = true;
        }
      }
      if (!progress) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  std::vector<Letter> letters_over(VertexSet const& bases) {
    std::vector<Letter> out;
    for (auto b : bases) {
      out.push_back(Letter{static_cast<std::uint32_t>(b), false});
      out.push_back(Letter{static_cast<std::uint32_t>(b), true});
    }
    return out;
  }

  std::vector<Letter> letters_over(Graph const& g) {
    std::vector<Letter> out;
    for (std::uint32_t b = 0; b < g.size(); ++b) {
      out.push_back(Letter{b, false});
      out.push_back(Letter{b, true});
    }
    return out;
  }

  std::vector<Word> normal_form_successors(Graph const& g, Word const& w,
                                           std::vector<Letter> const& letters) {
    std::vector<Word> out;
    Word              candidate(w);
    candidate.push_back(Letter{});
    for (auto const& l : letters) {
      if (!w.empty() && w.back() == l.inverted()) {
        continue;
      }
      candidate.back() = l;
      if (normal_form(g, candidate).word() == candidate) {
        out.push_back(candidate);
      }
    }
    return out;
  }

  void for_each_normal_form(Graph const& g, std::vector<Letter> const& letters,
                            std::size_t                             max_len,
                            std::function<bool(Word const&)> const& visit) {
    std::vector<Word> level{Word{}};
    for (std::size_t n = 0;; ++n) {
      for (auto const& w : level) {
        if (!visit(w)) {
          return;
        }
      }
      if (n == max_len) {
        return;
      }
      std::vector<Word> next;
      for (auto const& w : level) {
        auto more = normal_form_successors(g, w, letters);
        std::move(more.begin(), more.end(), std::back_inserter(next));
      }
      level = std::move(next);
    }
  }

}  // namespace pcg
