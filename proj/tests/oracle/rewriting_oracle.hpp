#ifndef PCG_TESTS_REWRITING_ORACLE_HPP_
#define PCG_TESTS_REWRITING_ORACLE_HPP_

// Brute-force reference implementations used only by the tests. None of
// these call into the normal-form code; they work directly on the rewriting
// system whose moves are
//   - swapping two adjacent letters with distinct commuting bases, and
//   - deleting an adjacent pair x^e x^-e.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "pcg/graph.hpp"
#include "pcg/word.hpp"

namespace pcg::oracle {

  inline bool swappable(Graph const& g, Letter a, Letter b) {
    return a.base != b.base && g.adjacent(a.base, b.base);
  }

  inline bool cancels(Letter a, Letter b) {
    return a.base == b.base && a.inverse != b.inverse;
  }

  // Every word reachable from w by the moves above (w included).
  inline std::set<Word> reachable(Graph const& g, Word const& w) {
    std::set<Word>   seen{w};
    std::queue<Word> todo;
    todo.push(w);
    while (!todo.empty()) {
      Word u = todo.front();
      todo.pop();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        Word next;
        if (swappable(g, u[i], u[i + 1])) {
          next = u;
          std::swap(next[i], next[i + 1]);
        } else if (cancels(u[i], u[i + 1])) {
          next = u;
          next.erase(next.begin() + static_cast<long>(i),
                     next.begin() + static_cast<long>(i) + 2);
        } else {
          continue;
        }
        if (seen.insert(next).second) {
          todo.push(std::move(next));
        }
      }
    }
    return seen;
  }

  inline bool is_trivial(Graph const& g, Word const& w) {
    return reachable(g, w).count(Word{}) != 0;
  }

  // Shortlex-least reachable word.
  inline Word least_reachable(Graph const& g, Word const& w) {
    auto const all = reachable(g, w);
    return *std::min_element(all.begin(), all.end(), shortlex_less);
  }

  inline Word from_keys(std::vector<std::uint32_t> const& keys) {
    Word w;
    for (auto k : keys) {
      w.push_back(Letter::from_key(k));
    }
    return w;
  }

  // Closure of the rewriting system over every word of length <= max_len,
  // stored as tables indexed so that index order is shortlex order: the
  // index of a word of length L is offset(L) plus its letter keys read as a
  // base-(2|V|) number. canon(w) is the shortlex-least word reachable from
  // w, computed level by level: swap moves are merged with union-find and
  // each class takes the least canon among its cancellation successors
  // (shorter, already final), or its own least member if there are none.
  class ExhaustiveCanon {
   public:
    ExhaustiveCanon(Graph const& g, std::size_t max_len)
        : _graph(g), _radix(2 * g.size()), _max_len(max_len) {
      _power.push_back(1);
      for (std::size_t i = 0; i <= max_len; ++i) {
        _power.push_back(_power.back() * _radix);
      }
      _offset.push_back(0);
      for (std::size_t L = 0; L <= max_len; ++L) {
        _offset.push_back(_offset.back() + _power[L]);
      }
      for (std::size_t L = 0; L <= max_len; ++L) {
        build_level(L);
      }
    }

    std::size_t radix() const noexcept {
      return _radix;
    }

    std::uint64_t words_of_length(std::size_t L) const {
      return _power[L];
    }

    // Letters of the local index-th word of length L.
    Word word(std::size_t L, std::uint64_t local) const {
      Word w(L);
      for (std::size_t i = L; i-- > 0;) {
        w[i] = Letter::from_key(static_cast<std::uint32_t>(local % _radix));
        local /= _radix;
      }
      return w;
    }

    std::uint64_t global_index(Word const& w) const {
      std::uint64_t local = 0;
      for (auto const& l : w) {
        local = local * _radix + l.key();
      }
      return _offset[w.size()] + local;
    }

    // Global index of the canonical word of the given word.
    std::uint64_t canon(std::size_t L, std::uint64_t local) const {
      return _canon[L][local];
    }

    std::uint64_t canon(Word const& w) const {
      return _canon[w.size()][global_index(w) - _offset[w.size()]];
    }

    Word decode(std::uint64_t global) const {
      std::size_t L = 0;
      while (_offset[L + 1] <= global) {
        ++L;
      }
      return word(L, global - _offset[L]);
    }

   private:
    std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    void build_level(std::size_t L) {
      auto const                 n = _power[L];
      std::vector<std::uint32_t> parent(n);
      std::iota(parent.begin(), parent.end(), 0U);
      std::vector<std::uint32_t> digits(L);

      auto for_each_word = [&](auto&& f) {
        std::fill(digits.begin(), digits.end(), 0U);
        for (std::uint64_t idx = 0; idx < n; ++idx) {
          f(idx);
          for (std::size_t i = L; i-- > 0;) {
            if (++digits[i] < _radix) {
              break;
            }
            digits[i] = 0;
          }
        }
      };

      for_each_word([&](std::uint64_t idx) {
        for (std::size_t i = 0; i + 1 < L; ++i) {
          auto const a = Letter::from_key(digits[i]);
          auto const b = Letter::from_key(digits[i + 1]);
          if (digits[i] < digits[i + 1] && swappable(_graph, a, b)) {
            std::uint64_t const hi = _power[L - 1 - i], lo = _power[L - 2 - i];
            std::uint64_t const swapped
                = idx + (digits[i + 1] - digits[i]) * hi
                  - (digits[i + 1] - digits[i]) * lo;
            auto const ra = find(parent, static_cast<std::uint32_t>(idx));
            auto const rb = find(parent, static_cast<std::uint32_t>(swapped));
            if (ra != rb) {
              parent[std::max(ra, rb)] = std::min(ra, rb);
            }
          }
        }
      });

      std::vector<std::uint64_t> best(n, ~std::uint64_t{0});
      for_each_word([&](std::uint64_t idx) {
        std::uint64_t candidate = _offset[L] + idx;
        for (std::size_t i = 0; i + 1 < L; ++i) {
          if (cancels(Letter::from_key(digits[i]),
                      Letter::from_key(digits[i + 1]))) {
            std::uint64_t const prefix = idx / _power[L - i];
            std::uint64_t const suffix = idx % _power[L - 2 - i];
            std::uint64_t const shorter = prefix * _power[L - 2 - i] + suffix;
            candidate = std::min(candidate, _canon[L - 2][shorter]);
          }
        }
        auto const root = find(parent, static_cast<std::uint32_t>(idx));
        best[root]      = std::min(best[root], candidate);
      });

      std::vector<std::uint64_t> level(n);
      for (std::uint64_t idx = 0; idx < n; ++idx) {
        level[idx] = best[find(parent, static_cast<std::uint32_t>(idx))];
      }
      _canon.push_back(std::move(level));
    }

    Graph                                   _graph;
    std::size_t                             _radix;
    std::size_t                             _max_len;
    std::vector<std::uint64_t>              _power;
    std::vector<std::uint64_t>              _offset;
    std::vector<std::vector<std::uint64_t>> _canon;
  };

  // Induced embedding by trying every injection (pattern order, host order).
  inline bool has_induced_copy(Graph const& pattern, Graph const& host) {
    std::size_t const        k = pattern.size();
    std::vector<std::size_t> image(k);
    std::vector<char>        used(host.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
      if (i == k) {
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = a + 1; b < k; ++b) {
            if (pattern.adjacent(a, b) != host.adjacent(image[a], image[b])) {
              return false;
            }
          }
        }
        return true;
      }
      for (std::size_t c = 0; c < host.size(); ++c) {
        if (!used[c]) {
          used[c]  = 1;
          image[i] = c;
          if (self(self, i + 1)) {
            return true;
          }
          used[c] = 0;
        }
      }
      return false;
    };
    return rec(rec, 0);
  }

}  // namespace pcg::oracle

#endif  // PCG_TESTS_REWRITING_ORACLE_HPP_
