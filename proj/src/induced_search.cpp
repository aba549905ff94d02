#include "pcg/induced_search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "pcg/parallel.hpp"

namespace pcg {

  namespace {

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    // Hosts below this size are searched on the calling thread.
    constexpr std::size_t parallel_threshold = 64;

    class Search {
     public:
      Search(AdjacencyMatrix const& pattern, AdjacencyMatrix const& host)
          : _pattern(pattern),
            _host(host),
            _anchor(pattern.size(), none),
            _host_neighbours(host.size()) {
        for (std::size_t k = 0; k < pattern.size(); ++k) {
          for (std::size_t j = 0; j < k; ++j) {
            if (pattern.test(j, k)) {
              _anchor[k] = j;
              break;
            }
          }
        }
        for (std::size_t u = 0; u < host.size(); ++u) {
          for (std::size_t v = 0; v < host.size(); ++v) {
            if (u != v && host.test(u, v)) {
              _host_neighbours[u].push_back(v);
            }
          }
        }
      }

      bool admissible(std::size_t                     k,
                      std::size_t                     c,
                      std::vector<std::size_t> const& image,
                      std::vector<char> const&        used) const {
        if (used[c]) {
          return false;
        }
        std::size_t const np = _pattern.size(), nh = _host.size();
        if (_host.degree(c) < _pattern.degree(k)
            || nh - 1 - _host.degree(c) < np - 1 - _pattern.degree(k)) {
          return false;
        }
        for (std::size_t j = 0; j < k; ++j) {
          if (_host.test(image[j], c) != _pattern.test(j, k)) {
            return false;
          }
        }
        return true;
      }

      // Candidates for pattern vertex k, in increasing host order.
      template <typename F>
      bool for_each_candidate(std::size_t                     k,
                              std::vector<std::size_t> const& image,
                              F&&                             f) const {
        if (_anchor[k] != none) {
          for (auto c : _host_neighbours[image[_anchor[k]]]) {
            if (f(c)) {
              return true;
            }
          }
          return false;
        }
        for (std::size_t c = 0; c < _host.size(); ++c) {
          if (f(c)) {
            return true;
          }
        }
        return false;
      }

      bool extend(std::size_t               k,
                  std::vector<std::size_t>& image,
                  std::vector<char>&        used) const {
        if (k == _pattern.size()) {
          return true;
        }
        return for_each_candidate(k, image, [&](std::size_t c) {
          if (!admissible(k, c, image, used)) {
            return false;
          }
          image[k] = c;
          used[c]  = 1;
          if (extend(k + 1, image, used)) {
            return true;
          }
          used[c] = 0;
          return false;
        });
      }

      // Search with pattern vertex 0 fixed to host vertex `first`.
      std::optional<std::vector<std::size_t>> branch(std::size_t first) const {
        std::vector<std::size_t> image(_pattern.size(), none);
        std::vector<char>        used(_host.size(), 0);
        if (!admissible(0, first, image, used)) {
          return std::nullopt;
        }
        image[0]    = first;
        used[first] = 1;
        if (extend(1, image, used)) {
          return image;
        }
        return std::nullopt;
      }

     private:
      AdjacencyMatrix const&                _pattern;
      AdjacencyMatrix const&                _host;
      std::vector<std::size_t>              _anchor;
      std::vector<std::vector<std::size_t>> _host_neighbours;
    };

  }  // namespace

  std::optional<std::vector<std::size_t>>
  find_induced_embedding(AdjacencyMatrix const& pattern,
                         AdjacencyMatrix const& host) {
    if (pattern.size() == 0) {
      return std::vector<std::size_t>{};
    }
    if (pattern.size() > host.size()) {
      return std::nullopt;
    }
    Search const search(pattern, host);

    if (host.size() < parallel_threshold || worker_count() <= 1) {
      for (std::size_t first = 0; first < host.size(); ++first) {
        if (auto result = search.branch(first)) {
          return result;
        }
      }
      return std::nullopt;
    }

    std::vector<std::optional<std::vector<std::size_t>>> results(host.size());
    std::atomic<std::size_t>                             best{none};
    parallel_for(host.size(), [&](std::size_t first) {
      if (first > best.load(std::memory_order_relaxed)) {
        return;
      }
      results[first] = search.branch(first);
      if (results[first]) {
        std::size_t current = best.load();
        while (first < current && !best.compare_exchange_weak(current, first)) {
        }
      }
    });
    if (best.load() == none) {
      return std::nullopt;
    }
    return results[best.load()];
  }

  bool is_induced_embedding(AdjacencyMatrix const&          pattern,
                            AdjacencyMatrix const&          host,
                            std::vector<std::size_t> const& image) {
    if (image.size() != pattern.size()) {
      return false;
    }
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] >= host.size()) {
        return false;
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (image[i] == image[j]
            || host.test(image[i], image[j]) != pattern.test(i, j)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace pcg
