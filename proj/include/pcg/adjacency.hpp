#ifndef PCG_ADJACENCY_HPP_
#define PCG_ADJACENCY_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pcg {

  // Symmetric 0/1 matrix stored as packed bit rows. Used as the adjacency
  // structure of both ordinary graphs and extension-graph balls.
  class AdjacencyMatrix {
   public:
    AdjacencyMatrix() = default;

    explicit AdjacencyMatrix(std::size_t n)
        : _n(n), _stride((n + 63) / 64), _bits(_n * _stride, 0), _degree(n, 0) {}

    std::size_t size() const noexcept {
      return _n;
    }

    bool test(std::size_t i, std::size_t j) const noexcept {
      return (_bits[i * _stride + j / 64] >> (j % 64)) & 1U;
    }

    // Sets the symmetric pair {i, j}; i != j.
    void set(std::size_t i, std::size_t j) noexcept {
      if (!test(i, j)) {
        _bits[i * _stride + j / 64] |= std::uint64_t{1} << (j % 64);
        _bits[j * _stride + i / 64] |= std::uint64_t{1} << (i % 64);
        ++_degree[i];
        ++_degree[j];
      }
    }

    std::size_t degree(std::size_t i) const noexcept {
      return _degree[i];
    }

    std::size_t edge_count() const noexcept {
      std::size_t total = 0;
      for (auto d : _degree) {
        total += d;
      }
      return total / 2;
    }

    bool operator==(AdjacencyMatrix const&) const = default;

   private:
    std::size_t                _n      = 0;
    std::size_t                _stride = 0;
    std::vector<std::uint64_t> _bits;
    std::vector<std::size_t>   _degree;
  };

}  // namespace pcg

#endif  // PCG_ADJACENCY_HPP_
