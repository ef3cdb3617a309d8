#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ekr {

/// Simple undirected graph stored as dense bitset rows.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(int n);

  int size() const { return n_; }
  int words_per_row() const { return words_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(int u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
  }
  int degree(int u) const;

  bool is_symmetric() const;
  bool is_irreflexive() const;

  /// Complement on the same vertex set, without loops.
  BitGraph complement() const;
  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  BitGraph induced(std::span<const int> vertices) const;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace ekr
