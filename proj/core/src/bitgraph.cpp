#include "ekr/bitgraph.hpp"

#include <bit>

namespace ekr {

BitGraph::BitGraph(int n)
    : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

void BitGraph::add_edge(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int BitGraph::degree(int u) const {
  int d = 0;
  for (auto w : row(u)) d += std::popcount(w);
  return d;
}

bool BitGraph::is_symmetric() const {
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v) != adjacent(v, u)) return false;
  return true;
}

bool BitGraph::is_irreflexive() const {
  for (int u = 0; u < n_; ++u)
    if (adjacent(u, u)) return false;
  return true;
}

BitGraph BitGraph::complement() const {
  BitGraph c(n_);
  for (int u = 0; u < n_; ++u) {
    auto* dst = c.bits_.data() + static_cast<std::size_t>(u) * words_;
    const auto src = row(u);
    for (int w = 0; w < words_; ++w) dst[w] = ~src[w];
    if (n_ % 64 != 0) dst[words_ - 1] &= (std::uint64_t{1} << (n_ % 64)) - 1;
    dst[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
  }
  return c;
}

BitGraph BitGraph::induced(std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size());
  BitGraph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
  return g;
}

}  // namespace ekr
