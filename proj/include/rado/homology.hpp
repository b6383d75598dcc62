#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "rado/mesh.hpp"

namespace rado {

struct HomologyRanks {
  int d0 = 0;
  int d1 = 0;
  int d2 = 0;

  friend bool operator==(const HomologyRanks& a, const HomologyRanks& b) {
    return a.d0 == b.d0 && a.d1 == b.d1 && a.d2 == b.d2;
  }
};

namespace detail {

// rank of a dense GF(2) matrix given as bitset rows
inline int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int ncols) {
  int rank = 0;
  int nrows = static_cast<int>(rows.size());
  for (int col = 0; col < ncols && rank < nrows; col++) {
    int word = col >> 6;
    std::uint64_t bit = 1ull << (col & 63);
    int pivot = -1;
    for (int r = rank; r < nrows; r++)
      if (rows[r][word] & bit) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < nrows; r++) {
      if (r == rank || !(rows[r][word] & bit)) continue;
      for (size_t w = 0; w < rows[r].size(); w++) rows[r][w] ^= rows[rank][w];
    }
    rank++;
  }
  return rank;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); i++)
      if (find(i) == i) c++;
    return c;
  }
};

} // namespace detail

// Z2 simplicial homology ranks from Gaussian elimination on the boundary
// matrices. d0 - d1 + d2 = chi and d0 agrees with the component count; both
// are cheap cross-checks callers are expected to keep asserting.
inline HomologyRanks homology_z2(const Mesh& m) {
  int V = m.vertex_count, E = m.edge_count(), F = m.triangle_count();
  int ewords = (E + 63) / 64;

  // boundary_1: one row per vertex, columns are edges
  std::vector<std::vector<std::uint64_t>> d1rows(V, std::vector<std::uint64_t>(ewords, 0));
  for (int e = 0; e < E; e++) {
    d1rows[m.edges[e][0]][e >> 6] |= 1ull << (e & 63);
    d1rows[m.edges[e][1]][e >> 6] |= 1ull << (e & 63);
  }
  int rank1 = detail::gf2_rank(std::move(d1rows), E);

  // boundary_2: one row per triangle, columns are edges
  std::vector<std::vector<std::uint64_t>> d2rows(F, std::vector<std::uint64_t>(ewords, 0));
  for (int t = 0; t < F; t++)
    for (int c = 0; c < 3; c++) {
      int e = m.triangle_edges[t][c];
      d2rows[t][e >> 6] ^= 1ull << (e & 63);
    }
  int rank2 = detail::gf2_rank(std::move(d2rows), E);

  HomologyRanks h;
  h.d0 = V - rank1;
  h.d1 = E - rank1 - rank2;
  h.d2 = F - rank2;
  return h;
}

// connected components of the 1-skeleton; the independent route to d0
inline int connected_components(const Mesh& m) {
  detail::UnionFind uf(m.vertex_count);
  for (const auto& e : m.edges) uf.unite(e[0], e[1]);
  return uf.components();
}

} // namespace rado
