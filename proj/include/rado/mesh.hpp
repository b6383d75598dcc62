#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rado/errors.hpp"

namespace rado {

using Triangle = std::array<int, 3>;
using Vec3 = std::array<double, 3>;

// A triangulated compact 2-manifold-with-boundary. Connectivity is validated
// and frozen at construction; instances are immutable and safe to share.
// Positions are advisory: no counting identity ever reads them.
struct Mesh {
  int vertex_count = 0;
  std::vector<Triangle> triangles;
  std::optional<std::vector<Vec3>> positions;

  // derived tables
  std::vector<std::array<int, 2>> edges; // sorted endpoint pairs, lexicographic order
  std::vector<std::array<int, 2>> edge_triangles; // incident triangles per edge, -1 when absent
  std::vector<std::array<int, 3>> triangle_edges;
  std::vector<bool> edge_on_boundary;
  std::vector<bool> vertex_on_boundary;
  // Ordered neighborhoods: link[v] is the link cycle of an interior vertex
  // (no repeated first entry) or the link path of a boundary vertex, whose two
  // ends are the boundary neighbors. star[v][i] is the triangle spanning
  // link[v][i] -> link[v][i+1] (wrapping for interior vertices).
  std::vector<std::vector<int>> link;
  std::vector<std::vector<int>> star;

  bool has_positions() const { return positions.has_value(); }

  int edge_count() const { return static_cast<int>(edges.size()); }
  int triangle_count() const { return static_cast<int>(triangles.size()); }

  int boundary_edge_count() const {
    return static_cast<int>(std::count(edge_on_boundary.begin(), edge_on_boundary.end(), true));
  }

  bool closed() const { return boundary_edge_count() == 0; }

  int euler_characteristic() const { return vertex_count - edge_count() + triangle_count(); }

  // index into edges, or -1
  int edge_index(int u, int v) const {
    std::array<int, 2> key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) return -1;
    return static_cast<int>(it - edges.begin());
  }
};

using MeshPtr = std::shared_ptr<const Mesh>;

namespace detail {

inline void order_vertex_fans(Mesh& m) {
  int V = m.vertex_count;
  std::vector<std::vector<int>> incident(V);
  for (int t = 0; t < m.triangle_count(); t++)
    for (int c = 0; c < 3; c++) incident[m.triangles[t][c]].push_back(t);

  m.link.assign(V, {});
  m.star.assign(V, {});

  for (int v = 0; v < V; v++) {
    const auto& inc = incident[v];
    if (inc.empty()) fail(ErrorCode::PinchedVertex, "vertex " + std::to_string(v) + " has an empty link");

    // wings[t] = the two neighbors of v in triangle t
    auto wings = [&](int t) {
      std::array<int, 2> w{-1, -1};
      int k = 0;
      for (int c = 0; c < 3; c++)
        if (m.triangles[t][c] != v) w[k++] = m.triangles[t][c];
      return w;
    };

    // neighbor -> incident star triangles through the edge (v, neighbor)
    std::map<int, std::vector<int>> through;
    for (int t : inc) {
      auto w = wings(t);
      through[w[0]].push_back(t);
      through[w[1]].push_back(t);
    }

    int start = -1; // boundary neighbor if any
    for (auto& [u, ts] : through) {
      if (ts.size() > 2) fail(ErrorCode::NonManifoldEdge, "edge " + std::to_string(std::min(u, v)) + "-" + std::to_string(std::max(u, v)));
      if (ts.size() == 1 && start < 0) start = u;
    }
    bool on_boundary = start >= 0;
    if (!on_boundary) start = through.begin()->first;

    std::vector<int> lk{start};
    std::vector<int> st;
    std::vector<char> used(m.triangle_count(), 0);
    int cur = start;
    while (true) {
      int next_t = -1;
      for (int t : through[cur])
        if (!used[t]) {
          next_t = t;
          break;
        }
      if (next_t < 0) break;
      used[next_t] = 1;
      auto w = wings(next_t);
      cur = (w[0] == cur) ? w[1] : w[0];
      st.push_back(next_t);
      lk.push_back(cur);
    }

    if (st.size() != inc.size())
      fail(ErrorCode::PinchedVertex, "link of vertex " + std::to_string(v) + " is disconnected");
    if (!on_boundary) {
      if (lk.front() != lk.back())
        fail(ErrorCode::PinchedVertex, "link of interior vertex " + std::to_string(v) + " does not close");
      lk.pop_back();
    }
    m.link[v] = std::move(lk);
    m.star[v] = std::move(st);
  }
}

} // namespace detail

inline Mesh build_mesh(std::vector<Triangle> triangles, std::optional<std::vector<Vec3>> positions = std::nullopt) {
  if (triangles.empty()) fail(ErrorCode::BadArgument, "empty triangle list");

  Mesh m;
  m.triangles = std::move(triangles);

  int max_id = -1;
  for (const auto& t : m.triangles) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      fail(ErrorCode::DegenerateTriangle, "repeated vertex id in triangle");
    for (int c = 0; c < 3; c++) {
      if (t[c] < 0) fail(ErrorCode::BadArgument, "negative vertex id");
      max_id = std::max(max_id, t[c]);
    }
  }
  m.vertex_count = max_id + 1;

  if (positions) {
    if (static_cast<int>(positions->size()) != m.vertex_count)
      fail(ErrorCode::LengthMismatch, "positions size does not match vertex count");
    m.positions = std::move(positions);
  }

  // reject duplicated faces; a pair of triangles on the same vertex set breaks
  // the edge tables even when the underlying complex is a legal pillow
  {
    std::vector<Triangle> canon = m.triangles;
    for (auto& t : canon) std::sort(t.begin(), t.end());
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
      fail(ErrorCode::DegenerateTriangle, "two triangles share the same vertex set");
  }

  // edge tables
  std::map<std::array<int, 2>, std::vector<int>> edge_map;
  for (int t = 0; t < m.triangle_count(); t++) {
    const auto& tri = m.triangles[t];
    for (int c = 0; c < 3; c++) {
      int u = tri[c], w = tri[(c + 1) % 3];
      edge_map[{std::min(u, w), std::max(u, w)}].push_back(t);
    }
  }
  m.triangle_edges.assign(m.triangle_count(), {-1, -1, -1});
  for (auto& [key, ts] : edge_map) {
    if (ts.size() > 2)
      fail(ErrorCode::NonManifoldEdge,
           "edge " + std::to_string(key[0]) + "-" + std::to_string(key[1]) + " lies in " + std::to_string(ts.size()) + " triangles");
    int e = static_cast<int>(m.edges.size());
    m.edges.push_back(key);
    m.edge_triangles.push_back({ts[0], ts.size() == 2 ? ts[1] : -1});
    m.edge_on_boundary.push_back(ts.size() == 1);
    for (int t : ts) {
      const auto& tri = m.triangles[t];
      for (int c = 0; c < 3; c++) {
        int u = tri[c], w = tri[(c + 1) % 3];
        if (std::min(u, w) == key[0] && std::max(u, w) == key[1]) m.triangle_edges[t][c] = e;
      }
    }
  }

  m.vertex_on_boundary.assign(m.vertex_count, false);
  for (int e = 0; e < m.edge_count(); e++)
    if (m.edge_on_boundary[e]) {
      m.vertex_on_boundary[m.edges[e][0]] = true;
      m.vertex_on_boundary[m.edges[e][1]] = true;
    }

  detail::order_vertex_fans(m);
  return m;
}

inline int euler_characteristic(const Mesh& m) { return m.euler_characteristic(); }

// Boundary cycles as vertex loops; every boundary edge appears in exactly one.
inline std::vector<std::vector<int>> boundary_components(const Mesh& m) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(m.vertex_count, 0);
  for (int v0 = 0; v0 < m.vertex_count; v0++) {
    if (!m.vertex_on_boundary[v0] || seen[v0]) continue;
    std::vector<int> cycle;
    int prev = -1, cur = v0;
    do {
      seen[cur] = 1;
      cycle.push_back(cur);
      int a = m.link[cur].front(), b = m.link[cur].back();
      int next = (a == prev) ? b : (b == prev) ? a : std::min(a, b);
      prev = cur;
      cur = next;
    } while (cur != v0);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

struct DoubledMesh {
  Mesh mesh;
  // per input vertex (original ids, then any refinement vertices): its id in
  // copy A and in copy B; boundary vertices are shared, so the entries agree
  std::vector<int> copy_a;
  std::vector<int> copy_b;
  // refinement vertices inserted before gluing, as lists of parent vertices
  // (two for an edge midpoint, three for a face centroid); entry k describes
  // vertex original_vertex_count + k
  std::vector<std::vector<int>> refinement_parents;
};

namespace detail {

// Gluing two copies of a triangle along a shared edge pair collapses the two
// copies of any interior edge whose endpoints both sit on the boundary, and
// duplicates any face whose vertices all do. Splitting those edges (and the
// rare all-boundary-edge face) keeps the double simplicial; midpoints carry
// the same PL function, so no census changes.
inline void refine_for_doubling(const Mesh& m, std::vector<Triangle>& tris, std::vector<std::vector<int>>& parents) {
  std::vector<int> edge_mid(m.edge_count(), -1);
  int next_id = m.vertex_count;
  for (int e = 0; e < m.edge_count(); e++)
    if (!m.edge_on_boundary[e] && m.vertex_on_boundary[m.edges[e][0]] && m.vertex_on_boundary[m.edges[e][1]]) {
      edge_mid[e] = next_id++;
      parents.push_back({m.edges[e][0], m.edges[e][1]});
    }

  tris.clear();
  for (int t = 0; t < m.triangle_count(); t++) {
    const Triangle& tri = m.triangles[t];
    int mid[3];
    int marked = 0;
    for (int c = 0; c < 3; c++) {
      mid[c] = edge_mid[m.triangle_edges[t][c]]; // edge c joins corner c and c+1
      if (mid[c] >= 0) marked++;
    }

    if (marked == 0) {
      bool all_boundary_edges = m.edge_on_boundary[m.triangle_edges[t][0]] &&
                                m.edge_on_boundary[m.triangle_edges[t][1]] &&
                                m.edge_on_boundary[m.triangle_edges[t][2]];
      if (!all_boundary_edges) {
        tris.push_back(tri);
      } else { // a lone-triangle component: split at the centroid
        int c = next_id++;
        parents.push_back({tri[0], tri[1], tri[2]});
        tris.push_back({tri[0], tri[1], c});
        tris.push_back({tri[1], tri[2], c});
        tris.push_back({tri[2], tri[0], c});
      }
      continue;
    }

    // rotate so that corner 0 starts an unmarked-free layout: handle the
    // three cases directly on (a, b, c) with mids x=ab, y=bc, z=ca
    int a = tri[0], b = tri[1], c = tri[2];
    int x = mid[0], y = mid[1], z = mid[2];
    if (marked == 3) {
      tris.push_back({a, x, z});
      tris.push_back({x, b, y});
      tris.push_back({z, y, c});
      tris.push_back({x, y, z});
    } else if (marked == 2) {
      while (!(x >= 0 && y >= 0)) { // rotate until the marked pair is (ab, bc)
        int ta = a;
        a = b;
        b = c;
        c = ta;
        int tx = x;
        x = y;
        y = z;
        z = tx;
      }
      tris.push_back({x, b, y});
      tris.push_back({a, x, y});
      tris.push_back({a, y, c});
    } else {
      while (x < 0) {
        int ta = a;
        a = b;
        b = c;
        c = ta;
        int tx = x;
        x = y;
        y = z;
        z = tx;
      }
      tris.push_back({a, x, c});
      tris.push_back({x, b, c});
    }
  }
}

} // namespace detail

// Glue two copies of m along corresponding boundary edges. The result is
// closed with chi = 2 chi(m); works for non-orientable inputs since copy B
// reverses triangle orientation. Interior edges joining two boundary vertices
// are split first so the glued complex stays simplicial.
inline DoubledMesh double_mesh(const Mesh& m) {
  if (m.closed()) fail(ErrorCode::EmptyBoundary, "mesh has no boundary to glue along");

  DoubledMesh out;
  std::vector<Triangle> refined;
  detail::refine_for_doubling(m, refined, out.refinement_parents);
  int refined_count = m.vertex_count + static_cast<int>(out.refinement_parents.size());

  out.copy_a.resize(refined_count);
  out.copy_b.resize(refined_count);
  int next_id = refined_count;
  for (int v = 0; v < refined_count; v++) {
    bool boundary = v < m.vertex_count && m.vertex_on_boundary[v]; // refinement vertices are interior
    out.copy_a[v] = v;
    out.copy_b[v] = boundary ? v : next_id++;
  }

  std::vector<Triangle> tris = refined;
  tris.reserve(2 * refined.size());
  for (const auto& t : refined)
    tris.push_back({out.copy_b[t[0]], out.copy_b[t[2]], out.copy_b[t[1]]});

  std::optional<std::vector<Vec3>> pos;
  if (m.positions) {
    std::vector<Vec3> base(refined_count);
    for (int v = 0; v < m.vertex_count; v++) base[v] = (*m.positions)[v];
    for (size_t k = 0; k < out.refinement_parents.size(); k++) {
      Vec3 p{0, 0, 0};
      for (int parent : out.refinement_parents[k])
        for (int i = 0; i < 3; i++) p[i] += base[parent][i] / out.refinement_parents[k].size();
      base[m.vertex_count + k] = p;
    }
    pos.emplace(next_id);
    for (int v = 0; v < refined_count; v++) {
      (*pos)[out.copy_a[v]] = base[v];
      (*pos)[out.copy_b[v]] = base[v];
    }
  }

  out.mesh = build_mesh(std::move(tris), std::move(pos));
  return out;
}

// Transport per-vertex values onto the double: refinement vertices take the
// PL-interpolated (averaged) parent value, and both copies agree.
inline std::vector<double> doubled_values(const DoubledMesh& d, const std::vector<double>& original) {
  size_t refined_count = original.size() + d.refinement_parents.size();
  std::vector<double> base(refined_count);
  for (size_t v = 0; v < original.size(); v++) base[v] = original[v];
  for (size_t k = 0; k < d.refinement_parents.size(); k++) {
    double sum = 0;
    for (int parent : d.refinement_parents[k]) sum += base[parent];
    base[original.size() + k] = sum / d.refinement_parents[k].size();
  }
  std::vector<double> out(d.mesh.vertex_count);
  for (size_t v = 0; v < refined_count; v++) {
    out[d.copy_a[v]] = base[v];
    out[d.copy_b[v]] = base[v];
  }
  return out;
}

} // namespace rado
