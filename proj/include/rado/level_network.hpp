#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rado/classify.hpp"
#include "rado/field.hpp"
#include "rado/half.hpp"
#include "rado/homology.hpp"
#include "rado/mesh.hpp"

namespace rado {

struct NetworkNode {
  bool synthetic = false; // a crossing point inside a boundary edge, valence 1
  int id = -1;            // mesh vertex id, or edge id when synthetic
  int valence = 0;
};

struct ArcStep {
  int edge = -1;  // mesh edge crossed
  double s = 0.0; // parameter from edges[e][0] toward edges[e][1]
};

struct NetworkArc {
  int from_node = -1;
  int to_node = -1;
  std::vector<ArcStep> steps; // every edge crossing along the trace, in order
};

// The level set X = F^-1(t) as a finite network: nodes are mesh vertices at
// the level plus synthetic boundary crossings; arcs are straight-per-triangle
// polylines; loops are closed components containing no node.
struct LevelNetwork {
  double t = 0.0;
  MeshPtr mesh_ptr;
  std::vector<NetworkNode> nodes;
  std::vector<NetworkArc> arcs;
  std::vector<std::vector<ArcStep>> loops;
  std::vector<int> isolated_nodes; // node indices of valence 0

  int loop_count() const { return static_cast<int>(loops.size()); }
  const Mesh& mesh() const { return *mesh_ptr; }
};

namespace detail {

struct SegmentEnd {
  bool at_vertex = false;
  int id = -1; // vertex id or edge id
};

struct Segment {
  SegmentEnd a, b;
  int tri = -1;
};

inline double cut_param(const ScalarField& f, int e, double t) {
  const auto& ed = f.mesh().edges[e];
  double fu = f.values[ed[0]], fw = f.values[ed[1]];
  return (t - fu) / (fw - fu);
}

} // namespace detail

inline LevelNetwork extract_level_network(const ScalarField& f, double t) {
  const Mesh& m = f.mesh();

  for (int e = 0; e < m.edge_count(); e++)
    if (f.values[m.edges[e][0]] == t && f.values[m.edges[e][1]] == t) {
      if (m.edge_on_boundary[e])
        fail(ErrorCode::RelaxedBoundaryAtLevel,
             "constant boundary arc at level " + std::to_string(t) + "; quotient it away first");
      fail(ErrorCode::NonGenericInteriorEdge, "interior edge at the slice level");
    }

  // one straight segment per crossed triangle
  std::vector<detail::Segment> segments;
  for (int tri = 0; tri < m.triangle_count(); tri++) {
    const auto& tv = m.triangles[tri];
    int at = -1, nat = 0;
    for (int c = 0; c < 3; c++)
      if (f.values[tv[c]] == t) {
        at = tv[c];
        nat++;
      }
    if (nat >= 2) fail(ErrorCode::RelaxedBoundaryAtLevel, "two level vertices share a triangle");
    if (nat == 1) {
      int u = -1, w = -1;
      for (int c = 0; c < 3; c++)
        if (tv[c] != at) (u < 0 ? u : w) = tv[c];
      if ((f.values[u] - t) * (f.values[w] - t) < 0)
        segments.push_back({{true, at}, {false, m.edge_index(u, w)}, tri});
    } else {
      int cuts[2], ncuts = 0;
      for (int c = 0; c < 3; c++) {
        int e = m.triangle_edges[tri][c];
        double du = f.values[m.edges[e][0]] - t, dw = f.values[m.edges[e][1]] - t;
        if (du * dw < 0) {
          if (ncuts < 2) cuts[ncuts] = e;
          ncuts++;
        }
      }
      if (ncuts == 2) {
        if (cuts[0] > cuts[1]) std::swap(cuts[0], cuts[1]);
        segments.push_back({{false, cuts[0]}, {false, cuts[1]}, tri});
      }
    }
  }

  LevelNetwork net;
  net.t = t;
  net.mesh_ptr = f.mesh_ptr;

  // nodes: level vertices in id order, then synthetic boundary crossings
  std::map<int, int> vertex_node, crossing_node;
  for (int v = 0; v < m.vertex_count; v++)
    if (f.values[v] == t) {
      vertex_node[v] = static_cast<int>(net.nodes.size());
      net.nodes.push_back({false, v, 0});
    }
  for (const auto& seg : segments)
    for (const auto* end : {&seg.a, &seg.b})
      if (!end->at_vertex && m.edge_on_boundary[end->id] && !crossing_node.count(end->id)) {
        crossing_node[end->id] = -1; // assign below in edge order
      }
  for (auto& [e, idx] : crossing_node) {
    idx = static_cast<int>(net.nodes.size());
    net.nodes.push_back({true, e, 0});
  }

  // joints: interior-edge cuts glue exactly two segment ends
  int nseg = static_cast<int>(segments.size());
  // (segment, end 0/1) pairs per interior cut edge
  std::map<int, std::vector<std::pair<int, int>>> joint;
  // segment ends attached to each node, in segment order
  std::vector<std::vector<std::pair<int, int>>> at_node(net.nodes.size());
  for (int s = 0; s < nseg; s++) {
    const detail::Segment& seg = segments[s];
    const detail::SegmentEnd* ends[2] = {&seg.a, &seg.b};
    for (int side = 0; side < 2; side++) {
      const auto& end = *ends[side];
      if (end.at_vertex)
        at_node[vertex_node.at(end.id)].push_back({s, side});
      else if (m.edge_on_boundary[end.id])
        at_node[crossing_node.at(end.id)].push_back({s, side});
      else
        joint[end.id].push_back({s, side});
    }
  }

  for (size_t n = 0; n < at_node.size(); n++) net.nodes[n].valence = static_cast<int>(at_node[n].size());

  // walk arcs from node-attached ends, then sweep leftovers as loops
  std::vector<char> consumed(nseg, 0);
  auto other_side = [](int side) { return side == 0 ? 1 : 0; };
  auto end_of = [&](int s, int side) -> const detail::SegmentEnd& {
    return side == 0 ? segments[s].a : segments[s].b;
  };
  auto record_step = [&](std::vector<ArcStep>& steps, const detail::SegmentEnd& end) {
    if (!end.at_vertex) steps.push_back({end.id, detail::cut_param(f, end.id, t)});
  };

  for (size_t n = 0; n < at_node.size(); n++) {
    for (auto [s0, side0] : at_node[n]) {
      if (consumed[s0]) continue;
      NetworkArc arc;
      arc.from_node = static_cast<int>(n);
      int s = s0, entry = side0;
      consumed[s] = 1;
      record_step(arc.steps, end_of(s, entry));
      while (true) {
        int exit = other_side(entry);
        const detail::SegmentEnd& e = end_of(s, exit);
        record_step(arc.steps, e);
        if (e.at_vertex) {
          arc.to_node = vertex_node.at(e.id);
          break;
        }
        if (m.edge_on_boundary[e.id]) {
          arc.to_node = crossing_node.at(e.id);
          break;
        }
        const auto& pair = joint.at(e.id);
        auto [s1, side1] = (pair[0].first == s && pair[0].second == exit) ? pair[1] : pair[0];
        s = s1;
        entry = side1;
        consumed[s] = 1;
      }
      net.arcs.push_back(std::move(arc));
    }
  }

  for (int s0 = 0; s0 < nseg; s0++) {
    if (consumed[s0]) continue;
    std::vector<ArcStep> trace;
    int s = s0, entry = 0;
    consumed[s] = 1;
    record_step(trace, end_of(s, entry));
    while (true) {
      int exit = other_side(entry);
      const detail::SegmentEnd& e = end_of(s, exit);
      const auto& pair = joint.at(e.id);
      auto [s1, side1] = (pair[0].first == s && pair[0].second == exit) ? pair[1] : pair[0];
      if (s1 == s0 && side1 == 0) break;
      record_step(trace, e);
      s = s1;
      entry = side1;
      consumed[s] = 1;
    }
    net.loops.push_back(std::move(trace));
  }

  for (size_t n = 0; n < net.nodes.size(); n++)
    if (net.nodes[n].valence == 0) net.isolated_nodes.push_back(static_cast<int>(n));

  return net;
}

enum class SStarRule {
  ExtremaOffLevel,    // interior local extrema with F != t
  MinBelowMaxAbove,   // interior minima below t and interior maxima above t
};

struct SliceBounds {
  Half lhs;                       // 1/2 sum (n-2)|V_n| + d0(X minus V0)
  Half rhs_v1, rhs_j, rhs_k;      // the three chained right-hand sides
  bool pass_v1 = false, pass_j = false, pass_k = false;
  int v1 = 0, j = 0, k = 0, s_star = 0, d1_mesh = 0;
  bool pass() const { return pass_v1 && pass_j && pass_k; }
};

struct NetworkReport {
  int chi = 0;
  int d0 = 0;
  int d1 = 0;
  int d0_nonisolated = 0;
  std::map<int, int> histogram; // node valence -> count (loops carry no nodes)
  Half identity_lhs, identity_rhs;
  bool pass = false;
  std::optional<SliceBounds> bounds;
};

namespace detail {

inline NetworkReport graph_counts(const LevelNetwork& x) {
  NetworkReport r;
  int n = static_cast<int>(x.nodes.size());
  UnionFind uf(std::max(n, 1));
  for (const auto& a : x.arcs) uf.unite(a.from_node, a.to_node);
  int comps = n == 0 ? 0 : uf.components();
  int isolated = static_cast<int>(x.isolated_nodes.size());

  r.d0 = comps + x.loop_count();
  r.d1 = static_cast<int>(x.arcs.size()) - n + comps + x.loop_count();
  r.d0_nonisolated = comps - isolated + x.loop_count();
  r.chi = r.d0 - r.d1;
  for (const auto& node : x.nodes) r.histogram[node.valence]++;
  return r;
}

} // namespace detail

// chi both ways: as the node sum (1/2)(2 - v) with loops contributing zero,
// and as d0 - d1 of the arc graph.
inline NetworkReport network_euler(const LevelNetwork& x) {
  NetworkReport r = detail::graph_counts(x);
  Half node_sum;
  for (const auto& node : x.nodes) node_sum += half_of(2 - node.valence);
  r.identity_lhs = node_sum;
  r.identity_rhs = Half(r.chi);
  r.pass = r.identity_lhs == r.identity_rhs;
  return r;
}

// sum_{n>=3} (1/2)(n-2)|V_n|  =  (1/2)|V_1| + d1(X) - d0(X minus V_0)
inline NetworkReport counting_identity(const LevelNetwork& x) {
  NetworkReport r = detail::graph_counts(x);
  Half lhs;
  for (const auto& [n, count] : r.histogram)
    if (n >= 3) lhs += half_of((n - 2) * count);
  int v1 = r.histogram.count(1) ? r.histogram.at(1) : 0;
  Half rhs = half_of(v1) + Half(r.d1) - Half(r.d0_nonisolated);
  r.identity_lhs = lhs;
  r.identity_rhs = rhs;
  r.pass = lhs == rhs;
  return r;
}

// The slice bounds, chained:
//   1/2 sum_{n>=3}(n-2)|V_n| + d0(X\V0) <= 1/2|V_1| + d1(M) + |S*|
//                                       <= 1/2|J|  + d1(M) + |S*|
//                                       <= 1/2 k   + d1(M) + |S*|
// J counts the boundary points of the slice that are not restriction extrema
// (odd-valence vertices at the level plus every boundary-edge crossing), and
// k counts all boundary points of the slice.
inline NetworkReport slice_bound(const ScalarField& f, double t, const ClassificationSummary& summary,
                                 SStarRule rule) {
  LevelNetwork x = extract_level_network(f, t);
  NetworkReport r = detail::graph_counts(x);

  Half saddle_sum;
  for (const auto& [n, count] : r.histogram)
    if (n >= 3) saddle_sum += half_of((n - 2) * count);
  SliceBounds b;
  b.lhs = saddle_sum + Half(r.d0_nonisolated);

  int crossings = 0;
  for (const auto& node : x.nodes)
    if (node.synthetic) crossings++;
  b.v1 = r.histogram.count(1) ? r.histogram.at(1) : 0;
  b.j = static_cast<int>(summary.j_at(t).size()) + crossings;
  b.k = static_cast<int>(summary.boundary_vertices_at(t).size()) + crossings;

  b.s_star = 0;
  for (const auto& c : summary.vertices) {
    if (c.on_boundary) continue;
    bool is_min = c.kind == VertexKind::LocalMin, is_max = c.kind == VertexKind::LocalMax;
    if (!is_min && !is_max) continue;
    bool counted = rule == SStarRule::ExtremaOffLevel
                       ? c.value != t
                       : ((is_min && c.value < t) || (is_max && c.value > t));
    if (counted) b.s_star++;
  }

  b.d1_mesh = homology_z2(f.mesh()).d1;
  Half base = Half(b.d1_mesh) + Half(b.s_star);
  b.rhs_v1 = half_of(b.v1) + base;
  b.rhs_j = half_of(b.j) + base;
  b.rhs_k = half_of(b.k) + base;
  b.pass_v1 = b.lhs <= b.rhs_v1;
  b.pass_j = b.rhs_v1 <= b.rhs_j;
  b.pass_k = b.rhs_j <= b.rhs_k;

  r.identity_lhs = b.lhs;
  r.identity_rhs = b.rhs_v1;
  r.pass = b.pass();
  r.bounds = b;
  return r;
}

} // namespace rado
