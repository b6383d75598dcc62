#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rado/field.hpp"
#include "rado/homology.hpp"
#include "rado/mesh.hpp"

namespace rado {

struct ClipVertex {
  bool cut = false;
  int id = -1;     // mesh vertex id, or mesh edge id when cut
  int level = -1;  // 0 = level a, 1 = level b (cuts only)
  double s = 0.0;  // cut parameter along the edge, from endpoint 0 to 1
};

struct ClipSide {
  bool level_line = false;
  int edge = -1;  // mesh edge carrying the side (when !level_line)
  int tri = -1;   // triangle carrying the cut line (when level_line)
  int level = -1; // 0 or 1 (when level_line)
  int va = -1, vb = -1;
  std::vector<int> faces;
};

struct ClipFace {
  std::vector<int> corners; // indices into vertices, in cyclic order
  int source_tri = -1;
  int component = -1;
};

enum class CycleType { LevelA, LevelB, Original, Mixed };

struct BoundaryCycle {
  std::vector<int> sides;
  CycleType type = CycleType::Mixed;
  int component = -1;
};

// The polygonal complex M[a,b]: whole triangles inside the band plus clipped
// triangles and quads/pentagons along the levels. Cells are kept polygonal;
// every count below is pure cell arithmetic.
struct ClippedComplex {
  std::optional<double> a, b;
  MeshPtr mesh_ptr;
  std::vector<ClipVertex> vertices;
  std::vector<ClipSide> sides;
  std::vector<ClipFace> faces;
  std::vector<BoundaryCycle> cycles;
  int component_count = 0;
  std::vector<int> component_chi;
  int beta_a = -1; // boundary points of M at level a (absent end: -1)
  int beta_b = -1;

  const Mesh& mesh() const { return *mesh_ptr; }
  bool empty() const { return faces.empty(); }

  int chi() const {
    return static_cast<int>(vertices.size()) - static_cast<int>(sides.size()) + static_cast<int>(faces.size());
  }
};

namespace detail {

struct ClipCorner {
  ClipVertex key;
  double f = 0.0;
  // side from this corner to the next: a mesh edge id, or a level line
  int side_edge = -1;
  int side_level = -1;
};

inline std::vector<ClipCorner> clip_polygon(std::vector<ClipCorner> poly, double lv, int level_index, bool keep_above) {
  std::vector<ClipCorner> out;
  int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; i++) {
    const ClipCorner& cur = poly[i];
    const ClipCorner& nxt = poly[(i + 1) % n];
    bool in_cur = keep_above ? cur.f > lv : cur.f < lv;
    bool in_nxt = keep_above ? nxt.f > lv : nxt.f < lv;
    if (in_cur) out.push_back(cur);
    if (in_cur != in_nxt) {
      ClipCorner c;
      c.key = ClipVertex{true, cur.side_edge, level_index};
      c.f = lv;
      if (in_nxt) { // entering: continue along the same mesh edge
        c.side_edge = cur.side_edge;
        c.side_level = -1;
      } else { // leaving: the polygon continues along the cut line
        c.side_edge = -1;
        c.side_level = level_index;
      }
      out.push_back(c);
    }
  }
  return out;
}

} // namespace detail

// Exact combinatorial clip of the field to {a <= F <= b}. Finite ends must be
// regular values; an absent end leaves that side unclipped.
inline ClippedComplex clip(const ScalarField& f, std::optional<double> a, std::optional<double> b) {
  if (a && b && !(*a < *b)) fail(ErrorCode::BadArgument, "clip needs a < b");
  if (a && !is_regular_value(f, *a)) fail(ErrorCode::NonRegularClipValue, "a = " + std::to_string(*a));
  if (b && !is_regular_value(f, *b)) fail(ErrorCode::NonRegularClipValue, "b = " + std::to_string(*b));

  const Mesh& m = f.mesh();
  ClippedComplex cc;
  cc.a = a;
  cc.b = b;
  cc.mesh_ptr = f.mesh_ptr;

  std::map<std::array<int, 3>, int> vertex_ids; // (cut, id, level) -> clip vertex
  auto vertex_id = [&](const ClipVertex& key) {
    std::array<int, 3> k{key.cut ? 1 : 0, key.id, key.level};
    auto it = vertex_ids.find(k);
    if (it != vertex_ids.end()) return it->second;
    int id = static_cast<int>(cc.vertices.size());
    vertex_ids.emplace(k, id);
    ClipVertex v = key;
    if (v.cut) {
      double lv = v.level == 0 ? *a : *b;
      double fu = f.values[m.edges[v.id][0]], fw = f.values[m.edges[v.id][1]];
      v.s = (lv - fu) / (fw - fu);
    }
    cc.vertices.push_back(v);
    return id;
  };
  std::map<std::array<int, 3>, int> side_ids; // (kind, id, level) -> side
  auto side_id = [&](int edge, int tri, int level, int va, int vb) {
    std::array<int, 3> k = edge >= 0 ? std::array<int, 3>{0, edge, -1} : std::array<int, 3>{1, tri, level};
    auto it = side_ids.find(k);
    if (it != side_ids.end()) return it->second;
    int id = static_cast<int>(cc.sides.size());
    side_ids.emplace(k, id);
    ClipSide s;
    s.level_line = edge < 0;
    s.edge = edge;
    s.tri = tri;
    s.level = level;
    s.va = va;
    s.vb = vb;
    cc.sides.push_back(std::move(s));
    return id;
  };

  for (int tri = 0; tri < m.triangle_count(); tri++) {
    const auto& tv = m.triangles[tri];
    std::vector<detail::ClipCorner> poly(3);
    for (int c = 0; c < 3; c++) {
      poly[c].key = ClipVertex{false, tv[c], -1};
      poly[c].f = f.values[tv[c]];
      poly[c].side_edge = m.triangle_edges[tri][c];
      poly[c].side_level = -1;
    }
    if (a) poly = detail::clip_polygon(std::move(poly), *a, 0, true);
    if (b) poly = detail::clip_polygon(std::move(poly), *b, 1, false);
    if (poly.empty()) continue;

    ClipFace face;
    face.source_tri = tri;
    for (const auto& corner : poly) face.corners.push_back(vertex_id(corner.key));
    int fid = static_cast<int>(cc.faces.size());
    int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; i++) {
      int s = side_id(poly[i].side_edge, tri, poly[i].side_level, face.corners[i], face.corners[(i + 1) % n]);
      cc.sides[s].faces.push_back(fid);
    }
    cc.faces.push_back(std::move(face));
  }

  // components over faces joined by shared sides
  detail::UnionFind uf(std::max<int>(1, static_cast<int>(cc.faces.size())));
  for (const auto& s : cc.sides)
    for (size_t i = 1; i < s.faces.size(); i++) uf.unite(s.faces[0], s.faces[i]);
  std::map<int, int> root_to_comp;
  for (size_t fi = 0; fi < cc.faces.size(); fi++) {
    int root = uf.find(static_cast<int>(fi));
    auto it = root_to_comp.find(root);
    if (it == root_to_comp.end()) it = root_to_comp.emplace(root, static_cast<int>(root_to_comp.size())).first;
    cc.faces[fi].component = it->second;
  }
  cc.component_count = static_cast<int>(root_to_comp.size());

  // per-component cell counts
  cc.component_chi.assign(cc.component_count, 0);
  {
    std::vector<int> vcomp(cc.vertices.size(), -1);
    for (size_t fi = 0; fi < cc.faces.size(); fi++) {
      cc.component_chi[cc.faces[fi].component]++;
      for (int v : cc.faces[fi].corners) vcomp[v] = cc.faces[fi].component;
    }
    for (const auto& s : cc.sides) cc.component_chi[cc.faces[s.faces[0]].component]--;
    for (size_t v = 0; v < cc.vertices.size(); v++)
      if (vcomp[v] >= 0) cc.component_chi[vcomp[v]]++;
  }

  // beta: boundary points of M sitting exactly on a clip level
  if (a) {
    cc.beta_a = 0;
    for (const auto& v : cc.vertices)
      if (v.cut && v.level == 0 && m.edge_on_boundary[v.id]) cc.beta_a++;
  }
  if (b) {
    cc.beta_b = 0;
    for (const auto& v : cc.vertices)
      if (v.cut && v.level == 1 && m.edge_on_boundary[v.id]) cc.beta_b++;
  }

  // boundary cycles of the clipped complex
  {
    std::vector<int> bsides;
    for (size_t s = 0; s < cc.sides.size(); s++)
      if (cc.sides[s].faces.size() == 1) bsides.push_back(static_cast<int>(s));
    std::map<int, std::vector<int>> at_vertex;
    for (int s : bsides) {
      at_vertex[cc.sides[s].va].push_back(s);
      at_vertex[cc.sides[s].vb].push_back(s);
    }
    std::set<int> used;
    for (int s0 : bsides) {
      if (used.count(s0)) continue;
      BoundaryCycle cyc;
      int s = s0, from = cc.sides[s0].va;
      do {
        used.insert(s);
        cyc.sides.push_back(s);
        int to = (cc.sides[s].va == from) ? cc.sides[s].vb : cc.sides[s].va;
        const auto& cand = at_vertex.at(to);
        int next = (cand[0] == s) ? cand[1] : cand[0];
        from = to;
        s = next;
      } while (s != s0);
      bool all_a = true, all_b = true, all_orig = true;
      for (int si : cyc.sides) {
        const auto& side = cc.sides[si];
        all_a &= side.level_line && side.level == 0;
        all_b &= side.level_line && side.level == 1;
        all_orig &= !side.level_line;
      }
      cyc.type = all_a ? CycleType::LevelA : all_b ? CycleType::LevelB : all_orig ? CycleType::Original : CycleType::Mixed;
      cyc.component = cc.faces[cc.sides[s0].faces[0]].component;
      cc.cycles.push_back(std::move(cyc));
    }
  }

  return cc;
}

inline int region_euler(const ClippedComplex& c) { return c.chi(); }

// Z2 homology of the polygonal band complex; the independent route to chi
inline HomologyRanks clip_homology(const ClippedComplex& c) {
  int V = static_cast<int>(c.vertices.size());
  int E = static_cast<int>(c.sides.size());
  int F = static_cast<int>(c.faces.size());
  int ewords = (E + 63) / 64;

  std::vector<std::vector<std::uint64_t>> d1rows(V, std::vector<std::uint64_t>(ewords, 0));
  for (int e = 0; e < E; e++) {
    d1rows[c.sides[e].va][e >> 6] |= 1ull << (e & 63);
    d1rows[c.sides[e].vb][e >> 6] |= 1ull << (e & 63);
  }
  int rank1 = detail::gf2_rank(std::move(d1rows), E);

  std::vector<std::vector<std::uint64_t>> d2rows(F, std::vector<std::uint64_t>(ewords, 0));
  for (int e = 0; e < E; e++)
    for (int face : c.sides[e].faces) d2rows[face][e >> 6] ^= 1ull << (e & 63);
  int rank2 = detail::gf2_rank(std::move(d2rows), E);

  HomologyRanks h;
  h.d0 = V - rank1;
  h.d1 = E - rank1 - rank2;
  h.d2 = F - rank2;
  return h;
}

struct AnnulusReport {
  std::vector<bool> component_pass;
  bool pass = true;
  int witness_component = -1;
};

// A critical-free band decomposes into annuli: every component must have
// chi = 0 and exactly two boundary cycles, both pure level cycles.
inline AnnulusReport annulus_check(const ClippedComplex& c) {
  AnnulusReport r;
  r.component_pass.assign(c.component_count, true);
  std::vector<int> level_cycles(c.component_count, 0), other_cycles(c.component_count, 0);
  for (const auto& cyc : c.cycles) {
    if (cyc.type == CycleType::LevelA || cyc.type == CycleType::LevelB)
      level_cycles[cyc.component]++;
    else
      other_cycles[cyc.component]++;
  }
  for (int comp = 0; comp < c.component_count; comp++) {
    bool ok = c.component_chi[comp] == 0 && level_cycles[comp] == 2 && other_cycles[comp] == 0;
    r.component_pass[comp] = ok;
    if (!ok && r.pass) {
      r.pass = false;
      r.witness_component = comp;
    }
  }
  return r;
}

struct CollapsedComponent {
  std::vector<int> original_vertices;
  bool closed_cycle = false;
  double value = 0.0;
  int quotient_vertex = -1;
  bool interior_after = false;
};

struct QuotientResult {
  ScalarField field; // carries the quotient mesh
  std::vector<int> collapse_map;
  std::vector<CollapsedComponent> collapsed;

  const Mesh& mesh() const { return field.mesh(); }
};

// Collapse every maximal connected constant-value subset of the boundary to a
// point: constant arcs become boundary vertices, constant full cycles become
// interior vertices. Triangles losing two corners to one collapse vanish;
// the survivors are revalidated, so a collapse that would pinch is rejected.
inline QuotientResult quotient_constant_boundary(const ScalarField& f) {
  const Mesh& m = f.mesh();
  detail::UnionFind uf(m.vertex_count);
  for (int e = 0; e < m.edge_count(); e++)
    if (m.edge_on_boundary[e] && f.values[m.edges[e][0]] == f.values[m.edges[e][1]])
      uf.unite(m.edges[e][0], m.edges[e][1]);

  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < m.vertex_count; v++) groups[uf.find(v)].push_back(v);

  // boundary component sizes, to recognize full-cycle collapses
  auto cycles = boundary_components(m);
  std::vector<int> cycle_of(m.vertex_count, -1);
  for (size_t c = 0; c < cycles.size(); c++)
    for (int v : cycles[c]) cycle_of[v] = static_cast<int>(c);

  std::vector<int> map(m.vertex_count, -1);
  std::vector<CollapsedComponent> collapsed;
  int next_id = 0;
  for (int v = 0; v < m.vertex_count; v++) {
    if (map[v] >= 0) continue;
    const auto& grp = groups.at(uf.find(v));
    int id = next_id++;
    for (int u : grp) map[u] = id;
    if (grp.size() >= 2) {
      CollapsedComponent cm;
      cm.original_vertices = grp;
      cm.value = f.values[grp[0]];
      cm.quotient_vertex = id;
      cm.closed_cycle = static_cast<int>(grp.size()) == static_cast<int>(cycles[cycle_of[grp[0]]].size());
      collapsed.push_back(std::move(cm));
    }
  }

  std::vector<Triangle> tris;
  for (const auto& t : m.triangles) {
    Triangle q{map[t[0]], map[t[1]], map[t[2]]};
    if (q[0] == q[1] || q[1] == q[2] || q[0] == q[2]) continue;
    tris.push_back(q);
  }
  if (tris.empty()) fail(ErrorCode::NonManifoldQuotient, "collapse removes every triangle");

  std::optional<std::vector<Vec3>> pos;
  if (m.positions) {
    pos.emplace(next_id, Vec3{0, 0, 0});
    std::vector<int> count(next_id, 0);
    for (int v = 0; v < m.vertex_count; v++) {
      for (int c = 0; c < 3; c++) (*pos)[map[v]][c] += (*m.positions)[v][c];
      count[map[v]]++;
    }
    for (int v = 0; v < next_id; v++)
      for (int c = 0; c < 3; c++) (*pos)[v][c] /= count[v];
  }

  Mesh qm;
  try {
    qm = build_mesh(std::move(tris), std::move(pos));
  } catch (const Error& e) {
    fail(ErrorCode::NonManifoldQuotient, std::string("collapse pinches the surface (") + e.what() + ")");
  }
  if (qm.vertex_count != next_id)
    fail(ErrorCode::NonManifoldQuotient, "collapse leaves unreferenced vertices");

  std::vector<double> values(next_id);
  for (int v = 0; v < m.vertex_count; v++) values[map[v]] = f.values[v];

  QuotientResult out{attach_field(std::make_shared<Mesh>(std::move(qm)), std::move(values), Genericity::StrictInterior),
                     std::move(map),
                     std::move(collapsed)};
  for (auto& cm : out.collapsed) cm.interior_after = !out.mesh().vertex_on_boundary[cm.quotient_vertex];
  return out;
}

} // namespace rado
