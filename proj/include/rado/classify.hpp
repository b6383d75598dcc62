#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rado/field.hpp"
#include "rado/mesh.hpp"

namespace rado {

enum class VertexKind {
  LocalMin,
  LocalMax,
  Regular,
  InteriorSaddle,
  BoundaryRegular,
  BoundaryExtremum,
  BoundarySaddle,
};

enum class RestrictionKind { LocalMin, LocalMax, Neither, NotBoundary };

inline const char* vertex_kind_name(VertexKind k) {
  switch (k) {
  case VertexKind::LocalMin: return "local-min";
  case VertexKind::LocalMax: return "local-max";
  case VertexKind::Regular: return "regular";
  case VertexKind::InteriorSaddle: return "interior-saddle";
  case VertexKind::BoundaryRegular: return "boundary-regular";
  case VertexKind::BoundaryExtremum: return "boundary-extremum";
  case VertexKind::BoundarySaddle: return "boundary-saddle";
  }
  return "?";
}

inline const char* restriction_kind_name(RestrictionKind k) {
  switch (k) {
  case RestrictionKind::LocalMin: return "local-min-of-restriction";
  case RestrictionKind::LocalMax: return "local-max-of-restriction";
  case RestrictionKind::Neither: return "neither";
  case RestrictionKind::NotBoundary: return "not-boundary";
  }
  return "?";
}

struct VertexClassification {
  int vertex = -1;
  bool on_boundary = false;
  double value = 0.0;
  int valence = 0;
  VertexKind kind = VertexKind::Regular;
  int multiplicity = 0;
  RestrictionKind restriction = RestrictionKind::NotBoundary;
};

namespace detail {

// signs of F(link vertex) - F(v) along the ordered link
inline std::vector<int> link_signs(const ScalarField& f, int v) {
  const Mesh& m = f.mesh();
  std::vector<int> signs;
  signs.reserve(m.link[v].size());
  for (int u : m.link[v]) {
    double d = f.values[u] - f.values[v];
    if (d == 0.0)
      fail(ErrorCode::RelaxedBoundaryAtVertex,
           "vertex " + std::to_string(v) + " has an equal-valued neighbor " + std::to_string(u) +
               "; quotient the constant boundary first");
    signs.push_back(d > 0 ? +1 : -1);
  }
  return signs;
}

inline int alternations(const std::vector<int>& signs, bool cyclic) {
  int n = static_cast<int>(signs.size());
  int count = 0;
  int last = cyclic ? n : n - 1;
  for (int i = 0; i < last; i++)
    if (signs[i] != signs[(i + 1) % n]) count++;
  return count;
}

} // namespace detail

// PL valence: the number of level arcs of {F = F(v)} leaving v through its
// star, realized as the sign-change count along the link (cyclic for interior
// vertices, linear for boundary ones; arcs through boundary edges do not
// exist since boundary edges are never level in a generic field).
inline int valence(const ScalarField& f, int v) {
  auto signs = detail::link_signs(f, v);
  return detail::alternations(signs, !f.mesh().vertex_on_boundary[v]);
}

inline VertexClassification classify_vertex(const ScalarField& f, int v) {
  const Mesh& m = f.mesh();
  auto signs = detail::link_signs(f, v);
  bool boundary = m.vertex_on_boundary[v];

  VertexClassification c;
  c.vertex = v;
  c.on_boundary = boundary;
  c.value = f.values[v];
  c.valence = detail::alternations(signs, !boundary);

  if (!boundary) {
    c.restriction = RestrictionKind::NotBoundary;
    if (c.valence == 0) {
      c.kind = signs.front() > 0 ? VertexKind::LocalMin : VertexKind::LocalMax;
      c.multiplicity = 0;
    } else if (c.valence == 2) {
      c.kind = VertexKind::Regular;
      c.multiplicity = 0;
    } else {
      c.kind = VertexKind::InteriorSaddle;
      c.multiplicity = c.valence / 2 - 1;
    }
  } else {
    int first = signs.front(), last = signs.back();
    c.restriction = (first == last) ? (first > 0 ? RestrictionKind::LocalMin : RestrictionKind::LocalMax)
                                    : RestrictionKind::Neither;
    if (c.valence == 0) {
      c.kind = VertexKind::BoundaryExtremum;
      c.multiplicity = 0;
    } else if (c.valence == 1) {
      c.kind = VertexKind::BoundaryRegular;
      c.multiplicity = 0;
    } else {
      c.kind = VertexKind::BoundarySaddle;
      c.multiplicity = (c.valence % 2 == 0) ? c.valence / 2 : (c.valence - 1) / 2;
    }
  }
  return c;
}

// The assembled census: Q (interior extrema plus boundary-restriction minima),
// its interior/boundary split, A (restriction extrema that fail to be extrema
// of F), valence histograms, and the two total multiplicities.
struct ClassificationSummary {
  std::vector<VertexClassification> vertices; // indexed by vertex id
  std::vector<int> q_interior;
  std::vector<int> q_boundary;
  std::vector<int> a_set;
  std::map<int, int> hist_interior; // valence -> count
  std::map<int, int> hist_boundary;
  std::int64_t interior_multiplicity = 0; // N(F|M)
  std::int64_t boundary_multiplicity = 0; // s^boundary(F)

  std::int64_t q_count() const { return static_cast<std::int64_t>(q_interior.size() + q_boundary.size()); }

  // boundary vertices at value t that are neither local max nor local min of
  // the boundary restriction (equivalently: odd valence, by parity)
  std::vector<int> j_at(double t) const {
    std::vector<int> out;
    for (const auto& c : vertices)
      if (c.on_boundary && c.value == t && c.restriction == RestrictionKind::Neither) out.push_back(c.vertex);
    return out;
  }

  std::vector<int> boundary_vertices_at(double t) const {
    std::vector<int> out;
    for (const auto& c : vertices)
      if (c.on_boundary && c.value == t) out.push_back(c.vertex);
    return out;
  }
};

inline ClassificationSummary classify_all(const ScalarField& f) {
  const Mesh& m = f.mesh();
  ClassificationSummary s;
  s.vertices.reserve(m.vertex_count);
  for (int v = 0; v < m.vertex_count; v++) {
    VertexClassification c = classify_vertex(f, v);
    if (!c.on_boundary) {
      s.hist_interior[c.valence]++;
      s.interior_multiplicity += c.multiplicity;
      if (c.valence == 0) s.q_interior.push_back(v);
    } else {
      s.hist_boundary[c.valence]++;
      s.boundary_multiplicity += c.multiplicity;
      if (c.restriction == RestrictionKind::LocalMin) s.q_boundary.push_back(v);
      if (c.restriction != RestrictionKind::Neither && c.valence >= 2) s.a_set.push_back(v);
    }
    s.vertices.push_back(std::move(c));
  }
  return s;
}

// Hopf index at an interior vertex by rotation tracking: unfold the triangle
// fan with its angles normalized to a full turn, follow the level-line
// direction of each triangle in the projective line (nearest representative
// mod pi), and read the winding off the accumulated rotation. A step of a
// quarter turn or more means the fan is too coarse to track reliably.
inline int hopf_index(const ScalarField& f, int v) {
  const Mesh& m = f.mesh();
  if (!m.has_positions()) fail(ErrorCode::MissingPositions, "hopf_index needs vertex positions");
  if (m.vertex_on_boundary[v]) fail(ErrorCode::BadArgument, "hopf_index is defined at interior vertices");

  const auto& pos = *m.positions;
  const auto& lk = m.link[v];
  int n = static_cast<int>(lk.size());
  const double pi = 3.14159265358979323846;

  auto sub = [](const Vec3& a, const Vec3& b) { return Vec3{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
  auto norm = [](const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); };
  auto dot = [](const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };

  std::vector<double> len(n), corner(n);
  for (int i = 0; i < n; i++) {
    Vec3 d = sub(pos[lk[i]], pos[v]);
    len[i] = norm(d);
    if (len[i] == 0.0) fail(ErrorCode::DegenerateGeometry, "coincident positions around vertex " + std::to_string(v));
  }
  for (int i = 0; i < n; i++) {
    Vec3 da = sub(pos[lk[i]], pos[v]);
    Vec3 db = sub(pos[lk[(i + 1) % n]], pos[v]);
    double c = dot(da, db) / (len[i] * len[(i + 1) % n]);
    c = std::max(-1.0, std::min(1.0, c));
    corner[i] = std::acos(c);
    if (corner[i] == 0.0) fail(ErrorCode::DegenerateGeometry, "zero wedge angle around vertex " + std::to_string(v));
  }
  double cone = 0.0;
  for (double a : corner) cone += a;
  double scale = 2.0 * pi / cone;

  // direction angle (mod pi) of the level line of the linear interpolant on
  // each triangle, laid out in the normalized unfolding
  std::vector<double> theta(n);
  double acc = 0.0;
  for (int i = 0; i < n; i++) {
    double a0 = acc, a1 = acc + scale * corner[i];
    acc = a1;
    double x1 = len[i] * std::cos(a0), y1 = len[i] * std::sin(a0);
    double x2 = len[(i + 1) % n] * std::cos(a1), y2 = len[(i + 1) % n] * std::sin(a1);
    double f1 = f.values[lk[i]] - f.values[v];
    double f2 = f.values[lk[(i + 1) % n]] - f.values[v];
    double det = x1 * y2 - x2 * y1;
    if (det == 0.0) fail(ErrorCode::DegenerateGeometry, "degenerate unfolded triangle at vertex " + std::to_string(v));
    double gx = (f1 * y2 - f2 * y1) / det;
    double gy = (x1 * f2 - x2 * f1) / det;
    if (gx == 0.0 && gy == 0.0)
      fail(ErrorCode::DegenerateGeometry, "vanishing gradient in the star of vertex " + std::to_string(v));
    double th = std::atan2(gx, -gy); // a perpendicular of the gradient
    th = std::fmod(th, pi);
    if (th < 0) th += pi;
    theta[i] = th;
  }

  double total = 0.0;
  for (int i = 0; i < n; i++) {
    double step = theta[(i + 1) % n] - theta[i];
    while (step > pi / 2) step -= pi;
    while (step <= -pi / 2) step += pi;
    if (std::abs(step) >= pi / 2 - 1e-9)
      fail(ErrorCode::DegenerateGeometry,
           "level direction jumps by a quarter turn across the fan of vertex " + std::to_string(v) +
               "; mesh too coarse for rotation tracking");
    total += step;
  }

  double halfturns = total / pi;
  auto m2 = static_cast<std::int64_t>(std::llround(halfturns));
  if (std::abs(halfturns - static_cast<double>(m2)) > 1e-6 || (m2 % 2) != 0)
    fail(ErrorCode::DegenerateGeometry, "rotation around vertex " + std::to_string(v) + " is not a full multiple of pi");
  return static_cast<int>(m2 / 2);
}

} // namespace rado
