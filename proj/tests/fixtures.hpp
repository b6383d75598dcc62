#pragma once

// Handcrafted meshes and fields the suites share.

#include <array>
#include <cmath>
#include <memory>
#include <vector>

#include "rado/field.hpp"
#include "rado/mesh.hpp"

namespace fixtures {

using rado::Mesh;
using rado::MeshPtr;
using rado::Triangle;
using rado::Vec3;

inline std::vector<Triangle> square_disk_tris() { return {{0, 1, 2}, {0, 2, 3}}; }

inline Mesh square_disk() { return rado::build_mesh(square_disk_tris()); }

inline std::vector<Triangle> octahedron_tris() {
  // apexes 4 (top) and 5 (bottom) over the equator 0..3
  return {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}, {1, 0, 5}, {2, 1, 5}, {3, 2, 5}, {0, 3, 5}};
}

inline Mesh octahedron() {
  std::vector<Vec3> pos = {{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  return rado::build_mesh(octahedron_tris(), pos);
}

// the 7-vertex torus (every pair of vertices spans an edge)
inline std::vector<Triangle> csaszar_torus_tris() {
  return {{1, 3, 6}, {1, 6, 5}, {2, 5, 6}, {0, 2, 6}, {0, 6, 4}, {3, 4, 6}, {1, 2, 3},
          {1, 4, 2}, {1, 0, 4}, {1, 5, 0}, {3, 5, 4}, {0, 5, 3}, {0, 3, 2}, {2, 4, 5}};
}

inline Mesh csaszar_torus() { return rado::build_mesh(csaszar_torus_tris()); }

// cols x rows grid of unit cells with checkerboard diagonals and optional
// rectangular holes (cell ranges [x0,x1) x [y0,y1)); vertex ids are compacted
// so hole interiors leave no gaps
struct Grid {
  int cols = 0, rows = 0;
  std::vector<Triangle> tris;
  std::vector<int> ids; // full-grid (i, j) -> compact id, -1 when absent

  int vid(int i, int j) const { return ids[i * (rows + 1) + j]; }

  Mesh mesh() const {
    int n = 0;
    for (int id : ids) n = std::max(n, id + 1);
    std::vector<Vec3> pos(n);
    for (int i = 0; i <= cols; i++)
      for (int j = 0; j <= rows; j++)
        if (vid(i, j) >= 0) pos[vid(i, j)] = {static_cast<double>(i), static_cast<double>(j), 0.0};
    return rado::build_mesh(tris, pos);
  }
};

inline Grid grid_strip(int cols, int rows, std::vector<std::array<int, 4>> holes = {}) {
  Grid g;
  g.cols = cols;
  g.rows = rows;
  auto in_hole = [&](int i, int j) {
    for (const auto& h : holes)
      if (i >= h[0] && i < h[1] && j >= h[2] && j < h[3]) return true;
    return false;
  };
  std::vector<bool> used((cols + 1) * (rows + 1), false);
  for (int i = 0; i < cols; i++)
    for (int j = 0; j < rows; j++) {
      if (in_hole(i, j)) continue;
      for (int di = 0; di <= 1; di++)
        for (int dj = 0; dj <= 1; dj++) used[(i + di) * (rows + 1) + (j + dj)] = true;
    }
  g.ids.assign((cols + 1) * (rows + 1), -1);
  int next = 0;
  for (int i = 0; i <= cols; i++)
    for (int j = 0; j <= rows; j++)
      if (used[i * (rows + 1) + j]) g.ids[i * (rows + 1) + j] = next++;

  for (int i = 0; i < cols; i++)
    for (int j = 0; j < rows; j++) {
      if (in_hole(i, j)) continue;
      int v00 = g.vid(i, j), v10 = g.vid(i + 1, j), v11 = g.vid(i + 1, j + 1), v01 = g.vid(i, j + 1);
      if ((i + j) % 2 == 0) {
        g.tris.push_back({v00, v10, v11});
        g.tris.push_back({v00, v11, v01});
      } else {
        g.tris.push_back({v00, v10, v01});
        g.tris.push_back({v10, v11, v01});
      }
    }
  return g;
}

// Height field on the grid strip, constant on the bottom and top boundary
// rows (the relaxed F = y fixture). Interior rows carry an infinitesimal
// column tilt: a PL field cannot be literally constant along interior rows
// and stay generic, and the tilt changes no census the strip examples pin.
inline rado::ScalarField strip_height_field(int cols = 4, int rows = 4) {
  Grid g = grid_strip(cols, rows);
  auto mesh = std::make_shared<Mesh>(g.mesh());
  std::vector<double> values(mesh->vertex_count);
  for (int i = 0; i <= cols; i++)
    for (int j = 0; j <= rows; j++) {
      double tilt = (j == 0 || j == rows) ? 0.0 : 1e-7 * (i + 1);
      values[g.vid(i, j)] = static_cast<double>(j) / rows + tilt;
    }
  return rado::attach_field(std::move(mesh), std::move(values), rado::Genericity::RelaxedBoundary);
}

// two concentric vertex rings; inner ring is one boundary cycle, outer the other
struct Annulus {
  int n = 0;
  std::vector<Triangle> tris;
  int inner(int j) const { return j; }
  int outer(int j) const { return n + j; }
};

inline Annulus annulus_ring(int n) {
  Annulus a;
  a.n = n;
  for (int j = 0; j < n; j++) {
    int j1 = (j + 1) % n;
    a.tris.push_back({a.inner(j), a.outer(j), a.outer(j1)});
    a.tris.push_back({a.inner(j), a.outer(j1), a.inner(j1)});
  }
  return a;
}

inline Mesh annulus_mesh(int n) {
  Annulus a = annulus_ring(n);
  std::vector<Vec3> pos(2 * n);
  for (int j = 0; j < n; j++) {
    double th = 2.0 * M_PI * j / n;
    pos[a.inner(j)] = {std::cos(th), std::sin(th), 0.0};
    pos[a.outer(j)] = {2.0 * std::cos(th), 2.0 * std::sin(th), 0.0};
  }
  return rado::build_mesh(a.tris, pos);
}

// moebius band with a configurable number of cell rows; columns wrap with a
// flip, (W, j) = (0, rows - j)
inline Mesh mobius_band(int W, int rows) {
  auto vid = [&](int i, int j) { return i == W ? (rows - j) : (rows + 1) * i + j; };
  std::vector<Triangle> tris;
  for (int i = 0; i < W; i++)
    for (int j = 0; j < rows; j++) {
      int v00 = vid(i, j), v10 = vid(i + 1, j), v11 = vid(i + 1, j + 1), v01 = vid(i, j + 1);
      if ((i + j) % 2 == 0) {
        tris.push_back({v00, v10, v11});
        tris.push_back({v00, v11, v01});
      } else {
        tris.push_back({v00, v10, v01});
        tris.push_back({v10, v11, v01});
      }
    }
  return rado::build_mesh(tris);
}

// radial multi-ring disk sampling r^k cos(k theta); away from the center the
// sampled field is smooth, so rotation tracking works at every interior vertex
inline rado::ScalarField multiring_harmonic(int k, int n, int rings) {
  auto vid = [&](int ring, int j) { return ring == 0 ? 0 : 1 + (ring - 1) * n + ((j % n + n) % n); };
  std::vector<Triangle> tris;
  for (int j = 0; j < n; j++) tris.push_back({0, vid(1, j), vid(1, j + 1)});
  for (int ring = 1; ring < rings; ring++)
    for (int j = 0; j < n; j++) {
      tris.push_back({vid(ring, j), vid(ring + 1, j), vid(ring + 1, j + 1)});
      tris.push_back({vid(ring, j), vid(ring + 1, j + 1), vid(ring, j + 1)});
    }
  int count = 1 + rings * n;
  std::vector<Vec3> pos(count);
  std::vector<double> values(count);
  pos[0] = {0, 0, 0};
  values[0] = 0.0;
  for (int ring = 1; ring <= rings; ring++)
    for (int j = 0; j < n; j++) {
      double r = static_cast<double>(ring) / rings;
      double theta = 2.0 * M_PI * (j + 0.3183098861837907) / n;
      pos[vid(ring, j)] = {r * std::cos(theta), r * std::sin(theta), 0.0};
      values[vid(ring, j)] = std::pow(r, k) * std::cos(k * theta);
    }
  return rado::attach_field(std::make_shared<Mesh>(rado::build_mesh(tris, pos)), std::move(values),
                            rado::Genericity::StrictInterior);
}

// strict axial-height field with a small angular tilt: one restriction
// minimum and maximum per rim, no interior vertices at all
inline rado::ScalarField annulus_axial_field(int n = 12) {
  Annulus a = annulus_ring(n);
  auto mesh = std::make_shared<Mesh>(annulus_mesh(n));
  std::vector<double> values(2 * n);
  for (int j = 0; j < n; j++) {
    double c = 0.3 * std::cos(2.0 * M_PI * (j + 0.25) / n);
    values[a.inner(j)] = c;
    values[a.outer(j)] = 1.0 + c;
  }
  return rado::attach_field(std::move(mesh), std::move(values), rado::Genericity::StrictInterior);
}

// axial height on a cylinder: constant on both rims, the doubly-relaxed case
inline rado::ScalarField cylinder_relaxed_field(int n = 12) {
  Annulus a = annulus_ring(n);
  auto mesh = std::make_shared<Mesh>(annulus_mesh(n));
  std::vector<double> values(2 * n);
  for (int j = 0; j < n; j++) {
    values[a.inner(j)] = 0.0;
    values[a.outer(j)] = 1.0;
  }
  return rado::attach_field(std::move(mesh), std::move(values), rado::Genericity::RelaxedBoundary);
}

// constant value on the inner boundary circle, strictly increasing outward
// with a single min/max pair along the outer circle: the quotient fixture
inline rado::ScalarField relaxed_annulus_field(int n = 12) {
  Annulus a = annulus_ring(n);
  auto mesh = std::make_shared<Mesh>(annulus_mesh(n));
  std::vector<double> values(2 * n);
  for (int j = 0; j < n; j++) {
    values[a.inner(j)] = 0.0;
    values[a.outer(j)] = 2.0 + std::cos(2.0 * M_PI * (j + 0.25) / n);
  }
  return rado::attach_field(std::move(mesh), std::move(values), rado::Genericity::RelaxedBoundary);
}

} // namespace fixtures
