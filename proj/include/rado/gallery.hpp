#pragma once

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rado/field.hpp"
#include "rado/mesh.hpp"

namespace rado {

// Deterministic example surfaces with pinned critical structure. Every
// generator validates its own field in strict mode, so a returned sample is
// always ready for the classifiers.

namespace detail {

constexpr double kPi = 3.14159265358979323846;
// ring sampling offset in units of one angular step; irrational so that no
// mirror pair of samples ever produces an equal-valued edge
constexpr double kAngleOffset = 0.3183098861837907;

inline ScalarField fan_disk(int sectors, int field_order, bool branched, int geometry_order) {
  std::vector<Triangle> tris;
  std::vector<Vec3> pos(sectors + 1);
  std::vector<double> values(sectors + 1);
  pos[0] = {0, 0, 0};
  values[0] = 0.0;
  for (int j = 0; j < sectors; j++) {
    double theta = 2.0 * kPi * (j + kAngleOffset) / sectors;
    if (branched)
      pos[1 + j] = {std::cos(geometry_order * theta), std::sin(geometry_order * theta),
                    std::cos(field_order * theta)};
    else
      pos[1 + j] = {std::cos(theta), std::sin(theta), 0.0};
    values[1 + j] = std::cos(field_order * theta);
    tris.push_back({0, 1 + j, 1 + (j + 1) % sectors});
  }
  auto mesh = std::make_shared<Mesh>(build_mesh(std::move(tris), std::move(pos)));
  return attach_field(std::move(mesh), std::move(values), Genericity::StrictInterior);
}

} // namespace detail

// Fan disk sampling the real part of z^k: the center has valence 2k and
// multiplicity k-1, the boundary restriction has k minima and k maxima, and
// there are no other critical points.
inline ScalarField gen_disk_harmonic(int k, int n) {
  if (k < 1) fail(ErrorCode::BadArgument, "k must be at least 1");
  if (n < 4 * k)
    fail(ErrorCode::ResolutionTooCoarse, "need n >= 4k to resolve " + std::to_string(2 * k) + " sign sectors");
  return detail::fan_disk(n, k, false, 1);
}

// Disk sampling of the branched parametrization u(z) = (z^Q, Re z^d): the
// pulled-back field is Re z^Q across the transverse axis (first coordinate)
// or Re z^d along the height axis. Branch order is Q - 1.
enum class BranchAxis { FirstCoordinate, Height };

inline ScalarField gen_branched(int Q, int d, int n, BranchAxis axis) {
  if (Q < 1 || d < 1) fail(ErrorCode::BadArgument, "Q and d must be at least 1");
  int need = 4 * std::max(Q, d);
  if (n < need) fail(ErrorCode::ResolutionTooCoarse, "need n >= " + std::to_string(need));
  int order = axis == BranchAxis::FirstCoordinate ? Q : d;
  return detail::fan_disk(n, order, true, Q);
}

// Closed orientable genus-g surface with a Morse-like field: a doubled grid
// rectangle ("pillow") with g through-holes. The field j + tilt*i has one
// minimum, one maximum and one simple saddle at the extreme corner of each
// hole rim on the way in and out, 2g saddles in total.
inline ScalarField gen_closed(int g, int n = 2, double tilt = 0.38196601125010515) {
  if (g < 0 || g > 4) fail(ErrorCode::BadArgument, "genus must lie in 0..4");
  if (!(tilt > 0.0 && tilt < 1.0)) fail(ErrorCode::BadArgument, "tilt must lie strictly between 0 and 1");
  int s = std::max(1, n);
  if (s % 2) s++;
  int W = (2 * g + 1) * s, H = 3 * s;

  struct HoleRect {
    int x0, x1, y0, y1;
  };
  std::vector<HoleRect> holes;
  for (int h = 0; h < g; h++) holes.push_back({(2 * h + 1) * s, (2 * h + 2) * s, s, 2 * s});

  auto on_rim = [&](int i, int j) {
    if (i == 0 || i == W || j == 0 || j == H) return true;
    for (const auto& r : holes) {
      bool on_x = (i == r.x0 || i == r.x1) && j >= r.y0 && j <= r.y1;
      bool on_y = (j == r.y0 || j == r.y1) && i >= r.x0 && i <= r.x1;
      if (on_x || on_y) return true;
    }
    return false;
  };
  auto hole_cell = [&](int i, int j) {
    for (const auto& r : holes)
      if (i >= r.x0 && i < r.x1 && j >= r.y0 && j < r.y1) return true;
    return false;
  };
  auto rim_distance = [&](int i, int j) {
    int d = std::min(std::min(i, W - i), std::min(j, H - j));
    for (const auto& r : holes) {
      int dx = std::max(std::max(r.x0 - i, i - r.x1), 0);
      int dy = std::max(std::max(r.y0 - j, j - r.y1), 0);
      d = std::min(d, std::max(dx, dy));
    }
    return d;
  };

  std::map<std::array<int, 3>, int> ids; // (i, j, sheet) with rim vertices on sheet 0
  std::vector<Vec3> pos;
  std::vector<double> values;
  auto vid = [&](int i, int j, int sheet) {
    if (on_rim(i, j)) sheet = 0;
    auto it = ids.find({i, j, sheet});
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(pos.size());
    ids.emplace(std::array<int, 3>{i, j, sheet}, id);
    double bump = 0.4 * rim_distance(i, j) * (sheet == 0 ? 1.0 : -1.0);
    pos.push_back({static_cast<double>(i), static_cast<double>(j), bump});
    values.push_back(j + tilt * i);
    return id;
  };

  std::vector<Triangle> tris;
  for (int sheet = 0; sheet < 2; sheet++)
    for (int i = 0; i < W; i++)
      for (int j = 0; j < H; j++) {
        if (hole_cell(i, j)) continue;
        int v00 = vid(i, j, sheet), v10 = vid(i + 1, j, sheet);
        int v11 = vid(i + 1, j + 1, sheet), v01 = vid(i, j + 1, sheet);
        if ((i + j) % 2 == 0) {
          tris.push_back({v00, v10, v11});
          tris.push_back({v00, v11, v01});
        } else {
          tris.push_back({v00, v10, v01});
          tris.push_back({v10, v11, v01});
        }
      }

  auto mesh = std::make_shared<Mesh>(build_mesh(std::move(tris), std::move(pos)));
  return attach_field(std::move(mesh), std::move(values), Genericity::StrictInterior);
}

// Moebius band, two cell rows glued with a flip; the field is a fixed
// low-discrepancy sequence, so the verifiers get a strict non-orientable
// sample with no tuning.
inline ScalarField gen_mobius(int n = 8) {
  int W = std::max(6, n);
  auto vid = [&](int i, int j) {
    if (i == W) return 3 * 0 + (2 - j);
    return 3 * i + j;
  };
  std::vector<Triangle> tris;
  for (int i = 0; i < W; i++)
    for (int j = 0; j < 2; j++) {
      int v00 = vid(i, j), v10 = vid(i + 1, j), v11 = vid(i + 1, j + 1), v01 = vid(i, j + 1);
      if ((i + j) % 2 == 0) {
        tris.push_back({v00, v10, v11});
        tris.push_back({v00, v11, v01});
      } else {
        tris.push_back({v00, v10, v01});
        tris.push_back({v10, v11, v01});
      }
    }
  std::vector<Vec3> pos(3 * W);
  std::vector<double> values(3 * W);
  for (int i = 0; i < W; i++)
    for (int j = 0; j < 3; j++) {
      double u = 2.0 * detail::kPi * i / W;
      double sgn = j - 1.0;
      pos[vid(i, j)] = {(2.0 + sgn * std::cos(u / 2)) * std::cos(u), (2.0 + sgn * std::cos(u / 2)) * std::sin(u),
                        sgn * std::sin(u / 2)};
      values[vid(i, j)] = std::fmod((vid(i, j) + 1) * 0.618033988749895, 1.0);
    }
  auto mesh = std::make_shared<Mesh>(build_mesh(std::move(tris), std::move(pos)));
  return attach_field(std::move(mesh), std::move(values), Genericity::StrictInterior);
}

// Distinct random vertex values, deterministic per seed.
inline ScalarField gen_random_field(MeshPtr mesh, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int attempt = 0; attempt < 64; attempt++) {
    std::vector<double> values(mesh->vertex_count);
    for (auto& x : values) x = dist(rng);
    try {
      return attach_field(mesh, std::move(values), Genericity::StrictInterior);
    } catch (const Error&) {
      continue; // an exact collision; redraw deterministically
    }
  }
  fail(ErrorCode::BadArgument, "could not draw a generic field");
}

} // namespace rado
