#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "rado/errors.hpp"
#include "rado/mesh.hpp"

namespace rado {

// Strict genericity forbids equal endpoint values on every edge; the relaxed
// mode tolerates constant boundary arcs only, which exist solely as quotient
// inputs. Interior edges are generic in both modes.
enum class Genericity { StrictInterior, RelaxedBoundary };

struct ScalarField {
  MeshPtr mesh_ptr;
  std::vector<double> values;
  Genericity mode = Genericity::StrictInterior;

  const Mesh& mesh() const { return *mesh_ptr; }
  double value(int v) const { return values[v]; }
  bool strict() const { return mode == Genericity::StrictInterior; }
};

enum class TiePolicy { Reject, PerturbByIndex };

struct SignRule {
  double t = 0.0;
  TiePolicy tie_policy = TiePolicy::PerturbByIndex;
};

inline ScalarField attach_field(MeshPtr mesh, std::vector<double> values, Genericity mode = Genericity::StrictInterior) {
  const Mesh& m = *mesh;
  if (static_cast<int>(values.size()) != m.vertex_count)
    fail(ErrorCode::LengthMismatch,
         std::to_string(values.size()) + " values for " + std::to_string(m.vertex_count) + " vertices");
  for (double x : values)
    if (!std::isfinite(x)) fail(ErrorCode::NonFiniteValue, "field values must be finite");

  std::string offending;
  int bad = 0;
  for (int e = 0; e < m.edge_count(); e++) {
    if (values[m.edges[e][0]] != values[m.edges[e][1]]) continue;
    if (mode == Genericity::RelaxedBoundary && m.edge_on_boundary[e]) continue;
    bad++;
    if (bad <= 8) offending += " " + std::to_string(m.edges[e][0]) + "-" + std::to_string(m.edges[e][1]);
  }
  if (bad > 0)
    fail(ErrorCode::NonGenericInteriorEdge, std::to_string(bad) + " edge(s) with equal endpoint values:" + offending);

  return ScalarField{std::move(mesh), std::move(values), mode};
}

// Sign of F(v) - t. Ties resolve as if F(v) were t + eps*(v+1) for an
// infinitesimal eps > 0, i.e. to +1, so one global perturbation is consistent
// across every query against the same level.
inline int sign_at(const ScalarField& f, int v, const SignRule& rule) {
  double d = f.values[v] - rule.t;
  if (d > 0) return +1;
  if (d < 0) return -1;
  if (rule.tie_policy == TiePolicy::Reject)
    fail(ErrorCode::TieRejected, "F(" + std::to_string(v) + ") equals the reference value");
  return +1;
}

// t is regular iff no vertex takes the value t; constant boundary arcs sit at
// vertex values, so this covers the relaxed mode too.
inline bool is_regular_value(const ScalarField& f, double t) {
  for (double x : f.values)
    if (x == t) return false;
  return true;
}

} // namespace rado
