#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rado/classify.hpp"
#include "rado/half.hpp"
#include "rado/regions.hpp"

namespace rado {

enum class Relation { Eq, Leq };

// Every verifier reports both sides exactly; pass never involves a tolerance.
struct TheoremReport {
  std::string theorem;
  Half lhs, rhs;
  Relation relation = Relation::Eq;
  bool pass = false;
  std::optional<bool> equality_attained;
  std::vector<int> witnesses;
  std::string note;
};

namespace detail {

inline TheoremReport eq_report(std::string id, Half lhs, Half rhs) {
  TheoremReport r;
  r.theorem = std::move(id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = Relation::Eq;
  r.pass = lhs == rhs;
  return r;
}

// valence and saddle multiplicity from raw values, shared with the
// perturbation trials which bypass field validation
inline std::pair<int, int> raw_valence_multiplicity(const Mesh& m, const std::vector<double>& values, int v) {
  bool boundary = m.vertex_on_boundary[v];
  const auto& lk = m.link[v];
  int n = static_cast<int>(lk.size());
  int changes = 0;
  int last = boundary ? n - 1 : n;
  for (int i = 0; i < last; i++) {
    double a = values[lk[i]] - values[v];
    double b = values[lk[(i + 1) % n]] - values[v];
    if (a == 0.0 || b == 0.0) fail(ErrorCode::RelaxedBoundaryAtVertex, "tie at vertex " + std::to_string(v));
    if ((a > 0) != (b > 0)) changes++;
  }
  int w = 0;
  if (!boundary)
    w = changes >= 4 ? changes / 2 - 1 : 0;
  else
    w = changes >= 2 ? (changes % 2 == 0 ? changes / 2 : (changes - 1) / 2) : 0;
  return {changes, w};
}

} // namespace detail

// chi(M) = sum over M of (1/2)(2 - v(F,p)), closed surfaces
inline TheoremReport verify_closed(const ScalarField& f) {
  if (!f.mesh().closed()) fail(ErrorCode::HasBoundary, "the closed-surface formula needs an empty boundary");
  ClassificationSummary s = classify_all(f);
  Half rhs;
  for (const auto& c : s.vertices) rhs += half_of(2 - c.valence);
  return detail::eq_report("closed-formula", Half(f.mesh().euler_characteristic()), rhs);
}

// sum_{w>0} w = |Q| - chi(M), closed surfaces (Maxwell's count)
inline TheoremReport verify_maxwell(const ScalarField& f) {
  if (!f.mesh().closed()) fail(ErrorCode::HasBoundary, "Maxwell's count needs an empty boundary");
  ClassificationSummary s = classify_all(f);
  Half lhs(s.interior_multiplicity);
  Half rhs = Half(s.q_count()) - Half(f.mesh().euler_characteristic());
  return detail::eq_report("maxwell", lhs, rhs);
}

// chi(M) = sum_k ((1-k)|V^int_{2k}| + (1/2)(1-k)|V^bd_k|)
inline TheoremReport verify_boundary_valence(const ScalarField& f) {
  if (f.mesh().closed()) fail(ErrorCode::NoBoundary, "use the closed-surface formula instead");
  ClassificationSummary s = classify_all(f);
  Half rhs;
  for (const auto& [v, count] : s.hist_interior) rhs += Half((1 - v / 2) * count);
  for (const auto& [v, count] : s.hist_boundary) rhs += half_of((1 - v) * count);
  return detail::eq_report("boundary-valence", Half(f.mesh().euler_characteristic()), rhs);
}

// sum_{w>0} w(F,p) = |Q| - chi(M), with the expanded histogram form checked
// against the multiplicity form
inline TheoremReport verify_general(const ScalarField& f) {
  ClassificationSummary s = classify_all(f);
  Half lhs(s.interior_multiplicity + s.boundary_multiplicity);
  Half rhs = Half(s.q_count()) - Half(f.mesh().euler_characteristic());
  TheoremReport r = detail::eq_report("general-formula", lhs, rhs);

  Half expanded;
  for (const auto& [v, count] : s.hist_interior)
    if (v >= 4) expanded += Half((v / 2 - 1) * count);
  for (const auto& [v, count] : s.hist_boundary)
    if (v >= 2) expanded += Half((v / 2) * count);
  if (expanded != lhs) {
    r.pass = false;
    r.note = "histogram expansion disagrees: " + expanded.str();
  }
  return r;
}

// sum over interior saddles <= |Q| - chi(M) - |A|, equality iff no boundary
// vertex has valence > 2; witnesses list the offending boundary vertices
inline TheoremReport verify_inequality(const ScalarField& f) {
  ClassificationSummary s = classify_all(f);
  TheoremReport r;
  r.theorem = "general-inequality";
  r.relation = Relation::Leq;
  r.lhs = Half(s.interior_multiplicity);
  r.rhs = Half(s.q_count()) - Half(f.mesh().euler_characteristic()) - Half(static_cast<std::int64_t>(s.a_set.size()));
  for (const auto& c : s.vertices)
    if (c.on_boundary && c.valence > 2) r.witnesses.push_back(c.vertex);
  r.equality_attained = r.lhs == r.rhs;
  bool condition = r.witnesses.empty();
  r.pass = r.lhs <= r.rhs && (*r.equality_attained == condition);
  if (!r.witnesses.empty()) r.note = "boundary vertices of valence > 2 keep the inequality strict";
  return r;
}

namespace detail {

struct BandCensus {
  std::int64_t w_sum = 0;
  std::int64_t q_count = 0;
};

// classify only the vertices with a < F < b; relaxed arcs at the band ends
// never get touched, which is what lets the interval verifiers run on
// fixtures that are constant on part of the boundary
inline BandCensus census_band(const ScalarField& f, double a, double b) {
  BandCensus out;
  for (int v = 0; v < f.mesh().vertex_count; v++) {
    if (!(a < f.values[v] && f.values[v] < b)) continue;
    VertexClassification c = classify_vertex(f, v);
    out.w_sum += c.multiplicity;
    if (!c.on_boundary && c.valence == 0) out.q_count++;
    if (c.on_boundary && c.restriction == RestrictionKind::LocalMin) out.q_count++;
  }
  return out;
}

// boundary points of M at level t: vertices at t plus boundary-edge crossings
inline int beta_at(const ScalarField& f, double t) {
  const Mesh& m = f.mesh();
  int beta = 0;
  for (int v = 0; v < m.vertex_count; v++)
    if (m.vertex_on_boundary[v] && f.values[v] == t) beta++;
  for (int e = 0; e < m.edge_count(); e++) {
    if (!m.edge_on_boundary[e]) continue;
    double du = f.values[m.edges[e][0]] - t, dw = f.values[m.edges[e][1]] - t;
    if (du * dw < 0) beta++;
  }
  return beta;
}

} // namespace detail

// sum_{M(a,b), w>0} w = |Q(a,b)| + (1/2) beta(a) - chi(M(a,b)), a and b regular
inline TheoremReport verify_interval(const ScalarField& f, double a, double b) {
  ClippedComplex cc = clip(f, a, b);
  detail::BandCensus census = detail::census_band(f, a, b);
  Half lhs(census.w_sum);
  Half rhs = Half(census.q_count) + half_of(cc.beta_a) - Half(cc.chi());
  TheoremReport r = detail::eq_report("interval", lhs, rhs);
  r.note = "Q(a,b)=" + std::to_string(census.q_count) + " beta(a)=" + std::to_string(cc.beta_a) +
           " chi=" + std::to_string(cc.chi());
  return r;
}

// The limit form: beta(a+) is attained just above a since beta is a step
// function of the level, and chi(M(a,b)) is read off a regular clip that
// brackets every vertex value inside (a,b). Pass -inf/+inf for proper ends.
inline TheoremReport verify_interval_limit(const ScalarField& f, double a, double b) {
  if (!(a < b)) fail(ErrorCode::BadArgument, "interval needs a < b");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double x : f.values) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  double ea = std::isinf(a) ? lo - 2.0 : a;
  double eb = std::isinf(b) ? hi + 2.0 : b;

  double in_min = std::numeric_limits<double>::infinity(), in_max = -in_min;
  for (double x : f.values)
    if (a < x && x < b) {
      in_min = std::min(in_min, x);
      in_max = std::max(in_max, x);
    }
  double t0, t1;
  if (std::isinf(in_min)) { // no vertex values inside the band
    t0 = ea + (eb - ea) / 3.0;
    t1 = ea + 2.0 * (eb - ea) / 3.0;
  } else {
    t0 = (ea + in_min) / 2.0;
    t1 = (in_max + eb) / 2.0;
  }
  if (!is_regular_value(f, t0) || !is_regular_value(f, t1))
    fail(ErrorCode::NonRegularClipValue, "could not bracket the band with regular values");

  ClippedComplex cc = clip(f, t0, t1);
  detail::BandCensus census = detail::census_band(f, a, b);
  int beta_plus = detail::beta_at(f, t0);
  Half lhs(census.w_sum);
  Half rhs = Half(census.q_count) + half_of(beta_plus) - Half(cc.chi());
  TheoremReport r = detail::eq_report("interval-limit", lhs, rhs);
  r.note = "Q(a,b)=" + std::to_string(census.q_count) + " beta(a+)=" + std::to_string(beta_plus) +
           " chi=" + std::to_string(cc.chi());
  return r;
}

// Region stability under bounded value perturbations: with every boundary
// vertex of the region regular and eps below half the smallest value gap on
// edges touching the region boundary, the total multiplicity inside the
// region is unchanged by any perturbation bounded by eps.
inline TheoremReport verify_perturbation_stability(const ScalarField& f, const std::vector<int>& region_triangles,
                                                   double eps, int trials = 100, std::uint64_t seed = 1) {
  const Mesh& m = f.mesh();
  std::vector<char> in_region(m.triangle_count(), 0);
  for (int t : region_triangles) {
    if (t < 0 || t >= m.triangle_count()) fail(ErrorCode::BadArgument, "region triangle out of range");
    in_region[t] = 1;
  }
  std::set<int> region_vertices;
  for (int t = 0; t < m.triangle_count(); t++)
    if (in_region[t])
      for (int c = 0; c < 3; c++) region_vertices.insert(m.triangles[t][c]);

  std::set<int> rim;
  for (int v : region_vertices) {
    bool edge_of_region = m.vertex_on_boundary[v];
    for (int t : m.star[v])
      if (!in_region[t]) edge_of_region = true;
    if (edge_of_region) rim.insert(v);
  }
  for (int v : rim) {
    int val = valence(f, v);
    int regular = m.vertex_on_boundary[v] ? 1 : 2;
    if (val != regular)
      fail(ErrorCode::NonRegularRegionBoundary,
           "region boundary vertex " + std::to_string(v) + " has valence " + std::to_string(val));
  }

  // a region without a rim (the whole of a closed surface) has no boundary
  // gaps to protect the count, so fall back to the gaps inside the region
  double min_gap = std::numeric_limits<double>::infinity();
  for (int e = 0; e < m.edge_count(); e++) {
    bool touches = rim.empty() ? (region_vertices.count(m.edges[e][0]) || region_vertices.count(m.edges[e][1]))
                               : (rim.count(m.edges[e][0]) || rim.count(m.edges[e][1]));
    if (touches) min_gap = std::min(min_gap, std::abs(f.values[m.edges[e][0]] - f.values[m.edges[e][1]]));
  }
  if (!(eps >= 0) || !(2.0 * eps < min_gap))
    fail(ErrorCode::BadArgument,
         "eps must stay below half the smallest value gap on edges touching the region boundary (" +
             std::to_string(min_gap / 2) + ")");

  auto region_w = [&](const std::vector<double>& values) {
    std::int64_t sum = 0;
    for (int v : region_vertices) sum += detail::raw_valence_multiplicity(m, values, v).second;
    return sum;
  };

  std::int64_t base = region_w(f.values);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-eps, eps);

  TheoremReport r;
  r.theorem = "perturbation-stability";
  r.relation = Relation::Eq;
  r.lhs = Half(base);
  r.rhs = Half(base);
  r.pass = true;
  int redraws = 0;
  for (int trial = 0; trial < trials; trial++) {
    std::vector<double> values = f.values;
    for (auto& x : values) x += dist(rng);
    std::int64_t got;
    try {
      got = region_w(values);
    } catch (const Error&) {
      if (++redraws > 1000) fail(ErrorCode::BadArgument, "perturbations keep producing ties");
      trial--; // a measure-zero tie; redraw
      continue;
    }
    if (got != base) {
      r.pass = false;
      r.rhs = Half(got);
      r.witnesses.push_back(trial);
      if (r.witnesses.size() >= 8) break;
    }
  }
  r.equality_attained = r.pass;
  r.note = std::to_string(trials) + " trials, eps=" + std::to_string(eps);
  return r;
}

// The applicable verifier battery for one field; interval reports join in
// when a band is supplied.
inline std::vector<TheoremReport> verify_suite(const ScalarField& f, std::optional<double> a = std::nullopt,
                                               std::optional<double> b = std::nullopt) {
  std::vector<TheoremReport> out;
  if (f.mesh().closed()) {
    out.push_back(verify_closed(f));
    out.push_back(verify_maxwell(f));
    out.push_back(verify_general(f));
    out.push_back(verify_inequality(f));
  } else {
    out.push_back(verify_boundary_valence(f));
    out.push_back(verify_general(f));
    out.push_back(verify_inequality(f));
  }
  if (a && b) {
    out.push_back(verify_interval(f, *a, *b));
    out.push_back(verify_interval_limit(f, *a, *b));
  }
  return out;
}

} // namespace rado
