#include <doctest.h>

#include <memory>
#include <set>

#include "rado/gallery.hpp"
#include "rado/level_network.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace rado;

namespace {

int mesh_vertex_nodes(const LevelNetwork& x) {
  int n = 0;
  for (const auto& node : x.nodes)
    if (!node.synthetic) n++;
  return n;
}

int synthetic_nodes(const LevelNetwork& x) {
  return static_cast<int>(x.nodes.size()) - mesh_vertex_nodes(x);
}

} // namespace

TEST_CASE("slice of Re(z^2) through the saddle") {
  ScalarField f = gen_disk_harmonic(2, 16);
  LevelNetwork x = extract_level_network(f, 0.0);

  CHECK(mesh_vertex_nodes(x) == 1); // the center
  CHECK(synthetic_nodes(x) == 4);   // four boundary crossings
  CHECK(x.arcs.size() == 4);
  CHECK(x.loop_count() == 0);
  for (const auto& node : x.nodes) {
    if (!node.synthetic) CHECK(node.valence == 4);
    if (node.synthetic) CHECK(node.valence == 1);
  }

  NetworkReport euler = network_euler(x);
  CHECK(euler.chi == 1); // 5 nodes - 4 arcs
  CHECK(euler.pass);
  CHECK(euler.identity_lhs == Half(1));

  NetworkReport counting = counting_identity(x);
  CHECK(counting.identity_lhs == Half(1));  // (1/2)(4-2)*1
  CHECK(counting.identity_rhs == Half(1));  // (1/2)*4*1 + 0 - 1
  CHECK(counting.pass);
}

TEST_CASE("torus slice between the saddles is two loops") {
  ScalarField f = gen_closed(1);
  double t = 3.1; // between the saddle values
  REQUIRE(is_regular_value(f, t));
  LevelNetwork x = extract_level_network(f, t);
  CHECK(x.nodes.empty());
  CHECK(x.arcs.empty());
  CHECK(x.loop_count() == 2);

  NetworkReport euler = network_euler(x);
  CHECK(euler.chi == 0);
  CHECK(euler.d0 == 2);
  CHECK(euler.d1 == 2);
  CHECK(euler.pass);

  NetworkReport counting = counting_identity(x);
  CHECK(counting.identity_lhs == Half(0)); // 0 = 0 + 2 - 2
  CHECK(counting.pass);
}

TEST_CASE("a single loop below the first saddle") {
  ScalarField f = gen_closed(1);
  double t = 1.5; // above the minimum, below both saddles
  REQUIRE(is_regular_value(f, t));
  LevelNetwork x = extract_level_network(f, t);
  CHECK(x.nodes.empty());
  CHECK(x.loop_count() == 1);
  NetworkReport euler = network_euler(x);
  CHECK(euler.chi == 0);
  CHECK(euler.pass);
  NetworkReport counting = counting_identity(x);
  CHECK(counting.identity_lhs == Half(0)); // 0 = 0 + 1 - 1
  CHECK(counting.identity_rhs == Half(0));
  CHECK(counting.pass);
}

TEST_CASE("slice above the maximum is empty") {
  ScalarField f = gen_disk_harmonic(2, 16);
  LevelNetwork x = extract_level_network(f, 99.0);
  CHECK(x.nodes.empty());
  CHECK(x.arcs.empty());
  CHECK(x.loop_count() == 0);
  CHECK(network_euler(x).chi == 0);
}

TEST_CASE("a valence-2 node on a through-path") {
  // quadratic saddle grid: slice at the value of a regular interior vertex
  fixtures::Grid g = fixtures::grid_strip(6, 6);
  auto mesh = std::make_shared<Mesh>(g.mesh());
  std::vector<double> values(mesh->vertex_count);
  for (int i = 0; i <= 6; i++)
    for (int j = 0; j <= 6; j++) values[g.vid(i, j)] = (i - 3.0) * (i - 3.0) - (j - 3.0) * (j - 3.0) + 0.05 * i + 0.01 * j;
  ScalarField f = attach_field(mesh, values);

  int v = g.vid(1, 2);
  REQUIRE_FALSE(mesh->vertex_on_boundary[v]);
  REQUIRE(valence(f, v) == 2);
  LevelNetwork x = extract_level_network(f, f.values[v]);
  NetworkReport counting = counting_identity(x);
  CHECK(counting.pass);
  for (const auto& node : x.nodes)
    if (!node.synthetic && node.id == v) CHECK(node.valence == 2);
}

TEST_CASE("relaxed boundary at the level is refused") {
  ScalarField f = fixtures::strip_height_field();
  CHECK_RADO_ERROR(extract_level_network(f, 0.0), ErrorCode::RelaxedBoundaryAtLevel);
  CHECK_NOTHROW(extract_level_network(f, 0.37));
}

TEST_CASE("network structure on random fields") {
  std::vector<MeshPtr> zoo;
  zoo.push_back(gen_disk_harmonic(2, 16).mesh_ptr);
  zoo.push_back(gen_closed(1).mesh_ptr);
  zoo.push_back(gen_mobius(8).mesh_ptr);

  for (const auto& m : zoo) {
    for (std::uint64_t seed = 11; seed <= 16; seed++) {
      ScalarField f = gen_random_field(m, seed);
      ClassificationSummary summary = classify_all(f);

      // regular slices are 1-manifolds: synthetic valence-1 nodes and loops only
      for (double t : {0.31, 0.62}) {
        if (!is_regular_value(f, t)) continue;
        LevelNetwork x = extract_level_network(f, t);
        for (const auto& node : x.nodes) {
          CHECK(node.synthetic);
          CHECK(node.valence == 1);
        }
        CHECK(counting_identity(x).pass);
        CHECK(network_euler(x).pass);
      }

      // vertex-value slices: node valence matches the classifier, handshake
      // holds, and both network identities pass
      for (int v = 0; v < m->vertex_count; v++) {
        LevelNetwork x = extract_level_network(f, f.values[v]);
        long long valence_sum = 0;
        bool found = false;
        for (const auto& node : x.nodes) {
          valence_sum += node.valence;
          if (!node.synthetic && node.id == v) {
            found = true;
            CHECK(node.valence == summary.vertices[v].valence);
          }
        }
        CHECK(found);
        CHECK(valence_sum == 2 * static_cast<long long>(x.arcs.size()));
        CHECK(network_euler(x).pass);
        CHECK(counting_identity(x).pass);
      }
    }
  }
}

TEST_CASE("slice bounds are tight for Re(z^2) at zero") {
  ScalarField f = gen_disk_harmonic(2, 16);
  ClassificationSummary summary = classify_all(f);
  NetworkReport r = slice_bound(f, 0.0, summary, SStarRule::ExtremaOffLevel);
  REQUIRE(r.bounds.has_value());
  const SliceBounds& b = *r.bounds;
  CHECK(b.lhs == Half(2));    // 1 + d0 = 1 + 1
  CHECK(b.rhs_v1 == Half(2)); // (1/2)*4 + 0 + 0
  CHECK(b.rhs_j == Half(2));
  CHECK(b.rhs_k == Half(2));
  CHECK(b.j == 4);
  CHECK(b.k == 4);
  CHECK(b.s_star == 0);
  CHECK(b.pass());
}

TEST_CASE("slice bound on the torus between saddles") {
  ScalarField f = gen_closed(1);
  ClassificationSummary summary = classify_all(f);
  NetworkReport r = slice_bound(f, 3.1, summary, SStarRule::ExtremaOffLevel);
  const SliceBounds& b = *r.bounds;
  CHECK(b.lhs == Half(2));    // 0 + two loop components
  CHECK(b.d1_mesh == 2);
  CHECK(b.s_star == 2);       // min and max sit off the level
  CHECK(b.rhs_v1 == Half(4));
  CHECK(b.pass());

  // the variant rule also counts both extrema here: min below, max above
  NetworkReport r2 = slice_bound(f, 3.1, summary, SStarRule::MinBelowMaxAbove);
  CHECK(r2.bounds->s_star == 2);
  CHECK(r2.bounds->pass());
}

TEST_CASE("the slice bounds hold on every vertex-value slice of random fields") {
  std::vector<MeshPtr> zoo;
  zoo.push_back(gen_disk_harmonic(2, 16).mesh_ptr);
  zoo.push_back(gen_closed(1).mesh_ptr);
  zoo.push_back(gen_mobius(8).mesh_ptr);
  for (const auto& m : zoo) {
    for (std::uint64_t seed = 21; seed <= 24; seed++) {
      ScalarField f = gen_random_field(m, seed);
      ClassificationSummary summary = classify_all(f);
      for (int v = 0; v < m->vertex_count; v++) {
        for (SStarRule rule : {SStarRule::ExtremaOffLevel, SStarRule::MinBelowMaxAbove}) {
          NetworkReport r = slice_bound(f, f.values[v], summary, rule);
          CHECK(r.bounds->pass());
        }
      }
    }
  }
}
