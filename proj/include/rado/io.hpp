#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "rado/classify.hpp"
#include "rado/field.hpp"
#include "rado/level_network.hpp"
#include "rado/mesh.hpp"
#include "rado/regions.hpp"
#include "rado/verify.hpp"

namespace rado {

using nlohmann::json;

// ---------------------------------------------------------------------------
// number formatting: shortest round-trip, so written values reload bit-exact
// ---------------------------------------------------------------------------

inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// OFF / OBJ meshes (triangles only)
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> tokenize_geometry(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

inline double parse_real(const std::string& s) {
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    fail(ErrorCode::ParseFailure, "bad number '" + s + "'");
  return v;
}

inline long parse_int(const std::string& s) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) fail(ErrorCode::ParseFailure, "bad integer '" + s + "'");
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseFailure, "bad integer '" + s + "'");
  }
}

} // namespace detail

inline Mesh read_off(std::istream& in) {
  auto tok = detail::tokenize_geometry(in);
  size_t p = 0;
  auto next = [&]() -> const std::string& {
    if (p >= tok.size()) fail(ErrorCode::ParseFailure, "truncated OFF stream");
    return tok[p++];
  };
  if (next() != "OFF") fail(ErrorCode::ParseFailure, "missing OFF header");
  long nv = detail::parse_int(next());
  long nf = detail::parse_int(next());
  detail::parse_int(next()); // edge count, ignored
  std::vector<Vec3> pos(nv);
  for (long v = 0; v < nv; v++)
    for (int c = 0; c < 3; c++) pos[v][c] = detail::parse_real(next());
  std::vector<Triangle> tris(nf);
  for (long t = 0; t < nf; t++) {
    long deg = detail::parse_int(next());
    if (deg != 3) fail(ErrorCode::ParseFailure, "face of degree " + std::to_string(deg) + "; triangles only");
    for (int c = 0; c < 3; c++) {
      long id = detail::parse_int(next());
      if (id < 0 || id >= nv) fail(ErrorCode::ParseFailure, "face references vertex " + std::to_string(id));
      tris[t][c] = static_cast<int>(id);
    }
  }
  return build_mesh(std::move(tris), std::move(pos));
}

inline Mesh read_obj(std::istream& in) {
  std::vector<Vec3> pos;
  std::vector<Triangle> tris;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "v") {
      Vec3 q;
      for (int c = 0; c < 3; c++) {
        std::string t;
        if (!(ls >> t)) fail(ErrorCode::ParseFailure, "short vertex line");
        q[c] = detail::parse_real(t);
      }
      pos.push_back(q);
    } else if (head == "f") {
      std::vector<long> ids;
      std::string t;
      while (ls >> t) {
        auto slash = t.find('/');
        if (slash != std::string::npos) t.erase(slash);
        long id = detail::parse_int(t);
        if (id <= 0 || id > static_cast<long>(pos.size()))
          fail(ErrorCode::ParseFailure, "face references vertex " + std::to_string(id));
        ids.push_back(id - 1);
      }
      if (ids.size() != 3) fail(ErrorCode::ParseFailure, "face of degree " + std::to_string(ids.size()) + "; triangles only");
      tris.push_back({static_cast<int>(ids[0]), static_cast<int>(ids[1]), static_cast<int>(ids[2])});
    }
  }
  return build_mesh(std::move(tris), std::move(pos));
}

inline Mesh read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoFailure, "cannot open " + path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".obj") return read_obj(in);
  return read_off(in);
}

inline void write_off(std::ostream& out, const Mesh& m) {
  out << "OFF\n" << m.vertex_count << " " << m.triangle_count() << " " << m.edge_count() << "\n";
  for (int v = 0; v < m.vertex_count; v++) {
    Vec3 p = m.positions ? (*m.positions)[v] : Vec3{0, 0, 0};
    out << format_double(p[0]) << " " << format_double(p[1]) << " " << format_double(p[2]) << "\n";
  }
  for (const auto& t : m.triangles) out << "3 " << t[0] << " " << t[1] << " " << t[2] << "\n";
}

inline void write_off_file(const std::string& path, const Mesh& m) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoFailure, "cannot write " + path);
  write_off(out, m);
}

// ---------------------------------------------------------------------------
// field sidecar: one value per line, line i = vertex i, '#' comments allowed
// ---------------------------------------------------------------------------

inline std::vector<double> read_field_values(std::istream& in) {
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    values.push_back(detail::parse_real(tok));
    std::string extra;
    if (ls >> extra) fail(ErrorCode::ParseFailure, "one value per line expected");
  }
  return values;
}

inline std::vector<double> read_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoFailure, "cannot open " + path);
  return read_field_values(in);
}

inline void write_field_values(std::ostream& out, const std::vector<double>& values) {
  for (double v : values) out << format_double(v) << "\n";
}

inline void write_field_file(const std::string& path, const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoFailure, "cannot write " + path);
  write_field_values(out, values);
}

// ---------------------------------------------------------------------------
// level network exports
// ---------------------------------------------------------------------------

inline std::string network_to_dot(const LevelNetwork& x) {
  std::ostringstream out;
  out << "graph level_network {\n";
  out << "  label=\"t=" << format_double(x.t) << "\";\n";
  for (size_t n = 0; n < x.nodes.size(); n++) {
    const auto& node = x.nodes[n];
    out << "  n" << n << " [label=\"" << (node.synthetic ? "e" : "v") << node.id << " val=" << node.valence
        << "\"" << (node.synthetic ? " shape=point" : "") << "];\n";
  }
  for (const auto& arc : x.arcs) out << "  n" << arc.from_node << " -- n" << arc.to_node << ";\n";
  for (int l = 0; l < x.loop_count(); l++) out << "  loop" << l << " [label=\"loop\" shape=circle];\n";
  out << "}\n";
  return out.str();
}

namespace detail {

inline Vec3 cut_position(const Mesh& m, int edge, double s) {
  const auto& p = *m.positions;
  const auto& e = m.edges[edge];
  Vec3 q;
  for (int c = 0; c < 3; c++) q[c] = p[e[0]][c] + s * (p[e[1]][c] - p[e[0]][c]);
  return q;
}

} // namespace detail

// polyline OBJ ("l" elements) for viewing level sets in external tools
inline std::string network_to_obj(const LevelNetwork& x) {
  const Mesh& m = x.mesh();
  if (!m.has_positions()) fail(ErrorCode::MissingPositions, "network export needs vertex positions");
  std::ostringstream out;
  int next = 1;
  auto emit_vertex = [&](const Vec3& p) {
    out << "v " << format_double(p[0]) << " " << format_double(p[1]) << " " << format_double(p[2]) << "\n";
    return next++;
  };
  for (const auto& arc : x.arcs) {
    std::vector<int> ids;
    const auto& from = x.nodes[arc.from_node];
    const auto& to = x.nodes[arc.to_node];
    if (!from.synthetic) ids.push_back(emit_vertex((*m.positions)[from.id]));
    for (const auto& step : arc.steps) ids.push_back(emit_vertex(detail::cut_position(m, step.edge, step.s)));
    if (!to.synthetic) ids.push_back(emit_vertex((*m.positions)[to.id]));
    out << "l";
    for (int id : ids) out << " " << id;
    out << "\n";
  }
  for (const auto& loop : x.loops) {
    std::vector<int> ids;
    for (const auto& step : loop) ids.push_back(emit_vertex(detail::cut_position(m, step.edge, step.s)));
    if (ids.empty()) continue;
    out << "l";
    for (int id : ids) out << " " << id;
    out << " " << ids.front() << "\n";
  }
  return out.str();
}

// OFF with polygonal faces and a trailing per-face component id
inline void write_clip_off(std::ostream& out, const ClippedComplex& c) {
  const Mesh& m = c.mesh();
  out << "OFF\n" << c.vertices.size() << " " << c.faces.size() << " " << c.sides.size() << "\n";
  for (const auto& v : c.vertices) {
    Vec3 p{0, 0, 0};
    if (m.has_positions()) p = v.cut ? detail::cut_position(m, v.id, v.s) : (*m.positions)[v.id];
    out << format_double(p[0]) << " " << format_double(p[1]) << " " << format_double(p[2]) << "\n";
  }
  for (const auto& f : c.faces) {
    out << f.corners.size();
    for (int v : f.corners) out << " " << v;
    out << " " << f.component << "\n";
  }
}

// ---------------------------------------------------------------------------
// JSON reports (schema rado-report/1); half-integers appear as {num, den}
// ---------------------------------------------------------------------------

inline json half_to_json(Half h) { return json{{"num", h.numerator()}, {"den", h.denominator()}}; }

inline json classification_to_json(const ScalarField& f, const ClassificationSummary& s) {
  json verts = json::array();
  for (const auto& c : s.vertices)
    verts.push_back(json{{"vertex", c.vertex},
                         {"boundary", c.on_boundary},
                         {"value", c.value},
                         {"valence", c.valence},
                         {"kind", vertex_kind_name(c.kind)},
                         {"multiplicity", c.multiplicity},
                         {"restriction", restriction_kind_name(c.restriction)}});
  auto hist = [](const std::map<int, int>& h) {
    json a = json::array();
    for (auto& [v, count] : h) a.push_back(json::array({v, count}));
    return a;
  };
  return json{{"schema", "rado-report/1"},
              {"type", "classification"},
              {"vertex_count", f.mesh().vertex_count},
              {"chi", f.mesh().euler_characteristic()},
              {"vertices", verts},
              {"q_interior", s.q_interior},
              {"q_boundary", s.q_boundary},
              {"a_set", s.a_set},
              {"histogram_interior", hist(s.hist_interior)},
              {"histogram_boundary", hist(s.hist_boundary)},
              {"interior_multiplicity", s.interior_multiplicity},
              {"boundary_multiplicity", s.boundary_multiplicity}};
}

inline json network_report_to_json(const LevelNetwork& x, const NetworkReport& euler, const NetworkReport& counting,
                                   const NetworkReport& bounds) {
  json nodes = json::array();
  for (const auto& n : x.nodes)
    nodes.push_back(json{{"id", n.id}, {"synthetic", n.synthetic}, {"valence", n.valence}});
  json hist = json::array();
  for (auto& [v, count] : euler.histogram) hist.push_back(json::array({v, count}));
  json out{{"schema", "rado-report/1"},
           {"type", "slice"},
           {"t", x.t},
           {"nodes", nodes},
           {"arc_count", x.arcs.size()},
           {"loop_count", x.loop_count()},
           {"isolated_nodes", x.isolated_nodes},
           {"histogram", hist},
           {"chi", euler.chi},
           {"d0", euler.d0},
           {"d1", euler.d1},
           {"d0_nonisolated", euler.d0_nonisolated},
           {"euler_identity",
            json{{"lhs", half_to_json(euler.identity_lhs)}, {"rhs", half_to_json(euler.identity_rhs)}, {"pass", euler.pass}}},
           {"counting_identity",
            json{{"lhs", half_to_json(counting.identity_lhs)},
                 {"rhs", half_to_json(counting.identity_rhs)},
                 {"pass", counting.pass}}}};
  if (bounds.bounds) {
    const SliceBounds& b = *bounds.bounds;
    out["slice_bounds"] = json{{"lhs", half_to_json(b.lhs)},      {"rhs_v1", half_to_json(b.rhs_v1)},
                               {"rhs_j", half_to_json(b.rhs_j)},  {"rhs_k", half_to_json(b.rhs_k)},
                               {"v1", b.v1},                      {"j", b.j},
                               {"k", b.k},                        {"s_star", b.s_star},
                               {"d1_mesh", b.d1_mesh},            {"pass", b.pass()}};
  }
  return out;
}

inline json theorem_report_to_json(const TheoremReport& r) {
  json out{{"theorem", r.theorem},
           {"lhs", half_to_json(r.lhs)},
           {"rhs", half_to_json(r.rhs)},
           {"relation", r.relation == Relation::Eq ? "eq" : "leq"},
           {"pass", r.pass},
           {"witnesses", r.witnesses}};
  if (r.equality_attained) out["equality_attained"] = *r.equality_attained;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline json verification_to_json(const std::vector<TheoremReport>& reports) {
  json arr = json::array();
  bool all = true;
  for (const auto& r : reports) {
    arr.push_back(theorem_report_to_json(r));
    all = all && r.pass;
  }
  return json{{"schema", "rado-report/1"}, {"type", "verification"}, {"reports", arr}, {"all_pass", all}};
}

} // namespace rado
