// Command-line driver: deterministic generate / classify / slice / verify /
// transform pipelines over OFF or OBJ meshes with plain-text field sidecars.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rado/rado.hpp"

namespace {

using namespace rado;

ScalarField load_field(const std::string& mesh_path, const std::string& field_path, bool relaxed) {
  auto mesh = std::make_shared<Mesh>(read_mesh_file(mesh_path));
  auto values = read_field_file(field_path);
  return attach_field(std::move(mesh), std::move(values),
                      relaxed ? Genericity::RelaxedBoundary : Genericity::StrictInterior);
}

void emit_json(const json& j, const std::string& json_path) {
  std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) fail(ErrorCode::IoFailure, "cannot write " + json_path);
    out << text << "\n";
  }
}

void write_sample(const ScalarField& f, const std::string& mesh_path, const std::string& field_path) {
  write_off_file(mesh_path, f.mesh());
  write_field_file(field_path, f.values);
}

int run(int argc, char** argv) {
  CLI::App app{"piecewise-linear critical point toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a sample surface and field");
  std::string generator, gen_axis = "first-coordinate";
  std::string out_mesh, out_field, in_mesh;
  int gk = 2, gg = 1, gq = 2, gd = 3, gn = 0;
  std::uint64_t seed = 1;
  double tilt = 0.0;
  gen->add_option("generator", generator, "disk-harmonic | closed | mobius | branched | random-field")->required();
  gen->add_option("--k", gk, "harmonic degree (disk-harmonic)");
  gen->add_option("--g", gg, "genus (closed)");
  gen->add_option("--q", gq, "branch parameter Q (branched)");
  gen->add_option("--d", gd, "branch parameter d (branched)");
  gen->add_option("--n", gn, "resolution");
  gen->add_option("--axis", gen_axis, "branched pullback axis: first-coordinate | height");
  gen->add_option("--seed", seed, "seed (random-field)");
  gen->add_option("--tilt", tilt, "tie-breaking tilt (closed)");
  gen->add_option("--mesh", in_mesh, "input mesh (random-field)");
  gen->add_option("--out-mesh", out_mesh, "output OFF path")->required();
  gen->add_option("--out-field", out_field, "output field sidecar path")->required();

  // classify
  auto* cls = app.add_subcommand("classify", "valence / multiplicity census as JSON");
  std::string mesh_path, field_path, json_path;
  bool relaxed = false;
  cls->add_option("--mesh", mesh_path)->required();
  cls->add_option("--field", field_path)->required();
  cls->add_option("--json", json_path, "also write the report here");
  cls->add_flag("--relaxed", relaxed, "attach in relaxed-boundary mode");

  // slice
  auto* slc = app.add_subcommand("slice", "level network report at --t");
  double t = 0.0;
  std::string dot_path, obj_path, sstar = "symmetric";
  slc->add_option("--mesh", mesh_path)->required();
  slc->add_option("--field", field_path)->required();
  slc->add_option("--t", t, "slice level")->required();
  slc->add_option("--sstar", sstar,
                  "S* rule: symmetric (extrema off the level; default) | minmax (minima below, maxima above)");
  slc->add_option("--dot", dot_path, "write the network as DOT");
  slc->add_option("--obj", obj_path, "write the network as polyline OBJ");
  slc->add_option("--json", json_path);

  // verify
  auto* ver = app.add_subcommand("verify", "run theorem verifiers; exit 0 iff all pass");
  std::string theorems = "all";
  std::optional<double> band_a, band_b;
  ver->add_option("--mesh", mesh_path)->required();
  ver->add_option("--field", field_path)->required();
  ver->add_option("--theorems", theorems,
                  "csv of closed,maxwell,boundary-valence,general,inequality,interval,interval-limit or 'all'");
  ver->add_option("--a", [&band_a](const CLI::results_t& r) { band_a = std::stod(r[0]); return true; }, "band start");
  ver->add_option("--b", [&band_b](const CLI::results_t& r) { band_b = std::stod(r[0]); return true; }, "band end");
  ver->add_option("--json", json_path);
  ver->add_flag("--relaxed", relaxed);

  // transform
  auto* tr = app.add_subcommand("transform", "double | quotient | clip");
  std::string op;
  tr->add_option("op", op, "double | quotient | clip")->required();
  tr->add_option("--mesh", mesh_path)->required();
  tr->add_option("--field", field_path)->required();
  tr->add_option("--a", [&band_a](const CLI::results_t& r) { band_a = std::stod(r[0]); return true; }, "clip start");
  tr->add_option("--b", [&band_b](const CLI::results_t& r) { band_b = std::stod(r[0]); return true; }, "clip end");
  tr->add_option("--out-mesh", out_mesh)->required();
  tr->add_option("--out-field", out_field)->required();
  tr->add_flag("--relaxed", relaxed);

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    ScalarField f = [&]() -> ScalarField {
      if (generator == "disk-harmonic") return gen_disk_harmonic(gk, gn > 0 ? gn : 8 * gk);
      if (generator == "closed") return tilt > 0 ? gen_closed(gg, gn > 0 ? gn : 2, tilt) : gen_closed(gg, gn > 0 ? gn : 2);
      if (generator == "mobius") return gen_mobius(gn > 0 ? gn : 8);
      if (generator == "branched") {
        BranchAxis axis;
        if (gen_axis == "first-coordinate")
          axis = BranchAxis::FirstCoordinate;
        else if (gen_axis == "height")
          axis = BranchAxis::Height;
        else
          fail(ErrorCode::BadArgument, "unknown axis '" + gen_axis + "'");
        return gen_branched(gq, gd, gn > 0 ? gn : 8 * std::max(gq, gd), axis);
      }
      if (generator == "random-field") {
        if (in_mesh.empty()) fail(ErrorCode::BadArgument, "random-field needs --mesh");
        return gen_random_field(std::make_shared<Mesh>(read_mesh_file(in_mesh)), seed);
      }
      fail(ErrorCode::BadArgument, "unknown generator '" + generator + "'");
    }();
    write_sample(f, out_mesh, out_field);
    return 0;
  }

  if (cls->parsed()) {
    ScalarField f = load_field(mesh_path, field_path, relaxed);
    emit_json(classification_to_json(f, classify_all(f)), json_path);
    return 0;
  }

  if (slc->parsed()) {
    SStarRule rule;
    if (sstar == "symmetric")
      rule = SStarRule::ExtremaOffLevel;
    else if (sstar == "minmax")
      rule = SStarRule::MinBelowMaxAbove;
    else
      fail(ErrorCode::BadArgument, "unknown --sstar rule '" + sstar + "'");
    ScalarField f = load_field(mesh_path, field_path, relaxed);
    LevelNetwork x = extract_level_network(f, t);
    NetworkReport bounds = slice_bound(f, t, classify_all(f), rule);
    emit_json(network_report_to_json(x, network_euler(x), counting_identity(x), bounds), json_path);
    if (!dot_path.empty()) {
      std::ofstream out(dot_path);
      if (!out) fail(ErrorCode::IoFailure, "cannot write " + dot_path);
      out << network_to_dot(x);
    }
    if (!obj_path.empty()) {
      std::ofstream out(obj_path);
      if (!out) fail(ErrorCode::IoFailure, "cannot write " + obj_path);
      out << network_to_obj(x);
    }
    return bounds.pass ? 0 : 1;
  }

  if (ver->parsed()) {
    ScalarField f = load_field(mesh_path, field_path, relaxed);
    std::vector<TheoremReport> reports;
    if (theorems == "all") {
      reports = verify_suite(f, band_a, band_b);
    } else {
      std::string item;
      std::istringstream list(theorems);
      while (std::getline(list, item, ',')) {
        if (item == "closed")
          reports.push_back(verify_closed(f));
        else if (item == "maxwell")
          reports.push_back(verify_maxwell(f));
        else if (item == "boundary-valence")
          reports.push_back(verify_boundary_valence(f));
        else if (item == "general")
          reports.push_back(verify_general(f));
        else if (item == "inequality")
          reports.push_back(verify_inequality(f));
        else if (item == "interval" || item == "interval-limit") {
          if (!band_a || !band_b) fail(ErrorCode::BadArgument, item + " needs --a and --b");
          reports.push_back(item == "interval" ? verify_interval(f, *band_a, *band_b)
                                               : verify_interval_limit(f, *band_a, *band_b));
        } else {
          fail(ErrorCode::BadArgument, "unknown theorem '" + item + "'");
        }
      }
    }
    json out = verification_to_json(reports);
    emit_json(out, json_path);
    return out["all_pass"].get<bool>() ? 0 : 1;
  }

  if (tr->parsed()) {
    if (op == "double") {
      ScalarField f = load_field(mesh_path, field_path, relaxed);
      DoubledMesh d = double_mesh(f.mesh());
      write_off_file(out_mesh, d.mesh);
      write_field_file(out_field, doubled_values(d, f.values));
      return 0;
    }
    if (op == "quotient") {
      ScalarField f = load_field(mesh_path, field_path, relaxed);
      QuotientResult q = quotient_constant_boundary(f);
      write_sample(q.field, out_mesh, out_field);
      return 0;
    }
    if (op == "clip") {
      if (!band_a || !band_b) fail(ErrorCode::BadArgument, "clip needs --a and --b");
      ScalarField f = load_field(mesh_path, field_path, relaxed);
      ClippedComplex cc = clip(f, band_a, band_b);
      std::ofstream out(out_mesh);
      if (!out) fail(ErrorCode::IoFailure, "cannot write " + out_mesh);
      write_clip_off(out, cc);
      std::vector<double> values;
      for (const auto& v : cc.vertices)
        values.push_back(v.cut ? (v.level == 0 ? *band_a : *band_b) : f.values[v.id]);
      write_field_file(out_field, values);
      return 0;
    }
    fail(ErrorCode::BadArgument, "unknown transform '" + op + "'");
  }

  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rado::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
