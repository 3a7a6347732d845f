// Copyright 2026 The strobs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "strobs/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <string>

#include "strobs/dot.hpp"
#include "strobs/error.hpp"
#include "strobs/instances.hpp"
#include "strobs/pattern.hpp"
#include "strobs/place.hpp"
#include "strobs/verify.hpp"

namespace strobs {
namespace {

using nlohmann::json;

json placement_json(const PlacementResult& placement) {
  json doc;
  doc["total"] = placement.total();
  doc["states"] = placement.measured_states();
  doc["inputs"] = placement.measured_inputs();
  json stages;
  for (SensorStage stage : {SensorStage::kStage1, SensorStage::kStage2,
                            SensorStage::kExtra}) {
    json entry;
    entry["states"] = placement.states_with_stage(stage);
    entry["inputs"] = placement.inputs_with_stage(stage);
    stages[to_string(stage)] = std::move(entry);
  }
  doc["by_stage"] = std::move(stages);
  return doc;
}

json dm_report_json(const DmRouteReport& r) {
  json doc;
  doc["rank_ok"] = r.rank_ok;
  doc["deficient_states"] = r.deficient_states;
  doc["deficient_inputs"] = r.deficient_inputs;
  doc["pencil_ok"] = r.pencil_ok;
  doc["flagged_components"] = r.flagged_components;
  doc["gsio"] = r.ok();
  return doc;
}

json digraph_report_json(const DigraphRouteReport& r) {
  json doc;
  doc["theta"] = r.theta_value;
  doc["theta_required"] = r.theta_required;
  doc["rank_ok"] = r.rank_ok;
  doc["unreached_states"] = r.unreached_states;
  doc["reach_ok"] = r.reach_ok;
  doc["delta0"] = r.delta0_states;
  doc["essential_states"] = r.essential_states;
  doc["violating_states"] = r.violating_states;
  doc["source_ok"] = r.source_ok;
  doc["gsio"] = r.ok();
  return doc;
}

json role_matrix_json(const RoleMatrix& m) {
  json doc;
  doc["size"] = m.size;
  doc["stars"] = m.stars;
  doc["pencils"] = m.pencils;
  return doc;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"structural observability analysis of linear systems with "
               "unknown inputs"};
  app.require_subcommand(1);

  std::string check_file, check_method = "both";
  CLI::App* check = app.add_subcommand(
      "check", "decide generic state-and-input observability");
  check->add_option("file", check_file, "system JSON file")->required();
  check
      ->add_option("--method", check_method,
                   "dm (decomposition), digraph, or both (cross-checked)")
      ->check(CLI::IsMember({"dm", "digraph", "both"}));

  std::string place_file;
  bool place_exact = false, place_inputs = false;
  int place_cap = 16;
  CLI::App* place = app.add_subcommand(
      "place", "compute a dedicated sensor placement achieving the property");
  place->add_option("file", place_file, "system JSON file")->required();
  place->add_flag("--exact", place_exact,
                  "exhaustive minimum instead of the two-phase heuristic");
  place->add_flag("--measure-inputs", place_inputs,
                  "allow sensors on inputs (with --exact)");
  place->add_option("--max-positions", place_cap,
                    "refusal cap for the exact search (default 16)");

  std::string bounds_file;
  bool bounds_direct = false;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "bounds on the minimum dedicated sensor count");
  bounds->add_option("file", bounds_file, "system JSON file")->required();
  bounds->add_flag("--direct-measure", bounds_direct,
                   "variant where inputs may be measured directly");

  std::string poly_file;
  CLI::App* poly = app.add_subcommand(
      "polycase",
      "optimal placement for the all-self-loop single-input special case");
  poly->add_option("file", poly_file, "system JSON file")->required();

  std::string minobs_file;
  CLI::App* minobs = app.add_subcommand(
      "minobs", "minimum sensors for plain generic observability of A");
  minobs->add_option("file", minobs_file, "system JSON file")->required();

  std::string reduce_file;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "build the sensor-placement instance of a set cover problem");
  reduce->add_option("file", reduce_file, "set cover JSON file")->required();

  GenConfig gen_cfg;
  CLI::App* gen =
      app.add_subcommand("gen", "draw a random structured system");
  gen->add_option("--n", gen_cfg.n, "number of states")->required();
  gen->add_option("--q", gen_cfg.q, "number of unknown inputs");
  gen->add_option("--density", gen_cfg.density, "entry probability in [0,1]")
      ->required();
  gen->add_flag("--dedicated", gen_cfg.dedicated,
                "one input per distinct state");
  gen->add_flag("--self-loops", gen_cfg.self_loops,
                "force every diagonal entry of A");
  gen->add_option("--seed", gen_cfg.seed, "random seed (default 0)");

  std::string dot_file;
  bool dot_decomposition = false;
  CLI::App* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("file", dot_file, "system JSON file")->required();
  dot->add_flag("--dm", dot_decomposition,
                "pencil bipartite graph grouped by decomposition blocks "
                "instead of the system digraph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*check) {
      const StructuredSystem sys = parse_system_file(check_file);
      GsioVerdict v;
      if (check_method == "dm") {
        v = check_gsio_dm(sys);
      } else if (check_method == "digraph") {
        v = check_gsio_digraph(sys);
      } else {
        v = check_gsio_both(sys);
      }
      json doc;
      doc["command"] = "check";
      doc["method"] = check_method;
      doc["n"] = sys.n;
      doc["q"] = sys.q;
      doc["m"] = sys.m;
      doc["gsio"] = v.gsio;
      if (v.dm) doc["dm"] = dm_report_json(*v.dm);
      if (v.digraph) doc["digraph"] = digraph_report_json(*v.digraph);
      emit(out, doc);
    } else if (*place) {
      const StructuredSystem sys = parse_system_file(place_file);
      if (sys.m > 0) {
        throw InputError(
            "place expects a system without preexisting outputs (m = 0)");
      }
      if (place_inputs && !place_exact) {
        throw InputError("--measure-inputs requires --exact");
      }
      const PlacementResult placement =
          place_exact ? exact_min(sys.a, sys.b, place_inputs, place_cap)
                      : two_stage(sys.a, sys.b);
      json doc;
      doc["command"] = "place";
      doc["algorithm"] = place_exact ? "exact" : "two-stage";
      doc["placement"] = placement_json(placement);
      doc["gsio"] =
          check_gsio_dm(with_placement(sys.a, sys.b, placement)).gsio;
      emit(out, doc);
    } else if (*bounds) {
      const StructuredSystem sys = parse_system_file(bounds_file);
      const BoundsResult r = bounds_direct
                                 ? bounds_direct_measure(sys.a, sys.b)
                                 : bounds_dedicated(sys.a, sys.b);
      json doc;
      doc["command"] = "bounds";
      doc["variant"] = bounds_direct ? "direct-measure" : "dedicated";
      doc["lower"] = r.lower;
      doc["upper"] = r.upper;
      doc["witness"] = placement_json(r.witness);
      emit(out, doc);
    } else if (*poly) {
      const StructuredSystem sys = parse_system_file(poly_file);
      const AuxiliarySystem aux = auxiliary_system(sys.a, sys.b);
      const int reachable = l_count(aux.a_hat);
      const PlacementResult placement = polycase(sys.a, sys.b);
      json doc;
      doc["command"] = "polycase";
      doc["l_count"] = reachable;
      doc["algorithm"] = reachable > 1 ? "selfloop" : "selfloop-fallback";
      doc["placement"] = placement_json(placement);
      doc["gsio"] =
          check_gsio_dm(with_placement(sys.a, sys.b, placement)).gsio;
      emit(out, doc);
    } else if (*minobs) {
      const StructuredSystem sys = parse_system_file(minobs_file);
      std::vector<int> all_states(sys.n);
      for (int i = 0; i < sys.n; ++i) all_states[i] = i + 1;
      const MinObsResult r = min_struct_obs(sys.a, all_states);
      json doc;
      doc["command"] = "minobs";
      doc["h"] = r.h;
      doc["sensor_states"] = r.sensor_states;
      doc["deficiency"] = r.deficiency;
      doc["sink_count"] = r.sink_count;
      doc["covered_sinks"] = r.covered_sinks;
      emit(out, doc);
    } else if (*reduce) {
      const SetCoverInstance inst = parse_setcover_file(reduce_file);
      const ReductionOutput r = reduce_setcover(inst);
      json doc;
      doc["command"] = "reduce";
      doc["p"] = r.instance.universe;
      doc["subsets"] = r.instance.subsets;
      doc["matrix"] = role_matrix_json(r.matrix);
      doc["permuted"] = role_matrix_json(r.permuted);
      doc["column_permutation"] = std::vector<int>(
          r.column_permutation.begin() + 1, r.column_permutation.end());
      doc["system"] = json::parse(serialize_system(r.system));
      doc["subset_states"] = r.subset_states;
      emit(out, doc);
    } else if (*gen) {
      out << serialize_system(gen_random(gen_cfg)) << "\n";
    } else if (*dot) {
      const StructuredSystem sys = parse_system_file(dot_file);
      out << (dot_decomposition ? dot_dm(sys) : dot_digraph(sys));
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    err << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace strobs
