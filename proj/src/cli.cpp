#include "orbitlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "orbitlab/cycles.hpp"
#include "orbitlab/group.hpp"
#include "orbitlab/oracle.hpp"
#include "orbitlab/pipeline.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab {

namespace {

struct Outcome {
  Json inputs = Json::object();
  Json results = Json::object();
  Json certificates = Json::array();
  std::string summary;
};

Json certificate_entry(const std::string& name, const GenerationCertificate& cert) {
  Json j = {{"name", name}, {"holds", cert.generates}};
  j.update(to_json(cert));
  return j;
}

Json check_entry(const std::string& name, bool holds) {
  return {{"name", name}, {"holds", holds}};
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

Outcome validate_precycle_command(const std::string& path) {
  Outcome o;
  o.inputs["in"] = path;
  const PrePCycle cycle = precycle_from_json(read_json_file(path));
  o.results["valid"] = true;
  o.results["p"] = cycle.p();
  o.results["block_size"] = cycle.block_size();
  o.results["precycle"] = to_json(cycle);
  o.certificates.push_back(check_entry("precycle_conditions", true));
  o.summary = "valid pre-" + std::to_string(cycle.p()) + "-cycle, block size " +
              std::to_string(cycle.block_size());
  return o;
}

Outcome make_cycle_command(const std::string& path) {
  Outcome o;
  o.inputs["in"] = path;
  const PrePCycle cycle = precycle_from_json(read_json_file(path));
  const Permutation c = make_cycle(cycle);
  const auto sizes = orbit_sizes(c);
  const std::size_t long_orbits = static_cast<std::size_t>(
      std::count(sizes.begin(), sizes.end(), cycle.p()));
  o.results["p"] = cycle.p();
  o.results["cycle"] = to_json(c);
  o.results["cycle_notation"] = c.to_cycle_string();
  o.results["orbit_sizes"] = sizes;
  o.results["orbits_of_size_p"] = long_orbits;
  const bool shape = std::all_of(sizes.begin(), sizes.end(),
                                 [&](std::size_t s) { return s == 1 || s == cycle.p(); }) &&
                     long_orbits == cycle.block_size();
  o.certificates.push_back(check_entry("orbits_of_size_1_or_p", shape));
  o.summary = "C = " + c.to_cycle_string();
  return o;
}

Outcome relation_command(const std::string& action, const std::string& graphing_path,
                         const std::vector<std::string>& relation_paths) {
  Outcome o;
  o.inputs["action"] = action;
  if (action == "generate") {
    if (graphing_path.empty()) throw Error("cli", "relation generate needs --graphing");
    o.inputs["graphing"] = graphing_path;
    const Graphing g = graphing_from_json(read_json_file(graphing_path));
    const Partition r = generate_relation(g);
    o.results["relation"] = to_json(r);
    o.results["graphing_cost"] = to_string(cost_graphing(g));
    o.results["relation_cost"] = to_string(cost_relation(r));
    o.results["ergodic"] = is_ergodic(r);
    o.summary = std::to_string(r.num_classes()) + " classes, cost " + to_string(cost_relation(r));
    return o;
  }
  if (relation_paths.empty()) throw Error("cli", "relation " + action + " needs --relation");
  o.inputs["relation"] = relation_paths;
  std::vector<Partition> relations;
  for (const auto& path : relation_paths) {
    relations.push_back(partition_from_json(read_json_file(path)));
  }
  if (action == "cost") {
    if (relations.size() != 1) throw Error("cli", "relation cost takes exactly one --relation");
    const Partition& r = relations.front();
    o.results["relation"] = to_json(r);
    o.results["classes"] = r.num_classes();
    o.results["relation_cost"] = to_string(cost_relation(r));
    o.results["ergodic"] = is_ergodic(r);
    o.results["full_group_order"] = decimal_string(full_group_order(r));
    o.summary = "cost " + to_string(cost_relation(r));
    return o;
  }
  if (action == "join") {
    const Partition r = join(relations);
    o.results["relation"] = to_json(r);
    o.results["relation_cost"] = to_string(cost_relation(r));
    o.results["ergodic"] = is_ergodic(r);
    o.summary = "join has " + std::to_string(r.num_classes()) + " classes";
    return o;
  }
  throw Error("cli", "unknown relation action '" + action + "' (generate, cost, join)");
}

Outcome verify_command(const std::string& action, const std::string& perm_path,
                       const std::string& gens_path,
                       const std::vector<std::string>& relation_paths) {
  Outcome o;
  o.inputs["action"] = action;
  if (relation_paths.empty()) throw Error("cli", "verify " + action + " needs --relation");
  o.inputs["relation"] = relation_paths;
  std::vector<Partition> relations;
  for (const auto& path : relation_paths) {
    relations.push_back(partition_from_json(read_json_file(path)));
  }
  if (action == "membership") {
    if (perm_path.empty()) throw Error("cli", "verify membership needs --perm");
    o.inputs["perm"] = perm_path;
    const Permutation t = permutation_from_json(read_json_file(perm_path));
    const bool member = in_full_group(t, relations.front());
    o.results["in_full_group"] = member;
    o.certificates.push_back(check_entry("membership", member));
    o.summary = "in full group: " + yes_no(member);
    return o;
  }
  if (action == "generation") {
    if (gens_path.empty()) throw Error("cli", "verify generation needs --gens");
    o.inputs["gens"] = gens_path;
    const auto gens = permutations_from_json(read_json_file(gens_path));
    const GenerationCertificate cert = generates_full_group(gens, relations.front());
    Rational sum = 0;
    for (const auto& g : gens) sum += support(g).measure;
    o.results["support_sum"] = to_string(sum);
    o.results["relation_cost"] = to_string(cost_relation(relations.front()));
    o.certificates.push_back(certificate_entry("generation", cert));
    o.summary = "generates: " + yes_no(cert.generates) + " (" + decimal_string(cert.generated_order) +
                " / " + decimal_string(cert.full_group_order) + ")";
    return o;
  }
  if (action == "join") {
    const GenerationCertificate cert = check_join_generation(relations);
    o.results["join"] = to_json(join(relations));
    o.certificates.push_back(certificate_entry("join_generation", cert));
    o.summary = "join generation: " + yes_no(cert.generates);
    return o;
  }
  throw Error("cli", "unknown verify action '" + action + "' (membership, generation, join)");
}

Outcome pipeline_command(const PipelineConfig& config, const std::string& graphing_path,
                         const std::string& mode_text) {
  Outcome o;
  o.inputs = {{"n", config.n},     {"N", config.space_size}, {"p", config.p},
              {"m", config.m},     {"mode", mode_text},
              {"graphing", graphing_path.empty() ? Json(nullptr) : Json(graphing_path)}};
  PipelineConfig cfg = config;
  if (!graphing_path.empty()) cfg.graphing = graphing_from_json(read_json_file(graphing_path));
  const PipelineReport report = run_pipeline(cfg, parse_mode(mode_text));
  Json full = to_json(report);
  full.erase("certificates");
  full.erase("checks");
  full.erase("ok");
  o.results = std::move(full);
  for (const auto& c : report.certificates) {
    Json entry = certificate_entry(c.name, c.certificate);
    entry["support_sum"] = to_string(c.support_sum);
    entry["relation_cost"] = to_string(c.relation_cost);
    o.certificates.push_back(std::move(entry));
  }
  o.certificates.push_back(check_entry("power_identity_p_plus_2", report.power_identity_p2));
  o.certificates.push_back(check_entry("power_identity_p_plus_3", report.power_identity_p3));
  o.certificates.push_back(check_entry("blocks_avoid_supp_u0", report.blocks_avoid_u0));
  o.certificates.push_back(check_entry("supports_disjoint", report.supports_disjoint));
  o.certificates.push_back(check_entry("support_lower_bound", report.lower_bound_holds));
  o.summary = "pipeline n=" + std::to_string(config.n) + " N=" +
              std::to_string(config.space_size) + " p=" + std::to_string(config.p) +
              " m=" + std::to_string(config.m) + ": " + (report.ok() ? "certified" : "FAILED");
  return o;
}

Outcome oracle_command(const std::string& action, const std::string& relation_path,
                       std::optional<std::size_t> t) {
  Outcome o;
  o.inputs["action"] = action;
  o.inputs["relation"] = relation_path;
  if (relation_path.empty()) throw Error("cli", "oracle " + action + " needs --relation");
  const Partition r = partition_from_json(read_json_file(relation_path));
  if (action == "min-cost") {
    const auto res = brute_min_graphing_cost(r);
    o.results = to_json(res);
    o.results["relation_cost"] = to_string(cost_relation(r));
    const bool agrees = res.optimum && *res.optimum == cost_relation(r);
    o.certificates.push_back(check_entry("exhaustive", res.exhaustive));
    o.certificates.push_back(check_entry("matches_closed_form_cost", agrees));
    o.summary = "minimum graphing cost " + o.results["optimum"].get<std::string>();
    return o;
  }
  if (action == "min-gens") {
    const auto res = brute_min_generators(r);
    o.results = to_json(res);
    o.results["floor_cost_plus_one"] =
        static_cast<std::size_t>(r.size() - r.num_classes()) / r.size() + 1;
    o.certificates.push_back(check_entry("exhaustive", res.exhaustive));
    o.summary = "minimal generating tuple size " + std::to_string(*res.optimum);
    return o;
  }
  if (action == "min-support") {
    if (!t) throw Error("cli", "oracle min-support needs --t");
    o.inputs["t"] = *t;
    const auto res = brute_min_generating_support(r, *t);
    o.results = to_json(res);
    o.certificates.push_back(check_entry("exhaustive", res.exhaustive));
    if (res.optimum) {
      o.certificates.push_back(check_entry("support_lower_bound", *res.optimum >= res.relation_cost));
      o.summary = "minimum support sum " + to_string(*res.optimum) + " vs cost " +
                  to_string(res.relation_cost) + " (gap " + to_string(*res.gap) + ")";
    } else {
      o.summary = "no generating " + std::to_string(*t) + "-tuple exists";
    }
    return o;
  }
  throw Error("cli", "unknown oracle action '" + action + "' (min-cost, min-gens, min-support)");
}

}  // namespace

Json without_timing(Json report) {
  report.erase("timing");
  return report;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-model laboratory for full groups, cost and pre-p-cycles", "orbitlab"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::string out_path;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Accepted for compatibility; constructions are deterministic");
    cmd->add_option("--out", out_path, "Also write the report to this file");
  };
  common(&app);

  std::string in_path;
  auto* validate = app.add_subcommand("validate-precycle", "Check the pre-p-cycle conditions");
  validate->add_option("--in", in_path, "Pre-p-cycle JSON")->required();
  common(validate);

  auto* make = app.add_subcommand("make-cycle", "Build the p-cycle of a pre-p-cycle");
  make->add_option("--in", in_path, "Pre-p-cycle JSON")->required();
  common(make);

  std::string action;
  std::string graphing_path;
  std::vector<std::string> relation_paths;
  auto* relation = app.add_subcommand("relation", "generate | cost | join");
  relation->add_option("action", action, "generate, cost or join")->required();
  relation->add_option("--graphing", graphing_path, "Graphing JSON");
  relation->add_option("--relation", relation_paths, "Partition JSON (repeatable)");
  common(relation);

  std::string perm_path;
  std::string gens_path;
  auto* verify = app.add_subcommand("verify", "membership | generation | join");
  verify->add_option("action", action, "membership, generation or join")->required();
  verify->add_option("--perm", perm_path, "Permutation JSON");
  verify->add_option("--gens", gens_path, "Permutation list JSON");
  verify->add_option("--relation", relation_paths, "Partition JSON (repeatable)");
  common(verify);

  PipelineConfig config;
  std::string mode_text = "both";
  auto* pipeline = app.add_subcommand("pipeline", "Build and certify n+1 generators");
  pipeline->add_option("--n", config.n, "Number of pre-cycles")->required();
  pipeline->add_option("--N", config.space_size, "Number of points")->required();
  pipeline->add_option("--p", config.p, "Odd cycle parameter")->required();
  pipeline->add_option("--m", config.m, "Block size")->required();
  pipeline->add_option("--graphing", graphing_path, "Input graphing JSON");
  pipeline->add_option("--mode", mode_text, "a, b or both");
  common(pipeline);

  std::optional<std::size_t> t;
  auto* oracle = app.add_subcommand("oracle", "min-cost | min-gens | min-support");
  oracle->add_option("action", action, "min-cost, min-gens or min-support")->required();
  oracle->add_option("--relation", relation_paths, "Partition JSON")->expected(1);
  oracle->add_option("--t", t, "Tuple size for min-support");
  common(oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  Outcome o;
  try {
    if (cmd == validate) {
      o = validate_precycle_command(in_path);
    } else if (cmd == make) {
      o = make_cycle_command(in_path);
    } else if (cmd == relation) {
      o = relation_command(action, graphing_path, relation_paths);
    } else if (cmd == verify) {
      o = verify_command(action, perm_path, gens_path, relation_paths);
    } else if (cmd == pipeline) {
      o = pipeline_command(config, graphing_path, mode_text);
    } else {
      o = oracle_command(action, relation_paths.empty() ? "" : relation_paths.front(), t);
    }
  } catch (const Error& e) {
    err << "orbitlab " << name << ": " << e.what() << '\n';
    return 2;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  o.inputs["seed"] = nullptr;
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = action.empty() ? name : name + " " + action;
  report["model"] = "topological generation is exact generation (finite full groups are discrete)";
  report["inputs"] = std::move(o.inputs);
  report["results"] = std::move(o.results);
  report["certificates"] = o.certificates;
  report["timing"] = elapsed.count();

  const std::string text = report.dump(2) + "\n";
  out << text;
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "orbitlab " << name << ": cannot write '" << out_path << "'\n";
      return 2;
    }
    file << text;
  }
  err << o.summary << '\n';

  const bool all_hold = std::all_of(o.certificates.begin(), o.certificates.end(),
                                    [](const Json& c) { return c["holds"].get<bool>(); });
  return all_hold ? 0 : 1;
}

}  // namespace orbitlab
