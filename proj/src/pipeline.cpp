#include "orbitlab/pipeline.hpp"

#include <algorithm>
#include <numeric>

namespace orbitlab {

namespace {

constexpr const char* kModule = "pipeline";

std::string str(std::size_t v) { return std::to_string(v); }

Rational support_sum(const std::vector<Permutation>& gens) {
  Rational total = 0;
  for (const auto& g : gens) total += support(g).measure;
  return total;
}

NamedCertificate certify(std::string name, const std::vector<Permutation>& gens,
                         const Partition& relation) {
  NamedCertificate out;
  out.name = std::move(name);
  out.certificate = generates_full_group(gens, relation);
  out.support_sum = support_sum(gens);
  out.relation_cost = cost_relation(relation);
  return out;
}

Partition relation_of(const PrePCycle& cycle) { return generate_relation(cycle.as_graphing()); }

Partition relation_of(const PartialInjection& phi) {
  Graphing g(phi.space_size());
  g.add(phi);
  return generate_relation(g);
}

std::vector<PointSet> canonical_blocks(const PipelineConfig& config) {
  std::vector<PointSet> blocks;
  for (std::size_t j = 0; j < config.p + 2; ++j) {
    PointSet block(config.m);
    std::iota(block.begin(), block.end(), static_cast<Point>(2 + j * config.m));
    blocks.push_back(std::move(block));
  }
  return blocks;
}

// The first map of cycle i (0-based) rotates by i mod m, so distinct cycles
// differ when m > 1.
PrePCycle synthesized_precycle(const PipelineConfig& config, const std::vector<PointSet>& blocks,
                               std::size_t i) {
  Graphing g(config.space_size);
  for (std::size_t j = 0; j < config.p; ++j) {
    const std::size_t shift = j == 0 ? (i % config.m) : 0;
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t k = 0; k < config.m; ++k) {
      pairs.emplace_back(blocks[j][k], blocks[j + 1][(k + shift) % config.m]);
    }
    g.add(PartialInjection(config.space_size, std::move(pairs)));
  }
  return validate_precycle(g);
}

}  // namespace

CostLedger compute_ledger(const PipelineConfig& config) {
  CostLedger ledger;
  ledger.c = Rational(config.p * config.m, config.space_size);
  ledger.budget = Rational(config.p + 2, config.p) * ledger.c;
  ledger.epsilon = 1 - (1 + Rational(config.p, 2)) * ledger.c;
  ledger.u0_support = Rational(2, config.space_size);
  ledger.relation_cost = Rational(config.space_size - 1, config.space_size);
  return ledger;
}

void validate_config(const PipelineConfig& config) {
  if (config.n < 1) throw Error(kModule, "n must be at least 1");
  if (config.space_size < 3) throw Error(kModule, "N must be at least 3");
  if (config.p < 3 || config.p % 2 == 0) {
    throw Error(kModule, "p must be an odd integer >= 3 (got " + str(config.p) + ")");
  }
  if (config.m < 1) throw Error(kModule, "m must be at least 1");
  const CostLedger ledger = compute_ledger(config);
  if (ledger.budget >= 1) {
    throw Error(kModule, "budget violated: ((p+2)/p)c = " + to_string(ledger.budget) + " >= 1");
  }
  if (2 + (config.p + 2) * config.m > config.space_size) {
    throw Error(kModule, "layout infeasible: 2 + (p+2)m = " + str(2 + (config.p + 2) * config.m) +
                             " > N = " + str(config.space_size));
  }
  if (ledger.u0_support >= ledger.epsilon) {
    throw Error(kModule, "support of U0 (" + to_string(ledger.u0_support) +
                             ") is not below epsilon = 1-(1+p/2)c = " +
                             to_string(ledger.epsilon));
  }
  if (config.graphing) {
    if (config.graphing->space_size() != config.space_size) {
      throw Error(kModule, "graphing lives on " + str(config.graphing->space_size()) +
                               " points but N = " + str(config.space_size));
    }
    const std::size_t want = config.n * config.p * config.m;
    if (config.graphing->total_pairs() != want) {
      throw Error(kModule, "graphing has cost " + to_string(cost_graphing(*config.graphing)) +
                               " but n*c = " + to_string(Rational(want, config.space_size)));
    }
  }
}

MatuiPair build_matui_pair(std::size_t n) {
  if (n < 3) throw Error(kModule, "the Matui pair needs N >= 3 (got " + str(n) + ")");
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point{0});
  return {Permutation::from_cycles(n, {all}), Permutation::from_cycles(n, {{0, 1}})};
}

std::vector<Graphing> split_graphing(const Graphing& graphing, std::size_t n) {
  if (n == 0) throw Error(kModule, "cannot split into 0 graphings");
  const std::size_t total = graphing.total_pairs();
  if (total % n != 0) {
    throw Error(kModule, "graphing has " + str(total) + " pairs, not divisible by n = " + str(n) +
                             "; pad with " + str(n - total % n) + " more pairs");
  }
  const std::size_t per_part = total / n;
  const std::size_t size = graphing.space_size();
  std::vector<Graphing> parts(n, Graphing(size));
  std::size_t part = 0;
  std::size_t filled = 0;
  for (const auto& phi : graphing.maps()) {
    std::vector<std::pair<Point, Point>> chunk;
    for (const auto& pr : phi.pairs()) {
      chunk.push_back(pr);
      if (++filled == per_part) {
        parts[part].add(PartialInjection(size, std::move(chunk)));
        chunk.clear();
        ++part;
        filled = 0;
      }
    }
    if (!chunk.empty()) parts[part].add(PartialInjection(size, std::move(chunk)));
  }
  return parts;
}

Graphing regroup_pairs(const Graphing& graphing, std::size_t count, std::size_t size) {
  const std::size_t n = graphing.space_size();
  if (graphing.total_pairs() != count * size) {
    throw Error(kModule, "cannot repack " + str(graphing.total_pairs()) + " pairs into " +
                             str(count) + " maps of " + str(size));
  }
  std::vector<std::vector<std::pair<Point, Point>>> bins(count);
  std::vector<std::vector<bool>> sources(count, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> targets(count, std::vector<bool>(n, false));
  for (const auto& phi : graphing.maps()) {
    for (const auto& [x, y] : phi.pairs()) {
      std::size_t b = 0;
      while (b < count && (bins[b].size() == size || sources[b][x] || targets[b][y])) ++b;
      if (b == count) {
        throw Error(kModule, "pair " + str(x) + "->" + str(y) +
                                 " fits no injective map under first-fit packing");
      }
      bins[b].emplace_back(x, y);
      sources[b][x] = true;
      targets[b][y] = true;
    }
  }
  Graphing out(n);
  for (auto& bin : bins) out.add(PartialInjection(n, std::move(bin)));
  return out;
}

PrePCycle reshape_to_precycle(const Graphing& graphing, const std::vector<PointSet>& blocks,
                              const Partition& r0) {
  const std::size_t n = graphing.space_size();
  require_same_size(kModule, n, r0.size());
  const auto& maps = graphing.maps();
  if (blocks.size() != maps.size() + 1) {
    throw Error(kModule, "need " + str(maps.size() + 1) + " blocks for " + str(maps.size()) +
                             " maps, got " + str(blocks.size()));
  }
  if (!is_ergodic(r0)) throw Error(kModule, "R0 must be ergodic");
  std::vector<bool> used(n, false);
  for (const PointSet& block : blocks) {
    for (Point x : block) {
      if (x >= n || used[x]) throw Error(kModule, "blocks overlap at point " + str(x));
      used[x] = true;
    }
  }
  Graphing out(n);
  for (std::size_t j = 0; j < maps.size(); ++j) {
    const PartialInjection& old = maps[j];
    if (old.size() != blocks[j].size() || old.size() != blocks[j + 1].size()) {
      throw Error(kModule, "map " + str(j + 1) + " has " + str(old.size()) +
                               " pairs but blocks A_" + str(j + 1) + ", A_" + str(j + 2) +
                               " have " + str(blocks[j].size()) + " and " +
                               str(blocks[j + 1].size()));
    }
    const PartialInjection pre = isopar_witness(r0, blocks[j], old.domain());
    const PartialInjection post = isopar_witness(r0, old.range(), blocks[j + 1]);
    out.add(compose(post, compose(old, pre)));
  }
  return validate_precycle(out);
}

std::vector<PrePCycle> append_psi(const std::vector<PrePCycle>& cycles, const PointSet& a_last,
                                  const PointSet& a_new, const Partition& r0,
                                  const PointSet& reserved) {
  const PartialInjection psi = isopar_witness(r0, a_last, a_new);
  if (!set_intersection(a_new, reserved).empty() || !set_intersection(a_last, reserved).empty()) {
    throw Error(kModule, "psi blocks meet the reserved support");
  }
  std::vector<PrePCycle> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const PrePCycle& cycle = cycles[i];
    if (cycle.maps().back().range() != a_last) {
      throw Error(kModule, "cycle " + str(i + 1) + " does not end on the psi domain block");
    }
    for (const auto& phi : cycle.maps()) {
      if (!set_intersection(phi.domain(), a_new).empty()) {
        throw Error(kModule, "psi range block meets cycle " + str(i + 1));
      }
    }
    Graphing extended = cycle.as_graphing();
    extended.add(psi);
    out.push_back(validate_precycle(extended));
  }
  return out;
}

Permutation merge_generators(const Permutation& u0, const Permutation& c1, std::size_t p) {
  require_same_size(kModule, u0.size(), c1.size());
  if (p % 2 == 0) throw Error(kModule, "p must be odd (got " + str(p) + ")");
  if (!(u0 * u0).is_identity()) throw Error(kModule, "U0 is not an involution");
  for (std::size_t len : orbit_sizes(c1)) {
    if (len != 1 && len != p + 2) {
      throw Error(kModule, "C1 has an orbit of size " + str(len) + ", expected 1 or " + str(p + 2));
    }
  }
  if (!set_intersection(support(u0).points, support(c1).points).empty()) {
    throw Error(kModule, "supports of U0 and C1 overlap");
  }
  Permutation u1 = u0 * c1;
  const auto e = static_cast<long long>(p);
  if (u1.pow(e + 2) != u0 || u1.pow(e + 3) != c1) {
    throw Error(kModule, "power identities failed");
  }
  return u1;
}

std::vector<Permutation> GeneratorSet::n_plus_two() const {
  std::vector<Permutation> out{t0, u0};
  out.insert(out.end(), cycles.begin(), cycles.end());
  return out;
}

std::vector<Permutation> GeneratorSet::n_plus_one() const {
  std::vector<Permutation> out{t0, u1};
  out.insert(out.end(), cycles.begin() + 1, cycles.end());
  return out;
}

PipelineMode parse_mode(const std::string& text) {
  if (text == "a") return PipelineMode::kA;
  if (text == "b") return PipelineMode::kB;
  if (text == "both") return PipelineMode::kBoth;
  throw Error(kModule, "unknown mode '" + text + "' (expected a, b or both)");
}

std::string to_string(PipelineMode mode) {
  switch (mode) {
    case PipelineMode::kA:
      return "a";
    case PipelineMode::kB:
      return "b";
    case PipelineMode::kBoth:
      return "both";
  }
  return "both";
}

std::vector<NamedCertificate> mode_b_certificates(const GeneratorSet& gens,
                                                  const std::vector<PrePCycle>& cycles) {
  if (cycles.empty() || gens.cycles.empty()) throw Error(kModule, "mode B needs at least one cycle");
  const std::size_t n = gens.u0.size();
  const auto cycle_length = static_cast<long long>(cycles.front().p());

  std::vector<Partition> cycle_relations;
  for (const auto& c : cycles) cycle_relations.push_back(relation_of(c));
  const std::vector<Permutation> psi_gens = full_group_generators(relation_of(gens.psi));

  std::vector<Permutation> tail(gens.cycles.begin() + 1, gens.cycles.end());
  tail.insert(tail.end(), psi_gens.begin(), psi_gens.end());

  std::vector<Permutation> recovered{gens.u1.pow(cycle_length + 1)};
  recovered.insert(recovered.end(), tail.begin(), tail.end());

  std::vector<Permutation> merged{gens.u1};
  merged.insert(merged.end(), tail.begin(), tail.end());
  std::vector<Partition> with_u0 = cycle_relations;
  with_u0.push_back(relation_of(PartialInjection(n, {{0, 1}})));

  return {certify("mode_b_cycles", recovered, join(cycle_relations)),
          certify("mode_b_merged", merged, join(with_u0))};
}

bool PipelineReport::ok() const {
  const bool certs = std::all_of(certificates.begin(), certificates.end(),
                                 [](const auto& c) { return c.certificate.generates; });
  return certs && power_identity_p2 && power_identity_p3 && blocks_avoid_u0 &&
         supports_disjoint && lower_bound_holds;
}

PipelineReport run_pipeline(const PipelineConfig& config, PipelineMode mode) {
  validate_config(config);
  const std::size_t size = config.space_size;

  PipelineReport report;
  report.config = config;
  report.mode = mode;
  report.ledger = compute_ledger(config);

  const MatuiPair matui = build_matui_pair(size);
  Graphing t0_graphing(size);
  t0_graphing.add(PartialInjection::from_permutation(matui.t0));
  const Partition r0 = generate_relation(t0_graphing);

  const std::vector<PointSet> blocks = canonical_blocks(config);
  const std::vector<PointSet> cycle_blocks(blocks.begin(), blocks.end() - 1);  // A_1..A_{p+1}

  std::vector<PrePCycle> precycles;
  if (config.graphing) {
    for (const Graphing& part : split_graphing(*config.graphing, config.n)) {
      precycles.push_back(
          reshape_to_precycle(regroup_pairs(part, config.p, config.m), cycle_blocks, r0));
    }
  } else {
    for (std::size_t i = 0; i < config.n; ++i) {
      precycles.push_back(synthesized_precycle(config, blocks, i));
    }
  }

  const PointSet u0_support = support(matui.u0).points;
  report.cycles = append_psi(precycles, blocks[config.p], blocks[config.p + 1], r0, u0_support);

  GeneratorSet& gens = report.generators;
  gens.t0 = matui.t0;
  gens.u0 = matui.u0;
  gens.blocks = blocks;
  gens.psi = report.cycles.front().maps().back();
  for (const auto& c : report.cycles) gens.cycles.push_back(make_cycle(c));
  gens.u1 = merge_generators(gens.u0, gens.cycles.front(), config.p);

  const auto e = static_cast<long long>(config.p);
  report.power_identity_p2 = gens.u1.pow(e + 2) == gens.u0;
  report.power_identity_p3 = gens.u1.pow(e + 3) == gens.cycles.front();

  PointSet block_points;
  for (const auto& b : blocks) block_points = set_union(block_points, b);
  report.blocks_avoid_u0 = set_intersection(block_points, u0_support).empty();
  report.supports_disjoint = std::all_of(gens.cycles.begin(), gens.cycles.end(), [&](const auto& c) {
    return set_intersection(support(c).points, u0_support).empty();
  });

  std::vector<Partition> parts{r0};
  for (const auto& c : report.cycles) parts.push_back(relation_of(c));
  report.relation = join(parts);
  report.ledger.relation_cost = cost_relation(report.relation);
  report.ledger.support_sum = support_sum(gens.n_plus_one());

  const Partition psi_relation = relation_of(gens.psi);
  const std::vector<Permutation> psi_gens = full_group_generators(psi_relation);

  if (mode != PipelineMode::kB) {
    report.certificates.push_back(certify("matui_pair", {gens.t0, gens.u0}, r0));
    report.certificates.push_back(certify("n_plus_two", gens.n_plus_two(), report.relation));
    report.certificates.push_back(certify("n_plus_one", gens.n_plus_one(), report.relation));
  }
  for (std::size_t i = 0; i < report.cycles.size(); ++i) {
    std::vector<Permutation> isopgen = psi_gens;
    isopgen.push_back(gens.cycles[i]);
    report.certificates.push_back(
        certify("isopgen_" + str(i + 1), isopgen, relation_of(report.cycles[i])));
  }
  if (mode != PipelineMode::kA) {
    for (auto& cert : mode_b_certificates(gens, report.cycles)) {
      report.certificates.push_back(std::move(cert));
    }
  }

  report.lower_bound_holds =
      std::all_of(report.certificates.begin(), report.certificates.end(),
                  [](const auto& c) { return c.support_sum >= c.relation_cost; }) &&
      report.ledger.support_sum >= report.ledger.relation_cost;
  return report;
}

PipelineReport stress_mode(const PipelineConfig& config) {
  return run_pipeline(config, PipelineMode::kB);
}

Json to_json(const PipelineReport& report) {
  const PipelineConfig& cfg = report.config;
  const GeneratorSet& gens = report.generators;
  Json j;
  j["config"] = {{"n", cfg.n},
                 {"N", cfg.space_size},
                 {"p", cfg.p},
                 {"m", cfg.m},
                 {"graphing_supplied", cfg.graphing.has_value()},
                 {"mode", to_string(report.mode)}};
  j["conjugation"] = "identity";
  j["blocks"] = gens.blocks;
  j["psi"] = to_json(gens.psi);
  Json cycles = Json::array();
  for (const auto& c : report.cycles) cycles.push_back(to_json(c));
  j["precycles"] = std::move(cycles);
  j["relation"] = to_json(report.relation);
  j["generators"] = {{"T0", to_json(gens.t0)},
                     {"U0", to_json(gens.u0)},
                     {"U1", to_json(gens.u1)},
                     {"C", to_json(gens.cycles)},
                     {"n_plus_two", {"T0", "U0"}},
                     {"n_plus_one", {"T0", "U1"}}};
  for (std::size_t i = 0; i < gens.cycles.size(); ++i) {
    j["generators"]["n_plus_two"].push_back("C" + str(i + 1));
    if (i > 0) j["generators"]["n_plus_one"].push_back("C" + str(i + 1));
  }
  const CostLedger& l = report.ledger;
  j["cost_ledger"] = {{"c", to_string(l.c)},
                      {"budget", to_string(l.budget)},
                      {"epsilon", to_string(l.epsilon)},
                      {"u0_support", to_string(l.u0_support)},
                      {"relation_cost", to_string(l.relation_cost)},
                      {"support_sum", to_string(l.support_sum)}};
  j["checks"] = {{"power_identity_p_plus_2", report.power_identity_p2},
                 {"power_identity_p_plus_3", report.power_identity_p3},
                 {"blocks_avoid_supp_u0", report.blocks_avoid_u0},
                 {"supports_disjoint", report.supports_disjoint},
                 {"support_lower_bound", report.lower_bound_holds}};
  Json certs = Json::array();
  for (const auto& c : report.certificates) {
    Json entry = {{"name", c.name}};
    entry.update(to_json(c.certificate));
    entry["support_sum"] = to_string(c.support_sum);
    entry["relation_cost"] = to_string(c.relation_cost);
    certs.push_back(std::move(entry));
  }
  j["certificates"] = std::move(certs);
  j["ok"] = report.ok();
  return j;
}

}  // namespace orbitlab
