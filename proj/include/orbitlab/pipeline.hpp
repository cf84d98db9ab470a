#ifndef ORBITLAB_PIPELINE_HPP
#define ORBITLAB_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/core.hpp"
#include "orbitlab/cycles.hpp"
#include "orbitlab/group.hpp"
#include "orbitlab/json_io.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab {

// Builds n+1 generators for the full group of an ergodic relation whose
// cost is below n+1:
//
//   1. T0 = the N-cycle, U0 = (0 1); together they generate S_N = [R0].
//   2. n pre-(p+1)-cycles Phi_i with phi^i_j : A_j -> A_{j+1}, either taken
//      from a supplied graphing (split, regrouped and conjugated onto the
//      blocks through [[R0]]) or laid out directly on the blocks.
//   3. One shared psi : A_{p+1} -> A_{p+2} in [[R0]] is appended to every
//      Phi_i, giving pre-(p+2)-cycles with cycles C_i.
//   4. U1 = U0 C_1 recovers U0 = U1^{p+2} and C_1 = U1^{p+3} because p is
//      odd and the supports are disjoint, so {T0, U1, C_2..C_n} suffices.
//
// Block layout is fixed: supp U0 = {0,1}, A_j = [2+(j-1)m, 2+jm).

struct PipelineConfig {
  std::size_t n = 1;           // number of pre-cycles; n+1 final generators
  std::size_t space_size = 0;  // N
  std::size_t p = 3;           // odd
  std::size_t m = 1;           // |A_j|
  std::optional<Graphing> graphing;
  std::uint64_t seed = 0;      // accepted, unused: every construction is deterministic
};

// Exact bookkeeping of the quantities the construction depends on.
struct CostLedger {
  Rational c;               // p m / N
  Rational budget;          // ((p+2)/p) c, must be < 1
  Rational epsilon;         // 1 - (1 + p/2) c
  Rational u0_support;      // 2/N, must be < epsilon
  Rational relation_cost;   // cost of the target relation
  Rational support_sum;     // sum of d_u(g, id) over the n+1 final generators
};

CostLedger compute_ledger(const PipelineConfig& config);
// Throws Error("pipeline", ...) naming the first violated condition.
void validate_config(const PipelineConfig& config);

struct MatuiPair {
  Permutation t0;
  Permutation u0;
};
MatuiPair build_matui_pair(std::size_t n);

// Cuts the pairs of `graphing` (map by map, sources ascending) into n
// consecutive runs of equal length.
std::vector<Graphing> split_graphing(const Graphing& graphing, std::size_t n);

// Repacks the pairs of `graphing` into `count` partial injections of `size`
// pairs each, placing every pair first-fit in pair order.
Graphing regroup_pairs(const Graphing& graphing, std::size_t count, std::size_t size);

// Conjugates each map through [[R0]] so that map j runs A_j -> A_{j+1}.
PrePCycle reshape_to_precycle(const Graphing& graphing, const std::vector<PointSet>& blocks,
                              const Partition& r0);

// Appends psi = isopar_witness(r0, a_last, a_new) to every cycle.
// `reserved` must avoid a_new as well (supp U0 in the pipeline).
std::vector<PrePCycle> append_psi(const std::vector<PrePCycle>& cycles, const PointSet& a_last,
                                  const PointSet& a_new, const Partition& r0,
                                  const PointSet& reserved = {});

// U1 = U0 C1, checked against U1^{p+2} = U0 and U1^{p+3} = C1.
Permutation merge_generators(const Permutation& u0, const Permutation& c1, std::size_t p);

struct GeneratorSet {
  Permutation t0;
  Permutation u0;
  Permutation u1;
  std::vector<Permutation> cycles;  // C_1..C_n
  std::vector<PointSet> blocks;     // A_1..A_{p+2}
  PartialInjection psi;

  std::vector<Permutation> n_plus_two() const;  // T0, U0, C_1..C_n
  std::vector<Permutation> n_plus_one() const;  // T0, U1, C_2..C_n
};

struct NamedCertificate {
  std::string name;
  GenerationCertificate certificate;
  // Sum of d_u(g, id) over the tuple, against the cost of its target relation.
  Rational support_sum;
  Rational relation_cost;
};

enum class PipelineMode { kA, kB, kBoth };
PipelineMode parse_mode(const std::string& text);
std::string to_string(PipelineMode mode);

struct PipelineReport {
  PipelineConfig config;
  PipelineMode mode = PipelineMode::kBoth;
  GeneratorSet generators;
  std::vector<PrePCycle> cycles;  // the pre-(p+2)-cycles
  Partition relation;             // join of R0 and every R_{cycle}
  CostLedger ledger;
  bool power_identity_p2 = false;  // U1^{p+2} = U0
  bool power_identity_p3 = false;  // U1^{p+3} = C_1
  bool blocks_avoid_u0 = false;
  bool supports_disjoint = false;  // supp U0 ∩ supp C_i = ∅
  bool lower_bound_holds = false;  // every certificate's support sum >= its relation cost
  std::vector<NamedCertificate> certificates;

  bool ok() const;
};

PipelineReport run_pipeline(const PipelineConfig& config,
                            PipelineMode mode = PipelineMode::kBoth);
PipelineReport stress_mode(const PipelineConfig& config);

// Mode B drops T0, so the target is a proper subgroup of S_N:
//   "mode_b_cycles":  <U1^{p+3}, C_2..C_n, [R_psi]>  vs  join R_{cycle_i}
//   "mode_b_merged":  <U1, C_2..C_n, [R_psi]>        vs  join(R_{U0}, R_{cycle_i})
std::vector<NamedCertificate> mode_b_certificates(const GeneratorSet& gens,
                                                  const std::vector<PrePCycle>& cycles);

Json to_json(const PipelineReport& report);

}  // namespace orbitlab

#endif  // ORBITLAB_PIPELINE_HPP
