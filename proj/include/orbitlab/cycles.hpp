#ifndef ORBITLAB_CYCLES_HPP
#define ORBITLAB_CYCLES_HPP

#include <cstddef>
#include <vector>

#include "orbitlab/core.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab {

// An ordered graphing phi_1, ..., phi_{p-1} with rng phi_i = dom phi_{i+1}
// and dom phi_1, ..., dom phi_{p-1}, rng phi_{p-1} pairwise disjoint.
// Only validate_precycle() builds one, so every instance satisfies both.
class PrePCycle {
 public:
  std::size_t p() const { return maps_.size() + 1; }
  std::size_t space_size() const { return n_; }
  // Common cardinality of every domain.
  std::size_t block_size() const { return maps_.front().size(); }
  const std::vector<PartialInjection>& maps() const { return maps_; }
  // 1-based, matching phi_1 ... phi_{p-1}.
  const PartialInjection& map(std::size_t i) const { return maps_.at(i - 1); }
  Graphing as_graphing() const { return Graphing(n_, maps_); }

  friend bool operator==(const PrePCycle&, const PrePCycle&) = default;

 private:
  friend PrePCycle validate_precycle(const Graphing& graphing);
  PrePCycle(std::size_t n, std::vector<PartialInjection> maps)
      : n_(n), maps_(std::move(maps)) {}

  std::size_t n_ = 0;
  std::vector<PartialInjection> maps_;
};

PrePCycle validate_precycle(const Graphing& graphing);

// C_Phi: phi_i on dom phi_i, phi_1^{-1}...phi_{p-1}^{-1} on rng phi_{p-1},
// identity elsewhere.
Permutation make_cycle(const PrePCycle& cycle);

// Cycle type, ascending.
std::vector<std::size_t> orbit_sizes(const Permutation& t);

// c * phi * c^{-1}, with domain c(dom phi).
PartialInjection conjugate_partial(const Permutation& c, const PartialInjection& phi);

// Canonical generators of [R_{phi_i}] followed by C_Phi; i is 1-based.
std::vector<Permutation> isopgen_generators(const PrePCycle& cycle, std::size_t i);

}  // namespace orbitlab

#endif  // ORBITLAB_CYCLES_HPP
