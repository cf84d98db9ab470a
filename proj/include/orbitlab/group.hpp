#ifndef ORBITLAB_GROUP_HPP
#define ORBITLAB_GROUP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitlab/core.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab {

// A permutation group held as a base and strong generating set, built by the
// deterministic Schreier-Sims algorithm. Immutable once constructed.
//
// Level k stores the base point b_k, the strong generators that fix
// b_0..b_{k-1}, and a transversal: for every point x in the orbit of b_k
// under those generators, an element mapping b_k to x. The group order is the
// product of the orbit lengths.
class PermGroup {
 public:
  static PermGroup from_generators(std::size_t n, std::span<const Permutation> gens);

  std::size_t degree() const { return n_; }
  const Natural& order() const { return order_; }
  std::vector<Point> base() const;
  // Every distinct strong generator, in the order they were adjoined.
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<std::size_t> orbit_lengths() const;

  bool contains(const Permutation& t) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<std::size_t> generators;  // indices into strong_
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::optional<Permutation>> inverse_transversal;
    // For orbit[k], how many of `generators` have had their Schreier
    // generator sifted.
    std::vector<std::size_t> processed;
  };

  explicit PermGroup(std::size_t n) : n_(n) {}

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // where sifting stopped; == levels_.size() if it ran through
  };
  SiftResult sift(Permutation g, std::size_t from_level) const;
  void adjoin(const Permutation& h, std::size_t first_level, std::size_t last_level);
  void close_level(std::size_t k);

  std::size_t n_;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
  Natural order_ = 1;
};

PermGroup group_from_generators(std::size_t n, std::span<const Permutation> gens);
bool contains(const PermGroup& group, const Permutation& t);

// "Generates" means exact equality: in a finite full group the uniform
// metric is discrete, so a dense subgroup is the whole group.
struct GenerationCertificate {
  bool in_full_group = false;
  Natural generated_order = 0;
  Natural full_group_order = 0;
  bool generates = false;
  std::string reason;  // empty when generates
};

GenerationCertificate generates_full_group(std::span<const Permutation> gens,
                                           const Partition& relation);
// Do the canonical generators of every [R_i] together generate [join R_i]?
GenerationCertificate check_join_generation(std::span<const Partition> relations);

}  // namespace orbitlab

#endif  // ORBITLAB_GROUP_HPP
