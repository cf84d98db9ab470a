#include "orbitlab/group.hpp"

#include <algorithm>
#include <sstream>

namespace orbitlab {

namespace {

constexpr const char* kModule = "group";

std::string decimal(const Natural& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace

PermGroup PermGroup::from_generators(std::size_t n, std::span<const Permutation> gens) {
  PermGroup group(n);
  for (const Permutation& g : gens) {
    require_same_size(kModule, n, g.size());
    if (g.is_identity()) continue;
    SiftResult r = group.sift(g, 0);
    if (r.residue.is_identity()) continue;
    group.adjoin(r.residue, 0, r.level);
  }
  group.order_ = 1;
  for (const Level& level : group.levels_) group.order_ *= level.orbit.size();
  return group;
}

PermGroup::SiftResult PermGroup::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t k = from_level; k < levels_.size(); ++k) {
    const Level& level = levels_[k];
    const Point x = g(level.base_point);
    if (!level.transversal[x]) return {std::move(g), k};
    g = *level.inverse_transversal[x] * g;
  }
  return {std::move(g), levels_.size()};
}

// h fixes b_0..b_{last_level-1} and joins the generators of levels
// first_level..last_level. last_level == levels_.size() opens a new level at
// the smallest point h moves.
void PermGroup::adjoin(const Permutation& h, std::size_t first_level, std::size_t last_level) {
  const std::size_t index = strong_.size();
  strong_.push_back(h);
  if (last_level == levels_.size()) {
    Level level;
    Point moved = 0;
    while (h(moved) == moved) ++moved;
    level.base_point = moved;
    level.transversal.assign(n_, std::nullopt);
    level.transversal[moved] = Permutation::identity(n_);
    level.inverse_transversal = level.transversal;
    level.orbit.push_back(moved);
    level.processed.push_back(0);
    levels_.push_back(std::move(level));
  }
  for (std::size_t k = first_level; k <= last_level; ++k) levels_[k].generators.push_back(index);
  for (std::size_t k = last_level + 1; k-- > first_level;) close_level(k);
}

// Extends the orbit of level k under its generators and sifts every new
// Schreier generator into the levels below. On return levels k.. are closed.
void PermGroup::close_level(std::size_t k) {
  for (std::size_t idx = 0; idx < levels_[k].orbit.size(); ++idx) {
    while (levels_[k].processed[idx] < levels_[k].generators.size()) {
      const std::size_t gen_index = levels_[k].generators[levels_[k].processed[idx]++];
      const Permutation s = strong_[gen_index];
      const Point beta = levels_[k].orbit[idx];
      const Point gamma = s(beta);
      if (!levels_[k].transversal[gamma]) {
        levels_[k].transversal[gamma] = s * *levels_[k].transversal[beta];
        levels_[k].inverse_transversal[gamma] = levels_[k].transversal[gamma]->inverse();
        levels_[k].orbit.push_back(gamma);
        levels_[k].processed.push_back(0);
        continue;
      }
      Permutation schreier =
          *levels_[k].inverse_transversal[gamma] * s * *levels_[k].transversal[beta];
      if (schreier.is_identity()) continue;
      SiftResult r = sift(std::move(schreier), k + 1);
      if (!r.residue.is_identity()) adjoin(r.residue, k + 1, r.level);
    }
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> out;
  for (const Level& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const Level& level : levels_) out.push_back(level.orbit.size());
  return out;
}

bool PermGroup::contains(const Permutation& t) const {
  require_same_size(kModule, n_, t.size());
  return sift(t, 0).residue.is_identity();
}

PermGroup group_from_generators(std::size_t n, std::span<const Permutation> gens) {
  return PermGroup::from_generators(n, gens);
}

bool contains(const PermGroup& group, const Permutation& t) { return group.contains(t); }

GenerationCertificate generates_full_group(std::span<const Permutation> gens,
                                           const Partition& relation) {
  GenerationCertificate cert;
  cert.in_full_group = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_size(kModule, gens[i].size(), relation.size());
    if (!in_full_group(gens[i], relation)) {
      cert.in_full_group = false;
      if (cert.reason.empty()) {
        cert.reason = "generator " + std::to_string(i) + " " + gens[i].to_cycle_string() +
                      " leaves its class";
      }
    }
  }
  cert.generated_order = group_from_generators(relation.size(), gens).order();
  cert.full_group_order = full_group_order(relation);
  cert.generates = cert.in_full_group && cert.generated_order == cert.full_group_order;
  if (!cert.generates && cert.reason.empty()) {
    cert.reason = "generated order " + decimal(cert.generated_order) + " != full group order " +
                  decimal(cert.full_group_order);
  }
  return cert;
}

GenerationCertificate check_join_generation(std::span<const Partition> relations) {
  const Partition joined = join(relations);
  std::vector<Permutation> gens;
  for (const Partition& r : relations) {
    auto part = full_group_generators(r);
    gens.insert(gens.end(), part.begin(), part.end());
  }
  return generates_full_group(gens, joined);
}

}  // namespace orbitlab
