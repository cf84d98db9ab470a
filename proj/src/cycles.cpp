#include "orbitlab/cycles.hpp"

#include <algorithm>

namespace orbitlab {

namespace {

constexpr const char* kModule = "cycles";

}  // namespace

PrePCycle validate_precycle(const Graphing& graphing) {
  const auto& maps = graphing.maps();
  const std::size_t n = graphing.space_size();
  if (maps.empty()) throw Error(kModule, "a pre-p-cycle needs at least one map");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].empty()) throw Error(kModule, "empty map at i=" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (maps[i].range() != maps[i + 1].domain()) {
      throw Error(kModule, "chaining violation at i=" + std::to_string(i + 1) + ": rng phi_" +
                               std::to_string(i + 1) + " != dom phi_" + std::to_string(i + 2));
    }
  }
  // dom phi_1, ..., dom phi_{p-1}, rng phi_{p-1}
  std::vector<int> owner(n, 0);
  auto claim = [&](const PointSet& points, int set_index) {
    for (Point x : points) {
      if (owner[x] != 0) {
        throw Error(kModule, "disjointness violation at point " + std::to_string(x) +
                                 " (sets " + std::to_string(owner[x]) + " and " +
                                 std::to_string(set_index) + ")");
      }
      owner[x] = set_index;
    }
  };
  for (std::size_t i = 0; i < maps.size(); ++i) claim(maps[i].domain(), static_cast<int>(i + 1));
  claim(maps.back().range(), static_cast<int>(maps.size() + 1));
  return PrePCycle(n, maps);
}

Permutation make_cycle(const PrePCycle& cycle) {
  const std::size_t n = cycle.space_size();
  std::vector<Point> images(n);
  for (Point x = 0; x < n; ++x) images[x] = x;
  for (const auto& phi : cycle.maps()) {
    for (const auto& [x, y] : phi.pairs()) images[x] = y;
  }
  std::vector<PartialInjection> inverses;
  for (const auto& phi : cycle.maps()) inverses.push_back(inverse(phi));
  for (Point last : cycle.maps().back().range()) {
    Point x = last;
    // Chaining makes every backward step defined.
    for (auto it = inverses.rbegin(); it != inverses.rend(); ++it) x = *(*it)(x);
    images[last] = x;
  }
  return Permutation::from_images(std::move(images));
}

std::vector<std::size_t> orbit_sizes(const Permutation& t) {
  std::vector<std::size_t> sizes;
  std::vector<bool> seen(t.size(), false);
  for (Point start = 0; start < t.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (Point x = start; !seen[x]; x = t(x)) {
      seen[x] = true;
      ++length;
    }
    sizes.push_back(length);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

PartialInjection conjugate_partial(const Permutation& c, const PartialInjection& phi) {
  require_same_size(kModule, c.size(), phi.space_size());
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(phi.size());
  for (const auto& [x, y] : phi.pairs()) pairs.emplace_back(c(x), c(y));
  return PartialInjection(phi.space_size(), std::move(pairs));
}

std::vector<Permutation> isopgen_generators(const PrePCycle& cycle, std::size_t i) {
  if (i < 1 || i >= cycle.p()) {
    throw Error(kModule, "index " + std::to_string(i) + " outside 1.." +
                             std::to_string(cycle.p() - 1));
  }
  Graphing single(cycle.space_size());
  single.add(cycle.map(i));
  std::vector<Permutation> gens = full_group_generators(generate_relation(single));
  gens.push_back(make_cycle(cycle));
  return gens;
}

}  // namespace orbitlab
