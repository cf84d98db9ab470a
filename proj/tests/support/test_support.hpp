#ifndef ORBITLAB_TESTS_TEST_SUPPORT_HPP
#define ORBITLAB_TESTS_TEST_SUPPORT_HPP

// Generators and brute-force oracles shared by the unit and acceptance
// suites. Nothing here calls the group engine.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "orbitlab/core.hpp"
#include "orbitlab/cycles.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

// p-1 maps over p disjoint random blocks of size m; map j sends the k-th
// point of block j to the k-th point of block j+1 (blocks randomly ordered).
inline Graphing random_precycle_graphing(Rng& rng, std::size_t p, std::size_t n, std::size_t m) {
  std::vector<Point> points(n);
  std::iota(points.begin(), points.end(), Point{0});
  std::shuffle(points.begin(), points.end(), rng);
  Graphing g(n);
  for (std::size_t j = 0; j + 1 < p; ++j) {
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t k = 0; k < m; ++k) pairs.emplace_back(points[j * m + k], points[(j + 1) * m + k]);
    g.add(PartialInjection(n, std::move(pairs)));
  }
  return g;
}

// p in [2, max_p], n in [p, max_n], m in [1, n/p].
inline PrePCycle random_precycle(Rng& rng, std::size_t max_p, std::size_t max_n) {
  const std::size_t p = uniform(rng, 2, max_p);
  const std::size_t n = uniform(rng, p, max_n);
  const std::size_t m = uniform(rng, 1, n / p);
  return validate_precycle(random_precycle_graphing(rng, p, n, m));
}

inline Partition random_partition(Rng& rng, std::size_t n) {
  const std::size_t blocks = uniform(rng, 1, n);
  std::vector<Point> labels(n);
  for (auto& l : labels) l = static_cast<Point>(uniform(rng, 0, blocks - 1));
  // Labels index blocks; map each to the first point carrying it.
  std::vector<Point> first(blocks, ~Point{0});
  std::vector<Point> canon(n);
  for (Point x = 0; x < n; ++x) {
    if (first[labels[x]] == ~Point{0}) first[labels[x]] = x;
    canon[x] = first[labels[x]];
  }
  return Partition::from_labels(canon);
}

// Every set partition of {0..n-1}, via restricted growth strings.
inline std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<Point> rgs(n, 0);
  std::function<void(std::size_t, Point)> rec = [&](std::size_t i, Point max_used) {
    if (i == n) {
      std::vector<Point> first(n, ~Point{0});
      std::vector<Point> labels(n);
      for (Point x = 0; x < n; ++x) {
        if (first[rgs[x]] == ~Point{0}) first[rgs[x]] = x;
        labels[x] = first[rgs[x]];
      }
      out.push_back(Partition::from_labels(labels));
      return;
    }
    for (Point b = 0; b <= max_used + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(max_used, b));
    }
  };
  if (n == 0) return out;
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

// Order of <gens> by breadth-first closure over all elements. Degree <= 8.
inline std::size_t naive_closure_order(std::size_t n, const std::vector<Permutation>& gens) {
  std::set<std::vector<Point>> seen;
  std::vector<Permutation> frontier{Permutation::identity(n)};
  seen.insert(std::vector<Point>(frontier[0].images().begin(), frontier[0].images().end()));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Permutation y = g * x;
        std::vector<Point> key(y.images().begin(), y.images().end());
        if (seen.insert(key).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

inline Rational support_sum(const std::vector<Permutation>& gens) {
  Rational total = 0;
  for (const auto& g : gens) total += support(g).measure;
  return total;
}

}  // namespace orbitlab::testing

#endif  // ORBITLAB_TESTS_TEST_SUPPORT_HPP
