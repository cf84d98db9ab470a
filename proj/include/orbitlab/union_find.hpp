#ifndef ORBITLAB_UNION_FIND_HPP
#define ORBITLAB_UNION_FIND_HPP

#include <cstddef>
#include <numeric>
#include <vector>

#include "orbitlab/core.hpp"

namespace orbitlab {

// Disjoint sets whose root is always the smallest member, so find() yields
// the canonical class label directly.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Point{0});
  }

  Point find(Point x) {
    Point root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const Point next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns true when two classes merged.
  bool unite(Point x, Point y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[y] = x;
    return true;
  }

  std::vector<Point> labels() {
    std::vector<Point> out(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) out[i] = find(static_cast<Point>(i));
    return out;
  }

 private:
  std::vector<Point> parent_;
};

}  // namespace orbitlab

#endif  // ORBITLAB_UNION_FIND_HPP
