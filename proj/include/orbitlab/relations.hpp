#ifndef ORBITLAB_RELATIONS_HPP
#define ORBITLAB_RELATIONS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "orbitlab/core.hpp"

namespace orbitlab {

// An equivalence relation on {0,...,N-1}. Every point is labelled by the
// smallest member of its class, so two partitions are equal iff their label
// arrays are.
class Partition {
 public:
  Partition() = default;
  static Partition singletons(std::size_t n);
  static Partition single_class(std::size_t n);
  // Classes must cover every point exactly once.
  static Partition from_classes(std::size_t n, const std::vector<PointSet>& classes);
  // Any array of representatives; normalized to smallest-member labels.
  static Partition from_labels(std::span<const Point> labels);

  std::size_t size() const { return class_id_.size(); }
  Point class_of(Point x) const { return class_id_[x]; }
  bool related(Point x, Point y) const { return class_id_[x] == class_id_[y]; }
  std::span<const Point> labels() const { return class_id_; }

  std::size_t num_classes() const;
  // Sorted classes, each sorted.
  std::vector<PointSet> classes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<Point> class_id) : class_id_(std::move(class_id)) {}
  std::vector<Point> class_id_;
};

class Graphing {
 public:
  Graphing() = default;
  explicit Graphing(std::size_t n) : n_(n) {}
  Graphing(std::size_t n, std::vector<PartialInjection> maps);

  std::size_t space_size() const { return n_; }
  const std::vector<PartialInjection>& maps() const { return maps_; }
  void add(PartialInjection phi);
  std::size_t total_pairs() const;

  friend bool operator==(const Graphing&, const Graphing&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PartialInjection> maps_;
};

Partition generate_relation(const Graphing& graphing);
Rational cost_graphing(const Graphing& graphing);
// (N - #classes)/N: a spanning forest is the cheapest generating graphing.
Rational cost_relation(const Partition& relation);
Partition join(std::span<const Partition> relations);
bool is_ergodic(const Partition& relation);

// A class-preserving bijection from `a` onto `b`, matching the k-th smallest
// point of a∩C with the k-th smallest point of b∩C inside each class C.
PartialInjection isopar_witness(const Partition& relation, const PointSet& a, const PointSet& b);

bool in_full_group(const Permutation& t, const Partition& relation);
bool in_pseudo_full_group(const PartialInjection& phi, const Partition& relation);
Natural full_group_order(const Partition& relation);
// For each class of size >= 2 (in class order): the cycle through its sorted
// points, then the transposition of its two smallest points when the class
// has at least three points.
std::vector<Permutation> full_group_generators(const Partition& relation);

Natural factorial(std::size_t k);

}  // namespace orbitlab

#endif  // ORBITLAB_RELATIONS_HPP
