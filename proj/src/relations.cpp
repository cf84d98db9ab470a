#include "orbitlab/relations.hpp"

#include <algorithm>
#include <numeric>

#include "orbitlab/union_find.hpp"

namespace orbitlab {

namespace {

constexpr const char* kModule = "relations";

std::string describe(const PointSet& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(points[i]);
  }
  return out + "}";
}

void require_sorted_set(const PointSet& points, std::size_t n, const char* name) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= n) {
      throw Error(kModule, std::string(name) + " contains out-of-range point " +
                               std::to_string(points[i]));
    }
    if (i > 0 && points[i - 1] >= points[i]) {
      throw Error(kModule, std::string(name) + " must be sorted without repeats");
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition Partition::singletons(std::size_t n) {
  std::vector<Point> ids(n);
  std::iota(ids.begin(), ids.end(), Point{0});
  return Partition(std::move(ids));
}

Partition Partition::single_class(std::size_t n) { return Partition(std::vector<Point>(n, 0)); }

Partition Partition::from_classes(std::size_t n, const std::vector<PointSet>& classes) {
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> ids(n, kUnset);
  for (const PointSet& cls : classes) {
    if (cls.empty()) throw Error(kModule, "empty class");
    const Point rep = *std::min_element(cls.begin(), cls.end());
    for (Point x : cls) {
      if (x >= n) throw Error(kModule, "class point " + std::to_string(x) + " out of range");
      if (ids[x] != kUnset) throw Error(kModule, "point " + std::to_string(x) + " in two classes");
      ids[x] = rep;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (ids[x] == kUnset) throw Error(kModule, "point " + std::to_string(x) + " in no class");
  }
  return Partition(std::move(ids));
}

Partition Partition::from_labels(std::span<const Point> labels) {
  const std::size_t n = labels.size();
  UnionFind uf(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (labels[x] >= n) throw Error(kModule, "label out of range");
    uf.unite(static_cast<Point>(x), labels[x]);
  }
  return Partition(uf.labels());
}

std::size_t Partition::num_classes() const {
  std::size_t count = 0;
  for (std::size_t x = 0; x < class_id_.size(); ++x) {
    if (class_id_[x] == x) ++count;
  }
  return count;
}

std::vector<PointSet> Partition::classes() const {
  std::vector<PointSet> by_rep(class_id_.size());
  for (std::size_t x = 0; x < class_id_.size(); ++x) {
    by_rep[class_id_[x]].push_back(static_cast<Point>(x));
  }
  std::vector<PointSet> out;
  for (auto& cls : by_rep) {
    if (!cls.empty()) out.push_back(std::move(cls));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graphing

Graphing::Graphing(std::size_t n, std::vector<PartialInjection> maps) : n_(n) {
  for (auto& phi : maps) add(std::move(phi));
}

void Graphing::add(PartialInjection phi) {
  require_same_size(kModule, n_, phi.space_size());
  maps_.push_back(std::move(phi));
}

std::size_t Graphing::total_pairs() const {
  std::size_t total = 0;
  for (const auto& phi : maps_) total += phi.size();
  return total;
}

Partition generate_relation(const Graphing& graphing) {
  UnionFind uf(graphing.space_size());
  for (const auto& phi : graphing.maps()) {
    for (const auto& [x, y] : phi.pairs()) uf.unite(x, y);
  }
  return Partition::from_labels(uf.labels());
}

Rational cost_graphing(const Graphing& graphing) {
  return Rational(graphing.total_pairs(), graphing.space_size());
}

Rational cost_relation(const Partition& relation) {
  return Rational(relation.size() - relation.num_classes(), relation.size());
}

Partition join(std::span<const Partition> relations) {
  if (relations.empty()) throw Error(kModule, "join of an empty family");
  const std::size_t n = relations.front().size();
  UnionFind uf(n);
  for (const Partition& r : relations) {
    require_same_size(kModule, n, r.size());
    for (Point x = 0; x < n; ++x) uf.unite(x, r.class_of(x));
  }
  return Partition::from_labels(uf.labels());
}

bool is_ergodic(const Partition& relation) { return relation.num_classes() == 1; }

PartialInjection isopar_witness(const Partition& relation, const PointSet& a, const PointSet& b) {
  const std::size_t n = relation.size();
  require_sorted_set(a, n, "domain set");
  require_sorted_set(b, n, "range set");
  if (a.size() != b.size()) {
    throw Error(kModule, "sets of different measure (|A|=" + std::to_string(a.size()) +
                             ", |B|=" + std::to_string(b.size()) + ")");
  }
  // Per class, the sorted members of A and of B.
  std::vector<PointSet> a_by_class(n);
  std::vector<PointSet> b_by_class(n);
  for (Point x : a) a_by_class[relation.class_of(x)].push_back(x);
  for (Point y : b) b_by_class[relation.class_of(y)].push_back(y);

  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(a.size());
  for (std::size_t rep = 0; rep < n; ++rep) {
    const PointSet& from = a_by_class[rep];
    const PointSet& to = b_by_class[rep];
    if (from.size() != to.size()) {
      PointSet cls;
      for (Point x = 0; x < n; ++x) {
        if (relation.class_of(x) == rep) cls.push_back(x);
      }
      throw Error(kModule, "class " + describe(cls) + " meets A in " +
                               std::to_string(from.size()) + " points but B in " +
                               std::to_string(to.size()));
    }
    for (std::size_t k = 0; k < from.size(); ++k) pairs.emplace_back(from[k], to[k]);
  }
  return PartialInjection(n, std::move(pairs));
}

bool in_full_group(const Permutation& t, const Partition& relation) {
  require_same_size(kModule, t.size(), relation.size());
  for (Point x = 0; x < t.size(); ++x) {
    if (!relation.related(x, t(x))) return false;
  }
  return true;
}

bool in_pseudo_full_group(const PartialInjection& phi, const Partition& relation) {
  require_same_size(kModule, phi.space_size(), relation.size());
  return std::all_of(phi.pairs().begin(), phi.pairs().end(),
                     [&](const auto& pr) { return relation.related(pr.first, pr.second); });
}

Natural factorial(std::size_t k) {
  Natural out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= i;
  return out;
}

Natural full_group_order(const Partition& relation) {
  Natural order = 1;
  for (const auto& cls : relation.classes()) order *= factorial(cls.size());
  return order;
}

std::vector<Permutation> full_group_generators(const Partition& relation) {
  const std::size_t n = relation.size();
  std::vector<Permutation> gens;
  for (const auto& cls : relation.classes()) {
    if (cls.size() < 2) continue;
    gens.push_back(Permutation::from_cycles(n, {cls}));
    if (cls.size() > 2) gens.push_back(Permutation::from_cycles(n, {{cls[0], cls[1]}}));
  }
  return gens;
}

}  // namespace orbitlab
