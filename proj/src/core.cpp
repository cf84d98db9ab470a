#include "orbitlab/core.hpp"

#include <algorithm>
#include <sstream>

namespace orbitlab {

namespace {

constexpr const char* kModule = "core";

}  // namespace

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(q) << '/'
      << boost::multiprecision::denominator(q);
  return out.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Natural(text));
    Natural num(text.substr(0, slash));
    Natural den(text.substr(slash + 1));
    if (den == 0) throw Error(kModule, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    throw Error(kModule, "malformed rational '" + text + "'");
  }
}

FiniteSpace::FiniteSpace(std::size_t n_points) : n_(n_points) {
  if (n_points == 0) throw Error(kModule, "a finite space needs at least one point");
}

void require_same_size(const char* module, std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) {
    throw Error(module, "mismatched space sizes (" + std::to_string(lhs) + " vs " +
                            std::to_string(rhs) + ")");
  }
}

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Point y = images[i];
    if (y >= images.size()) {
      throw Error(kModule, "image " + std::to_string(y) + " of point " + std::to_string(i) +
                               " is out of range");
    }
    if (hit[y]) throw Error(kModule, "point " + std::to_string(y) + " is hit twice");
    hit[y] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images = identity(n).images_;
  std::vector<bool> seen(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Point x = cycle[k];
      if (x >= n) throw Error(kModule, "cycle point " + std::to_string(x) + " out of range");
      if (seen[x]) throw Error(kModule, "cycles are not disjoint at " + std::to_string(x));
      seen[x] = true;
      images[x] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(size());
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  require_same_size(kModule, a.size(), b.size());
  std::vector<Point> images(a.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
  return Permutation(std::move(images));
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(size(), false);
  bool any = false;
  for (Point start = 0; start < size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    Point x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

// ---------------------------------------------------------------------------
// PartialInjection

PartialInjection::PartialInjection(std::size_t n, std::vector<std::pair<Point, Point>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<bool> source_seen(n, false);
  std::vector<bool> target_seen(n, false);
  for (const auto& [a, b] : pairs_) {
    if (a >= n || b >= n) {
      throw Error(kModule, "pair " + std::to_string(a) + "->" + std::to_string(b) +
                               " leaves the space of size " + std::to_string(n));
    }
    if (source_seen[a]) throw Error(kModule, "source " + std::to_string(a) + " repeated");
    if (target_seen[b]) throw Error(kModule, "target " + std::to_string(b) + " repeated");
    source_seen[a] = true;
    target_seen[b] = true;
  }
}

PartialInjection PartialInjection::identity_on(std::size_t n, const PointSet& points) {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(points.size());
  for (Point x : points) pairs.emplace_back(x, x);
  return PartialInjection(n, std::move(pairs));
}

PartialInjection PartialInjection::from_permutation(const Permutation& t) {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(t.size());
  for (Point x = 0; x < t.size(); ++x) pairs.emplace_back(x, t(x));
  return PartialInjection(t.size(), std::move(pairs));
}

PointSet PartialInjection::domain() const {
  PointSet out;
  out.reserve(pairs_.size());
  for (const auto& pr : pairs_) out.push_back(pr.first);
  return out;
}

PointSet PartialInjection::range() const {
  PointSet out;
  out.reserve(pairs_.size());
  for (const auto& pr : pairs_) out.push_back(pr.second);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Point> PartialInjection::operator()(Point x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(x, Point{0}));
  if (it != pairs_.end() && it->first == x) return it->second;
  return std::nullopt;
}

std::string PartialInjection::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) out << ", ";
    out << pairs_[i].first << "->" << pairs_[i].second;
  }
  out << '}';
  return out.str();
}

PartialInjection compose(const PartialInjection& outer, const PartialInjection& inner) {
  require_same_size(kModule, outer.space_size(), inner.space_size());
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& [x, y] : inner.pairs()) {
    if (auto z = outer(y)) pairs.emplace_back(x, *z);
  }
  return PartialInjection(inner.space_size(), std::move(pairs));
}

PartialInjection inverse(const PartialInjection& phi) {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(phi.size());
  for (const auto& [x, y] : phi.pairs()) pairs.emplace_back(y, x);
  return PartialInjection(phi.space_size(), std::move(pairs));
}

Rational uniform_distance(const Permutation& t, const Permutation& u) {
  require_same_size(kModule, t.size(), u.size());
  std::size_t moved = 0;
  for (Point x = 0; x < t.size(); ++x) {
    if (t(x) != u(x)) ++moved;
  }
  return Rational(moved, t.size());
}

Support support(const Permutation& t) {
  Support s;
  for (Point x = 0; x < t.size(); ++x) {
    if (t(x) != x) s.points.push_back(x);
  }
  s.measure = Rational(s.points.size(), t.size());
  return s;
}

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace orbitlab
