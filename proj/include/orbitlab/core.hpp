#ifndef ORBITLAB_CORE_HPP
#define ORBITLAB_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitlab {

using Point = std::uint32_t;
using PointSet = std::vector<Point>;  // always sorted, no duplicates
using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Every failure raised by the library carries a module prefix, e.g.
// "cycles: chaining violation at i=1".
class Error : public std::runtime_error {
 public:
  Error(const std::string& module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(module) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

// "num/den" with den > 0, e.g. "0/1", "5/4".
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// N atoms of measure 1/N each.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::size_t n_points);
  std::size_t size() const { return n_; }
  Rational measure(std::size_t count) const { return Rational(count, n_); }
  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::size_t n_;
};

void require_same_size(const char* module, std::size_t lhs, std::size_t rhs);

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t n);
  // Throws unless `images` is a bijection of {0,...,n-1}.
  static Permutation from_images(std::vector<Point> images);
  // Disjoint cycles in the usual notation, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t size() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  // (a * b)(x) = a(b(x))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic over image arrays.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  std::string to_cycle_string() const;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}
  std::vector<Point> images_;
};

// A bijection between two subsets of {0,...,n-1}; pairs sorted by source.
class PartialInjection {
 public:
  PartialInjection() = default;
  explicit PartialInjection(std::size_t n) : n_(n) {}
  // Throws on repeated sources/targets or out-of-range points.
  PartialInjection(std::size_t n, std::vector<std::pair<Point, Point>> pairs);

  static PartialInjection identity_on(std::size_t n, const PointSet& points);
  // The full graph of a permutation.
  static PartialInjection from_permutation(const Permutation& t);

  std::size_t space_size() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<std::pair<Point, Point>>& pairs() const { return pairs_; }

  PointSet domain() const;
  PointSet range() const;
  Rational measure() const { return Rational(pairs_.size(), n_); }
  std::optional<Point> operator()(Point x) const;

  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Point, Point>> pairs_;
};

// Defined on inner^{-1}(dom outer ∩ rng inner); x -> outer(inner(x)).
PartialInjection compose(const PartialInjection& outer, const PartialInjection& inner);
PartialInjection inverse(const PartialInjection& phi);

Rational uniform_distance(const Permutation& t, const Permutation& u);

struct Support {
  PointSet points;
  Rational measure;
};
Support support(const Permutation& t);

bool is_subset(const PointSet& a, const PointSet& b);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);

}  // namespace orbitlab

#endif  // ORBITLAB_CORE_HPP
