#ifndef ORBITLAB_ORACLE_HPP
#define ORBITLAB_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitlab/core.hpp"
#include "orbitlab/json_io.hpp"
#include "orbitlab/relations.hpp"

namespace orbitlab {

// Exhaustive ground truth at tiny N. Every search refuses inputs above its
// size cap instead of sampling, so `exhaustive` is always true on return.
// Ties go to the lexicographically first witness; parallel and serial runs
// agree exactly.

inline constexpr std::size_t kMaxCostSearchPoints = 6;
inline constexpr std::size_t kMaxGeneratorSearchPoints = 5;
inline constexpr std::size_t kMaxSupportSearchTuple = 2;

template <class Value, class Witness>
struct SearchResult {
  std::optional<Value> optimum;  // nullopt when no candidate qualifies
  Witness witness{};
  Natural search_space_size = 0;
  bool exhaustive = false;
};

// Witness: a graphing of single-pair maps (one edge each).
using CostSearchResult = SearchResult<Rational, Graphing>;
using GeneratorSearchResult = SearchResult<std::size_t, std::vector<Permutation>>;

struct SupportSearchResult : SearchResult<Rational, std::vector<Permutation>> {
  std::size_t tuple_size = 0;
  Rational relation_cost;
  std::optional<Rational> gap;  // optimum - relation_cost
};

// Minimum cost over every edge-set graphing on N points that generates R.
// Orientation and bundling of edges into larger maps change neither the
// generated relation nor the cost.
CostSearchResult brute_min_graphing_cost(const Partition& relation);

// Least t such that some t-tuple in [R] generates [R].
GeneratorSearchResult brute_min_generators(const Partition& relation);

// Least sum of d_u(T_i, id) over generating t-tuples of [R].
SupportSearchResult brute_min_generating_support(const Partition& relation, std::size_t t);

// Elements of [R] in lexicographic order of their image arrays.
std::vector<Permutation> enumerate_full_group(const Partition& relation);

// The lexicographically least element of each conjugacy class of the group
// `elements`. A generating tuple of [R] can always be conjugated inside [R]
// so that its first entry is one of these, without changing supports.
std::vector<Permutation> conjugacy_representatives(const std::vector<Permutation>& elements);

// ORBITLAB_THREADS when set to a positive integer, else hardware concurrency.
std::size_t oracle_threads();

Json to_json(const CostSearchResult& result);
Json to_json(const GeneratorSearchResult& result);
Json to_json(const SupportSearchResult& result);

}  // namespace orbitlab

#endif  // ORBITLAB_ORACLE_HPP
