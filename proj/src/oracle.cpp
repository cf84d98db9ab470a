#include "orbitlab/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "orbitlab/group.hpp"
#include "orbitlab/union_find.hpp"

namespace orbitlab {

namespace {

constexpr const char* kModule = "oracle";

// Splits [0, count) into contiguous chunks, runs `work(begin, end)` on each
// (possibly on several threads) and folds the chunk results in index order.
template <class Result, class Work, class Merge>
Result parallel_reduce(std::size_t count, Work work, Merge merge) {
  const std::size_t threads = std::min(oracle_threads(), std::max<std::size_t>(count, 1));
  std::vector<Result> partial(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / std::max<std::size_t>(threads, 1);
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(count, t * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    if (threads == 1) {
      partial[t] = work(begin, end);
    } else {
      pool.emplace_back([&, t, begin, end] { partial[t] = work(begin, end); });
    }
  }
  for (auto& th : pool) th.join();
  Result out = std::move(partial.front());
  for (std::size_t t = 1; t < threads; ++t) out = merge(std::move(out), std::move(partial[t]));
  return out;
}

void require_at_most(const Partition& relation, std::size_t cap, const char* search) {
  if (relation.size() > cap) {
    throw Error(kModule, std::string(search) + " is exhaustive only up to N = " +
                             std::to_string(cap) + " (got N = " + std::to_string(relation.size()) +
                             ")");
  }
}

Natural power(std::size_t base, std::size_t exponent) {
  Natural out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

// A candidate tuple: the first entry indexes the representatives, the rest
// index the full element list.
struct Candidate {
  std::size_t value = 0;
  std::vector<std::size_t> tuple;  // empty: none found
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.tuple.empty()) return false;
  if (b.tuple.empty()) return true;
  if (a.value != b.value) return a.value < b.value;
  return a.tuple < b.tuple;
}

Candidate pick(Candidate a, Candidate b) { return better(b, a) ? std::move(b) : std::move(a); }

struct TupleSpace {
  std::size_t n;
  std::vector<Permutation> elements;
  std::vector<Permutation> reps;
  std::vector<std::size_t> support_size;  // per element
  std::vector<std::size_t> rep_support_size;
  Natural target_order;

  std::vector<Permutation> materialize(const std::vector<std::size_t>& tuple) const {
    std::vector<Permutation> out{reps[tuple[0]]};
    for (std::size_t k = 1; k < tuple.size(); ++k) out.push_back(elements[tuple[k]]);
    return out;
  }

  bool generates(const std::vector<std::size_t>& tuple) const {
    const auto gens = materialize(tuple);
    return group_from_generators(n, gens).order() == target_order;
  }
};

TupleSpace make_tuple_space(const Partition& relation) {
  TupleSpace space;
  space.n = relation.size();
  space.elements = enumerate_full_group(relation);
  space.reps = conjugacy_representatives(space.elements);
  for (const auto& e : space.elements) space.support_size.push_back(support(e).points.size());
  for (const auto& r : space.reps) space.rep_support_size.push_back(support(r).points.size());
  space.target_order = full_group_order(relation);
  return space;
}

// Walks tuples whose first entry is a representative in [rep_begin, rep_end)
// in lexicographic order, calling visit(tuple, support_sum) until it returns
// false.
template <class Visit>
void for_each_tuple(const TupleSpace& space, std::size_t t, std::size_t rep_begin,
                    std::size_t rep_end, Visit visit) {
  std::vector<std::size_t> tuple(t, 0);
  for (std::size_t r = rep_begin; r < rep_end; ++r) {
    tuple[0] = r;
    std::fill(tuple.begin() + 1, tuple.end(), 0);
    while (true) {
      std::size_t sum = space.rep_support_size[r];
      for (std::size_t k = 1; k < t; ++k) sum += space.support_size[tuple[k]];
      if (!visit(tuple, sum)) return;
      std::size_t k = t;
      while (k > 1 && ++tuple[k - 1] == space.elements.size()) tuple[--k] = 0;
      if (k <= 1) break;
    }
  }
}

}  // namespace

std::size_t oracle_threads() {
  if (const char* env = std::getenv("ORBITLAB_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<Permutation> enumerate_full_group(const Partition& relation) {
  std::vector<Point> images(relation.size());
  for (Point x = 0; x < images.size(); ++x) images[x] = x;
  std::vector<Permutation> out;
  do {
    bool inside = true;
    for (Point x = 0; x < images.size() && inside; ++x) inside = relation.related(x, images[x]);
    if (inside) out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<Permutation> conjugacy_representatives(const std::vector<Permutation>& elements) {
  std::vector<Permutation> reps;
  for (const auto& t : elements) {
    bool least = true;
    for (const auto& g : elements) {
      if (g * t * g.inverse() < t) {
        least = false;
        break;
      }
    }
    if (least) reps.push_back(t);
  }
  return reps;
}

CostSearchResult brute_min_graphing_cost(const Partition& relation) {
  require_at_most(relation, kMaxCostSearchPoints, "graphing-cost search");
  const std::size_t n = relation.size();
  std::vector<std::pair<Point, Point>> edges;
  for (Point x = 0; x < n; ++x) {
    for (Point y = x + 1; y < n; ++y) edges.emplace_back(x, y);
  }
  const std::size_t masks = std::size_t{1} << edges.size();
  const std::vector<Point> want(relation.labels().begin(), relation.labels().end());

  struct Best {
    std::size_t edges = ~std::size_t{0};
    std::size_t mask = 0;
  };
  auto work = [&](std::size_t begin, std::size_t end) {
    Best best;
    for (std::size_t mask = begin; mask < end; ++mask) {
      const auto count = static_cast<std::size_t>(__builtin_popcountll(mask));
      if (count >= best.edges) continue;
      UnionFind uf(n);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (mask >> e & 1U) uf.unite(edges[e].first, edges[e].second);
      }
      if (uf.labels() == want) best = {count, mask};
    }
    return best;
  };
  auto merge = [](Best a, Best b) {
    return (b.edges < a.edges || (b.edges == a.edges && b.mask < a.mask)) ? b : a;
  };
  const Best best = parallel_reduce<Best>(masks, work, merge);

  CostSearchResult result;
  result.search_space_size = Natural(masks);
  result.exhaustive = true;
  result.witness = Graphing(n);
  if (best.edges != ~std::size_t{0}) {
    result.optimum = Rational(best.edges, n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (best.mask >> e & 1U) result.witness.add(PartialInjection(n, {edges[e]}));
    }
  }
  return result;
}

GeneratorSearchResult brute_min_generators(const Partition& relation) {
  require_at_most(relation, kMaxGeneratorSearchPoints, "generator-count search");
  GeneratorSearchResult result;
  result.exhaustive = true;
  const TupleSpace space = make_tuple_space(relation);
  result.search_space_size = 1;  // the empty tuple
  if (space.target_order == 1) {
    result.optimum = 0;
    return result;
  }
  // Every full group of degree <= 5 is 2-generated; the bound only guards
  // against a runaway loop.
  for (std::size_t t = 1; t <= relation.size(); ++t) {
    result.search_space_size += Natural(space.reps.size()) * power(space.elements.size(), t - 1);
    auto work = [&](std::size_t begin, std::size_t end) {
      Candidate found;
      for_each_tuple(space, t, begin, end, [&](const std::vector<std::size_t>& tuple, std::size_t) {
        if (!space.generates(tuple)) return true;
        found = {t, tuple};
        return false;
      });
      return found;
    };
    const Candidate best = parallel_reduce<Candidate>(space.reps.size(), work, pick);
    if (!best.tuple.empty()) {
      result.optimum = t;
      result.witness = space.materialize(best.tuple);
      return result;
    }
  }
  throw Error(kModule, "no generating tuple found up to t = N");
}

SupportSearchResult brute_min_generating_support(const Partition& relation, std::size_t t) {
  require_at_most(relation, kMaxGeneratorSearchPoints, "support search");
  if (t > kMaxSupportSearchTuple) {
    throw Error(kModule, "support search is exhaustive only up to t = " +
                             std::to_string(kMaxSupportSearchTuple) + " (got t = " +
                             std::to_string(t) + ")");
  }
  const std::size_t n = relation.size();
  SupportSearchResult result;
  result.exhaustive = true;
  result.tuple_size = t;
  result.relation_cost = cost_relation(relation);
  const TupleSpace space = make_tuple_space(relation);

  if (t == 0) {
    result.search_space_size = 1;
    if (space.target_order == 1) result.optimum = Rational(0);
  } else {
    result.search_space_size = Natural(space.reps.size()) * power(space.elements.size(), t - 1);
    auto work = [&](std::size_t begin, std::size_t end) {
      Candidate best;
      for_each_tuple(space, t, begin, end, [&](const std::vector<std::size_t>& tuple, std::size_t sum) {
        // Lexicographic walk: an equal sum found later never wins the tie.
        if (!best.tuple.empty() && sum >= best.value) return true;
        if (space.generates(tuple)) best = {sum, tuple};
        return true;
      });
      return best;
    };
    const Candidate best = parallel_reduce<Candidate>(space.reps.size(), work, pick);
    if (!best.tuple.empty()) {
      result.optimum = Rational(best.value, n);
      result.witness = space.materialize(best.tuple);
    }
  }
  if (result.optimum) result.gap = *result.optimum - result.relation_cost;
  return result;
}

namespace {

Json common_fields(const Natural& space, bool exhaustive) {
  Json j;
  j["search_space_size"] = decimal_string(space);
  j["exhaustive"] = exhaustive;
  return j;
}

}  // namespace

Json to_json(const CostSearchResult& result) {
  Json j;
  j["feasible"] = result.optimum.has_value();
  j["optimum"] = result.optimum ? Json(to_string(*result.optimum)) : Json(nullptr);
  j["witness"] = to_json(result.witness);
  j.update(common_fields(result.search_space_size, result.exhaustive));
  return j;
}

Json to_json(const GeneratorSearchResult& result) {
  Json j;
  j["feasible"] = result.optimum.has_value();
  j["optimum"] = result.optimum ? Json(*result.optimum) : Json(nullptr);
  j["witness"] = to_json(result.witness);
  j.update(common_fields(result.search_space_size, result.exhaustive));
  return j;
}

Json to_json(const SupportSearchResult& result) {
  Json j;
  j["t"] = result.tuple_size;
  j["feasible"] = result.optimum.has_value();
  j["optimum"] = result.optimum ? Json(to_string(*result.optimum)) : Json(nullptr);
  j["witness"] = to_json(result.witness);
  j["relation_cost"] = to_string(result.relation_cost);
  j["gap"] = result.gap ? Json(to_string(*result.gap)) : Json(nullptr);
  j["strict_gap"] = result.gap && *result.gap > 0;
  j.update(common_fields(result.search_space_size, result.exhaustive));
  return j;
}

}  // namespace orbitlab
