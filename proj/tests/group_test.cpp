#include "orbitlab/group.hpp"

#include <gtest/gtest.h>

#include "support/test_support.hpp"

namespace orbitlab {
namespace {

using testing::Rng;

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) {
  return Permutation::from_cycles(n, cycles);
}

TEST(PermGroupTest, Orders) {
  EXPECT_EQ(group_from_generators(5, {}).order(), 1);
  const std::vector<Permutation> s4{cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})};
  EXPECT_EQ(group_from_generators(4, s4).order(), 24);
  const std::vector<Permutation> klein{cyc(4, {{0, 1}}), cyc(4, {{2, 3}})};
  EXPECT_EQ(group_from_generators(4, klein).order(), 4);
  const std::vector<Permutation> a4{cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})};
  EXPECT_EQ(group_from_generators(4, a4).order(), 12);
  EXPECT_THROW(group_from_generators(3, s4), Error);
}

TEST(PermGroupTest, Membership) {
  const std::vector<Permutation> klein{cyc(4, {{0, 1}}), cyc(4, {{2, 3}})};
  const PermGroup g = group_from_generators(4, klein);
  EXPECT_TRUE(contains(g, cyc(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(contains(g, Permutation::identity(4)));
  EXPECT_FALSE(contains(g, cyc(4, {{0, 2}})));
  const std::vector<Permutation> a4{cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})};
  EXPECT_FALSE(group_from_generators(4, a4).contains(cyc(4, {{0, 1}})));
}

TEST(PermGroupTest, LargeSymmetricGroups) {
  for (std::size_t n : {10, 40, 100}) {
    std::vector<Point> all(n);
    std::iota(all.begin(), all.end(), Point{0});
    const std::vector<Permutation> gens{Permutation::from_cycles(n, {all}),
                                        cyc(n, {{0, 1}})};
    EXPECT_EQ(group_from_generators(n, gens).order(), factorial(n)) << n;
  }
}

TEST(GeneratesFullGroupTest, Examples) {
  const auto r = Partition::single_class(3);
  const std::vector<Permutation> both{cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})};
  const auto yes = generates_full_group(both, r);
  EXPECT_TRUE(yes.in_full_group);
  EXPECT_TRUE(yes.generates);
  EXPECT_EQ(yes.generated_order, 6);
  EXPECT_TRUE(yes.reason.empty());

  const std::vector<Permutation> rotation{cyc(3, {{0, 1, 2}})};
  const auto no = generates_full_group(rotation, r);
  EXPECT_FALSE(no.generates);
  EXPECT_EQ(no.generated_order, 3);
  EXPECT_EQ(no.full_group_order, 6);
  EXPECT_FALSE(no.reason.empty());

  const auto pair = Partition::from_classes(3, {{0, 1}, {2}});
  const auto outside = generates_full_group(both, pair);
  EXPECT_FALSE(outside.in_full_group);
  EXPECT_FALSE(outside.generates);
}

TEST(CheckJoinGenerationTest, Examples) {
  const std::vector<Partition> chain{Partition::from_classes(3, {{0, 1}, {2}}),
                                     Partition::from_classes(3, {{0}, {1, 2}})};
  const auto cert = check_join_generation(chain);
  EXPECT_TRUE(cert.generates);
  EXPECT_EQ(cert.full_group_order, 6);
  const std::vector<Partition> disjoint{Partition::from_classes(4, {{0, 1}, {2}, {3}}),
                                        Partition::from_classes(4, {{0}, {1}, {2, 3}})};
  EXPECT_EQ(check_join_generation(disjoint).generated_order, 4);
  EXPECT_TRUE(check_join_generation(disjoint).generates);
}

TEST(GroupProperty, MatchesBreadthFirstClosure) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 7);
    std::vector<Permutation> gens;
    const std::size_t k = testing::uniform(rng, 0, 3);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(testing::random_permutation(rng, n));
    const PermGroup g = group_from_generators(n, gens);
    const std::size_t naive = testing::naive_closure_order(n, gens);
    EXPECT_EQ(g.order(), naive);
    // Lagrange: the order divides n!.
    EXPECT_EQ(factorial(n) % g.order(), 0);
    for (const auto& s : gens) EXPECT_TRUE(g.contains(s));
    for (const auto& s : g.strong_generators()) EXPECT_TRUE(g.contains(s));
  }
}

TEST(GroupProperty, AddingGeneratorsNeverShrinks) {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testing::uniform(rng, 2, 12);
    std::vector<Permutation> gens;
    Natural previous = 1;
    for (int k = 0; k < 3; ++k) {
      gens.push_back(testing::random_permutation(rng, n));
      const Natural order = group_from_generators(n, gens).order();
      EXPECT_EQ(order % previous, 0);
      previous = order;
    }
  }
}

TEST(GroupProperty, CanonicalGeneratorsGenerateTheJoin) {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::uniform(rng, 1, 8);
    const std::size_t k = testing::uniform(rng, 1, 4);
    std::vector<Partition> family;
    for (std::size_t i = 0; i < k; ++i) family.push_back(testing::random_partition(rng, n));
    const auto cert = check_join_generation(family);
    EXPECT_TRUE(cert.in_full_group);
    EXPECT_TRUE(cert.generates);
    EXPECT_EQ(cert.full_group_order, full_group_order(join(family)));
  }
}

}  // namespace
}  // namespace orbitlab
