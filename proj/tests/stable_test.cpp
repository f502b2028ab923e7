#include "csf/stable.hpp"

#include <set>

#include "doctest.h"

#include "csf/error.hpp"
#include "csf/samplers.hpp"
#include "oracles.hpp"

using namespace csf;

TEST_CASE("stable sets") {
  const Graph claw = gen_claw();
  CHECK(is_stable_set(claw, 0b1110));
  CHECK(is_stable_set(claw, 0b0001));
  CHECK_FALSE(is_stable_set(claw, 0b0011));
  CHECK(is_stable_set(claw, 0));
  CHECK_THROWS_AS(is_stable_set(claw, 0b10000), Error);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_stable_partitions(gen_empty(3)).size() == 5);
  CHECK(enumerate_stable_partitions(gen_complete(3)).size() == 1);
  const auto claw = enumerate_stable_partitions(gen_claw());
  CHECK(claw.size() == 5);
  CHECK(count_types(gen_claw()) == TypeCounts{{{1, 1, 1, 1}, 1}, {{2, 1, 1}, 3}, {{3, 1}, 1}});
  CHECK(count_types(gen_complete(2)) == TypeCounts{{{1, 1}, 1}});
  CHECK(count_types(gen_cycle(5)).at({2, 2, 1}) == 5);
}

TEST_CASE("each stable partition appears once, in canonical block order") {
  Rng rng(3);
  for (int s = 0; s < 30; ++s) {
    const Graph g = random_graph(1 + static_cast<unsigned>(uniform_below(rng, 7)), 40, rng);
    const auto all = enumerate_stable_partitions(g);
    std::set<StablePartition> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    for (const auto& p : all) {
      CHECK(is_stable_partition_of(g, p.blocks()));
      for (std::size_t k = 1; k < p.blocks().size(); ++k) {
        const auto a = p.blocks()[k - 1], b = p.blocks()[k];
        CHECK((set_size(a) > set_size(b) || (set_size(a) == set_size(b) && lowest_vertex(a) < lowest_vertex(b))));
      }
    }
  }
}

TEST_CASE("empty graphs give Bell numbers") {
  for (unsigned d = 1; d <= 8; ++d) {
    std::uint64_t total = 0;
    for (const auto& [type, count] : count_types(gen_empty(d))) total += count;
    CHECK(total == oracle::bell(d));
  }
}

TEST_CASE("type counts match restricted-growth-string brute force") {
  Rng rng(11);
  for (int s = 0; s < 60; ++s) {
    const unsigned d = 1 + static_cast<unsigned>(uniform_below(rng, 8));
    const Graph g = random_graph(d, static_cast<unsigned>(uniform_below(rng, 101)), rng);
    const auto counts = count_types(g);
    CHECK(counts == oracle::stable_type_counts(g));
    CHECK(counts == serial::count_types(g));
    std::uint64_t total = 0;
    for (const auto& [type, count] : counts) total += count;
    CHECK(total == enumerate_stable_partitions(g).size());
  }
}

TEST_CASE("parallel and serial kernels agree on larger graphs") {
  for (const auto& g : {gen_squid(4), incomparability_graph(gen_boolean_lattice(3)), gen_cycle(11), gen_path(10)}) {
    CHECK(count_types(g) == serial::count_types(g));
    for (const auto& [type, count] : semi_ordered_counts(g)) {
      CHECK(count_of_type(g, type) == count);
      CHECK(serial::count_of_type(g, type) == count);
    }
  }
}

TEST_CASE("semi-ordered counts") {
  CHECK(semi_ordered_counts(gen_claw()) == TypeCounts{{{1, 1, 1, 1}, 24}, {{2, 1, 1}, 6}, {{3, 1}, 1}});
  CHECK(semi_ordered_counts(gen_complete(2)) == TypeCounts{{{1, 1}, 2}});
  Rng rng(5);
  for (int s = 0; s < 20; ++s) {
    const Graph g = random_graph(1 + static_cast<unsigned>(uniform_below(rng, 7)), 30, rng);
    const auto a = count_types(g);
    for (const auto& [type, count] : semi_ordered_counts(g)) CHECK(count == a.at(type) * multiplicity_factorial(type));
  }
}

TEST_CASE("semi-ordered arrangements distinguish equal-size blocks") {
  // {{2,3},{4,5},{1}} on vertices 1..5, stored as 0..4
  const StablePartition p({0b00110, 0b11000, 0b00001});
  const auto arrangements = semi_ordered_arrangements(p);
  REQUIRE(arrangements.size() == 2);
  CHECK(arrangements[0] != arrangements[1]);
  for (const auto& a : arrangements) CHECK(a.type() == Partition{2, 2, 1});
  CHECK(semi_ordered_arrangements(StablePartition({0b1, 0b10, 0b100, 0b1000})).size() == 24);
}

TEST_CASE("count_of_type examples") {
  const Graph sq3 = gen_squid(3);
  CHECK(count_of_type(sq3, {3, 3, 2}) == 24);
  CHECK(count_of_type(sq3, {4, 2, 2}) == 32);
  CHECK(count_of_type(gen_complete(3), {2, 1}) == 0);
  CHECK_THROWS_AS(count_of_type(sq3, {3, 3}), Error);
}

TEST_CASE("count_of_type agrees with full counts for graphs up to 9 vertices") {
  Rng rng(21);
  for (int s = 0; s < 25; ++s) {
    const unsigned d = 5 + static_cast<unsigned>(uniform_below(rng, 5));
    const Graph g = random_graph(d, 20 + static_cast<unsigned>(uniform_below(rng, 60)), rng);
    const auto counts = semi_ordered_counts(g);
    for (const auto& lambda : partitions_of(d)) {
      const auto it = counts.find(lambda);
      CHECK(count_of_type(g, lambda) == (it == counts.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("stable_partitions_of_type filters the full enumeration") {
  const Graph g = gen_squid(3);
  for (const auto& lambda : partitions_of(8)) {
    std::set<StablePartition> expected;
    for (const auto& p : enumerate_stable_partitions(g))
      if (p.type() == lambda) expected.insert(p);
    const auto got = stable_partitions_of_type(g, lambda);
    CHECK(std::set<StablePartition>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
  }
}

TEST_CASE("has_type") {
  CHECK(has_type(gen_squid(3), {5, 2, 1}));
  CHECK_FALSE(has_type(gen_cycle(5), {3, 2}));
  for (unsigned d = 1; d <= 9; ++d) CHECK(has_type(gen_complete(d), Partition(std::vector<Partition::Part>(d, 1))));
  const auto witness = find_stable_partition_of_type(gen_squid(6), {11, 5, 1});
  REQUIRE(witness);
  CHECK(is_stable_partition_of(gen_squid(6), witness->blocks()));
}

TEST_CASE("squid: the block containing u has at most n-1 vertices") {
  for (unsigned n : {3u, 4u}) {
    std::uint64_t seen = 0;
    for_each_stable_partition(gen_squid(n), [&](std::span<const VertexSet> blocks) {
      ++seen;
      for (auto b : blocks)
        if (b & 1u) CHECK(set_size(b) <= n - 1);
    });
    CHECK(seen > 0);
  }
}

TEST_CASE("overflowing counts raise CountOverflow") {
  // 21! exceeds 2^64
  CHECK_THROWS_WITH_AS(count_of_type(gen_empty(21), Partition(std::vector<Partition::Part>(21, 1))),
                       doctest::Contains("CountOverflow"), Error);
  CHECK(count_of_type(gen_empty(20), Partition(std::vector<Partition::Part>(20, 1))) == 2432902008176640000ull);
}
