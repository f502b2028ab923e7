#include "csf/injection.hpp"

#include <set>

#include "doctest.h"

#include "csf/error.hpp"
#include "csf/samplers.hpp"
#include "csf/verify.hpp"

using namespace csf;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

CoveringPair pair_of(const Partition& lambda, const Partition& mu) {
  for (const auto& c : covering_pairs(lambda.weight()))
    if (c.lambda == lambda && c.mu == mu) return c;
  FAIL("not a covering pair");
  return {};
}

std::vector<SemiOrderedStablePartition> sources(const Graph& g, const Partition& lambda) {
  std::vector<SemiOrderedStablePartition> out;
  for (const auto& p : stable_partitions_of_type(g, lambda))
    for (auto& a : semi_ordered_arrangements(p)) out.push_back(std::move(a));
  return out;
}

std::vector<Graph> random_claw_free(std::uint64_t seed, int count, unsigned min_d, unsigned max_d) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (int k = 0; k < count; ++k)
    out.push_back(random_claw_free_graph(min_d + static_cast<unsigned>(uniform_below(rng, max_d - min_d + 1)), rng));
  return out;
}

}  // namespace

TEST_CASE("word arithmetic") {
  const Word w = Word::parse("1211");
  CHECK(w.prefix_differences() == std::vector<int>{1, 0, 1, 2});
  CHECK(w.first_max() == 3);
  CHECK(w.last_max() == 3);
  const Word v = Word::parse("1212");
  CHECK(v.prefix_differences() == std::vector<int>{1, 0, 1, 0});
  CHECK(v.first_max() == 0);
  CHECK(v.last_max() == 2);
  CHECK(v.to_string() == "1212");
  CHECK(code_of([] { Word().first_max(); }) == ErrorCode::EmptyWord);
  CHECK(code_of([] { Word().last_max(); }) == ErrorCode::EmptyWord);
  CHECK(code_of([] { Word::parse("123"); }) == ErrorCode::ParseError);
  CHECK(Word::parse("").size() == 0);
}

TEST_CASE("fixture with word 1211") {
  const auto f = word_fixture();
  const auto d = decompose(f.graph, f.source, f.pair.i, f.pair.j);
  CHECK(d.odd_paths.size() == 4);
  CHECK(word_of(d).to_string() == "1211");
  const auto image = phi(f.graph, f.source, f.pair);
  CHECK(image == f.image);
  CHECK(word_of(decompose(f.graph, image, f.pair.i, f.pair.j)).to_string() == "1212");
  CHECK(varphi(f.graph, image, f.pair) == f.source);
}

TEST_CASE("decomposition basics") {
  const Graph single = gen_empty(1);
  const auto d = decompose(single, VertexSet{1}, VertexSet{0});
  CHECK(d.odd_paths.size() == 1);
  CHECK(word_of(d).to_string() == "1");

  const Graph edge = gen_complete(2);
  const auto e = decompose(edge, VertexSet{1}, VertexSet{2});
  REQUIRE(e.components.size() == 1);
  CHECK(e.odd_paths.empty());
  CHECK(e.components[0].vertices.size() == 2);

  const Graph c6 = gen_cycle(6);
  const auto c = decompose(c6, VertexSet{0b010101}, VertexSet{0b101010});
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].kind == Component::Kind::Cycle);
  CHECK(c.odd_paths.empty());

  const Graph p5 = gen_path(5);
  const auto p = decompose(p5, VertexSet{0b10101}, VertexSet{0b01010});
  REQUIRE(p.components.size() == 1);
  CHECK(p.components[0].vertices == std::vector<unsigned>{0, 1, 2, 3, 4});
  CHECK(word_of(p).to_string() == "1");
}

TEST_CASE("decomposition errors") {
  const Graph claw = gen_claw();
  CHECK(code_of([&] { decompose(claw, VertexSet{0b1110}, VertexSet{0b0001}); }) == ErrorCode::NotClawFree);
  const Graph p3 = gen_path(3);
  CHECK(code_of([&] { decompose(p3, VertexSet{0b011}, VertexSet{0b100}); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([&] { decompose(p3, VertexSet{0b101}, VertexSet{0b101}); }) == ErrorCode::InvalidPartition);
}

TEST_CASE("phi on two isolated vertices") {
  const Graph g = gen_empty(2);
  const auto pair = pair_of({2}, {1, 1});
  const SemiOrderedStablePartition b({0b11});
  const auto image = phi(g, b, pair);
  CHECK(image == SemiOrderedStablePartition({0b01, 0b10}));
  CHECK(varphi(g, image, pair) == b);
  CHECK(code_of([&] { phi(g, image, pair); }) == ErrorCode::TypeMismatch);
  CHECK(code_of([&] { varphi(g, b, pair); }) == ErrorCode::TypeMismatch);
}

TEST_CASE("varphi outside the image") {
  const Graph g = gen_empty(3);
  const auto pair = pair_of({3}, {2, 1});
  // word 121 ends on its maximum
  CHECK(code_of([&] { varphi(g, SemiOrderedStablePartition({0b101, 0b010}), pair); }) == ErrorCode::NotInImage);
  CHECK(varphi(g, SemiOrderedStablePartition({0b011, 0b100}), pair) == SemiOrderedStablePartition({0b111}));

  // no odd path: P_4 with blocks {0,2} and {1,3}
  const Graph p4 = gen_path(4);
  const auto pair2 = pair_of({3, 1}, {2, 2});
  CHECK(code_of([&] { varphi(p4, SemiOrderedStablePartition({0b0101, 0b1010}), pair2); }) == ErrorCode::EmptyWord);
}

TEST_CASE("injection reports") {
  const auto c5 = verify_injection(gen_cycle(5), pair_of({2, 2, 1}, {2, 1, 1, 1}));
  CHECK(c5.passed());
  CHECK(c5.source_count == 10);
  CHECK(c5.image_count == 10);
  CHECK(c5.target_count == 30);

  const auto p4 = verify_injection(gen_path(4), pair_of({2, 2}, {2, 1, 1}));
  CHECK(p4.passed());
  CHECK(p4.source_count == 2);
  CHECK(p4.image_count == 2);

  const auto sq = verify_injection(gen_complete(3), pair_of({2, 1}, {1, 1, 1}));
  CHECK(sq.passed());
  CHECK(sq.source_count == 0);

  CHECK(code_of([] { verify_injection(gen_claw(), pair_of({3, 1}, {2, 2})); }) == ErrorCode::NotClawFree);
}

TEST_CASE("phi properties on random claw-free graphs") {
  std::uint64_t triples = 0;
  for (const auto& g : random_claw_free(77, 40, 4, 8)) {
    for (const auto& pair : covering_pairs(g.vertex_count())) {
      std::set<SemiOrderedStablePartition> images;
      const auto all = sources(g, pair.lambda);
      for (const auto& b : all) {
        const auto d = decompose(g, b, pair.i, pair.j);
        const Word w = word_of(d);
        const auto diffs = w.prefix_differences();
        REQUIRE(!diffs.empty());
        CHECK(diffs.back() == static_cast<int>(pair.lambda[pair.i]) - static_cast<int>(pair.lambda[pair.j]));
        for (const auto& c : d.components) {
          const int in_i = set_size(c.set & d.block_i), in_j = set_size(c.set & d.block_j);
          CHECK(std::abs(in_i - in_j) == (c.is_odd_path() ? 1 : 0));
        }
        const std::size_t p = w.first_max();
        CHECK(p >= 1);
        CHECK(diffs[p] >= 2);

        const auto image = phi(g, b, pair);
        CHECK(image.type() == pair.mu);
        CHECK(is_stable_partition_of(g, image.blocks()));
        CHECK((image[pair.i] | image[pair.j]) == (b[pair.i] | b[pair.j]));
        for (std::size_t k = 0; k < std::max(b.size(), image.size()); ++k)
          if (k != pair.i && k != pair.j) CHECK(image[k] == b[k]);

        const Word wi = word_of(decompose(g, image, pair.i, pair.j));
        REQUIRE(wi.size() == w.size());
        const auto dbar = wi.prefix_differences();
        for (std::size_t k = 0; k < w.size(); ++k) {
          CHECK(wi[k] == (k == p ? 2 : w[k]));
          CHECK(dbar[k] == (k < p ? diffs[k] : diffs[k] - 2));
        }
        CHECK(wi.last_max() + 1 == p);

        CHECK(varphi(g, image, pair) == b);
        images.insert(image);
        ++triples;
      }
      CHECK(images.size() == all.size());
    }
  }
  CHECK(triples >= 500);
}

TEST_CASE("swapping the two blocks flips every letter") {
  for (const auto& g : random_claw_free(91, 30, 3, 8)) {
    for (const auto& pair : covering_pairs(g.vertex_count())) {
      for (const auto& b : sources(g, pair.lambda)) {
        const auto d = decompose(g, b[pair.i], b[pair.j]);
        const auto r = decompose(g, b[pair.j], b[pair.i]);
        const Word w = word_of(d), v = word_of(r);
        REQUIRE(w.size() == v.size());
        CHECK(d.components.size() == r.components.size());
        for (std::size_t k = 0; k < w.size(); ++k) CHECK(w[k] + v[k] == 3);
      }
    }
  }
}

TEST_CASE("verify_injection passes on random claw-free graphs") {
  for (const auto& g : random_claw_free(5, 30, 5, 8))
    for (const auto& pair : covering_pairs(g.vertex_count())) {
      const auto report = verify_injection(g, pair);
      CHECK_MESSAGE(report.passed(), report.first_counterexample.value_or(""));
      CHECK(report.source_count <= report.target_count);
      CHECK(report.image_count == report.source_count);
    }
}
