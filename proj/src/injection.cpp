#include "csf/injection.hpp"

#include <algorithm>
#include <set>

#include "csf/error.hpp"

namespace csf {

Word::Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {
  for (auto c : letters_)
    if (c != 1 && c != 2) throw Error(ErrorCode::ParseError, "word letters must be 1 or 2");
}

Word Word::parse(const std::string& text) {
  std::vector<std::uint8_t> letters;
  for (char c : text) {
    if (c != '1' && c != '2') throw Error(ErrorCode::ParseError, "bad word '" + text + "'");
    letters.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Word(std::move(letters));
}

std::vector<int> Word::prefix_differences() const {
  std::vector<int> out;
  int diff = 0;
  for (auto c : letters_) out.push_back(diff += (c == 1 ? 1 : -1));
  return out;
}

std::size_t Word::first_max() const {
  if (letters_.empty()) throw Error(ErrorCode::EmptyWord, "word has no letters");
  const auto diffs = prefix_differences();
  return static_cast<std::size_t>(std::max_element(diffs.begin(), diffs.end()) - diffs.begin());
}

std::size_t Word::last_max() const {
  if (letters_.empty()) throw Error(ErrorCode::EmptyWord, "word has no letters");
  const auto diffs = prefix_differences();
  const auto best = *std::max_element(diffs.begin(), diffs.end());
  std::size_t q = diffs.size();
  while (diffs[--q] != best) {
  }
  return q;
}

std::string Word::to_string() const {
  std::string out;
  for (auto c : letters_) out += static_cast<char>('0' + c);
  return out;
}

TwoBlockDecomposition decompose(const Graph& g, VertexSet block_i, VertexSet block_j) {
  if (block_i & block_j) throw Error(ErrorCode::InvalidPartition, "blocks overlap");
  if (!is_stable_set(g, block_i) || !is_stable_set(g, block_j))
    throw Error(ErrorCode::InvalidPartition, "blocks must be stable");
  const VertexSet all = block_i | block_j;
  for (unsigned v : members(all))
    if (set_size(g.neighbors(v) & all) > 2)
      throw Error(ErrorCode::NotClawFree, "vertex " + std::to_string(v) + " has three neighbours across the two blocks");

  TwoBlockDecomposition d{block_i, block_j, {}, {}};
  VertexSet unseen = all;
  while (unseen) {
    // Start from an endpoint (degree <= 1) if the component has one.
    const unsigned root = lowest_vertex(unseen);
    VertexSet comp = singleton(root), frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (unsigned v : members(frontier)) next |= g.neighbors(v) & all;
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;

    Component c{Component::Kind::Cycle, {}, comp, lowest_vertex(comp)};
    unsigned start = c.min_label;
    for (unsigned v : members(comp))
      if (set_size(g.neighbors(v) & all) <= 1) {
        c.kind = Component::Kind::Path;
        start = v;
        break;
      }
    VertexSet visited = 0;
    for (unsigned v = start;;) {
      c.vertices.push_back(v);
      visited |= singleton(v);
      const VertexSet onward = g.neighbors(v) & all & ~visited;
      if (!onward) break;
      v = lowest_vertex(onward);
    }
    d.components.push_back(std::move(c));
  }
  // Components were discovered from their smallest vertex, so they are
  // already ascending by min_label.
  for (std::size_t k = 0; k < d.components.size(); ++k)
    if (d.components[k].is_odd_path()) d.odd_paths.push_back(k);
  return d;
}

TwoBlockDecomposition decompose(const Graph& g, const SemiOrderedStablePartition& b, std::size_t i, std::size_t j) {
  if (!(i < j && j <= b.size())) throw Error(ErrorCode::InvalidSize, "need i < j <= number of blocks");
  return decompose(g, b[i], j < b.size() ? b[j] : 0);
}

Word word_of(const TwoBlockDecomposition& d) {
  std::vector<std::uint8_t> letters;
  for (std::size_t k = 0; k < d.odd_paths.size(); ++k) {
    const VertexSet path = d.odd_path(k).set;
    letters.push_back(set_size(path & d.block_i) > set_size(path & d.block_j) ? 1 : 2);
  }
  return Word(std::move(letters));
}

namespace {

SemiOrderedStablePartition swap_along(const SemiOrderedStablePartition& b, std::size_t i, std::size_t j,
                                      VertexSet path) {
  std::vector<VertexSet> blocks = b.blocks();
  const VertexSet bi = b[i], bj = b[j];
  const VertexSet new_i = (bi & ~path) | (bj & path);
  const VertexSet new_j = (bj & ~path) | (bi & path);
  blocks[i] = new_i;
  if (j < blocks.size())
    blocks[j] = new_j;
  else
    blocks.push_back(new_j);
  if (!blocks.empty() && blocks.back() == 0) blocks.pop_back();
  return SemiOrderedStablePartition(std::move(blocks));
}

void require_type(const SemiOrderedStablePartition& b, const Partition& expected) {
  if (b.type() != expected || b.size() != expected.length())
    throw Error(ErrorCode::TypeMismatch, "expected type " + expected.to_string() + ", got " + b.type().to_string());
  for (std::size_t k = 0; k < b.size(); ++k)
    if (set_size(b[k]) != expected[k])
      throw Error(ErrorCode::TypeMismatch, "block " + std::to_string(k) + " size differs from the type");
}

}  // namespace

SemiOrderedStablePartition phi(const Graph& g, const SemiOrderedStablePartition& b, const CoveringPair& pair) {
  require_type(b, pair.lambda);
  const auto d = decompose(g, b, pair.i, pair.j);
  const Word w = word_of(d);
  const std::size_t p = w.first_max();
  return swap_along(b, pair.i, pair.j, d.odd_path(p).set);
}

SemiOrderedStablePartition varphi(const Graph& g, const SemiOrderedStablePartition& b_bar, const CoveringPair& pair) {
  require_type(b_bar, pair.mu);
  const auto d = decompose(g, b_bar, pair.i, pair.j);
  const Word w = word_of(d);
  const std::size_t q = w.last_max();
  if (q + 1 >= w.size())
    throw Error(ErrorCode::NotInImage, "word " + w.to_string() + " peaks at its last letter");
  return swap_along(b_bar, pair.i, pair.j, d.odd_path(q + 1).set);
}

InjectionReport verify_injection(const Graph& g, const CoveringPair& pair) {
  InjectionReport report;
  report.lambda = pair.lambda;
  report.mu = pair.mu;

  std::vector<SemiOrderedStablePartition> sources;
  for (const auto& p : stable_partitions_of_type(g, pair.lambda))
    for (auto& arranged : semi_ordered_arrangements(p)) sources.push_back(std::move(arranged));
  report.source_count = sources.size();
  report.target_count = count_of_type(g, pair.mu);

  std::vector<SemiOrderedStablePartition> images(sources.size());
  for (std::size_t k = 0; k < sources.size(); ++k) images[k] = phi(g, sources[k], pair);

  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (!report.first_counterexample) report.first_counterexample = what;
  };
  std::set<SemiOrderedStablePartition> distinct;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    const auto& b = sources[k];
    const auto& image = images[k];
    const std::string tag = b.to_string() + " -> " + image.to_string();
    if (image.type() != pair.mu || !is_stable_partition_of(g, image.blocks())) fail(report.type_correct, "type: " + tag);
    if (!distinct.insert(image).second) fail(report.images_distinct, "collision: " + tag);

    bool preserved = (image[pair.i] | image[pair.j]) == (b[pair.i] | b[pair.j]);
    for (std::size_t m = 0; m < b.size(); ++m)
      if (m != pair.i && m != pair.j && image[m] != b[m]) preserved = false;
    if (!preserved) fail(report.union_preserved, "union: " + tag);

    try {
      if (varphi(g, image, pair) != b) fail(report.left_inverse, "inverse: " + tag);
    } catch (const Error& e) {
      fail(report.left_inverse, "inverse: " + tag + " (" + e.what() + ")");
    }
  }
  report.image_count = distinct.size();
  if (report.target_count < report.source_count)
    fail(report.count_inequality, "count: " + std::to_string(report.target_count) + " < " +
                                      std::to_string(report.source_count));
  return report;
}

}  // namespace csf
