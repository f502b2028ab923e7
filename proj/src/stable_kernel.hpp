#pragma once

// Backtracking kernels behind stable_enum. Each block is anchored at the
// smallest uncovered vertex and grown with larger, pairwise non-adjacent
// vertices, so every unordered stable partition is produced exactly once.

#include <array>
#include <cstdint>
#include <cstring>
#include <unordered_map>
#include <vector>

#include "csf/graph.hpp"

namespace csf::detail {

using SizeHistogram = std::array<std::uint8_t, kMaxVertices + 1>;

// Exact accumulator of leaf counts keyed by block-size histogram. A Zobrist
// hash picks the bucket; the stored histogram confirms the match.
class HistogramCounter {
 public:
  struct Entry {
    SizeHistogram histogram;
    std::uint64_t count;
  };

  void add(std::uint64_t hash, const SizeHistogram& h, std::uint64_t amount = 1);
  void merge(const HistogramCounter& other);
  template <class F>
  void for_each(F&& f) const {
    for (const auto& [hash, bucket] : buckets_)
      for (const auto& e : bucket) f(e);
  }

 private:
  std::unordered_map<std::uint64_t, std::vector<Entry>> buckets_;
};

std::uint64_t zobrist(unsigned size, unsigned count);
std::uint64_t histogram_hash(const SizeHistogram& h);

// Full enumeration counting leaves by type.
class TypeCountKernel {
 public:
  explicit TypeCountKernel(const Graph& g) : g_(g) { histogram_.fill(0); }

  void set_prefix(const SizeHistogram& h) {
    histogram_ = h;
    hash_ = histogram_hash(h);
  }
  void run(VertexSet remaining) { partitions(remaining); }
  const HistogramCounter& counter() const noexcept { return counter_; }

 private:
  void partitions(VertexSet remaining) {
    if (!remaining) {
      counter_.add(hash_, histogram_);
      return;
    }
    const unsigned v = lowest_vertex(remaining);
    grow(singleton(v), 1, remaining & ~g_.neighbors(v) & ~singleton(v), remaining);
  }

  void grow(VertexSet block, unsigned size, VertexSet candidates, VertexSet remaining) {
    const std::uint64_t saved = hash_;
    const unsigned c = histogram_[size];
    hash_ ^= zobrist(size, c) ^ zobrist(size, c + 1);
    ++histogram_[size];
    partitions(remaining & ~block);
    --histogram_[size];
    hash_ = saved;
    while (candidates) {
      const unsigned w = lowest_vertex(candidates);
      candidates &= candidates - 1;
      grow(block | singleton(w), size + 1, candidates & ~g_.neighbors(w), remaining);
    }
  }

  const Graph& g_;
  SizeHistogram histogram_{};
  std::uint64_t hash_ = 0;
  HistogramCounter counter_;
};

// Enumeration restricted to stable partitions whose block sizes form a
// target multiset. `leaf(blocks)` returns false to stop the search.
template <class Leaf>
class TypedKernel {
 public:
  TypedKernel(const Graph& g, const SizeHistogram& need, Leaf& leaf) : g_(g), need_(need), leaf_(leaf) {}

  // Returns false when the leaf callback asked to stop.
  bool run(VertexSet remaining) { return partitions(remaining); }
  std::vector<VertexSet>& blocks() noexcept { return blocks_; }
  SizeHistogram& need() noexcept { return need_; }

 private:
  bool partitions(VertexSet remaining) {
    if (!remaining) return leaf_(blocks_);
    unsigned max_need = 0, min_need = 0;
    for (unsigned s = kMaxVertices; s >= 1; --s)
      if (need_[s]) {
        if (!max_need) max_need = s;
        min_need = s;
      }
    if (!max_need) return true;
    const unsigned v = lowest_vertex(remaining);
    return grow(singleton(v), 1, remaining & ~g_.neighbors(v) & ~singleton(v), remaining, min_need, max_need);
  }

  bool grow(VertexSet block, unsigned size, VertexSet candidates, VertexSet remaining, unsigned min_need,
            unsigned max_need) {
    if (size + set_size(candidates) < min_need) return true;
    if (need_[size]) {
      --need_[size];
      blocks_.push_back(block);
      const bool go_on = partitions(remaining & ~block);
      blocks_.pop_back();
      ++need_[size];
      if (!go_on) return false;
    }
    if (size == max_need) return true;
    while (candidates) {
      const unsigned w = lowest_vertex(candidates);
      candidates &= candidates - 1;
      if (!grow(block | singleton(w), size + 1, candidates & ~g_.neighbors(w), remaining, min_need, max_need))
        return false;
    }
    return true;
  }

  const Graph& g_;
  SizeHistogram need_;
  Leaf& leaf_;
  std::vector<VertexSet> blocks_;
};

// A unit of parallel work: what remains after fixing the first few blocks.
struct PrefixTask {
  VertexSet remaining;
  std::vector<VertexSet> blocks;
};

// Expands the search tree to `depth` blocks (or fewer when the graph is
// exhausted). `accept(size)` filters closable block sizes; pass a callable
// returning true for unrestricted enumeration.
template <class Accept>
void expand_prefixes(const Graph& g, VertexSet remaining, unsigned depth, std::vector<VertexSet>& prefix,
                     Accept& accept, std::vector<PrefixTask>& out) {
  if (depth == 0 || !remaining) {
    out.push_back({remaining, prefix});
    return;
  }
  const unsigned v = lowest_vertex(remaining);
  struct Frame {
    VertexSet block;
    VertexSet candidates;
  };
  std::vector<Frame> stack{{singleton(v), remaining & ~g.neighbors(v) & ~singleton(v)}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const unsigned size = set_size(f.block);
    if (accept(prefix, size)) {
      prefix.push_back(f.block);
      expand_prefixes(g, remaining & ~f.block, depth - 1, prefix, accept, out);
      prefix.pop_back();
    }
    for (VertexSet c = f.candidates; c; c &= c - 1) {
      const unsigned w = lowest_vertex(c);
      stack.push_back({f.block | singleton(w), (c & (c - 1)) & ~g.neighbors(w)});
    }
  }
}

}  // namespace csf::detail
