#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csf/graph.hpp"
#include "csf/partition.hpp"

namespace csf {

/// Unordered stable partition. Blocks are kept in canonical order (decreasing
/// size, ties by smallest vertex) so equality is structural.
class StablePartition {
 public:
  StablePartition() = default;
  /// Reorders `blocks` canonically. Throws InvalidPartition on an empty or
  /// overlapping block; stability is checked separately by validate().
  explicit StablePartition(std::vector<VertexSet> blocks);

  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
  Partition type() const;
  VertexSet support() const noexcept;
  /// "{0,2,4}|{1,3}|{5}"
  std::string to_string() const;

  friend bool operator==(const StablePartition&, const StablePartition&) = default;
  friend auto operator<=>(const StablePartition&, const StablePartition&) = default;

 private:
  std::vector<VertexSet> blocks_;
};

/// Semi-ordered stable partition in positional form: |B_k| = lambda_k.
/// Equal-size blocks keep the order they were given in. `blocks` may carry
/// no empty block.
class SemiOrderedStablePartition {
 public:
  SemiOrderedStablePartition() = default;
  /// Throws InvalidPartition when sizes are not weakly decreasing, a block is
  /// empty, or blocks overlap.
  explicit SemiOrderedStablePartition(std::vector<VertexSet> blocks);

  const std::vector<VertexSet>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return blocks_.size(); }
  VertexSet operator[](std::size_t k) const { return k < blocks_.size() ? blocks_[k] : 0; }
  Partition type() const;
  VertexSet support() const noexcept;
  std::string to_string() const;

  friend bool operator==(const SemiOrderedStablePartition&, const SemiOrderedStablePartition&) = default;
  friend auto operator<=>(const SemiOrderedStablePartition&, const SemiOrderedStablePartition&) = default;

 private:
  std::vector<VertexSet> blocks_;
};

/// Throws VertexOutOfRange for vertices outside g.
bool is_stable_set(const Graph& g, VertexSet s);
/// Blocks cover V(g) and each block is stable.
bool is_stable_partition_of(const Graph& g, std::span<const VertexSet> blocks);

using TypeCounts = std::map<Partition, std::uint64_t>;

/// Calls `visit` once per stable partition, blocks in generation order (each
/// block anchored at the smallest vertex not yet covered).
void for_each_stable_partition(const Graph& g, const std::function<void(std::span<const VertexSet>)>& visit);
std::vector<StablePartition> enumerate_stable_partitions(const Graph& g);

/// Every stable partition of type lambda, canonical form, generation order.
/// Throws WeightMismatch.
std::vector<StablePartition> stable_partitions_of_type(const Graph& g, const Partition& lambda);
/// All orderings of equal-size blocks of `p`, each in positional form.
std::vector<SemiOrderedStablePartition> semi_ordered_arrangements(const StablePartition& p);

// OpenMP kernels: work is split by the first two blocks and merged by
// checked addition. Results equal the serial reference exactly.

/// a_lambda for every type present.
TypeCounts count_types(const Graph& g);
/// ã_lambda = a_lambda * multiplicity_factorial(lambda).
TypeCounts semi_ordered_counts(const Graph& g);
/// ã_lambda for one type via type-pruned search. Throws WeightMismatch.
std::uint64_t count_of_type(const Graph& g, const Partition& lambda);

/// First stable partition of type lambda in generation order, if any.
std::optional<StablePartition> find_stable_partition_of_type(const Graph& g, const Partition& lambda);
inline bool has_type(const Graph& g, const Partition& lambda) {
  return find_stable_partition_of_type(g, lambda).has_value();
}

/// Single-threaded reference implementations kept for testing and benchmarks.
namespace serial {
TypeCounts count_types(const Graph& g);
std::uint64_t count_of_type(const Graph& g, const Partition& lambda);
}  // namespace serial

}  // namespace csf
