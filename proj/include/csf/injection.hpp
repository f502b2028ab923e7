#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csf/graph.hpp"
#include "csf/partition.hpp"
#include "csf/stable.hpp"

namespace csf {

/// A connected component of the graph induced by two stable blocks. With a
/// claw-free host every component is a path or an even cycle; vertices are
/// listed in walk order from one end (cycles: from the smallest label).
struct Component {
  enum class Kind { Path, Cycle };
  Kind kind;
  std::vector<unsigned> vertices;
  VertexSet set = 0;
  unsigned min_label = 0;

  bool is_odd_path() const noexcept { return kind == Kind::Path && vertices.size() % 2 == 1; }
};

struct TwoBlockDecomposition {
  VertexSet block_i = 0;
  VertexSet block_j = 0;                // empty when the second block is new
  std::vector<Component> components;    // ascending by min_label
  std::vector<std::size_t> odd_paths;   // indices into components, ascending by min_label

  const Component& odd_path(std::size_t k) const { return components.at(odd_paths.at(k)); }
};

/// A word over {1, 2}: letter k is 1 when odd path k has its extra vertex in
/// block_i, 2 when in block_j.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters);
  /// Parses "1211". Throws ParseError.
  static Word parse(const std::string& text);

  std::size_t size() const noexcept { return letters_.size(); }
  std::uint8_t operator[](std::size_t k) const { return letters_.at(k); }
  /// Entry k is w1 - w2 over the first k+1 letters.
  std::vector<int> prefix_differences() const;
  /// Smallest position of the maximum prefix difference (0-based p - 1).
  std::size_t first_max() const;
  /// Largest position of the maximum prefix difference (0-based q - 1).
  std::size_t last_max() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

/// Splits G[block_i ∪ block_j] into paths and cycles. Throws NotClawFree
/// when a vertex has three neighbours in the union, InvalidPartition when the
/// blocks overlap or are not stable.
TwoBlockDecomposition decompose(const Graph& g, VertexSet block_i, VertexSet block_j);
/// Blocks i and j of b; j == b.size() addresses the empty block.
TwoBlockDecomposition decompose(const Graph& g, const SemiOrderedStablePartition& b, std::size_t i, std::size_t j);

Word word_of(const TwoBlockDecomposition& d);

/// Exchanges blocks i and j along the odd path at the first maximum of the
/// word's prefix differences. Input of type pair.lambda, output of type
/// pair.mu; all other blocks stay in place. Throws TypeMismatch, NotClawFree.
SemiOrderedStablePartition phi(const Graph& g, const SemiOrderedStablePartition& b, const CoveringPair& pair);

/// Left inverse of phi: swaps along the odd path after the last maximum.
/// Guaranteed to undo phi only on phi's image. Throws TypeMismatch,
/// NotClawFree, EmptyWord (no odd path), NotInImage (last maximum at the end
/// of the word, so there is no path to swap).
SemiOrderedStablePartition varphi(const Graph& g, const SemiOrderedStablePartition& b_bar, const CoveringPair& pair);

struct InjectionReport {
  Partition lambda;
  Partition mu;
  std::uint64_t source_count = 0;  // ã_lambda
  std::uint64_t image_count = 0;   // distinct images
  std::uint64_t target_count = 0;  // ã_mu
  bool type_correct = true;
  bool images_distinct = true;
  bool left_inverse = true;
  bool union_preserved = true;
  bool count_inequality = true;
  std::optional<std::string> first_counterexample;

  bool passed() const noexcept {
    return type_correct && images_distinct && left_inverse && union_preserved && count_inequality;
  }
};

/// Applies phi to every semi-ordered stable partition of type pair.lambda and
/// checks the injection properties. Throws NotClawFree from decomposition.
InjectionReport verify_injection(const Graph& g, const CoveringPair& pair);

}  // namespace csf
