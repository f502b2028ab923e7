#pragma once

#include <compare>
#include <mutex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace csf {

/// An integer partition: weakly decreasing positive parts.
///
/// Indexing past the last part yields 0. Ordering via operator<=> is the
/// lexicographic order on the part sequence; reverse-lexicographic order (the
/// canonical order used for every basis expansion) is its descending form.
class Partition {
 public:
  using Part = std::uint32_t;

  Partition() = default;
  /// Throws InvalidPartition unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  /// Sorts the entries and drops zeros. Used for block sizes and compositions.
  static Partition from_unsorted(std::vector<Part> sizes);
  /// Parses "(3,1)", "( 2 , 2 )", "()" etc.
  static Partition parse(std::string_view text);

  Part operator[](std::size_t k) const noexcept { return k < parts_.size() ? parts_[k] : 0; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint64_t weight() const noexcept { return weight_; }
  std::span<const Part> parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// "(3,1)"; the empty partition renders as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<Part> parts_;
  std::uint64_t weight_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// mu <= lambda in dominance order. Throws WeightMismatch.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// All partitions of n in reverse-lexicographic order, a linear extension of
/// dominance: larger partitions come first.
std::vector<Partition> partitions_of(unsigned n);

/// lambda covers mu: mu < lambda with an empty open interval between them.
bool covers(const Partition& lambda, const Partition& mu);

/// A covering pair with the two positions (0-based, i < j) where
/// mu_i = lambda_i - 1 and mu_j = lambda_j + 1.
struct CoveringPair {
  Partition lambda;
  Partition mu;
  std::size_t i = 0;
  std::size_t j = 0;
};

std::vector<CoveringPair> covering_pairs(unsigned n);

/// prod_k (m_k!) over part multiplicities; the ratio of ordered to unordered
/// block arrangements.
std::uint64_t multiplicity_factorial(const Partition& lambda);

/// partitions_of(n) with an index lookup and a precomputed dominance relation.
class PartitionTable {
 public:
  explicit PartitionTable(unsigned n);

  unsigned degree() const noexcept { return n_; }
  std::size_t size() const noexcept { return parts_.size(); }
  const std::vector<Partition>& partitions() const noexcept { return parts_; }
  const Partition& operator[](std::size_t k) const { return parts_[k]; }

  /// Throws WeightMismatch for a partition of another weight.
  std::size_t index_of(const Partition& p) const;
  /// Dominance between table entries: parts_[a] <= parts_[b].
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * parts_.size() + b] != 0; }
  /// Built on first use.
  const std::vector<CoveringPair>& covering_pairs() const;

 private:
  void build_covering() const;

  unsigned n_;
  std::vector<Partition> parts_;
  std::unordered_map<Partition, std::size_t, PartitionHash> index_;
  std::vector<std::uint8_t> leq_;
  mutable std::once_flag covering_once_;
  mutable std::vector<CoveringPair> covering_;
};

/// Shared, lazily built table for degree n; safe to call from any thread.
const PartitionTable& partition_table(unsigned n);

}  // namespace csf
