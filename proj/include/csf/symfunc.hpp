#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "csf/graph.hpp"
#include "csf/partition.hpp"

namespace csf {

enum class Basis { Monomial, Schur };

/// Homogeneous symmetric function of a fixed degree in one basis. Coefficients
/// are stored densely in reverse-lexicographic partition order.
template <Basis B>
class Expansion {
 public:
  static constexpr Basis basis = B;

  explicit Expansion(unsigned degree = 0) : degree_(degree), coeffs_(partition_table(degree).size(), 0) {}

  unsigned degree() const noexcept { return degree_; }
  const PartitionTable& table() const { return partition_table(degree_); }
  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of the basis element lambda. Throws WeightMismatch.
  std::int64_t operator[](const Partition& lambda) const { return coeffs_[table().index_of(lambda)]; }
  std::int64_t at(std::size_t index) const { return coeffs_.at(index); }
  void set(const Partition& lambda, std::int64_t c) { coeffs_[table().index_of(lambda)] = c; }
  void set_at(std::size_t index, std::int64_t c) { coeffs_.at(index) = c; }

  bool is_zero() const noexcept {
    for (auto c : coeffs_)
      if (c) return false;
    return true;
  }

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  unsigned degree_;
  std::vector<std::int64_t> coeffs_;
};

using MExpansion = Expansion<Basis::Monomial>;
using SExpansion = Expansion<Basis::Schur>;

/// X_G in the monomial basis: [m_lambda] = number of semi-ordered stable
/// partitions of type lambda.
MExpansion csf_m(const Graph& g);

/// Number of semistandard Young tableaux of shape lambda and content mu.
/// Throws WeightMismatch.
std::uint64_t kostka(const Partition& lambda, const Partition& mu);

/// Kostka numbers K_{lambda,mu} for all lambda of |mu|, built by adding one
/// horizontal strip per part of mu. Shapes with K = 0 are absent.
std::vector<std::uint64_t> kostka_column(const Partition& mu);

/// Row-major K over partition_table(n): entry [a * p + b] = K_{table[a], table[b]}.
/// Cached per degree.
const std::vector<std::uint64_t>& kostka_matrix(unsigned n);

MExpansion s_to_m(const SExpansion& e);
/// Inverse of s_to_m by forward substitution in reverse-lex order, which is
/// valid because K is unitriangular with respect to dominance.
SExpansion m_to_s(const MExpansion& e);

struct SchurPositivity {
  bool positive = true;
  std::optional<Partition> witness;  // first negative coefficient in reverse-lex order
  std::int64_t witness_coeff = 0;
  SExpansion schur;
};

SchurPositivity is_schur_positive(const MExpansion& e);

/// Number of proper colorings V -> {1..k}, k = alpha.size(), using color i
/// exactly alpha[i] times, by brute force over all k^d maps. Throws
/// OracleTooLarge when k^d > 1e8, WeightMismatch if sum(alpha) != d.
std::uint64_t coloring_distribution_oracle(const Graph& g, std::span<const unsigned> alpha);

inline constexpr std::uint64_t kOracleLimit = 100'000'000;

namespace serial {
std::uint64_t coloring_distribution_oracle(const Graph& g, std::span<const unsigned> alpha);
}  // namespace serial

}  // namespace csf
