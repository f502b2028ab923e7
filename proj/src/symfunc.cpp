#include "csf/symfunc.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

#include "csf/error.hpp"
#include "csf/stable.hpp"

namespace csf {

MExpansion csf_m(const Graph& g) {
  MExpansion e(g.vertex_count());
  for (const auto& [lambda, count] : semi_ordered_counts(g)) e.set(lambda, to_signed(count));
  return e;
}

namespace {

using Shape = std::vector<Partition::Part>;

// Adds every horizontal strip of `size` boxes to `shape`, row by row, never
// exceeding `bound` (the target shape; empty bound means unbounded).
void add_strips(const Shape& shape, std::size_t row, unsigned size, const Shape& bound, Shape& current,
                std::uint64_t weight, std::map<Shape, std::uint64_t>& out) {
  if (size == 0) {
    Shape trimmed = current;
    while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
    auto& slot = out[trimmed];
    slot = checked_add(slot, weight);
    return;
  }
  if (row > shape.size()) return;  // a strip adds at most one new row
  const Partition::Part base = row < shape.size() ? shape[row] : 0;
  // Horizontal strip: new row length <= old length of the row above.
  Partition::Part cap = row == 0 ? base + size : shape[row - 1];
  if (!bound.empty()) cap = std::min<Partition::Part>(cap, row < bound.size() ? bound[row] : 0);
  if (row >= current.size()) current.resize(row + 1, 0);
  for (Partition::Part len = base; len <= cap && len - base <= size; ++len) {
    current[row] = len;
    add_strips(shape, row + 1, size - (len - base), bound, current, weight, out);
  }
  current[row] = base;
}

std::map<Shape, std::uint64_t> strip_dp(const Partition& mu, const Shape& bound) {
  std::map<Shape, std::uint64_t> layer{{Shape{}, 1}};
  for (auto part : mu.parts()) {
    std::map<Shape, std::uint64_t> next;
    for (const auto& [shape, count] : layer) {
      Shape current = shape;
      add_strips(shape, 0, part, bound, current, count, next);
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::uint64_t kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw Error(ErrorCode::WeightMismatch, lambda.to_string() + " vs " + mu.to_string());
  if (lambda.empty()) return 1;
  const Shape bound(lambda.parts().begin(), lambda.parts().end());
  const auto layer = strip_dp(mu, bound);
  auto it = layer.find(bound);
  return it == layer.end() ? 0 : it->second;
}

std::vector<std::uint64_t> kostka_column(const Partition& mu) {
  const auto& table = partition_table(static_cast<unsigned>(mu.weight()));
  std::vector<std::uint64_t> column(table.size(), 0);
  for (const auto& [shape, count] : strip_dp(mu, {})) column[table.index_of(Partition(shape))] = count;
  return column;
}

const std::vector<std::uint64_t>& kostka_matrix(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<std::vector<std::uint64_t>>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    const auto& table = partition_table(n);
    const std::size_t p = table.size();
    auto matrix = std::make_unique<std::vector<std::uint64_t>>(p * p, 0);
    for (std::size_t b = 0; b < p; ++b) {
      const auto column = kostka_column(table[b]);
      for (std::size_t a = 0; a < p; ++a) (*matrix)[a * p + b] = column[a];
    }
    slot = std::move(matrix);
  }
  return *slot;
}

MExpansion s_to_m(const SExpansion& e) {
  const auto& K = kostka_matrix(e.degree());
  const std::size_t p = e.table().size();
  MExpansion out(e.degree());
  for (std::size_t mu = 0; mu < p; ++mu) {
    std::int64_t sum = 0;
    for (std::size_t lambda = 0; lambda < p; ++lambda)
      if (e.at(lambda) && K[lambda * p + mu])
        sum = checked_add(sum, checked_mul(e.at(lambda), to_signed(K[lambda * p + mu])));
    out.set_at(mu, sum);
  }
  return out;
}

SExpansion m_to_s(const MExpansion& e) {
  const auto& K = kostka_matrix(e.degree());
  const std::size_t p = e.table().size();
  SExpansion out(e.degree());
  for (std::size_t lambda = 0; lambda < p; ++lambda) {
    std::int64_t c = e.at(lambda);
    for (std::size_t nu = 0; nu < lambda; ++nu)
      if (out.at(nu) && K[nu * p + lambda]) c = checked_sub(c, checked_mul(out.at(nu), to_signed(K[nu * p + lambda])));
    out.set_at(lambda, c);
  }
  return out;
}

SchurPositivity is_schur_positive(const MExpansion& e) {
  SchurPositivity result{true, std::nullopt, 0, m_to_s(e)};
  for (std::size_t k = 0; k < result.schur.table().size(); ++k)
    if (result.schur.at(k) < 0) {
      result.positive = false;
      result.witness = result.schur.table()[k];
      result.witness_coeff = result.schur.at(k);
      break;
    }
  return result;
}

namespace {

std::uint64_t oracle_space(const Graph& g, std::span<const unsigned> alpha) {
  std::uint64_t total = 0;
  for (auto a : alpha) total += a;
  if (total != g.vertex_count())
    throw Error(ErrorCode::WeightMismatch, "composition does not sum to the vertex count");
  std::uint64_t space = 1;
  for (unsigned v = 0; v < g.vertex_count(); ++v) {
    space *= alpha.size();
    if (space > kOracleLimit) throw Error(ErrorCode::OracleTooLarge, "more than 1e8 colorings to scan");
  }
  return space;
}

// Decodes `code` as a base-k coloring and tests it.
bool matches(const Graph& g, std::span<const unsigned> alpha, std::uint64_t code) {
  const unsigned d = g.vertex_count();
  const std::uint64_t k = alpha.size();
  std::array<VertexSet, kMaxVertices> classes{};
  for (unsigned v = 0; v < d; ++v) {
    classes[code % k] |= singleton(v);
    code /= k;
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (set_size(classes[c]) != alpha[c]) return false;
    for (unsigned v : members(classes[c]))
      if (g.neighbors(v) & classes[c]) return false;
  }
  return true;
}

}  // namespace

std::uint64_t coloring_distribution_oracle(const Graph& g, std::span<const unsigned> alpha) {
  const auto space = static_cast<std::int64_t>(oracle_space(g, alpha));
  if (alpha.empty()) return 1;  // d = 0: the empty coloring
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t code = 0; code < space; ++code)
    count += matches(g, alpha, static_cast<std::uint64_t>(code));
  return count;
}

namespace serial {

std::uint64_t coloring_distribution_oracle(const Graph& g, std::span<const unsigned> alpha) {
  const std::uint64_t space = oracle_space(g, alpha);
  if (alpha.empty()) return 1;
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < space; ++code) count += matches(g, alpha, code);
  return count;
}

}  // namespace serial

}  // namespace csf
