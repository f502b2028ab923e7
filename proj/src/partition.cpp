#include "csf/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "csf/error.hpp"

namespace csf {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] == 0) throw Error(ErrorCode::InvalidPartition, "zero part");
    if (k > 0 && parts_[k] > parts_[k - 1]) throw Error(ErrorCode::InvalidPartition, "parts not weakly decreasing");
    weight_ += parts_[k];
  }
}

Partition Partition::from_unsorted(std::vector<Part> sizes) {
  std::erase(sizes, Part{0});
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return Partition(std::move(sizes));
}

Partition Partition::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')')
    throw Error(ErrorCode::ParseError, "partition must be parenthesised: '" + std::string(text) + "'");
  std::string_view body(compact.data() + 1, compact.size() - 2);
  std::vector<Part> parts;
  while (!body.empty()) {
    auto comma = body.find(',');
    auto token = body.substr(0, comma);
    Part value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
      throw Error(ErrorCode::ParseError, "bad part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw Error(ErrorCode::ParseError, "trailing comma");
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto part : p.parts()) h = (h ^ part) * 0x100000001b3ull;
  return h;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw Error(ErrorCode::WeightMismatch, mu.to_string() + " vs " + lambda.to_string());
  std::uint64_t sum_mu = 0, sum_lambda = 0;
  const std::size_t len = std::max(mu.length(), lambda.length());
  for (std::size_t k = 0; k < len; ++k) {
    sum_mu += mu[k];
    sum_lambda += lambda[k];
    if (sum_lambda < sum_mu) return false;
  }
  return true;
}

namespace {

void generate(unsigned remaining, unsigned max_part, std::vector<Partition::Part>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Positions where lambda and mu differ; a covering pair differs in exactly two.
CoveringPair locate_indices(const Partition& lambda, const Partition& mu) {
  std::vector<std::size_t> diff;
  const std::size_t len = std::max(lambda.length(), mu.length());
  for (std::size_t k = 0; k < len; ++k)
    if (lambda[k] != mu[k]) diff.push_back(k);
  if (diff.size() != 2 || mu[diff[0]] + 1 != lambda[diff[0]] || mu[diff[1]] != lambda[diff[1]] + 1)
    throw std::logic_error("covering pair " + lambda.to_string() + " > " + mu.to_string() +
                           " is not a single-box move");
  return {lambda, mu, diff[0], diff[1]};
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<Partition::Part> prefix;
  generate(n, n, prefix, out);
  return out;
}

bool covers(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw Error(ErrorCode::WeightMismatch, lambda.to_string() + " vs " + mu.to_string());
  if (lambda == mu || !dominance_leq(mu, lambda)) return false;
  const auto& table = partition_table(static_cast<unsigned>(lambda.weight()));
  const std::size_t a = table.index_of(mu), b = table.index_of(lambda);
  for (std::size_t k = 0; k < table.size(); ++k)
    if (k != a && k != b && table.leq(a, k) && table.leq(k, b)) return false;
  return true;
}

std::vector<CoveringPair> covering_pairs(unsigned n) { return partition_table(n).covering_pairs(); }

std::uint64_t multiplicity_factorial(const Partition& lambda) {
  std::uint64_t result = 1;
  std::uint64_t run = 0;
  for (std::size_t k = 0; k < lambda.length(); ++k) {
    run = (k > 0 && lambda[k] == lambda[k - 1]) ? run + 1 : 1;
    result = checked_mul(result, run);
  }
  return result;
}

PartitionTable::PartitionTable(unsigned n) : n_(n), parts_(partitions_of(n)) {
  const std::size_t p = parts_.size();
  for (std::size_t k = 0; k < p; ++k) index_.emplace(parts_[k], k);

  leq_.assign(p * p, 0);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) leq_[a * p + b] = dominance_leq(parts_[a], parts_[b]);
}

const std::vector<CoveringPair>& PartitionTable::covering_pairs() const {
  std::call_once(covering_once_, [this] { build_covering(); });
  return covering_;
}

void PartitionTable::build_covering() const {
  const std::size_t p = parts_.size();
  // Covering by interval emptiness over 64-bit rows of the strict relation.
  const std::size_t words = (p + 63) / 64;
  std::vector<std::uint64_t> above(p * words, 0), below(p * words, 0);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      if (a != b && leq(a, b)) {
        above[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
        below[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
      }
  for (std::size_t b = 0; b < p; ++b) {  // lambda = parts_[b]
    for (std::size_t a = b + 1; a < p; ++a) {  // reverse-lex: smaller partitions come later
      if (!leq(a, b)) continue;
      bool empty = true;
      for (std::size_t w = 0; w < words && empty; ++w)
        empty = (above[a * words + w] & below[b * words + w]) == 0;
      if (empty) covering_.push_back(locate_indices(parts_[b], parts_[a]));
    }
  }
}

std::size_t PartitionTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw Error(ErrorCode::WeightMismatch, p.to_string() + " is not a partition of " + std::to_string(n_));
  return it->second;
}

const PartitionTable& partition_table(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<PartitionTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<PartitionTable>(n);
  return *slot;
}

}  // namespace csf
