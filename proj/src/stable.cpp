#include "csf/stable.hpp"

#include <algorithm>
#include <numeric>

#include "csf/error.hpp"
#include "stable_kernel.hpp"

namespace csf {

namespace detail {

std::uint64_t zobrist(unsigned size, unsigned count) {
  static const auto table = [] {
    std::vector<std::uint64_t> t((kMaxVertices + 1) * (kMaxVertices + 2));
    std::uint64_t x = 0x9e3779b97f4a7c15ull;
    for (auto& entry : t) {  // splitmix64
      x += 0x9e3779b97f4a7c15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      entry = z ^ (z >> 31);
    }
    return t;
  }();
  return table[size * (kMaxVertices + 2) + count];
}

std::uint64_t histogram_hash(const SizeHistogram& h) {
  std::uint64_t hash = 0;
  for (unsigned s = 1; s <= kMaxVertices; ++s)
    if (h[s]) hash ^= zobrist(s, 0) ^ zobrist(s, h[s]);
  return hash;
}

void HistogramCounter::add(std::uint64_t hash, const SizeHistogram& h, std::uint64_t amount) {
  auto& bucket = buckets_[hash];
  for (auto& e : bucket)
    if (e.histogram == h) {
      e.count = checked_add(e.count, amount);
      return;
    }
  bucket.push_back({h, amount});
}

void HistogramCounter::merge(const HistogramCounter& other) {
  other.for_each([this](const Entry& e) { add(histogram_hash(e.histogram), e.histogram, e.count); });
}

}  // namespace detail

namespace {

using detail::SizeHistogram;

void check_disjoint_nonempty(std::span<const VertexSet> blocks) {
  VertexSet seen = 0;
  for (auto b : blocks) {
    if (!b) throw Error(ErrorCode::InvalidPartition, "empty block");
    if (seen & b) throw Error(ErrorCode::InvalidPartition, "blocks overlap");
    seen |= b;
  }
}

Partition type_of(std::span<const VertexSet> blocks) {
  std::vector<Partition::Part> sizes;
  for (auto b : blocks) sizes.push_back(set_size(b));
  return Partition::from_unsorted(std::move(sizes));
}

std::string render_blocks(std::span<const VertexSet> blocks) {
  std::string out;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) out += '|';
    out += '{';
    bool first = true;
    for (unsigned v : members(blocks[k])) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
    out += '}';
  }
  return out;
}

SizeHistogram histogram_of(const Partition& lambda) {
  SizeHistogram h{};
  for (auto part : lambda.parts()) {
    if (part > kMaxVertices) throw Error(ErrorCode::InvalidSize, "part exceeds vertex cap");
    ++h[part];
  }
  return h;
}

void check_type_weight(const Graph& g, const Partition& lambda) {
  if (lambda.weight() != g.vertex_count())
    throw Error(ErrorCode::WeightMismatch,
                lambda.to_string() + " does not have weight " + std::to_string(g.vertex_count()));
}

TypeCounts to_type_counts(const detail::HistogramCounter& counter) {
  TypeCounts out;
  counter.for_each([&](const detail::HistogramCounter::Entry& e) {
    std::vector<Partition::Part> parts;
    for (unsigned s = kMaxVertices; s >= 1; --s) parts.insert(parts.end(), e.histogram[s], s);
    out[Partition(std::move(parts))] = e.count;
  });
  return out;
}

struct CountLeaf {
  std::uint64_t count = 0;
  bool operator()(const std::vector<VertexSet>&) {
    ++count;
    return true;
  }
};

// Depth of the prefix split: two blocks give enough tasks for dynamic
// scheduling on desk-scale graphs.
constexpr unsigned kSplitDepth = 2;

}  // namespace

StablePartition::StablePartition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  check_disjoint_nonempty(blocks_);
  std::sort(blocks_.begin(), blocks_.end(), [](VertexSet a, VertexSet b) {
    const unsigned sa = set_size(a), sb = set_size(b);
    if (sa != sb) return sa > sb;
    return lowest_vertex(a) < lowest_vertex(b);
  });
}

Partition StablePartition::type() const { return type_of(blocks_); }
VertexSet StablePartition::support() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), VertexSet{0}, std::bit_or<>());
}
std::string StablePartition::to_string() const { return render_blocks(blocks_); }

SemiOrderedStablePartition::SemiOrderedStablePartition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  check_disjoint_nonempty(blocks_);
  for (std::size_t k = 1; k < blocks_.size(); ++k)
    if (set_size(blocks_[k]) > set_size(blocks_[k - 1]))
      throw Error(ErrorCode::InvalidPartition, "block sizes must be weakly decreasing");
}

Partition SemiOrderedStablePartition::type() const { return type_of(blocks_); }
VertexSet SemiOrderedStablePartition::support() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), VertexSet{0}, std::bit_or<>());
}
std::string SemiOrderedStablePartition::to_string() const { return render_blocks(blocks_); }

bool is_stable_set(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw Error(ErrorCode::VertexOutOfRange, "set exceeds vertex range");
  for (unsigned v : members(s))
    if (g.neighbors(v) & s) return false;
  return true;
}

bool is_stable_partition_of(const Graph& g, std::span<const VertexSet> blocks) {
  VertexSet seen = 0;
  for (auto b : blocks) {
    if (!b || (seen & b) || (b & ~g.vertices()) || !is_stable_set(g, b)) return false;
    seen |= b;
  }
  return seen == g.vertices();
}

void for_each_stable_partition(const Graph& g, const std::function<void(std::span<const VertexSet>)>& visit) {
  // Empty target multiset is never hit; use the full-size histogram instead.
  SizeHistogram any{};
  any.fill(static_cast<std::uint8_t>(g.vertex_count()));
  auto leaf = [&](const std::vector<VertexSet>& blocks) {
    visit(blocks);
    return true;
  };
  detail::TypedKernel kernel(g, any, leaf);
  kernel.run(g.vertices());
}

std::vector<StablePartition> enumerate_stable_partitions(const Graph& g) {
  std::vector<StablePartition> out;
  for_each_stable_partition(g, [&](std::span<const VertexSet> blocks) {
    out.emplace_back(std::vector<VertexSet>(blocks.begin(), blocks.end()));
  });
  return out;
}

std::vector<StablePartition> stable_partitions_of_type(const Graph& g, const Partition& lambda) {
  check_type_weight(g, lambda);
  std::vector<StablePartition> out;
  auto leaf = [&](const std::vector<VertexSet>& blocks) {
    out.emplace_back(blocks);
    return true;
  };
  detail::TypedKernel kernel(g, histogram_of(lambda), leaf);
  kernel.run(g.vertices());
  return out;
}

std::vector<SemiOrderedStablePartition> semi_ordered_arrangements(const StablePartition& p) {
  // Canonical order already groups equal sizes; permute inside each group.
  std::vector<VertexSet> blocks = p.blocks();
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t start = 0; start < blocks.size();) {
    std::size_t end = start;
    while (end < blocks.size() && set_size(blocks[end]) == set_size(blocks[start])) ++end;
    groups.emplace_back(start, end);
    std::sort(blocks.begin() + static_cast<std::ptrdiff_t>(start), blocks.begin() + static_cast<std::ptrdiff_t>(end));
    start = end;
  }
  std::vector<SemiOrderedStablePartition> out;
  // Odometer over the groups' permutations.
  while (true) {
    out.emplace_back(blocks);
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto first = blocks.begin() + static_cast<std::ptrdiff_t>(groups[g].first);
      auto last = blocks.begin() + static_cast<std::ptrdiff_t>(groups[g].second);
      if (std::next_permutation(first, last)) break;  // wraps to sorted when it returns false
    }
    if (g == groups.size()) break;
  }
  return out;
}

TypeCounts semi_ordered_counts(const Graph& g) {
  TypeCounts counts = count_types(g);
  for (auto& [lambda, count] : counts) count = checked_mul(count, multiplicity_factorial(lambda));
  return counts;
}

std::optional<StablePartition> find_stable_partition_of_type(const Graph& g, const Partition& lambda) {
  check_type_weight(g, lambda);
  std::optional<StablePartition> found;
  auto leaf = [&](const std::vector<VertexSet>& blocks) {
    found.emplace(blocks);
    return false;
  };
  detail::TypedKernel kernel(g, histogram_of(lambda), leaf);
  kernel.run(g.vertices());
  return found;
}

TypeCounts count_types(const Graph& g) {
  std::vector<detail::PrefixTask> tasks;
  std::vector<VertexSet> prefix;
  auto accept_all = [](const std::vector<VertexSet>&, unsigned) { return true; };
  detail::expand_prefixes(g, g.vertices(), kSplitDepth, prefix, accept_all, tasks);

  detail::HistogramCounter total;
  const auto task_count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel
  {
    detail::TypeCountKernel kernel(g);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::ptrdiff_t t = 0; t < task_count; ++t) {
      SizeHistogram h{};
      for (auto b : tasks[static_cast<std::size_t>(t)].blocks) ++h[set_size(b)];
      kernel.set_prefix(h);
      kernel.run(tasks[static_cast<std::size_t>(t)].remaining);
    }
#pragma omp critical(csf_count_types_merge)
    total.merge(kernel.counter());
  }
  return to_type_counts(total);
}

std::uint64_t count_of_type(const Graph& g, const Partition& lambda) {
  check_type_weight(g, lambda);
  const SizeHistogram need = histogram_of(lambda);
  std::vector<detail::PrefixTask> tasks;
  std::vector<VertexSet> prefix;
  auto accept = [&need](const std::vector<VertexSet>& blocks, unsigned size) {
    unsigned used = 0;
    for (auto b : blocks) used += set_size(b) == size;
    return need[size] > used;
  };
  detail::expand_prefixes(g, g.vertices(), kSplitDepth, prefix, accept, tasks);

  std::uint64_t unordered = 0;
  const auto task_count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel
  {
    std::uint64_t local = 0;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::ptrdiff_t t = 0; t < task_count; ++t) {
      const auto& task = tasks[static_cast<std::size_t>(t)];
      SizeHistogram remaining_need = need;
      for (auto b : task.blocks) --remaining_need[set_size(b)];
      CountLeaf leaf;
      detail::TypedKernel kernel(g, remaining_need, leaf);
      kernel.run(task.remaining);
      local += leaf.count;
    }
#pragma omp critical(csf_count_of_type_merge)
    unordered = checked_add(unordered, local);
  }
  return checked_mul(unordered, multiplicity_factorial(lambda));
}

namespace serial {

TypeCounts count_types(const Graph& g) {
  detail::TypeCountKernel kernel(g);
  kernel.run(g.vertices());
  return to_type_counts(kernel.counter());
}

std::uint64_t count_of_type(const Graph& g, const Partition& lambda) {
  check_type_weight(g, lambda);
  CountLeaf leaf;
  detail::TypedKernel kernel(g, histogram_of(lambda), leaf);
  kernel.run(g.vertices());
  return checked_mul(leaf.count, multiplicity_factorial(lambda));
}

}  // namespace serial

}  // namespace csf
