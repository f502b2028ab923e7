#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace csf {

/// Vertex subsets are single 64-bit words: bit v set iff vertex v is present.
using VertexSet = std::uint64_t;
using Edge = std::pair<unsigned, unsigned>;

inline constexpr unsigned kMaxVertices = 64;

inline unsigned set_size(VertexSet s) noexcept { return static_cast<unsigned>(std::popcount(s)); }
inline unsigned lowest_vertex(VertexSet s) noexcept { return static_cast<unsigned>(std::countr_zero(s)); }
inline constexpr VertexSet singleton(unsigned v) noexcept { return VertexSet{1} << v; }
inline constexpr VertexSet first_n(unsigned n) noexcept { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
std::vector<unsigned> members(VertexSet s);

/// Finite simple graph on vertices 0..d-1 with one adjacency bit-row per
/// vertex. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidSize above kMaxVertices, VertexOutOfRange for a bad
  /// endpoint, InvalidSize for a loop. Duplicate edges are merged.
  Graph(unsigned vertex_count, std::span<const Edge> edges, std::vector<std::string> names = {});
  Graph(unsigned vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  unsigned vertex_count() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return first_n(n_); }
  VertexSet neighbors(unsigned v) const { return rows_.at(v); }
  bool adjacent(unsigned u, unsigned v) const { return (rows_.at(u) >> v) & 1u; }
  unsigned degree(unsigned v) const { return set_size(rows_.at(v)); }
  std::size_t edge_count() const noexcept;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Display name; the numeric label when no names were given.
  std::string name(unsigned v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  unsigned n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::string> names_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for vertices outside the set
};

/// Vertices renumbered by increasing old label. Throws VertexOutOfRange.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

struct ClawWitness {
  unsigned center;
  unsigned leaves[3];
};

/// First claw found scanning centers and leaf triples in increasing order.
std::optional<ClawWitness> find_claw(const Graph& g);
inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

/// Finite poset on 0..k-1; bit b of row a means a <= b.
class Poset {
 public:
  /// Throws InvalidPoset unless the relation is reflexive, antisymmetric and
  /// transitive, InvalidSize above kMaxVertices.
  Poset(unsigned element_count, std::vector<VertexSet> up_sets, std::vector<std::string> names = {});

  unsigned element_count() const noexcept { return n_; }
  bool leq(unsigned a, unsigned b) const { return (up_.at(a) >> b) & 1u; }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  unsigned n_;
  std::vector<VertexSet> up_;
  std::vector<std::string> names_;
};

Graph incomparability_graph(const Poset& p);

// Generators. Labels are deterministic; InvalidSize on bad parameters.
Graph gen_claw();
Graph gen_cycle(unsigned n);
Graph gen_path(unsigned n);
Graph gen_complete(unsigned n);
Graph gen_complete_bipartite(unsigned m, unsigned n);
Graph gen_empty(unsigned n);
/// Sq(2n-1; 1^n): u = 0, u_k = k for 1 <= k <= 2n-2, v_k = 2n-2+k.
Graph gen_squid(unsigned n);
/// Subsets of {1..n} as bit masks ordered by inclusion. Element a is the
/// subset with bit mask a. n <= 6 (64 elements, the bit-row cap).
Poset gen_boolean_lattice(unsigned n);
Poset gen_chain(unsigned k);
Poset gen_antichain(unsigned k);

}  // namespace csf
