#include "csf/graph.hpp"

#include <algorithm>

#include "csf/error.hpp"

namespace csf {

std::vector<unsigned> members(VertexSet s) {
  std::vector<unsigned> out;
  out.reserve(set_size(s));
  for (; s; s &= s - 1) out.push_back(lowest_vertex(s));
  return out;
}

Graph::Graph(unsigned vertex_count, std::span<const Edge> edges, std::vector<std::string> names)
    : n_(vertex_count), rows_(vertex_count, 0), names_(std::move(names)) {
  if (vertex_count > kMaxVertices)
    throw Error(ErrorCode::InvalidSize, "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  if (!names_.empty() && names_.size() != n_) throw Error(ErrorCode::InvalidSize, "name count differs from vertex count");
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_)
      throw Error(ErrorCode::VertexOutOfRange, "edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw Error(ErrorCode::InvalidSize, "loop at vertex " + std::to_string(u));
    rows_[u] |= singleton(v);
    rows_[v] |= singleton(u);
  }
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto row : rows_) twice += set_size(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (unsigned u = 0; u < n_; ++u)
    for (unsigned v : members(rows_[u] & ~first_n(u + 1))) out.emplace_back(u, v);
  return out;
}

std::string Graph::name(unsigned v) const {
  if (v >= n_) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
  return names_.empty() ? std::to_string(v) : names_[v];
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw Error(ErrorCode::VertexOutOfRange, "subset exceeds vertex range");
  std::vector<int> old_to_new(g.vertex_count(), -1);
  std::vector<std::string> names;
  int next = 0;
  for (unsigned v : members(s)) {
    old_to_new[v] = next++;
    if (g.has_names()) names.push_back(g.names()[v]);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
      edges.emplace_back(static_cast<unsigned>(old_to_new[u]), static_cast<unsigned>(old_to_new[v]));
  return {Graph(static_cast<unsigned>(next), edges, std::move(names)), std::move(old_to_new)};
}

std::optional<ClawWitness> find_claw(const Graph& g) {
  for (unsigned c = 0; c < g.vertex_count(); ++c) {
    const VertexSet nbrs = g.neighbors(c);
    if (set_size(nbrs) < 3) continue;
    for (unsigned a : members(nbrs)) {
      // b, x later than a, both non-adjacent to a
      const VertexSet after_a = nbrs & ~first_n(a + 1) & ~g.neighbors(a);
      for (unsigned b : members(after_a)) {
        const VertexSet third = after_a & ~first_n(b + 1) & ~g.neighbors(b);
        if (third) return ClawWitness{c, {a, b, lowest_vertex(third)}};
      }
    }
  }
  return std::nullopt;
}

Poset::Poset(unsigned element_count, std::vector<VertexSet> up_sets, std::vector<std::string> names)
    : n_(element_count), up_(std::move(up_sets)), names_(std::move(names)) {
  if (n_ > kMaxVertices) throw Error(ErrorCode::InvalidSize, "posets are limited to 64 elements");
  if (up_.size() != n_) throw Error(ErrorCode::InvalidPoset, "relation has wrong row count");
  for (unsigned a = 0; a < n_; ++a) {
    if (up_[a] & ~first_n(n_)) throw Error(ErrorCode::InvalidPoset, "relation row out of range");
    if (!leq(a, a)) throw Error(ErrorCode::InvalidPoset, "not reflexive at " + std::to_string(a));
    for (unsigned b : members(up_[a])) {
      if (b != a && leq(b, a))
        throw Error(ErrorCode::InvalidPoset, "not antisymmetric: " + std::to_string(a) + ", " + std::to_string(b));
      if ((up_[b] & ~up_[a]) != 0)
        throw Error(ErrorCode::InvalidPoset, "not transitive through " + std::to_string(b));
    }
  }
}

Graph incomparability_graph(const Poset& p) {
  std::vector<Edge> edges;
  for (unsigned a = 0; a < p.element_count(); ++a)
    for (unsigned b = a + 1; b < p.element_count(); ++b)
      if (!p.leq(a, b) && !p.leq(b, a)) edges.emplace_back(a, b);
  return Graph(p.element_count(), edges, p.names());
}

Graph gen_claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph gen_cycle(unsigned n) {
  if (n < 3) throw Error(ErrorCode::InvalidSize, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (unsigned i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph gen_path(unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (unsigned i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph gen_complete(unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph gen_complete_bipartite(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidSize, "both sides need at least 1 vertex");
  std::vector<Edge> edges;
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph(m + n, edges);
}

Graph gen_empty(unsigned n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "empty graph needs at least 1 vertex");
  return Graph(n, std::span<const Edge>{});
}

Graph gen_squid(unsigned n) {
  if (n < 2) throw Error(ErrorCode::InvalidSize, "squid needs n >= 2");
  const unsigned cycle = 2 * n - 1;
  std::vector<Edge> edges;
  std::vector<std::string> names{"u"};
  for (unsigned k = 1; k < cycle; ++k) names.push_back("u_" + std::to_string(k));
  for (unsigned k = 1; k <= n; ++k) names.push_back("v_" + std::to_string(k));
  for (unsigned k = 0; k + 1 < cycle; ++k) edges.emplace_back(k, k + 1);
  edges.emplace_back(0, cycle - 1);
  for (unsigned k = 1; k <= n; ++k) edges.emplace_back(0, cycle - 1 + k);
  return Graph(3 * n - 1, edges, std::move(names));
}

Poset gen_boolean_lattice(unsigned n) {
  if (n > 16) throw Error(ErrorCode::InvalidSize, "Boolean lattice order must be <= 16");
  const unsigned size = 1u << n;
  if (size > kMaxVertices) throw Error(ErrorCode::InvalidSize, "B_n with 2^n > 64 elements exceeds the bit-row cap");
  std::vector<VertexSet> up(size, 0);
  std::vector<std::string> names;
  for (unsigned a = 0; a < size; ++a) {
    for (unsigned b = 0; b < size; ++b)
      if ((a & ~b) == 0) up[a] |= singleton(b);
    std::string name = "{";
    for (unsigned e = 0; e < n; ++e)
      if (a >> e & 1u) name += (name.size() > 1 ? "," : "") + std::to_string(e + 1);
    names.push_back(name + "}");
  }
  return Poset(size, std::move(up), std::move(names));
}

Poset gen_chain(unsigned k) {
  std::vector<VertexSet> up(k);
  for (unsigned a = 0; a < k; ++a) up[a] = first_n(k) & ~first_n(a);
  return Poset(k, std::move(up));
}

Poset gen_antichain(unsigned k) {
  std::vector<VertexSet> up(k);
  for (unsigned a = 0; a < k; ++a) up[a] = singleton(a);
  return Poset(k, std::move(up));
}

}  // namespace csf
