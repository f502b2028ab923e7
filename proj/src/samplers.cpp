#include "csf/samplers.hpp"

namespace csf {

Graph labeled_graph(unsigned d, std::uint64_t mask) {
  std::vector<Edge> edges;
  unsigned bit = 0;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j, ++bit)
      if ((mask >> bit) & 1u) edges.emplace_back(i, j);
  return Graph(d, edges);
}

Graph random_graph(unsigned d, unsigned percent, Rng& rng) {
  std::vector<Edge> edges;
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j)
      if (uniform_below(rng, 100) < percent) edges.emplace_back(i, j);
  return Graph(d, edges);
}

Graph random_claw_free_graph(unsigned d, Rng& rng) {
  const unsigned percent = 20 + static_cast<unsigned>(uniform_below(rng, 61));
  Graph g = random_graph(d, percent, rng);
  while (auto claw = find_claw(g)) {
    auto edges = g.edges();
    const unsigned a = static_cast<unsigned>(uniform_below(rng, 3));
    const unsigned b = (a + 1 + static_cast<unsigned>(uniform_below(rng, 2))) % 3;
    const unsigned x = claw->leaves[a], y = claw->leaves[b];
    edges.emplace_back(std::min(x, y), std::max(x, y));
    g = Graph(d, edges);
  }
  return g;
}

}  // namespace csf
