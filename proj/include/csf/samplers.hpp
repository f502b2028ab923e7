#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

/// Graph on d vertices whose edge set is given by `mask` over the pairs
/// (i, j), i < j, in lexicographic order (bit 0 = (0,1)).
Graph labeled_graph(unsigned d, std::uint64_t mask);
inline std::uint64_t labeled_graph_count(unsigned d) { return std::uint64_t{1} << (d * (d - (d ? 1 : 0)) / 2); }

// Draws use raw engine output with modular reduction so a seed reproduces
// the same graphs on any standard library.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

/// G(d, p) with p = percent / 100.
Graph random_graph(unsigned d, unsigned percent, Rng& rng);
/// Random graph made claw-free by repeatedly joining two leaves of the first
/// claw found. Edge density drawn from [20%, 80%].
Graph random_claw_free_graph(unsigned d, Rng& rng);

}  // namespace csf
