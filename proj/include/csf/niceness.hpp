#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "csf/graph.hpp"
#include "csf/partition.hpp"
#include "csf/symfunc.hpp"

namespace csf {

enum class Property { Nice, StronglyNice };

const char* to_string(Property p);

/// A violating pair mu <= lambda (a covering pair from the fast checkers).
struct NicenessWitness {
  Partition lambda;
  Partition mu;
  std::int64_t coeff_lambda = 0;
  std::int64_t coeff_mu = 0;
};

struct NicenessVerdict {
  Property property;
  bool holds = true;
  std::optional<NicenessWitness> witness;
};

/// [m_lambda] > 0 implies [m_mu] > 0 for every covering pair. Throws
/// NegativeCoefficient on a negative m-coefficient.
NicenessVerdict is_nice(const MExpansion& e);
/// [m_mu] >= [m_lambda] for every covering pair. Any sign is allowed.
NicenessVerdict is_strongly_nice(const MExpansion& e);

/// Same predicates over all comparable pairs mu < lambda; O(p(n)^2). Kept as
/// the reference for the covering-pair reduction.
NicenessVerdict is_nice_all_pairs(const MExpansion& e);
NicenessVerdict is_strongly_nice_all_pairs(const MExpansion& e);

NicenessVerdict graph_is_nice(const Graph& g);
NicenessVerdict graph_is_strongly_nice(const Graph& g);

/// For a Schur-nonnegative e: s_to_m(e) is strongly nice, and (its
/// m-coefficients being nonnegative) also nice. Throws NegativeCoefficient if
/// e has a negative coefficient.
bool implication_chain_check(const SExpansion& e);

}  // namespace csf
