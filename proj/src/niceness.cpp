#include "csf/niceness.hpp"

#include "csf/error.hpp"

namespace csf {

const char* to_string(Property p) { return p == Property::Nice ? "nice" : "strongly_nice"; }

namespace {

void require_nonnegative(const MExpansion& e) {
  for (std::size_t k = 0; k < e.table().size(); ++k)
    if (e.at(k) < 0)
      throw Error(ErrorCode::NegativeCoefficient,
                  "[m_" + e.table()[k].to_string() + "] = " + std::to_string(e.at(k)));
}

bool violates(Property property, std::int64_t coeff_lambda, std::int64_t coeff_mu) {
  if (property == Property::Nice) return coeff_lambda > 0 && coeff_mu <= 0;
  return coeff_mu < coeff_lambda;
}

NicenessVerdict check_covering(const MExpansion& e, Property property) {
  NicenessVerdict verdict{property, true, std::nullopt};
  for (const auto& pair : e.table().covering_pairs()) {
    const auto cl = e[pair.lambda], cm = e[pair.mu];
    if (violates(property, cl, cm)) {
      verdict.holds = false;
      verdict.witness = NicenessWitness{pair.lambda, pair.mu, cl, cm};
      break;
    }
  }
  return verdict;
}

NicenessVerdict check_all_pairs(const MExpansion& e, Property property) {
  NicenessVerdict verdict{property, true, std::nullopt};
  const auto& table = e.table();
  for (std::size_t lambda = 0; lambda < table.size(); ++lambda)
    for (std::size_t mu = lambda + 1; mu < table.size(); ++mu)
      if (table.leq(mu, lambda) && violates(property, e.at(lambda), e.at(mu))) {
        verdict.holds = false;
        verdict.witness = NicenessWitness{table[lambda], table[mu], e.at(lambda), e.at(mu)};
        return verdict;
      }
  return verdict;
}

}  // namespace

NicenessVerdict is_nice(const MExpansion& e) {
  require_nonnegative(e);
  return check_covering(e, Property::Nice);
}

NicenessVerdict is_strongly_nice(const MExpansion& e) { return check_covering(e, Property::StronglyNice); }

NicenessVerdict is_nice_all_pairs(const MExpansion& e) {
  require_nonnegative(e);
  return check_all_pairs(e, Property::Nice);
}

NicenessVerdict is_strongly_nice_all_pairs(const MExpansion& e) { return check_all_pairs(e, Property::StronglyNice); }

NicenessVerdict graph_is_nice(const Graph& g) { return is_nice(csf_m(g)); }
NicenessVerdict graph_is_strongly_nice(const Graph& g) { return is_strongly_nice(csf_m(g)); }

bool implication_chain_check(const SExpansion& e) {
  for (std::size_t k = 0; k < e.table().size(); ++k)
    if (e.at(k) < 0) throw Error(ErrorCode::NegativeCoefficient, "Schur coefficient at " + e.table()[k].to_string());
  const MExpansion m = s_to_m(e);
  const bool strongly = is_strongly_nice(m).holds;
  const bool nice = is_nice(m).holds;
  return strongly && nice;
}

}  // namespace csf
