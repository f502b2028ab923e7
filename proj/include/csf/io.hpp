#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "csf/graph.hpp"
#include "csf/injection.hpp"
#include "csf/niceness.hpp"
#include "csf/stable.hpp"
#include "csf/symfunc.hpp"

namespace csf {

using Json = nlohmann::json;

// Edge list: "d m" then m lines "i j". Endpoints may come in either order;
// output always has i < j.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// graph6, up to 62 vertices.
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

/// Edge list when the first token is a number, graph6 otherwise.
Graph read_graph(std::string_view text);

Json to_json(const Partition& p);
Json to_json(const Graph& g);
Json to_json(const StablePartition& p);
Json to_json(const SemiOrderedStablePartition& p);
Json to_json(const NicenessVerdict& v);
Json to_json(const InjectionReport& r);
Json claw_verdict_json(const Graph& g);
Json schur_verdict_json(const SchurPositivity& s);

template <Basis B>
Json to_json(const Expansion<B>& e) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < e.table().size(); ++k)
    if (e.at(k)) terms.push_back({{"partition", to_json(e.table()[k])}, {"coeff", e.at(k)}});
  return {{"degree", e.degree()}, {"basis", B == Basis::Monomial ? "m" : "s"}, {"terms", terms}};
}

/// One "m[(3,1)] = 1" line per nonzero term, reverse-lex order; "0" when zero.
template <Basis B>
std::string format_text(const Expansion<B>& e) {
  std::string out;
  const char letter = B == Basis::Monomial ? 'm' : 's';
  for (std::size_t k = 0; k < e.table().size(); ++k)
    if (e.at(k)) out += std::string(1, letter) + "[" + e.table()[k].to_string() + "] = " + std::to_string(e.at(k)) + "\n";
  return out.empty() ? "0\n" : out;
}

}  // namespace csf
