#include "csf/io.hpp"

#include <cctype>
#include <sstream>

#include "csf/error.hpp"

namespace csf {

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long d = -1, m = -1;
  if (!(in >> d >> m) || d < 0 || m < 0) throw Error(ErrorCode::ParseError, "edge list must start with 'd m'");
  if (d > static_cast<long long>(kMaxVertices)) throw Error(ErrorCode::InvalidSize, "too many vertices");
  std::vector<Edge> edges;
  for (long long k = 0; k < m; ++k) {
    long long i = -1, j = -1;
    if (!(in >> i >> j)) throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges");
    if (i < 0 || j < 0 || i >= d || j >= d || i == j)
      throw Error(ErrorCode::ParseError, "bad edge " + std::to_string(i) + " " + std::to_string(j));
    edges.emplace_back(static_cast<unsigned>(std::min(i, j)), static_cast<unsigned>(std::max(i, j)));
  }
  std::string rest;
  if (in >> rest) throw Error(ErrorCode::ParseError, "trailing input '" + rest + "'");
  return Graph(static_cast<unsigned>(d), edges);
}

std::string format_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [i, j] : edges) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto nl = text.find('\n'); nl != std::string_view::npos) text = text.substr(0, nl);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126) throw Error(ErrorCode::ParseError, "graph6 byte out of range");
  const unsigned n = static_cast<unsigned char>(text[0]) - 63;
  if (n > 62) throw Error(ErrorCode::ParseError, "graph6 input limited to 62 vertices");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - (n ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != 1 + bytes) throw Error(ErrorCode::ParseError, "graph6 length does not match vertex count");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (unsigned j = 1; j < n; ++j)
    for (unsigned i = 0; i < j; ++i, ++k) {
      const unsigned byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

std::string format_graph6(const Graph& g) {
  const unsigned n = g.vertex_count();
  if (n > 62) throw Error(ErrorCode::InvalidSize, "graph6 output limited to 62 vertices");
  std::string out(1, static_cast<char>(n + 63));
  unsigned acc = 0, filled = 0;
  for (unsigned j = 1; j < n; ++j)
    for (unsigned i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = filled = 0;
      }
    }
  if (filled) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph read_graph(std::string_view text) {
  std::size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) return parse_edge_list(text);
  return parse_graph6(text.substr(k));
}

Json to_json(const Partition& p) { return Json(std::vector<Partition::Part>(p.parts().begin(), p.parts().end())); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  Json out{{"vertices", g.vertex_count()}, {"edges", edges}};
  if (g.has_names()) out["names"] = g.names();
  return out;
}

namespace {
Json blocks_json(std::span<const VertexSet> blocks) {
  Json out = Json::array();
  for (auto b : blocks) out.push_back(members(b));
  return out;
}
}  // namespace

Json to_json(const StablePartition& p) { return blocks_json(p.blocks()); }
Json to_json(const SemiOrderedStablePartition& p) { return blocks_json(p.blocks()); }

Json to_json(const NicenessVerdict& v) {
  Json witness = nullptr;
  if (v.witness)
    witness = {{"lambda", to_json(v.witness->lambda)},
               {"mu", to_json(v.witness->mu)},
               {"coeff_lambda", v.witness->coeff_lambda},
               {"coeff_mu", v.witness->coeff_mu}};
  return {{"property", to_string(v.property)}, {"holds", v.holds}, {"witness", witness}};
}

Json to_json(const InjectionReport& r) {
  return {{"lambda", to_json(r.lambda)},
          {"mu", to_json(r.mu)},
          {"sources", r.source_count},
          {"images", r.image_count},
          {"targets", r.target_count},
          {"checks",
           {{"type_correct", r.type_correct},
            {"images_distinct", r.images_distinct},
            {"left_inverse", r.left_inverse},
            {"union_preserved", r.union_preserved},
            {"count_inequality", r.count_inequality}}},
          {"passed", r.passed()},
          {"first_counterexample", r.first_counterexample ? Json(*r.first_counterexample) : Json(nullptr)}};
}

Json claw_verdict_json(const Graph& g) {
  const auto claw = find_claw(g);
  Json witness = nullptr;
  if (claw) witness = {{"center", claw->center}, {"leaves", {claw->leaves[0], claw->leaves[1], claw->leaves[2]}}};
  return {{"property", "claw_free"}, {"holds", !claw}, {"witness", witness}};
}

Json schur_verdict_json(const SchurPositivity& s) {
  Json witness = nullptr;
  if (s.witness) witness = {{"partition", to_json(*s.witness)}, {"coeff", s.witness_coeff}};
  return {{"property", "schur_positive"}, {"holds", s.positive}, {"witness", witness}};
}

}  // namespace csf
