#include "csf/io.hpp"

#include "doctest.h"

#include "csf/error.hpp"
#include "csf/samplers.hpp"
#include "csf/verify.hpp"

using namespace csf;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("edge list") {
  const Graph g = parse_edge_list("3 2\n0 1\n2 1\n");
  CHECK(g == gen_path(3));
  CHECK(format_edge_list(g) == "3 2\n0 1\n1 2\n");
  CHECK(parse_edge_list("0 0") == Graph(0, {}));
  CHECK(parse_edge_list("  4 0  \n") == gen_empty(4));
}

TEST_CASE("edge list errors") {
  CHECK(code_of([] { parse_edge_list(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("3"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("3 2\n0 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("3 1\n0 3\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("3 1\n1 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("3 1\n0 1\n1 2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("3 1\n0 x\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("-1 0"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_edge_list("65 0"); }) == ErrorCode::InvalidSize);
}

TEST_CASE("graph6 known strings") {
  CHECK(format_graph6(gen_complete(3)) == "Bw");
  CHECK(format_graph6(gen_path(3)) == "Bg");
  CHECK(format_graph6(gen_complete(4)) == "C~");
  CHECK(format_graph6(Graph(0, {})) == "?");
  CHECK(parse_graph6("?") == Graph(0, {}));
  CHECK(parse_graph6(">>graph6<<Bw\n") == gen_complete(3));
  CHECK(read_graph("Bg") == gen_path(3));
  CHECK(read_graph("\n 3 2 0 1 1 2") == gen_path(3));
}

TEST_CASE("graph6 errors") {
  CHECK(code_of([] { parse_graph6(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph6("Bww"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph6("C"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph6("B "); }) == ErrorCode::ParseError);
  CHECK(code_of([] { format_graph6(gen_empty(63)); }) == ErrorCode::InvalidSize);
}

TEST_CASE("round trips on random graphs") {
  Rng rng(8);
  for (int s = 0; s < 300; ++s) {
    const unsigned d = static_cast<unsigned>(uniform_below(rng, 63));
    const Graph g = random_graph(d, static_cast<unsigned>(uniform_below(rng, 101)), rng);
    CHECK(parse_graph6(format_graph6(g)) == g);
    CHECK(parse_edge_list(format_edge_list(g)) == g);
    CHECK(read_graph(format_graph6(g)) == g);
    CHECK(read_graph(format_edge_list(g)) == g);
  }
}

TEST_CASE("json shapes") {
  CHECK(to_json(Partition{3, 1}) == Json::parse("[3,1]"));
  CHECK(to_json(gen_path(3)) == Json::parse(R"({"vertices":3,"edges":[[0,1],[1,2]]})"));
  CHECK(to_json(StablePartition({0b001, 0b110})) == Json::parse("[[1,2],[0]]"));
  CHECK(to_json(SemiOrderedStablePartition({0b110, 0b001})) == Json::parse("[[1,2],[0]]"));

  CHECK(to_json(csf_m(gen_claw())) ==
        Json::parse(R"({"degree":4,"basis":"m","terms":[{"partition":[3,1],"coeff":1},
                    {"partition":[2,1,1],"coeff":6},{"partition":[1,1,1,1],"coeff":24}]})"));
  CHECK(to_json(SExpansion(2)) == Json::parse(R"({"degree":2,"basis":"s","terms":[]})"));

  CHECK(to_json(graph_is_strongly_nice(gen_claw())) ==
        Json::parse(R"({"property":"strongly_nice","holds":false,
                    "witness":{"lambda":[3,1],"mu":[2,2],"coeff_lambda":1,"coeff_mu":0}})"));
  CHECK(to_json(graph_is_nice(gen_cycle(5))) == Json::parse(R"({"property":"nice","holds":true,"witness":null})"));

  CHECK(claw_verdict_json(gen_claw()) ==
        Json::parse(R"({"property":"claw_free","holds":false,"witness":{"center":0,"leaves":[1,2,3]}})"));
  const auto schur = schur_verdict_json(is_schur_positive(csf_m(strongly_nice_not_schur_positive_graph())));
  CHECK(schur == Json::parse(R"({"property":"schur_positive","holds":false,"witness":{"partition":[2,2,2],"coeff":-4}})"));
}

TEST_CASE("text format") {
  CHECK(format_text(csf_m(gen_claw())) == "m[(3,1)] = 1\nm[(2,1,1)] = 6\nm[(1,1,1,1)] = 24\n");
  CHECK(format_text(csf_m(gen_empty(1))) == "m[(1)] = 1\n");
  CHECK(format_text(MExpansion(3)) == "0\n");
  CHECK(format_text(m_to_s(csf_m(gen_complete(2)))) == "s[(1,1)] = 2\n");
}
