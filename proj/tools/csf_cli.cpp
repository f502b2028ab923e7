// csf: chromatic symmetric functions, niceness checks, generators and the
// reproduction suites.
//
// Exit codes: 0 property holds / success, 1 property fails, 2 input or usage
// error, 3 size guard refusal.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "csf/error.hpp"
#include "csf/io.hpp"
#include "csf/verify.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;
constexpr int kSizeGuard = 3;

struct GraphInput {
  std::string path = "-";
  unsigned max_vertices = 24;
};

csf::Graph load_graph(const GraphInput& in) {
  std::string text;
  if (in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(in.path);
    if (!file) throw csf::Error(csf::ErrorCode::ParseError, "cannot open " + in.path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  csf::Graph g = csf::read_graph(text);
  if (g.vertex_count() > in.max_vertices)
    throw csf::Error(csf::ErrorCode::InvalidSize, std::to_string(g.vertex_count()) + " vertices exceeds --max-vertices " +
                                                       std::to_string(in.max_vertices));
  return g;
}

int exit_code_for(const csf::Error& e) {
  switch (e.code()) {
    case csf::ErrorCode::CountOverflow:
    case csf::ErrorCode::OracleTooLarge:
    case csf::ErrorCode::InvalidSize:
      return kSizeGuard;
    default:
      return kInputError;
  }
}

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("input", in.path, "Graph file (edge list or graph6), '-' for stdin")->capture_default_str();
  cmd->add_option("--max-vertices", in.max_vertices, "Refuse larger graphs (exit 3)")->capture_default_str();
}

csf::Graph generate(const std::string& family, const std::vector<unsigned>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw csf::Error(csf::ErrorCode::ParseError, family + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (family == "claw") return need(0), csf::gen_claw();
  if (family == "cycle") return need(1), csf::gen_cycle(params[0]);
  if (family == "path") return need(1), csf::gen_path(params[0]);
  if (family == "complete") return need(1), csf::gen_complete(params[0]);
  if (family == "empty") return need(1), csf::gen_empty(params[0]);
  if (family == "squid") return need(1), csf::gen_squid(params[0]);
  if (family == "kbipartite") return need(2), csf::gen_complete_bipartite(params[0], params[1]);
  if (family == "inc-boolean") return need(1), csf::incomparability_graph(csf::gen_boolean_lattice(params[0]));
  throw csf::Error(csf::ErrorCode::ParseError, "unknown family '" + family + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic symmetric functions, nice / strongly nice / Schur positivity checks"};
  app.require_subcommand(1);

  GraphInput csf_in;
  std::string basis = "m", csf_format = "text";
  auto* csf_cmd = app.add_subcommand("csf", "Print X_G in the monomial or Schur basis");
  add_graph_input(csf_cmd, csf_in);
  csf_cmd->add_option("--basis", basis)->check(CLI::IsMember({"m", "s"}))->capture_default_str();
  csf_cmd->add_option("--format", csf_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  GraphInput check_in;
  std::string property;
  auto* check_cmd = app.add_subcommand("check", "Decide a property; exit 0 if it holds, 1 if not");
  add_graph_input(check_cmd, check_in);
  check_cmd->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"nice", "strongly-nice", "schur-positive", "claw-free"}));
  check_cmd->add_option("--format", csf_format)->check(CLI::IsMember({"text", "json"}));

  std::string family, gen_format = "edges";
  std::vector<unsigned> params;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
  gen_cmd->add_option("family", family, "claw|cycle|path|complete|empty|squid|kbipartite|inc-boolean")->required();
  gen_cmd->add_option("params", params, "Family parameters");
  gen_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"edges", "graph6", "json"}))->capture_default_str();

  std::string suite;
  std::string verify_format = "text";
  csf::VerifyOptions options;
  auto* verify_cmd = app.add_subcommand("verify", "Run a reproduction suite");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();
  verify_cmd->add_option("--max-n", options.max_n, "Largest squid parameter")->capture_default_str();
  verify_cmd->add_option("--seed", options.seed, "Seed for random graphs")->capture_default_str();
  verify_cmd->add_option("--samples", options.samples, "Random samples for lemma22")->capture_default_str();
  verify_cmd->add_flag("--allow-slow", options.allow_slow, "Enable squid n >= 5 and inc(B_4) (minutes)");
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*csf_cmd) {
      const auto g = load_graph(csf_in);
      const auto m = csf::csf_m(g);
      if (basis == "m")
        std::cout << (csf_format == "json" ? csf::to_json(m).dump() + "\n" : csf::format_text(m));
      else {
        const auto s = csf::m_to_s(m);
        std::cout << (csf_format == "json" ? csf::to_json(s).dump() + "\n" : csf::format_text(s));
      }
      return kHolds;
    }
    if (*check_cmd) {
      const auto g = load_graph(check_in);
      csf::Json verdict;
      if (property == "claw-free")
        verdict = csf::claw_verdict_json(g);
      else if (property == "schur-positive")
        verdict = csf::schur_verdict_json(csf::is_schur_positive(csf::csf_m(g)));
      else if (property == "nice")
        verdict = csf::to_json(csf::graph_is_nice(g));
      else
        verdict = csf::to_json(csf::graph_is_strongly_nice(g));
      std::cout << verdict.dump() << "\n";
      return verdict["holds"].get<bool>() ? kHolds : kFails;
    }
    if (*gen_cmd) {
      const auto g = generate(family, params);
      if (gen_format == "graph6")
        std::cout << csf::format_graph6(g) << "\n";
      else if (gen_format == "json")
        std::cout << csf::to_json(g).dump() << "\n";
      else
        std::cout << csf::format_edge_list(g);
      return kHolds;
    }
    if (*verify_cmd) {
      const auto reports = csf::run_suites(suite, options);
      bool all = true;
      csf::Json list = csf::Json::array();
      for (const auto& r : reports) {
        all = all && r.passed();
        if (verify_format == "json")
          list.push_back(r.to_json());
        else
          std::cout << r.to_text();
      }
      if (verify_format == "json") std::cout << csf::Json{{"passed", all}, {"suites", list}}.dump(2) << "\n";
      return all ? kHolds : kFails;
    }
  } catch (const csf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
