#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "blowdown/chain_tools.hpp"
#include "blowdown/errors.hpp"
#include "blowdown/report.hpp"
#include "blowdown/scenario.hpp"

namespace {

bool color_enabled() {
  const char* v = std::getenv("BLOWDOWN_LAB_COLOR");
  return v != nullptr && std::string(v) == "1";
}

int verify(const std::vector<std::string>& files, const std::string& format) {
  std::vector<blowdown::Scenario> loaded;
  std::vector<int> slot(files.size(), -1);
  std::vector<blowdown::Report> reports(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    try {
      loaded.push_back(blowdown::load_scenario(files[i]));
      slot[i] = static_cast<int>(loaded.size() - 1);
    } catch (const blowdown::InputError& e) {
      reports[i] = blowdown::input_failure(files[i], e.what());
    }
  }
  std::vector<blowdown::Report> ran = blowdown::run_all(loaded);
  for (std::size_t i = 0; i < files.size(); ++i)
    if (slot[i] >= 0) reports[i] = std::move(ran[static_cast<std::size_t>(slot[i])]);

  int code = 0;
  for (const auto& r : reports) code = std::max(code, r.exit_code());

  if (format == "json") {
    nlohmann::ordered_json out;
    if (reports.size() == 1) {
      out = blowdown::report_json(reports[0]);
    } else {
      out = nlohmann::ordered_json::array();
      for (const auto& r : reports) out.push_back(blowdown::report_json(r));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    const bool color = color_enabled();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << blowdown::report_text(reports[i], color);
    }
  }
  return code;
}

int graph(const std::string& file) {
  const blowdown::Scenario s = blowdown::load_scenario(file);
  std::cout << blowdown::to_dot(blowdown::build_configuration(s));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of rational blow-down constructions"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify", "Run scenario files and compare with their expected blocks");
  std::vector<std::string> files;
  std::string format = "text";
  verify_cmd->add_option("files", files, "Scenario files")->required();
  verify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* chain_cmd = app.add_subcommand("chain", "Hirzebruch-Jung chain utilities");
  chain_cmd->require_subcommand(1);
  std::string chain_arg, p_arg, q_arg;
  std::size_t max_len = 6;
  bool no_rdp = false;
  auto* classify = chain_cmd->add_subcommand("classify", "p, q and class-T data of a chain");
  classify->add_option("chain", chain_arg, "e.g. 7,3,2,2,2,2")->required();
  auto* expand = chain_cmd->add_subcommand("expand", "Chain of the cyclic quotient p/q");
  expand->add_option("p", p_arg)->required();
  expand->add_option("q", q_arg)->required();
  auto* homology = chain_cmd->add_subcommand("homology", "Boundary and Milnor fibre H1");
  homology->add_option("chain", chain_arg)->required();
  auto* enumerate = chain_cmd->add_subcommand("enumerate", "All class-T chains up to a length");
  enumerate->add_option("--max-len", max_len, "Maximum chain length (<= 12)");
  enumerate->add_flag("--no-rdp", no_rdp, "Omit [2,...,2] chains");

  auto* graph_cmd = app.add_subcommand("graph", "Export the dual graph after blow-ups");
  std::string graph_file;
  bool dot = false;
  graph_cmd->add_option("file", graph_file)->required();
  graph_cmd->add_flag("--dot", dot, "DOT output (the only format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) return verify(files, format);
    if (*graph_cmd) return graph(graph_file);
    if (*classify) std::cout << blowdown::chain_classify_text(chain_arg) << "\n";
    if (*expand) std::cout << blowdown::chain_expand_text(p_arg, q_arg) << "\n";
    if (*homology) std::cout << blowdown::chain_homology_text(chain_arg) << "\n";
    if (*enumerate) std::cout << blowdown::chain_enumerate_text(max_len, !no_rdp);
  } catch (const blowdown::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const blowdown::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
