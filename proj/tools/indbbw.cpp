#include "indbbw/problem.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Limit cohomology of homogeneous bundles on ind-varieties"};
  app.require_subcommand(1, 1);

  std::string input;
  std::string output;
  std::optional<int> probe_levels;
  std::optional<std::int64_t> dim_cap;
  bool timing = false;

  for (const auto& name : indbbw::cli::kCommands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input,-i", input, "problem JSON file")->check(CLI::ExistingFile);
    sub->add_option("--output,-o", output, "write the report here instead of stdout");
    sub->add_option("--probe-levels", probe_levels, "levels probed past the start of a family");
    sub->add_option("--dim-cap", dim_cap, "largest dimension branched explicitly");
    sub->add_flag("--timing", timing, "add wall-clock time to the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::optional<std::string> text;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "error: cannot read " << input << "\n";
      return 1;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }

  const auto result = indbbw::cli::run(command, text, {probe_levels, dim_cap, timing});
  if (!result.diagnostic.empty())
    std::cerr << result.diagnostic << "\n";
  if (result.report.empty())
    return result.exit_code;
  if (output.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream out(output);
    out << result.report;
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return 1;
    }
  }
  return result.exit_code;
}
