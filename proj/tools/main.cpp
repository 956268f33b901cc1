#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballproj/request.hpp"

namespace {

int emit(const ballproj::RunOutput& out, const std::string& output_path) {
  std::string body = out.body;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (output_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file '" << output_path << "'\n";
      return 2;
    }
    f << body;
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Metric projection onto closed balls: values, directional and graphical "
      "derivatives, regular coderivative sets, and definition-level "
      "verification.\n\nReads a JSON request ({\"command\": ...}) from --input "
      "or stdin and writes the response to --output or stdout."};

  std::string input_path;
  std::string output_path;
  std::uint64_t seed_value = 0;
  double tol_value = 0.0;
  auto* seed_opt = app.add_option("--seed", seed_value,
                                  "override the request seed (verify command)");
  auto* tol_opt = app.add_option(
      "--tol", tol_value, "override the classification tolerance (> 0)");
  app.add_option("--input", input_path,
                 "read the JSON request from FILE instead of stdin");
  app.add_option("--output", output_path,
                 "write the response to FILE instead of stdout");

  auto* verify_cmd =
      app.add_subcommand("verify", "run a verification suite directly");
  verify_cmd->fallthrough();  // let --seed/--output follow the subcommand
  std::string suite = "all";
  long count = -1;
  verify_cmd->add_option("suite", suite, "examples|oracle|properties|all");
  verify_cmd->add_option("--count", count,
                         "instances for the randomized suites");

  CLI11_PARSE(app, argc, argv);

  ballproj::RunOverrides overrides;
  if (seed_opt->count() > 0) overrides.seed = seed_value;
  if (tol_opt->count() > 0) overrides.tol = tol_value;

  if (*verify_cmd) {
    nlohmann::json req{{"command", "verify"}, {"suite", suite}};
    if (count > 0) req["count"] = count;
    return emit(ballproj::run_request(req, overrides), output_path);
  }

  std::string text;
  if (!input_path.empty()) {
    std::ifstream f(input_path, std::ios::binary);
    if (!f) {
      nlohmann::json err{
          {"ok", false},
          {"error",
           {{"code", "invalid_argument"},
            {"message", "cannot open input file '" + input_path + "'"}}}};
      return emit(ballproj::RunOutput{2, err.dump(), false}, output_path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }

  return emit(ballproj::run_request_text(text, overrides), output_path);
}
