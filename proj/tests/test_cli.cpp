#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ballproj/json_io.hpp"
#include "ballproj/request.hpp"

using Json = nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed binary with the request on stdin.
CliResult run_cli(const std::string& args, const std::string& stdin_text) {
  static int counter = 0;
  const std::string in_path = "cli_in_" + std::to_string(counter) + ".json";
  const std::string out_path = "cli_out_" + std::to_string(counter) + ".txt";
  ++counter;
  {
    std::ofstream f(in_path, std::ios::binary);
    f << stdin_text;
  }
  const std::string cmd = std::string(BALLPROJ_CLI_PATH) + " " + args + " < " +
                          in_path + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream f(out_path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("project command") {
  const CliResult r = run_cli(
      "", R"({"command":"project","ball":{"center":[0,0],"radius":1},"x":[3,4]})");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["result"][0].get<double>() == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(j["result"][1].get<double>() == doctest::Approx(0.8).epsilon(1e-14));
}

TEST_CASE("coderivative command emits the segment endpoints") {
  const CliResult r = run_cli(
      "", R"({"command":"coderivative","ball":{"center":[0],"radius":1},"x":[1],"y":[-2]})");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["result"]["tag"] == "segment");
  CHECK(j["result"]["endpoints"] == Json::parse("[[-2.0],[0.0]]"));
}

TEST_CASE("graphical command emits a singleton set") {
  const CliResult r = run_cli(
      "", R"({"command":"graphical","ball":{"center":[0],"radius":1},"x":[1],"y":[3]})");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["tag"] == "singleton");
  CHECK(j["result"]["value"] == Json::parse("[0.0]"));
}

TEST_CASE("gateaux command returns the derivative vector") {
  const CliResult r = run_cli(
      "",
      R"({"command":"gateaux","ball":{"center":[0,0],"radius":1},"x":[0,2],"u":[1,1]})");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"] == Json::parse("[0.5,0.0]"));
}

TEST_CASE("membership honors an explicit eps") {
  const CliResult r = run_cli(
      "",
      R"({"command":"membership","ball":{"center":[0,0],"radius":1},"x":[1,0],"y":[-1,1],"z":[0.0,1.05],"eps":0.1})");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["member"] == true);
  CHECK(j["result"]["distance"].get<double>() == doctest::Approx(0.05).epsilon(1e-9));

  const CliResult tight = run_cli(
      "",
      R"({"command":"membership","ball":{"center":[0,0],"radius":1},"x":[1,0],"y":[-1,1],"z":[0.0,1.05],"eps":0.001})");
  CHECK(Json::parse(tight.out)["result"]["member"] == false);
}

TEST_CASE("sweep2d segment endpoints") {
  const ballproj::RunOutput out = ballproj::run_request(Json::parse(
      R"({"command":"sweep2d","ball":{"center":[0,0],"radius":1},"grid":{"x":[-1,1],"y":[-1,1],"step":1},"quantity":"segment-endpoints","y":[0,1]})"));
  REQUIRE(out.exit_code == 0);
  std::istringstream lines(out.body);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x1,x2,region,end1_1,end1_2,end2_1,end2_2");
  bool saw_segment = false, saw_empty = false, saw_singleton = false;
  while (std::getline(lines, line)) {
    if (line.rfind("0,-1,boundary,", 0) == 0) {
      // <y, x-c> = -1: the segment runs from y to its orthogonal part 0.
      CHECK(line == "0,-1,boundary,0,1,0,0");
      saw_segment = true;
    }
    if (line.rfind("0,1,boundary,", 0) == 0) {
      CHECK(line == "0,1,boundary,nan,nan,nan,nan");
      saw_empty = true;
    }
    if (line.rfind("0,0,interior,", 0) == 0) {
      // Interior singleton {y}: both endpoints coincide.
      CHECK(line == "0,0,interior,0,1,0,1");
      saw_singleton = true;
    }
  }
  CHECK(saw_segment);
  CHECK(saw_empty);
  CHECK(saw_singleton);
}

TEST_CASE("classify and membership commands") {
  {
    const CliResult r = run_cli(
        "", R"({"command":"classify","ball":{"center":[0,0],"radius":1},"x":[1,0]})");
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.out)["result"]["tag"] == "boundary");
  }
  {
    const CliResult r = run_cli(
        "",
        R"({"command":"membership","ball":{"center":[0,0],"radius":1},"x":[1,0],"y":[-1,1],"z":[0,1]})");
    CHECK(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["result"]["member"] == true);
    CHECK(j["result"]["set"]["tag"] == "segment");
  }
}

TEST_CASE("input errors exit with code 2") {
  {
    const CliResult r = run_cli("", "{not json");
    CHECK(r.exit_code == 2);
    const Json j = Json::parse(r.out);
    CHECK(j["ok"] == false);
    CHECK(j["error"]["code"] == "invalid_argument");
  }
  {
    const CliResult r = run_cli(
        "", R"({"command":"project","ball":{"center":[0,0],"radius":1},"x":[1]})");
    CHECK(r.exit_code == 2);
    CHECK(Json::parse(r.out)["error"]["code"] == "dimension_mismatch");
  }
  {
    const CliResult r = run_cli(
        "", R"({"command":"frechet","ball":{"center":[0,0],"radius":1},"x":[1,0]})");
    CHECK(r.exit_code == 2);
    CHECK(Json::parse(r.out)["error"]["code"] == "not_differentiable");
  }
  {
    const CliResult r = run_cli(
        "",
        R"({"command":"sweep2d","ball":{"center":[0],"radius":1},"grid":{"x":[-1,1],"y":[-1,1],"step":0.5},"quantity":"region"})");
    CHECK(r.exit_code == 2);
    CHECK(Json::parse(r.out)["error"]["code"] == "invalid_argument");
  }
}

TEST_CASE("sweep2d region grid") {
  const CliResult r = run_cli(
      "",
      R"({"command":"sweep2d","ball":{"center":[0,0],"radius":1},"grid":{"x":[-2,2],"y":[-2,2],"step":0.5},"quantity":"region"})");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 82);  // header + 9x9 grid
  CHECK(rows[0] == "x1,x2,region,gap");
  int interior = 0, boundary = 0, exterior = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].find(",interior,") != std::string::npos) ++interior;
    if (rows[i].find(",boundary,") != std::string::npos) ++boundary;
    if (rows[i].find(",exterior,") != std::string::npos) ++exterior;
  }
  // (0,0), four at distance 0.5, four at distance sqrt(0.5); the four unit
  // axis points sit on the sphere.
  CHECK(interior == 9);
  CHECK(boundary == 4);
  CHECK(exterior == 68);
  // Row-major order: the first data row is the corner (-2, -2).
  CHECK(rows[1].rfind("-2,-2,", 0) == 0);
}

TEST_CASE("sweep2d emptiness matches the boundary predicate") {
  // Boundary grid points with <y, x-c> > 0 and only those are empty.
  const ballproj::RunOutput out = ballproj::run_request(Json::parse(
      R"({"command":"sweep2d","ball":{"center":[0,0],"radius":1},"grid":{"x":[-2,2],"y":[-2,2],"step":0.5},"quantity":"coderivative-emptiness","y":[0,1]})"));
  REQUIRE(out.exit_code == 0);
  std::istringstream lines(out.body);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x1,x2,region,empty");
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string x1s, x2s, region, empty;
    std::getline(cells, x1s, ',');
    std::getline(cells, x2s, ',');
    std::getline(cells, region, ',');
    std::getline(cells, empty, ',');
    const double x2 = std::stod(x2s);
    if (region == "boundary") {
      CHECK(empty == (x2 > 0.0 ? "1" : "0"));
    } else {
      CHECK(empty == "0");
    }
  }
}

TEST_CASE("sweep2d gateaux field echoes u on interior rows") {
  const ballproj::RunOutput out = ballproj::run_request(Json::parse(
      R"({"command":"sweep2d","ball":{"center":[0,0],"radius":1},"grid":{"x":[-2,2],"y":[-2,2],"step":0.5},"quantity":"gateaux-field","u":[1,0]})"));
  REQUIRE(out.exit_code == 0);
  std::istringstream lines(out.body);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x1,x2,region,g1,g2");
  while (std::getline(lines, line)) {
    if (line.find(",interior,") != std::string::npos) {
      CHECK(line.substr(line.find(",interior,")) == ",interior,1,0");
    }
  }
}

TEST_CASE("identical requests give byte-identical output") {
  const std::string req =
      R"({"command":"coderivative","ball":{"center":[0.3,-1.2],"radius":1.7},"x":[1.0,0.1],"y":[-0.4,0.9]})";
  const CliResult a = run_cli("", req);
  const CliResult b = run_cli("", req);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const std::string verify_req = R"({"command":"verify","suite":"oracle","seed":5,"count":10})";
  const CliResult va = run_cli("", verify_req);
  const CliResult vb = run_cli("", verify_req);
  CHECK(va.exit_code == 0);
  CHECK(va.out == vb.out);
}

TEST_CASE("tolerance override moves the classification band") {
  // Gap of 1e-6 is exterior at the default tolerance, boundary at 1e-3.
  const std::string req =
      R"({"command":"classify","ball":{"center":[0,0],"radius":1},"x":[1.000001,0]})";
  CHECK(Json::parse(run_cli("", req).out)["result"]["tag"] == "exterior");
  CHECK(Json::parse(run_cli("--tol 1e-3", req).out)["result"]["tag"] == "boundary");
}

TEST_CASE("verify examples suite passes through the binary") {
  const CliResult r = run_cli("verify examples", "");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["result"]["passed"] == true);
  CHECK(j["result"]["total_failures"] == 0);
  CHECK(j["result"]["suites"].size() == 3);
}

TEST_CASE("verify oracle with count and seed flags") {
  const CliResult r = run_cli("verify oracle --count 10 --seed 3", "");
  CHECK(r.exit_code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["passed"] == true);
  CHECK(j["result"]["seed"] == 3);
  CHECK(j["result"]["suites"][0]["name"] == "oracle_concordance");
}

TEST_CASE("verify rejects unknown suites") {
  const CliResult r = run_cli("", R"({"command":"verify","suite":"everything"})");
  CHECK(r.exit_code == 2);
}

TEST_CASE("file input and output flags") {
  static const char* in_path = "cli_file_in.json";
  static const char* out_path = "cli_file_out.json";
  {
    std::ofstream f(in_path);
    f << R"({"command":"project","ball":{"center":[0,0],"radius":1},"x":[0.1,0.2]})";
  }
  const CliResult r = run_cli(std::string("--input ") + in_path + " --output " + out_path, "");
  CHECK(r.exit_code == 0);
  std::ifstream f(out_path);
  std::ostringstream ss;
  ss << f.rdbuf();
  const Json j = Json::parse(ss.str());
  CHECK(j["result"] == Json::parse("[0.1,0.2]"));
  std::remove(in_path);
  std::remove(out_path);
}

TEST_CASE("run_request round trips coderivative responses") {
  const ballproj::RunOutput out = ballproj::run_request(Json::parse(
      R"({"command":"coderivative","ball":{"center":[0,0],"radius":1},"x":[1,0],"y":[-1,1]})"));
  REQUIRE(out.exit_code == 0);
  const Json j = Json::parse(out.body);
  const auto parsed = ballproj::set_from_json(j["result"]);
  const auto direct = ballproj::regular_coderivative(
      ballproj::Ball{{0.0, 0.0}, 1.0}, {1.0, 0.0}, {-1.0, 1.0});
  CHECK(ballproj::set_equal(parsed, direct, 1e-15));
}
