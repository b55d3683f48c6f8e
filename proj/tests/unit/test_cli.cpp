#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "iwip/certify.hpp"
#include "iwip/cli.hpp"
#include "iwip/json_io.hpp"

using namespace iwip;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "iwip_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("parse realize") {
  const ParsedCommand p = parse_command({"realize", "--index-list", "1/2,1,1/2,1,1", "--rank", "7"});
  REQUIRE(p.command);
  CHECK(p.command->verb == Verb::Realize);
  CHECK(p.command->rank == 7);
  CHECK(p.command->index_list == std::vector<int>{1, 2, 1, 2, 2});
  CHECK(p.command->format == OutputFormat::Json);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(parse_command({"realize", "--rank", "7", "--index-list", "1/3"}).exit_code == exit_code::input_error);
  CHECK(parse_command({"realize", "--rank", "7"}).exit_code == exit_code::input_error);
  CHECK(parse_command({"frobnicate"}).exit_code == exit_code::input_error);
  CHECK(parse_command({"experiment", "--rank", "3", "--format", "xml"}).exit_code == exit_code::input_error);
  CHECK(run({"realize", "--rank", "3", "--index-list", "2"}).code == exit_code::input_error);
  CHECK(parse_command({"--help"}).exit_code == exit_code::ok);
}

TEST_CASE("enumerate") {
  const Run r = run({"enumerate", "--rank", "3"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["count"] == 6);
  CHECK(j["lists"][0] == Json::array({"1/2"}));
  const Run text = run({"enumerate", "--rank", "4", "--format", "text"});
  CHECK(std::count(text.out.begin(), text.out.end(), '\n') == 18);
}

TEST_CASE("realize, then certify the written document") {
  const auto path = scratch("r7.json");
  const Run realized = run({"realize", "--rank", "7", "--index-list", "1/2,1,1/2,1,1", "--out", path.string()});
  REQUIRE(realized.code == 0);
  const Run certified = run({"certify", path.string()});
  CHECK(certified.code == 0);
  const Json report = Json::parse(certified.out);
  CHECK(report["level"] == "full_theorem_62");
  CHECK(report["index_list"] == Json::array({"1", "1", "1", "1/2", "1/2"}));

  // The report from the document equals the in-memory report.
  std::ifstream file(path);
  const Json doc = Json::parse(file);
  CHECK(doc["blueprint"]["case"] == "even");
  CHECK(doc["pi1"]["h_prime"].size() == doc["maps"]["h_prime"].size());
  const RealizationResult direct = realize(7, {1, 2, 1, 2, 2});
  CHECK(report_to_json(certify_realization(direct)).dump() == report.dump());
  CHECK(realization_to_json(realization_from_json(doc)).at("maps").dump() == doc.at("maps").dump());
}

TEST_CASE("certify grades a plain train track map") {
  const auto path = scratch("fib.json");
  std::ofstream(path) << R"({"graph": {"vertices": ["v"], "edges": [{"label": "a", "from": "v", "to": "v"},
                                                             {"label": "b", "from": "v", "to": "v"}]},
                             "map": {"images": {"a": ["a", "b"], "b": ["a"]}}})";
  const Run r = run({"certify", path.string()});
  CHECK(r.code == exit_code::certification_failed);
  CHECK(Json::parse(r.out)["inp"]["verdict"] == "found");
}

TEST_CASE("input and I/O failures") {
  CHECK(run({"certify", scratch("missing.json").string() + ".none"}).code == exit_code::io_error);
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK(run({"certify", bad.string()}).code == exit_code::input_error);
  CHECK(run({"enumerate", "--rank", "3", "--out", "/nonexistent-dir/x.json"}).code == exit_code::io_error);
}

TEST_CASE("experiment output is reproducible") {
  const std::vector<std::string> args{"experiment", "--rank", "3", "--length", "10", "--samples", "12", "--seed", "7"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["samples"] == 12);
}

TEST_CASE("process exit codes") {
  const std::string cli = IWIP_CLI_PATH;
  const auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status(cli + " enumerate --rank 3") == 0);
  CHECK(status(cli + " realize --rank 3 --index-list 2") == 2);
  CHECK(status(cli + " certify /nonexistent.json") == 4);
}
