#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ifsir/cli.hpp"
#include "support.hpp"

using namespace ifsir;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("ifsir_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("solve prints the report") {
  const auto r = run({"solve", testing::scm_fixture()});
  CHECK(r.code == 0);
  CHECK(r.out.find("complete ranking: {Y_3} -> {Y_1} -> {Y_4} -> {Y_2} -> {Y_5}") !=
        std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("solve writes report and map files") {
  TempDir tmp;
  const auto report = tmp.path / "report.json";
  const auto dot = tmp.path / "map.dot";
  const auto r = run({"solve", testing::scm_fixture(), "--report",
                      report.string(), "--dot", dot.string(), "--format",
                      "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{Y_3} -> {Y_1}") != std::string::npos);
  const auto doc = nlohmann::json::parse(slurp(report));
  CHECK(doc["flows"][2]["i_flow"] == nlohmann::json::array({0.0, 1.0}));
  CHECK(slurp(dot).rfind("digraph", 0) == 0);
  CHECK_FALSE(fs::exists(tmp.path / "report.json.tmp"));
}

TEST_CASE("failed solve leaves no output files") {
  TempDir tmp;
  const auto report = tmp.path / "report.txt";
  const auto dot = tmp.path / "map.dot";
  const auto r = run({"solve", testing::kTestFixtureDir + "/bad_unknown_term.json",
                      "--report", report.string(), "--dot", dot.string()});
  CHECK(r.code == 1);
  CHECK_FALSE(fs::exists(report));
  CHECK_FALSE(fs::exists(dot));
  CHECK(r.err.find("/assessments/e_1/0/2") != std::string::npos);
}

TEST_CASE("validate") {
  const auto ok = run({"validate", testing::scm_fixture()});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("5 alternatives, 4 criteria, 3 experts") != std::string::npos);

  const std::pair<const char*, const char*> bad[] = {
      {"bad_missing_cell.json", "/assessments/e_2/1"},
      {"bad_unknown_term.json", "/assessments/e_1/0/2"},
      {"bad_threshold.json", "/config/threshold"},
      {"bad_invalid_ifn.json", "/experts/1/importance"},
  };
  for (const auto& [file, path] : bad) {
    CAPTURE(file);
    const auto r = run({"validate", testing::kTestFixtureDir + "/" + file});
    CHECK(r.code == 1);
    CHECK(r.err.find(path) != std::string::npos);
    CHECK(r.out.empty());
  }
  const auto syntax = run({"validate", testing::kTestFixtureDir + "/bad_syntax.json"});
  CHECK(syntax.code == 1);
  CHECK(syntax.err.find("malformed JSON") != std::string::npos);
}

TEST_CASE("scales") {
  const auto list = run({"scales", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("quality_t2 (9 entries)") != std::string::npos);
  CHECK(list.out.find("example_importance") != std::string::npos);

  const auto exported = run({"scales", "export", "quality_t2"});
  CHECK(exported.code == 0);
  const auto doc = nlohmann::json::parse(exported.out);
  CHECK(doc["name"] == "quality_t2");
  CHECK(doc["entries"].size() == 9);

  CHECK(run({"scales", "export", "nope"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"solve"}).code == 1);
  CHECK(run({"solve", testing::scm_fixture(), "--format", "xml"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
