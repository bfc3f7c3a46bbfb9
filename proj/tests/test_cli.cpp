#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"
#include "curvword/json_io.hpp"

#include <filesystem>
#include <sstream>

namespace {

const std::string kData = CURVWORD_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = curvword::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("curvword_test_" + name);
}

}  // namespace

TEST_CASE("curv on the reference words") {
  CHECK(run({"curv", "--alphabet", "sel", "selllesseels"}).out == "-1/16\n");
  CHECK(run({"curv", "--alphabet", "cat", "cattactact"}).out == "1/18\n");
  CHECK(run({"curv", "--alphabet", "aps", "papaspaspsa"}).out == "1/24\n");
  CHECK(run({"curv", "--alphabet", "lgu", "lguguglu"}).out == "0\n");
  CHECK(run({"curv", "--alphabet", "cat", "-"}, "cattactact\n").out == "1/18\n");
  CHECK(run({"curv", "--alphabet", "cat"}, "cattactact").out == "1/18\n");
  // default alphabet: sorted letters
  CHECK(run({"curv", "bac"}).out == "1/2\n");
}

TEST_CASE("json output") {
  const Result r = run({"--json", "curv", "--alphabet", "cat", "cattactact"});
  CHECK(r.code == 0);
  const auto j = curvword::json_io::Json::parse(r.out);
  CHECK(j["curv"] == "1/18");
  CHECK(j["alphabet"] == "cat");
  CHECK(curvword::json_io::Json::parse(run({"curv", "--alphabet", "cat", "cattactact", "--json"}).out)["curv"] == "1/18");
}

TEST_CASE("ind, delta and shift") {
  CHECK(run({"ind", "ab"}).out == "-1/2\n");
  CHECK(run({"ind", "--alphabet", "at", "attatat"}).out == "-1/12\n");
  CHECK(run({"delta", "--alphabet", "abc", "bcabbccacb", "0"}).out == "bcbbcccb\n");
  const auto j = curvword::json_io::Json::parse(run({"--json", "delta", "--alphabet", "abc", "bcabbccacb", "0"}).out);
  CHECK(j["alphabet"] == "bc");
  CHECK(j["word"] == "bcbbcccb");
  CHECK(run({"delta", "--alphabet", "abc", "bcabbccacb", "2"}).out == "babbab\n");
  CHECK(run({"shift", "abc"}).out == "bca\n");
  CHECK(run({"shift", "--times", "2", "abc"}).out == "cab\n");
}

TEST_CASE("bundle commands") {
  const auto bundle = temp_file("bundle.json");
  CHECK(run({"-o", bundle.string(), "word-to-bundle", "--alphabet", "abc", "bcabbccacb"}).code == 0);
  CHECK(run({"bundle-to-word", bundle.string()}).out == "bcabbccacb\n");

  const Result shifted = run({"shift", "--bundle", bundle.string()});
  REQUIRE(shifted.code == 0);
  const auto shifted_file = temp_file("shifted.json");
  curvword::json_io::write_file(shifted_file.string(), shifted.out);
  CHECK(run({"bundle-to-word", shifted_file.string()}).out == "cabbccacbb\n");

  const Result glued = run({"glue", bundle.string()});
  REQUIRE(glued.code == 0);
  CHECK(glued.err.find("warning") != std::string::npos);
  const auto glued_file = temp_file("glued.json");
  curvword::json_io::write_file(glued_file.string(), glued.out);
  CHECK(run({"bundle-to-word", glued_file.string()}).out == "abbccacbbc\n");
  const auto j = curvword::json_io::Json::parse(run({"--json", "bundle-to-word", glued_file.string()}).out);
  CHECK(j["cyclic"] == true);

  std::filesystem::remove(bundle);
  std::filesystem::remove(shifted_file);
  std::filesystem::remove(glued_file);
}

TEST_CASE("chern") {
  CHECK(run({"chern", kData + "/hopf_total.json"}).out == "1\n");
  CHECK(run({"chern", kData + "/hopf_words.json"}).out == "1\n");
  CHECK(run({"chern", kData + "/twisted_zero_total.json"}).out == "0\n");
  const auto j = curvword::json_io::Json::parse(run({"--json", "chern", kData + "/hopf_words.json"}).out);
  CHECK(j["chern"] == "1");
  CHECK(j["triangles"].size() == 4);
}

TEST_CASE("survey and palindrome scan") {
  const auto report = temp_file("survey.json");
  const Result r = run({"survey", "--max", "6", "--output", report.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("-1/2") != std::string::npos);
  const auto j = curvword::json_io::read_file(report.string());
  CHECK(j.contains("lengths"));
  std::filesystem::remove(report);

  CHECK(run({"palindrome-scan", "--max", "7"}).out.rfind("0 ", 0) == 0);
  const auto scan = curvword::json_io::Json::parse(run({"--json", "palindrome-scan", "--max", "8"}).out);
  CHECK(scan["count"].get<int>() > 0);
  CHECK(scan["words"][0].get<std::string>().size() == 8);
}

TEST_CASE("errors and exit codes") {
  Result r = run({"curv", "aab"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("error: ", 0) == 0);
  r = run({"curv", "--alphabet", "abc", "abd"});
  CHECK(r.code == 1);
  r = run({"--json", "curv", "--alphabet", "abc", "aab"});
  CHECK(r.code == 1);
  CHECK(curvword::json_io::Json::parse(r.err)["error"]["kind"] == "NotAnNWord");
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"chern", kData + "/missing.json"}).code == 2);
  CHECK(run({"curv", "--alphabet", "abc"}, "").code == 1);
  CHECK(run({"--help"}).code == 0);
}
