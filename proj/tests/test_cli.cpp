#include "doctest.h"
#include "qfock/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qfock;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qfock");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qfock_test_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("column") {
    auto r = run({"column", "--n", "2", "--mu", "(2)"});
    CHECK(r.code == 0);
    CHECK(r.out == "(2): 1\n(1,1): q\n");
    CHECK(run({"column", "--n", "3", "--mu", "()"}).out == "(): 1\n");
    auto bad = run({"column", "--n", "2", "--mu", "(1,2)"});
    CHECK(bad.code != 0);
    CHECK(bad.err.find("weakly decreasing") != std::string::npos);
  }

  TEST_CASE("dmatrix") {
    auto r = run({"dmatrix", "--n", "2", "--size", "2", "--format", "csv"});
    CHECK(r.out == "\"\",\"(2)\",\"(1,1)\"\n\"(2)\",1,0\n\"(1,1)\",q,1\n");
    CHECK(run({"dmatrix", "--n", "2", "--size", "0"}).out == "\"\",\"()\"\n\"()\",1\n");
    auto tex = run({"dmatrix", "--n", "2", "--size", "3", "--format", "latex"}).out;
    CHECK(tex.rfind("\\begin{tabular}{c|ccc}", 0) == 0);
    CHECK(tex.find("\\end{tabular}") != std::string::npos);
    auto js = nlohmann::json::parse(run({"dmatrix", "--n", "2", "--size", "2", "--format", "json"}).out);
    CHECK(js["labels"].size() == 2);
  }

  TEST_CASE("abacus") {
    auto r = run({"abacus", "--n", "9", "--mu", "(13,12,10,8^3,6,5^2,3,2,1^2)", "--s", "14", "--runners", "4,2,3",
                  "--rows=0:2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "  0 1 2 3 | 4 5 | 6 7 8\n"
          "0 o . o o | . o | . o .\n"
          "1 . o o . | o . | . o o\n"
          "2 o . . o | . . | o . o\n");
    CHECK(run({"abacus", "--n", "9", "--mu", "()", "--runners", "4,2"}).code != 0);
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "--suite", "relations", "--n", "2", "--max-size", "5"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["failures"].empty());
    CHECK(j["instances_checked"].get<long long>() > 0);
    CHECK(run({"verify", "--suite", "runner", "--n", "4", "--max-size", "5"}).code == 0);
    CHECK(run({"verify", "--suite", "fk", "--max-size", "6"}).code == 0);
    CHECK(run({"verify", "--suite", "nonsense"}).code != 0);
  }

  TEST_CASE("cache warm, export and refusal") {
    const std::string path = temp_path("cache.json");
    std::filesystem::remove(path);
    auto w = run({"cache", "--file", path, "warm", "--n", "2", "--size", "5"});
    REQUIRE(w.code == 0);
    const std::string text = slurp(path);
    auto e = run({"cache", "--file", path, "export"});
    CHECK(e.out == text);
    CHECK(run({"cache", "--file", path, "stats"}).out.find("columns: 19") != std::string::npos);

    ColumnCache loaded;
    load_cache(path, loaded);
    CHECK(cache_dump(loaded) == text);
    // warm cache and cold cache give the same answer
    auto warm = run({"column", "--n", "2", "--mu", "(3,1,1)", "--cache", path});
    auto cold = run({"column", "--n", "2", "--mu", "(3,1,1)"});
    CHECK(warm.out == cold.out);

    const std::string bad = temp_path("bad.json");
    {
      std::ofstream f(bad);
      f << R"({"format":"qfock-columns/0","columns":[]})";
    }
    ColumnCache c;
    CHECK_THROWS_AS(load_cache(bad, c), CacheFormatError);
    CHECK(run({"cache", "--file", bad, "stats"}).code != 0);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
  }
}
