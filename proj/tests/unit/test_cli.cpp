#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "helpers.hpp"
#include "hlrc/cli.hpp"

using namespace hlrc;

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

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct round-trips through the matrix format") {
    for (const auto& spec : {PuncturedSimplexSpec{2, 4, 2}, PuncturedSimplexSpec{9, 3, 1}}) {
      const auto r = run({"construct", "--q", std::to_string(spec.q), "--m", std::to_string(spec.m), "--s",
                          std::to_string(spec.s)});
      CHECK(r.code == kExitOk);
      std::istringstream in(r.out);
      CHECK(read_matrix(in) == punctured_simplex(spec));
      CHECK(r.err.find(to_string(spec.params())) != std::string::npos);
    }
  }

  TEST_CASE("construct writes under HLRC_OUTPUT_DIR") {
    const auto dir = std::filesystem::temp_directory_path() / "hlrc_cli_test";
    std::filesystem::create_directories(dir);
    ::setenv("HLRC_OUTPUT_DIR", dir.c_str(), 1);
    const auto r = run({"construct", "--q", "3", "--m", "3", "--s", "1", "--out", "c.txt"});
    ::unsetenv("HLRC_OUTPUT_DIR");
    CHECK(r.code == kExitOk);
    CHECK(r.out == "[12,3,8]\n");
    std::ifstream in(dir / "c.txt");
    REQUIRE(in.good());
    CHECK(read_matrix(in) == punctured_simplex(3, 3, 1));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("analyze reports and exits cleanly") {
    const auto r = run({"analyze", "--q", "2", "--m", "4", "--s", "2"});
    CHECK(r.code == kExitOk);
    const auto report = nlohmann::json::parse(r.out);
    CHECK(report["schema_version"] == kReportSchemaVersion);
    CHECK(report["status"] == "ok");
    CHECK(report["parameters"]["n"] == 12);
    CHECK(report["weight_enumerator"]["formula"] == report["weight_enumerator"]["bruteforce"]);
    for (const auto& c : report["checks"]) CHECK(c["ok"] == true);

    const auto small = run({"analyze", "--q", "3", "--m", "2", "--s", "1"});
    CHECK(small.code == kExitOk);
    CHECK(nlohmann::json::parse(small.out)["locality"] == "not applicable (m < 3)");
  }

  TEST_CASE("table formats") {
    const auto md = run({"table"});
    CHECK(md.code == kExitOk);
    CHECK(md.out.find("[12,4,6]") != std::string::npos);
    CHECK(md.out.find("RM(1,3)") != std::string::npos);
    const auto csv = run({"table", "--csv", "--m-max", "4", "--s-max", "3"});
    CHECK(csv.code == kExitOk);
    CHECK(csv.out.rfind("m,s,n,k,d,listed,reed_muller,locality_from\n", 0) == 0);
    CHECK(csv.out.find("4,2,12,4,6,") != std::string::npos);
  }

  TEST_CASE("bounds and simulate") {
    const auto b = run({"bounds", "--q", "2", "--n", "12", "--d", "6", "--locality", "3,3;2,2", "--k", "4",
                        "--lrc", "4,3"});
    CHECK(b.code == kExitOk);
    const auto report = nlohmann::json::parse(b.out);
    CHECK(report["cm_hlrc"]["value"] == 4);
    CHECK(report["singleton_hlrc"]["d_bound"] == 7);
    CHECK(report["k_opt"] == 4);

    const auto s = run({"simulate", "--q", "2", "--m", "4", "--s", "2", "--failures", "1", "--trials", "20"});
    CHECK(s.code == kExitOk);
    CHECK(nlohmann::json::parse(s.out)["schema_version"] == kReportSchemaVersion);
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"construct", "--q", "2"}).code == kExitUsage);
    CHECK(run({"construct", "--q", "6", "--m", "3", "--s", "1"}).code == kExitUsage);
    CHECK(run({"construct", "--q", "2", "--m", "3", "--s", "3"}).code == kExitUsage);
    CHECK(run({"bounds", "--q", "2", "--n", "12", "--d", "6", "--locality", "3,3;2"}).code == kExitUsage);
    CHECK(run({"simulate", "--q", "2", "--m", "4", "--s", "2", "--failures", "13"}).code == kExitUsage);
  }

  TEST_CASE("locality parsing") {
    using P = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(parse_locality("3,3;2,2") == P{{3, 3}, {2, 2}});
    CHECK(parse_locality(" 4 , 3 ") == P{{4, 3}});
    CHECK(parse_locality("").empty());
    CHECK_HLRC_ERROR(parse_locality("3,3;"), ErrorCode::ParseError);
    CHECK_HLRC_ERROR(parse_locality("3;2,2"), ErrorCode::ParseError);
    CHECK_HLRC_ERROR(parse_locality("3,x"), ErrorCode::ParseError);
  }
}
