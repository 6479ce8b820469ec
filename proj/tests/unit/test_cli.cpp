#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "binpack/cli/commands.hpp"
#include "binpack/cli/parallel.hpp"
#include "binpack/cli/records.hpp"
#include "binpack/oracle.hpp"

using namespace binpack;
using namespace binpack::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json record(const std::vector<std::string>& args) {
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("binpack_test_" + name);
}

}  // namespace

TEST_CASE("count prints a record") {
  const auto m = record({"count", "M", "8", "5", "4"});
  CHECK(m["value"] == "5");
  CHECK(m["quantity"] == "M");
  CHECK(m["params"]["n"] == 8);
  CHECK(m["params"]["l"] == 5);
  CHECK(m["params"]["k"] == 4);
  CHECK(m["method"] == "closed_form");

  CHECK(record({"count", "B", "4", "4"})["value"] == "1");
  CHECK(record({"count", "R", "4", "2", "2", "--method", "oracle"})["value"] == "1");
}

TEST_CASE("record keys are always present") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"count", "K", "8", "3"},
                                                                {"count", "N", "3", "3", "--method", "pie"},
                                                                {"count", "T", "3", "2", "1"},
                                                                {"count", "U", "5", "4", "1", "5", "--method", "oracle"},
                                                                {"count", "R", "9", "3", "4", "--method", "recurrence"}}) {
    const auto j = record(args);
    CHECK(j.contains("quantity"));
    CHECK(j.contains("params"));
    CHECK(j.contains("method"));
    CHECK(j["value"].is_string());
  }
}

TEST_CASE("auto method falls back to formula II where no closed form exists") {
  const auto b = record({"count", "B", "9", "3"});
  CHECK(b["value"] == "94");
  CHECK(b["method"] == "pie");
  CHECK(record({"count", "R", "4", "2", "2"})["method"] == "pie");
}

TEST_CASE("plain output") {
  const Run r = run({"count", "B", "200", "150", "--plain"});
  CHECK(r.code == 0);
  CHECK(r.out == "14918173765664768\n");
}

TEST_CASE("records round-trip") {
  ResultRecord original{"B", {{"n", 300}, {"k", 20}}, Count("123456789012345678901234567890"), "pie"};
  const ResultRecord back = record_from_json(to_json(original));
  CHECK(back.value == original.value);
  CHECK(back.params == original.params);
  CHECK(back.method == "pie");
}

TEST_CASE("auto and oracle agree on a spot grid") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto n_s = std::to_string(n), k_s = std::to_string(k);
      CHECK(record({"count", "B", n_s, k_s})["value"] == record({"count", "B", n_s, k_s, "--method", "oracle"})["value"]);
      for (int l = 1; l <= n; ++l) {
        const auto l_s = std::to_string(l);
        CHECK(record({"count", "M", n_s, l_s, k_s})["value"] ==
              record({"count", "M", n_s, l_s, k_s, "--method", "oracle"})["value"]);
      }
    }
  }
  for (int k = 2; k <= 6; ++k) {
    for (int j = 1; j < k; ++j) {
      const auto k_s = std::to_string(k), j_s = std::to_string(j);
      CHECK(record({"count", "F", k_s, j_s, "2"})["value"] ==
            record({"count", "F", k_s, j_s, "2", "--method", "oracle"})["value"]);
      CHECK(record({"count", "T", k_s, j_s, "1"})["value"] ==
            record({"count", "T", k_s, j_s, "1", "--method", "oracle"})["value"]);
    }
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"count", "M", "8", "5"}).code == 2);
  CHECK(run({"count", "Q", "1"}).code == 2);
  CHECK(run({"count", "B", "0", "3"}).code == 2);
  CHECK(run({"count", "R", "4", "2", "2", "--method", "closed"}).code == 2);
  CHECK(run({"count", "T", "3", "3", "1"}).code == 2);
  CHECK(run({"count", "B", "40", "3", "--method", "oracle"}).code == 2);
  CHECK(run({"count", "M", "8", "5", "4", "--method", "fast"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  const Run bad = run({"count", "B", "0", "3"});
  CHECK(bad.err.find("n, k >= 1") != std::string::npos);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
}

TEST_CASE("help exits with 0") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"count", "--help"}).code == 0);
}

TEST_CASE("enumerate lists the compositions") {
  const Run five = run({"enumerate", "8", "5", "4", "exact-max"});
  CHECK(five.code == 0);
  CHECK(five.out == "1,1,1,1,4\n1,1,1,4,1\n1,1,4,1,1\n1,4,1,1,1\n4,1,1,1,1\ntotal=5\n");

  const Run small = run({"enumerate", "3", "2", "3", "unrestricted"});
  CHECK(small.out == "1,2\n2,1\ntotal=2\n");

  const Run capped = run({"enumerate", "5", "3", "2", "atmost-max"});
  CHECK(capped.out.find("1,2,2\n2,1,2\n2,2,1\ntotal=3") != std::string::npos);

  CHECK(run({"enumerate", "19", "3", "3", "exact-max"}).code == 2);
  CHECK(run({"enumerate", "19", "3", "3", "exact-max"}).err.find("count") != std::string::npos);
  CHECK(run({"enumerate", "8", "5", "4", "largest"}).code == 2);
}

TEST_CASE("distribution csv to a file") {
  const auto path = scratch("dist_10_3.csv");
  const Run r = run({"distribution", "10", "3", "--out", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "l,count");
  Count sum = 0;
  while (std::getline(in, line)) {
    sum += Count(line.substr(line.find(',') + 1));
  }
  CHECK(sum == oracle::oracle_B(10, 3));
  const auto meta = nlohmann::json::parse(r.out);
  CHECK(meta["total"] == "185");
  CHECK(meta["n"] == 10);
  std::filesystem::remove(path);
}

TEST_CASE("distribution single row and json") {
  const Run csv = run({"distribution", "5", "5"});
  CHECK(csv.out == "l,count\n1,1\n");
  CHECK(nlohmann::json::parse(csv.err)["mean_bins"] == "1");

  const auto json = nlohmann::json::parse(run({"distribution", "15", "3", "--format", "json"}).out);
  CHECK(json["total"] == "4781");
  CHECK(json["rows"].size() == 9);
  CHECK(json["rows"][0]["l"] == 5);
  CHECK(json["rows"][0]["count"] == "1");

  CHECK(run({"distribution", "3", "4"}).code == 2);
}

TEST_CASE("bounds record") {
  const auto j = record({"bounds", "12", "4", "4"});
  CHECK(j["value"] == "30");
  CHECK(j["interval"].contains("lower"));
  CHECK(j["interval"].contains("upper"));
  CHECK(j["exact_applicable"].is_boolean());

  CHECK(record({"bounds", "8", "4", "2"})["value"] == "1");
  CHECK(record({"bounds", "20", "5", "5"})["value"] == "120");
  CHECK(run({"bounds", "2", "5", "3"}).code == 2);
}

TEST_CASE("verify exit statuses") {
  const auto report = scratch("containment.csv");
  const Run bounds = run({"verify", "--suite", "bounds", "--n-max", "12", "--report", report.string()});
  CHECK(bounds.code == 0);
  CHECK(std::filesystem::exists(report));
  std::filesystem::remove(report);

  CHECK(run({"verify", "--suite", "closed-forms", "--n-max", "14"}).code == 0);
  CHECK(run({"verify", "--suite", "generalized", "--n-max", "12", "--l-max", "5", "--k-max", "5"}).code == 0);
  CHECK(run({"verify", "--suite", "everything"}).code == 2);

  // The convolution identity does not hold, so this suite reports a failure.
  const Run identities = run({"verify", "--suite", "identities", "--n-max", "10"});
  CHECK(identities.code == 1);
  CHECK(identities.out.find("FAIL lem2_convolution") != std::string::npos);
}

TEST_CASE("worker count") {
  CHECK(resolve_jobs(3) >= 1);
  ::setenv("BINPACK_JOBS", "2", 1);
  CHECK(resolve_jobs(7) == 2);
  ::unsetenv("BINPACK_JOBS");
  CHECK(resolve_jobs(7) == 7);

  std::vector<int> slots(100, 0);
  parallel_for(slots.size(), 4, [&](std::size_t i) { slots[i] = static_cast<int>(i) * 2; });
  for (std::size_t i = 0; i < slots.size(); ++i) {
    CHECK(slots[i] == static_cast<int>(i) * 2);
  }
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                    if (i == 5) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}
