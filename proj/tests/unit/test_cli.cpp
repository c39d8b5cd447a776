#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tilab/cli.hpp"
#include "tilab/graph6.hpp"

using namespace tilab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string golden(const std::string& name) { return slurp(fs::path(TILAB_GOLDEN_DIR) / name); }

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("tilab_cli_" + name);
  std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST_CASE("index") {
  Result r = run({"index", "--graph6", "D~{", "--kind", "wiener"});
  CHECK(r.code == 0);
  CHECK(r.out == "10\n");

  r = run({"index", "--graph6", "A_", "--kind", "all"});
  CHECK(r.code == 0);
  CHECK(r.out == "W=1 H=1 RDD=2 xi_d=2 xi_ce=2 xi_ad=2 M1=2 M2=1 Pi1=1 Pi2=1\n");

  r = run({"index", "--graph6", "A_", "--kind", "all", "--format", "csv"});
  CHECK(r.out == golden("index_k2_all.csv"));

  const fs::path corpus = temp_file("corpus.g6", "Bw\nCr\nD~{\n");
  r = run({"index", "--file", corpus.string(), "--kind", "harary"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  for (const char* code : {"Bw", "Cr", "D~{"}) {
    REQUIRE(std::getline(lines, line));
    CHECK(line == harary(compute_metrics(parse_graph6(code))).to_string());
  }
  CHECK_FALSE(std::getline(lines, line));
}

TEST_CASE("index errors") {
  Result r = run({"index", "--graph6", "A?", "--kind", "wiener"});
  CHECK(r.code == 1);
  CHECK(r.err.find("disconnected") != std::string::npos);

  r = run({"index", "--graph6", "A?", "--kind", "m1"});
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");

  r = run({"index", "--graph6", "zz"});
  CHECK(r.code == 1);
  CHECK(r.err.find("graph6") != std::string::npos);

  const fs::path bad = temp_file("bad.g6", "A_\ngarbage!\nD~{\n");
  r = run({"index", "--file", bad.string(), "--kind", "wiener"});
  CHECK(r.code == 1);
  CHECK(r.out == "1\n10\n");
  CHECK(r.err.find("line 2") != std::string::npos);

  r = run({"index", "--file", bad.string(), "--kind", "wiener", "--strict"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(run({"index"}).code == 1);
  CHECK(run({"index", "--graph6", "A_", "--kind", "szeged"}).code == 1);
  CHECK(run({"index", "--file", "/nonexistent/x.g6"}).code == 1);
}

TEST_CASE("vk") {
  Result r = run({"vk", "--graph6", "D~{", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  r = run({"vk", "--graph6", "A_", "--k", "3"});
  CHECK(r.code == 1);
}

TEST_CASE("construct") {
  Result r = run({"construct", "--n", "6", "--m", "2", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "E}~o\nsizes 2 2\n");
  CHECK(run({"construct", "--n", "6", "--m", "2", "--k", "2", "--format", "json"}).out ==
        golden("construct_6_2_2.json"));
  CHECK(run({"construct", "--n", "6", "--m", "5", "--k", "2"}).code == 1);
  CHECK(run({"construct", "--n", "6", "--k", "2"}).code == 1);
}

TEST_CASE("scan") {
  Result r = run({"scan", "--n", "6", "--m", "2", "--k", "2", "--kind", "wiener", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("scan_6_2_2_wiener.json"));

  // A scan with a non-matching optimum exits 2.
  r = run({"scan", "--n", "6", "--m", "2", "--k", "2", "--kind", "m2"});
  CHECK(r.code == 2);

  CHECK(run({"scan", "--n", "8", "--m", "2", "--k", "2", "--kind", "wiener"}).code == 1);
  CHECK(run({"scan", "--n", "6", "--m", "9", "--k", "2"}).code == 1);
}

TEST_CASE("csv and json carry the same values") {
  const std::vector<std::string> base = {"scan", "--n", "5", "--m", "1,2", "--k", "2", "--kind", "all"};
  std::vector<std::string> as_json = base, as_csv = base;
  as_json.insert(as_json.end(), {"--format", "json"});
  as_csv.insert(as_csv.end(), {"--format", "csv"});
  const auto reports = nlohmann::json::parse(run(as_json).out);
  std::istringstream csv(run(as_csv).out);
  std::string line;
  std::getline(csv, line);  // header
  for (const auto& report : reports) {
    REQUIRE(std::getline(csv, line));
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 16);
    const auto rational = [](const nlohmann::json& v) {
      const std::string den = v["den"];
      return den == "1" ? std::string(v["num"]) : std::string(v["num"]) + "/" + den;
    };
    CHECK(cells[0] == std::to_string(report["params"]["n"].get<int>()));
    CHECK(cells[1] == std::to_string(report["params"]["m"].get<int>()));
    CHECK(cells[3] == report["kind"]);
    CHECK(cells[5] == rational(report["optimum"]));
    CHECK(cells[6] == std::to_string(report["optimizers"].size()));
    CHECK(cells[9] == (report["flags"]["matches_construction"].get<bool>() ? "true" : "false"));
    CHECK(cells[11] == rational(report["closed_form"]));
    std::string joined;
    for (const auto& g : report["optimizers"]) joined += (joined.empty() ? "" : ";") + g.get<std::string>();
    CHECK(cells[15] == joined);
  }
  CHECK_FALSE(std::getline(csv, line));
}

TEST_CASE("verify") {
  Result r = run({"verify", "--claim", "thm4.7-m2", "--nmin", "4", "--nmax", "6", "--kmax", "2",
                  "--format", "json"});
  CHECK(r.code == 2);
  CHECK(r.out == golden("verify_thm4.7-m2_n4-6_k2.json"));

  r = run({"verify", "--claim", "thm4.7-m2", "--nmax", "12"});
  CHECK(r.code == 2);
  CHECK(r.out.find("Refuted n=6 m=2 k=2 printed=185 actual=249") != std::string::npos);

  r = run({"verify", "--claim", "cor4.4", "--nmin", "5", "--nmax", "6", "--format", "csv"});
  CHECK(r.code == 2);
  CHECK(r.out == golden("verify_cor4.4_n5-6.csv"));

  CHECK(run({"verify", "--claim", "thm4.1", "--nmax", "6", "--kmax", "2", "--scan-nmax", "6"}).code == 0);
  // Regime flags alone do not count as refutations.
  CHECK(run({"verify", "--claim", "thm4.4", "--nmax", "8"}).code == 0);
  CHECK(run({"verify", "--claim", "thm9.9"}).code == 1);
  CHECK(run({"verify", "--claim", "thm4.1", "--nmax", "13"}).code == 1);

  const auto all = nlohmann::json::parse(
      run({"verify", "--claim", "all", "--nmax", "5", "--kmax", "2", "--format", "json"}).out);
  CHECK(all.size() == claim_catalog().size());
  for (const auto& report : all) {
    for (const char* key : {"claim", "params", "kind", "optimum", "optimizers", "flags", "verdicts"}) {
      CHECK(report.contains(key));
    }
  }
}

TEST_CASE("fuzz") {
  Result r = run({"fuzz", "--kind", "wiener,m2", "--trials", "200", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("wiener trials=200 violations=0") != std::string::npos);
  CHECK(r.out.find("m2 trials=200 violations=0") != std::string::npos);
  CHECK(run({"fuzz", "--kind", "wiener", "--trials", "0"}).code == 1);
  CHECK(run({"fuzz", "--kind", "wiener", "--nmin", "2", "--nmax", "2"}).code == 1);
}

TEST_CASE("out path and usage") {
  const fs::path target = fs::temp_directory_path() / "tilab_cli_out.json";
  fs::remove(target);
  Result r = run({"construct", "--n", "6", "--m", "2", "--k", "2", "--format", "json", "--out",
                  target.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(target) == golden("construct_6_2_2.json"));

  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
  CHECK(run({"scan", "--n", "6", "--m", "2", "--k", "2", "--format", "xml"}).code == 1);
}
