// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "xeop/cli.hpp"
#include "xeop/grid.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = xeop::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::vector<double> column(const std::string& csv, std::size_t index) {
  std::vector<double> v;
  const auto rows = lines(csv);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::istringstream cells(rows[i]);
    std::string cell;
    for (std::size_t k = 0; k <= index; ++k) std::getline(cells, cell, ',');
    v.push_back(std::stod(cell));
  }
  return v;
}

}  // namespace

TEST_CASE("spectrum", "[cli]") {
  const auto r = run({"spectrum", "--family", "oscillator", "--omega", "1", "--m", "1", "--D", "3", "--l", "0",
                      "--levels", "4"});
  REQUIRE(r.code == xeop::kExitOk);
  CHECK(lines(r.out).front() == "n,E_analytic,E_numeric,abs_error");
  CHECK(column(r.out, 1) == std::vector<double>{0, 2, 4, 6});
  for (double e : column(r.out, 3)) CHECK(e < 2e-3);

  const auto g = run({"spectrum", "--family", "gpt", "--A", "2.5", "--B", "5", "--D", "3", "--l", "0", "--m", "1",
                      "--levels", "8"});
  REQUIRE(g.code == xeop::kExitOk);
  CHECK(column(g.out, 0).size() == 3);

  const auto j = run({"spectrum", "--family", "gpt", "--m", "1", "--format", "json"});
  REQUIRE(j.code == xeop::kExitOk);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("rows").size() == 3);
  CHECK(doc.at("rows")[2].at("E_analytic") == -0.25);
}

TEST_CASE("invalid configurations exit 2 with a diagnostic", "[cli]") {
  auto bad = run({"spectrum", "--family", "gpt", "--A", "2.5", "--B", "2.5"});
  CHECK(bad.code == xeop::kExitConfig);
  CHECK(bad.err.find("B > A + (D-1)/2") != std::string::npos);
  CHECK(lines(bad.err).size() == 1);
  CHECK(bad.out.empty());

  CHECK(run({"spectrum", "--family", "oscillator", "--D", "2", "--l", "0"}).code == xeop::kExitConfig);
  CHECK(run({"spectrum", "--levels", "13"}).code == xeop::kExitConfig);
  CHECK(run({"spectrum", "--family", "nope"}).code == xeop::kExitConfig);
  CHECK(run({"spectrum", "--points", "2"}).code == xeop::kExitConfig);
  CHECK(run({"curve", "--what", "chi"}).code == xeop::kExitConfig);
  CHECK(run({"curve", "--family", "gpt", "--what", "chi", "--n", "3"}).code == xeop::kExitConfig);
  CHECK(run({"verify", "--suite", "nope"}).code == xeop::kExitConfig);
  CHECK(run({"verify", "--suite", "shape-invariance", "--family", "oscillator", "--exact-gpt"}).code ==
        xeop::kExitConfig);
  CHECK(run({}).code == xeop::kExitConfig);
  CHECK(run({"--help"}).code == xeop::kExitOk);
}

TEST_CASE("curves", "[cli]") {
  const auto p = run({"curve", "--what", "potential", "--family", "oscillator", "--m", "2", "--D", "4"});
  REQUIRE(p.code == xeop::kExitOk);
  const auto rows = lines(p.out);
  CHECK(rows.front() == "r,value");
  CHECK(rows.size() == xeop::default_grid_points() + 1);

  const auto c = run({"curve", "--what", "chi", "--family", "oscillator", "--m", "1", "--n", "0"});
  REQUIRE(c.code == xeop::kExitOk);
  CHECK(xeop::count_sign_changes(column(c.out, 1)) == 0);
  const auto c3 = run({"curve", "--what", "chi", "--m", "1", "--n", "3", "--points", "800"});
  REQUIRE(c3.code == xeop::kExitOk);
  CHECK(xeop::count_sign_changes(column(c3.out, 1)) == 3);
  CHECK(lines(c3.out).size() == 801);

  const auto g = run({"curve", "--what", "chi", "--family", "gpt", "--m", "2", "--n", "1", "--D", "4"});
  REQUIRE(g.code == xeop::kExitOk);
  CHECK(xeop::count_sign_changes(column(g.out, 1)) == 1);
}

TEST_CASE("poles exit 3", "[cli]") {
  const auto r = run({"curve", "--what", "potential", "--family", "gpt", "--A", "1.03", "--B", "2.2", "--m", "2"});
  CHECK(r.code == xeop::kExitPole);
  CHECK(r.err.find("pole") != std::string::npos);
  CHECK(run({"spectrum", "--family", "gpt", "--A", "1.03", "--B", "2.2", "--m", "2"}).code == xeop::kExitPole);
  // A grid that stops short of the pole is fine.
  CHECK(run({"spectrum", "--family", "gpt", "--A", "1.03", "--B", "2.2", "--m", "2", "--rmin", "1.5", "--rmax",
             "25"}).code == xeop::kExitOk);
}

TEST_CASE("verify", "[cli]") {
  const auto r = run({"verify", "--suite", "closed-forms"});
  REQUIRE(r.code == xeop::kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("suite") == "closed-forms");
  CHECK(doc.at("pass") == true);

  const auto neg = run({"verify", "--suite", "shape-invariance", "--family", "gpt", "--D", "4", "--exact-gpt"});
  REQUIRE(neg.code == xeop::kExitOk);
  const auto n = nlohmann::json::parse(neg.out);
  REQUIRE(n.at("checks").size() == 1);
  CHECK(n.at("checks")[0].at("id").get<std::string>().find("negative-control") != std::string::npos);

  const auto csv = run({"verify", "--suite", "closed-forms", "--format", "csv"});
  CHECK(lines(csv.out).size() == 19);
}

TEST_CASE("output is deterministic", "[cli]") {
  const std::vector<std::string> args{"spectrum", "--family", "gpt", "--D", "4", "--l", "1", "--m", "2"};
  CHECK(run(args).out == run(args).out);
  auto strip_runtime = [](std::string json) {
    auto doc = nlohmann::json::parse(json);
    doc.erase("runtime_seconds");
    return doc.dump();
  };
  const std::vector<std::string> v{"verify", "--suite", "shape-invariance"};
  CHECK(strip_runtime(run(v).out) == strip_runtime(run(v).out));
}

TEST_CASE("--out writes a file", "[cli]") {
  const std::string path = "xeop_cli_test_output.csv";
  std::remove(path.c_str());
  const auto r = run({"curve", "--what", "potential", "--points", "50", "--out", path});
  REQUIRE(r.code == xeop::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(lines(text.str()).size() == 51);
  std::remove(path.c_str());
  CHECK(run({"curve", "--what", "potential", "--out", "/nonexistent/dir/x.csv"}).code == xeop::kExitConfig);
}
