// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include <json.hpp>

#include "xeop/report.hpp"

TEST_CASE("check criteria", "[report]") {
  const auto a = xeop::make_check("a", 2.0, 2.001, 1e-2);
  CHECK(a.pass);
  CHECK(a.abs_err == Catch::Approx(1e-3));
  CHECK(a.rel_err == Catch::Approx(5e-4));
  CHECK_FALSE(xeop::make_check("b", 2.0, 2.001, 1e-4).pass);
  CHECK(xeop::make_check("c", 2.0, 2.001, 1e-3, xeop::Criterion::relative).pass);
  CHECK(xeop::make_check("d", 0.0, 5.0, 1e-3, xeop::Criterion::exceeds).pass);
  CHECK_FALSE(xeop::make_check("e", 0.0, 1e-4, 1e-3, xeop::Criterion::exceeds).pass);
  CHECK(xeop::make_check("f", 0.0, 1e-4, 1e-3).rel_err == 1e-4);
  CHECK_FALSE(xeop::make_check("g", 1.0, std::numeric_limits<double>::quiet_NaN(), 1.0).pass);
}

TEST_CASE("report pass flag and ordering", "[report]") {
  xeop::VerificationReport r{"s", {}, 0.5};
  CHECK_FALSE(r.pass());
  r.checks.push_back(xeop::make_check("z", 1.0, 1.0, 0.0));
  r.checks.push_back(xeop::make_check("a", 1.0, 1.0, 0.0));
  CHECK(r.pass());
  r.sort();
  CHECK(r.checks.front().id == "a");
  r.checks.push_back(xeop::make_check("m", 1.0, 2.0, 0.0));
  CHECK_FALSE(r.pass());
}

TEST_CASE("JSON schema", "[report]") {
  xeop::VerificationReport r{"closed-forms", {}, 1.25};
  r.checks.push_back(xeop::make_check("a", 1.0, 1.5, 1.0));
  r.checks.push_back(xeop::make_check("b", 0.0, std::numeric_limits<double>::infinity(), 1.0));
  const auto j = nlohmann::json::parse(xeop::to_json(r));
  CHECK(j.at("suite") == "closed-forms");
  CHECK(j.at("pass") == false);
  CHECK(j.at("runtime_seconds") == 1.25);
  REQUIRE(j.at("checks").size() == 2);
  const auto& c = j.at("checks")[0];
  for (const char* key : {"id", "analytic", "numeric", "abs_err", "rel_err", "tol", "pass"}) CHECK(c.contains(key));
  CHECK(c.at("numeric") == 1.5);
  CHECK(j.at("checks")[1].at("numeric").is_null());
}

TEST_CASE("CSV output", "[report]") {
  CHECK(xeop::format_number(0.1) == "0.1");
  CHECK(xeop::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(xeop::format_number(-2.5e-20) == "-2.5e-20");
  CHECK(xeop::csv_table({"r", "value"}, {{1.0, 2.0}, {0.5, -1.0 / 3.0}}) == "r,value\n1,2\n0.5,-0.333333333333\n");
  xeop::VerificationReport r{"s", {xeop::make_check("x", 1.0, 1.0, 0.0)}, 0.0};
  CHECK(xeop::to_csv(r) == "id,analytic,numeric,abs_err,rel_err,tol,pass\nx,1,1,0,0,0,1\n");
}
