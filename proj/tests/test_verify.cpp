// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "xeop/error.hpp"
#include "xeop/verify.hpp"

namespace {

bool sorted(const xeop::VerificationReport& r) {
  return std::is_sorted(r.checks.begin(), r.checks.end(),
                        [](const xeop::CheckRecord& a, const xeop::CheckRecord& b) { return a.id < b.id; });
}

const xeop::CheckRecord* find(const xeop::VerificationReport& r, const std::string& needle) {
  for (const auto& c : r.checks) {
    if (c.id.find(needle) != std::string::npos) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("closed-forms suite", "[verify]") {
  const auto r = xeop::run_suite("closed-forms");
  CHECK(r.suite == "closed-forms");
  CHECK(r.checks.size() == 18);
  CHECK(r.pass());
  CHECK(sorted(r));
}

TEST_CASE("shape-invariance suite carries both exact-GPT controls", "[verify]") {
  const auto r = xeop::run_suite("shape-invariance");
  CHECK(r.pass());
  const auto* negative = find(r, "negative-control");
  REQUIRE(negative != nullptr);
  CHECK(negative->numeric > negative->tol);
  REQUIRE(find(r, "positive-control") != nullptr);
  REQUIRE(find(r, "susy-pairing") != nullptr);
}

TEST_CASE("suites on a single model", "[verify]") {
  xeop::ModelConfig c;
  c.family = xeop::Family::gpt;
  c.m = 2;
  c.D = 4;
  c.l = 1;
  xeop::SuiteOptions o{c, false};
  const auto iso = xeop::run_suite("isospectrality", o);
  CHECK(iso.pass());
  CHECK(find(iso, "gpt/A=2.5/B=5/D=4/l=1/m=2/E/n=2") != nullptr);
  CHECK(find(iso, "/n=3") == nullptr);

  o.exact_gpt = true;
  const auto exact = xeop::run_suite("shape-invariance", o);
  REQUIRE(exact.checks.size() == 1);
  CHECK(exact.checks[0].id.find("negative-control") != std::string::npos);
  CHECK(exact.pass());
}

TEST_CASE("grid overrides", "[verify]") {
  xeop::ModelConfig c;
  c.points = 1000;
  c.r_max = 15.0;
  const auto g = xeop::make_grid(c);
  CHECK(g.size() == 1000);
  CHECK(g.r_max() == 15.0);
  CHECK(g.r_min() == 1e-4);
}

TEST_CASE("unknown suite", "[verify]") {
  CHECK_THROWS_AS(xeop::run_suite("nope"), xeop::ParameterError);
  CHECK(xeop::suite_names().size() == 5);
}
