// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#include "xeop/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace xeop {

namespace {

nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

CheckRecord make_check(std::string id, double analytic, double numeric, double tol, Criterion criterion) {
  CheckRecord c{std::move(id), analytic, numeric, std::abs(numeric - analytic), 0.0, tol, false};
  c.rel_err = analytic != 0.0 ? c.abs_err / std::abs(analytic) : c.abs_err;
  switch (criterion) {
    case Criterion::absolute:
      c.pass = c.abs_err <= tol;
      break;
    case Criterion::relative:
      c.pass = c.rel_err <= tol;
      break;
    case Criterion::exceeds:
      c.pass = numeric > tol;
      break;
  }
  return c;
}

bool VerificationReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  runtime_seconds += other.runtime_seconds;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"id", c.id},
                           {"analytic", number(c.analytic)},
                           {"numeric", number(c.numeric)},
                           {"abs_err", number(c.abs_err)},
                           {"rel_err", number(c.rel_err)},
                           {"tol", number(c.tol)},
                           {"pass", c.pass}});
  }
  j["pass"] = report.pass();
  j["runtime_seconds"] = report.runtime_seconds;
  return j.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::string out = "id,analytic,numeric,abs_err,rel_err,tol,pass\n";
  for (const auto& c : report.checks) {
    out += c.id;
    for (double v : {c.analytic, c.numeric, c.abs_err, c.rel_err, c.tol}) out += "," + format_number(v);
    out += c.pass ? ",1\n" : ",0\n";
  }
  return out;
}

std::string format_number(double value) {
  // snprintf honours LC_NUMERIC, which the library never changes from "C".
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
    out += '\n';
  }
  return out;
}

}  // namespace xeop
