// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_REPORT_HPP
#define XEOP_REPORT_HPP

#include <string>
#include <vector>

namespace xeop {

/// How a check compares `numeric` against `analytic` and `tol`.
enum class Criterion {
  absolute,  ///< abs_err <= tol
  relative,  ///< rel_err <= tol
  exceeds,   ///< numeric > tol (negative controls: the effect must show up)
};

struct CheckRecord {
  std::string id;
  double analytic = 0.0;
  double numeric = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// rel_err is abs_err / |analytic|, or abs_err when analytic is 0.
CheckRecord make_check(std::string id, double analytic, double numeric, double tol,
                       Criterion criterion = Criterion::absolute);

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  double runtime_seconds = 0.0;

  /// True iff every check passes (and there is at least one).
  bool pass() const;
  /// Order checks by id; the JSON and CSV writers expect this.
  void sort();
  void append(const VerificationReport& other);
};

/// {suite, checks:[{id, analytic, numeric, abs_err, rel_err, tol, pass}],
///  pass, runtime_seconds}. Non-finite numbers become null.
std::string to_json(const VerificationReport& report);

/// One row per check, same columns as the JSON records.
std::string to_csv(const VerificationReport& report);

/// %.12g in the C locale.
std::string format_number(double value);

/// Comma-separated rows under a header line, '\n' line endings.
std::string csv_table(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows);

}  // namespace xeop

#endif  // XEOP_REPORT_HPP
