// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_CLI_HPP
#define XEOP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace xeop {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitConfig = 2,
  kExitPole = 3,
};

/// Entry point of the `xeop` tool. `args` excludes the program name.
///
///   xeop spectrum [model flags] [--levels N] [--format csv|json] [--out FILE]
///   xeop curve    [model flags] --what potential|chi [--n N] [--out FILE]
///   xeop verify   --suite NAME [model flags] [--exact-gpt] [--format json|csv] [--out FILE]
///
/// Model flags: --family oscillator|gpt, --m, --D, --l, --omega, --A, --B,
/// --rmin, --rmax, --points.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xeop

#endif  // XEOP_CLI_HPP
