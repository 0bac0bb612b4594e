#pragma once

// Command-line front end. Exit codes: 0 success, 1 a check failed (lint
// errors, verification mismatch, invalid data), 2 usage or configuration
// error, 3 I/O failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace datashare::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct Streams {
  std::ostream& out;
  std::ostream& err;
  bool color = false;  // ANSI colour allowed on `out` in text mode
};

// `args` excludes the program name. In `--format json` mode exactly one JSON
// document is written to `out`, including on failure; diagnostics go to
// `err`.
int run(const std::vector<std::string>& args, Streams streams);

}  // namespace datashare::cli
