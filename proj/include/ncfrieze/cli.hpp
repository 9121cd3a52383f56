#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncfrieze {

// Full command-line front end; `args` excludes the program name. Reports go
// to `out`, diagnostics to `err`. Exit codes: 0 clean, 1 violations or failed
// verdicts, 2 format/usage errors, 3 non-invertible entries.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ncfrieze
