#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gl11::cli {

enum ExitCode { Ok = 0, CheckFailed = 1, InputError = 2 };

// Runs the command line `args` (without the program name). Results go to
// `out`; diagnostics, warnings and --timing output go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& bytes);

}  // namespace gl11::cli
