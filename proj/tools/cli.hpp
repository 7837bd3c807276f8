#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supertri::cli {

enum ExitCode : int { kPassed = 0, kViolations = 1, kInputError = 2 };

/// Runs one command line (without the program name). `in` backs FILE
/// arguments given as "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace supertri::cli
