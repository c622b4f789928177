#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpverify::cli {

// Runs one subcommand; reports go to `out` as JSON lines (or CSV).
// Exit codes: 0 all reports pass, 1 failed check or computation error,
// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "123", "100k", "25M", "3G", "1e8"
unsigned long long parse_natural(const std::string& text);

}  // namespace mpverify::cli
