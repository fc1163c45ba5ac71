#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partopus {

// exit codes
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "(2),(3|4)" -> {"(2)", "(3|4)"}
std::vector<std::string> split_partition_list(const std::string& text);

}  // namespace partopus
