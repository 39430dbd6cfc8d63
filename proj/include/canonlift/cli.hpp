#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace canonlift {

// Runs one canonlift command (args exclude the program name) and returns its exit code:
// 0 ok / equivalent / true, 1 invalid input, mode mismatch or false, 2 I/O or parse error,
// 3 distinguished, 4 unknown (budget exhausted).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace canonlift
