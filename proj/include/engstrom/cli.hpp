#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace engstrom::cli {

// Exit codes: 0 success, 2 input/parse error, 3 axiom-validation failure,
// 4 resource budget exceeded.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitAxiomFailure = 3;
constexpr int kExitBudget = 4;

// Runs one request; `args` excludes the program name. Results go to `out`,
// structured failure reports and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace engstrom::cli
