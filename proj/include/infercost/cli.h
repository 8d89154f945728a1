/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef INFERCOST_CLI_H_
#define INFERCOST_CLI_H_

#include <ostream>

namespace infercost {

// Exit statuses of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitAnalysis = 2;

// Entry point of the `infercost` tool, with output streams injectable for
// tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infercost

#endif  // INFERCOST_CLI_H_
