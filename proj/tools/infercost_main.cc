/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include <iostream>

#include "infercost/cli.h"

int main(int argc, char** argv) { return infercost::run_cli(argc, argv, std::cout, std::cerr); }
