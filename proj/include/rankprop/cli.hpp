/*
 * Copyright 2026 The rankprop Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANKPROP_CLI_HPP_
#define RANKPROP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rankprop {

// Exit codes shared by all subcommands.
inline constexpr int kExitClean = 0;
inline constexpr int kExitImproper = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankprop

#endif  // RANKPROP_CLI_HPP_
