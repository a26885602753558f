// Copyright 2026 The cournotq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COURNOTQ_TOOLS_CLI_HPP_
#define COURNOTQ_TOOLS_CLI_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cournotq::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitNonInterior = 3;

// Entry point shared by main() and the tests. argv[0] is the program name.
// CSV goes to `out` unless --out names a file; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Shortest decimal that parses back to the same binary64.
std::string FormatDouble(double value);

// Accepts decimals and p/q fractions ("4/27"). nullopt on malformed input.
std::optional<double> ParseNumber(std::string_view text);

// min, min + step, ... up to max (inclusive within rounding).
// Empty if step <= 0, min > max or an endpoint is not finite.
std::vector<double> MakeAxis(double min, double max, double step);

}  // namespace cournotq::cli

#endif  // COURNOTQ_TOOLS_CLI_HPP_
