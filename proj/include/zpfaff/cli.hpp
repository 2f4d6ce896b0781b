/*
 * Copyright 2026 The zpfaff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Every subcommand writes CSV (default) or JSON to
// stdout or --out. Exit codes: 0 ok, 2 bad parameters / domain / resource
// limits, 3 numerical failure or an inconclusive limit report.
// Worker threads: ZPFAFF_WORKERS (default: all cores).

#ifndef ZPFAFF_CLI_HPP
#define ZPFAFF_CLI_HPP

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zpfaff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitNumerical = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "re,im" or "re".
std::complex<double> parse_complex(std::string_view text);
/// "a,b,c" or "lo:hi:count" (inclusive, evenly spaced).
std::vector<double> parse_grid(std::string_view text);

/// Fixed formatting for doubles in CSV output.
std::string format_double(double v);

}  // namespace zpfaff::cli

#endif  // ZPFAFF_CLI_HPP
