// Copyright 2026 The magnonic Authors
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

#ifndef MAGNONIC_TOOLS_CLI_HPP
#define MAGNONIC_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace magnonic::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One line of the flat CSV schema shared by every subcommand.
struct CsvRow {
    std::string model;
    std::string family_params;
    int n = 0;
    std::string boundary;
    int k_index = 0;
    double indicator_abs = 0.0;
    double sigma_z_mean_abs = 0.0;
    double lambda = 0.0;
    double global_G = 0.0;
    double min_S = 0.0;
    double max_S = 0.0;
    bool chain_ok = false;
};

/// model,family_params,n,boundary,k_index,indicator_abs,sigma_z_mean_abs,lambda,global_G,min_S,max_S,chain_ok
std::string csv_header();

/// Fields joined with ',' and terminated by '\n'; text fields are quoted when needed.
std::string format_csv_row(const CsvRow &row);

/// Shortest decimal that parses back to exactly the same double.
std::string shortest(double value);

/// Parses "start:stop:step" (inclusive, 1e-9 relative slack on stop), a
/// comma list, or a single number. Values are rounded to 12 significant
/// digits so grid points print cleanly. Empty or malformed ranges throw UsageError.
std::vector<double> parse_grid(std::string_view text);

/// Entry point shared by the executable and the tests. 'args' excludes the
/// program name. Text reports go to 'out', diagnostics to 'err'.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace magnonic::cli

#endif  // MAGNONIC_TOOLS_CLI_HPP
