/*
 * Copyright 2026 The latticelab Authors.
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
#ifndef LATTICELAB_CLI_H_
#define LATTICELAB_CLI_H_

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace latticelab::cli {

// Bad command line; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string verb;
  std::string scheme;
  // Flag name without leading dashes to its values in order of appearance.
  std::map<std::string, std::vector<std::string>> options;

  bool Has(const std::string& name) const { return options.count(name) != 0; }
  // Last value given; throws UsageError when absent.
  const std::string& Get(const std::string& name) const;
  std::string GetOr(const std::string& name, const std::string& fallback) const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

std::string UsageText();

// `args` excludes the program name. Throws UsageError for unknown verbs or
// flags, flags not accepted by the verb, and verb/scheme pairs outside the
// compatibility table.
Command ParseArgs(const std::vector<std::string>& args);

// Executes a parsed command. Diagnostics go to `err` as one line.
int Run(const Command& cmd, std::ostream& out, std::ostream& err);

// ParseArgs followed by Run.
int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latticelab::cli

#endif  // LATTICELAB_CLI_H_
