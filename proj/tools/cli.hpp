/*
 *   Copyright 2026 The slowsync Authors
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

// The slowsync command line, callable in-process.

#ifndef SLOWSYNC_TOOLS_CLI_HPP
#define SLOWSYNC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace slowsync::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kResource = 3,
  kInternal = 4,
};

/// args excludes the program name. Reads "-" inputs from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slowsync::cli

#endif  // SLOWSYNC_TOOLS_CLI_HPP
