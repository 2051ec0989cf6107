// Copyright 2026 The MutualSpace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MUTUALSPACE_CLI_COMMANDS_H_
#define MUTUALSPACE_CLI_COMMANDS_H_

#include <filesystem>
#include <ostream>
#include <vector>

#include "cli/run_config.h"
#include "mutualspace/scene_model.h"

namespace mutualspace::cli {

// Each command writes its files under config.output_dir and returns the
// paths written, in order.
using WrittenFiles = std::vector<std::filesystem::path>;

WrittenFiles CmdSpaces(const Scene& scene, const RunConfig& config);
WrittenFiles CmdAlign(const Scene& scene, const RunConfig& config);
WrittenFiles CmdRearrange(const Scene& scene, const RunConfig& config);
WrittenFiles CmdPareto(const Scene& scene, const RunConfig& config);

// Entry point behind the executable. Returns 0 iff every output was written;
// failures are reported on `err` naming the offending entity.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mutualspace::cli

#endif  // MUTUALSPACE_CLI_COMMANDS_H_
